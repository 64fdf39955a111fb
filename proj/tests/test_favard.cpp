#include <doctest.h>

#include "hankel/favard.hpp"
#include "hankel/linalg.hpp"
#include "hankel/structured.hpp"

using namespace hankel;

TEST_CASE("moment triangle for the central binomial family") {
    FavardData f = FavardData::tagged(FavardFamily::CentralBinomial);
    FavardTriangle tri = triangle(f, 4);
    CHECK(tri.at(0, 0) == Rat(1));
    CHECK(tri.at(1, 0) == Rat(2));
    CHECK(tri.at(1, 1) == Rat(1));
    CHECK(tri.at(2, 0) == Rat(6));
    CHECK(tri.at(2, 1) == Rat(4));
    CHECK(tri.at(2, 2) == Rat(1));
    CHECK(tri.at(4, 0) == Rat(70));
}

TEST_CASE("shifted family triangle matches the binomial matrix") {
    FavardData f = FavardData::tagged(FavardFamily::Shift1);
    FavardTriangle tri = triangle(f, 5);
    ExactMatrix a = matrix_A(6);
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            CHECK(tri.at(n, j) == a.at(n, j));
}

TEST_CASE("aerated triangles vanish on odd parity") {
    FavardData f = FavardData::tagged(FavardFamily::AeratedCentralBinomial);
    FavardTriangle tri = triangle(f, 6);
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            if ((n + j) % 2 == 1) CHECK(tri.at(n, j) == Rat(0));
    // Even rows carry plain binomial coefficients scaled by the first weight.
    CHECK(tri.at(4, 0) == Rat(6));
    CHECK(tri.at(4, 2) == Rat(4));
    CHECK(tri.at(6, 0) == Rat(20));
}

TEST_CASE("triangle reconstructs each tagged moment sequence") {
    for (FavardFamily fam :
         {FavardFamily::CentralBinomial, FavardFamily::Shift1,
          FavardFamily::AeratedCatalan,
          FavardFamily::AeratedCentralBinomial}) {
        FavardData f = FavardData::tagged(fam);
        SequenceSpec s = family_sequence(fam);
        std::vector<Rat> m = reconstruct_sequence(f, 12);
        for (std::size_t n = 0; n <= 12; ++n)
            CHECK(m[n] == Rat(seq_term(s, n)));
    }
}

TEST_CASE("product formula matches the hankel determinant") {
    for (FavardFamily fam :
         {FavardFamily::CentralBinomial, FavardFamily::Shift1,
          FavardFamily::AeratedCatalan,
          FavardFamily::AeratedCentralBinomial}) {
        FavardData f = FavardData::tagged(fam);
        SequenceSpec s = family_sequence(fam);
        for (std::size_t n = 0; n <= 7; ++n)
            CHECK(hankel_det_product(f, n) ==
                  det_bareiss(hankel_matrix(s, n)));
    }
}

TEST_CASE("central binomial determinants are powers of two") {
    FavardData f = FavardData::tagged(FavardFamily::CentralBinomial);
    CHECK(hankel_det_product(f, 0) == Rat(1));
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(hankel_det_product(f, n) == Rat(pow_int(Int(2), n - 1)));
}

TEST_CASE("shifted family determinants are all one") {
    FavardData f = FavardData::tagged(FavardFamily::Shift1);
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(hankel_det_product(f, n) == Rat(1));
}

TEST_CASE("monic orthogonal polynomials follow the recurrence data") {
    FavardData f = FavardData::tagged(FavardFamily::CentralBinomial);
    auto eval = [](const std::vector<Rat>& c, const Rat& x) {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    CHECK(eval(orthogonal_poly(f, 0), Rat(5)) == Rat(1));
    // p_1 = x - 2, p_2 = (x - 2)^2 - 2.
    CHECK(eval(orthogonal_poly(f, 1), Rat(0)) == Rat(-2));
    CHECK(eval(orthogonal_poly(f, 2), Rat(2)) == Rat(-2));
    CHECK(eval(orthogonal_poly(f, 2), Rat(0)) == Rat(2));
}

TEST_CASE("triangle factorization splits the moment matrix") {
    for (FavardFamily fam :
         {FavardFamily::CentralBinomial, FavardFamily::Shift1,
          FavardFamily::AeratedCatalan,
          FavardFamily::AeratedCentralBinomial}) {
        VerificationReport rep =
            factorization_check(FavardData::tagged(fam), 5);
        CHECK(rep.ok());
    }
}

TEST_CASE("custom rational recurrence data") {
    FavardData f = FavardData::custom([](std::size_t) { return Rat(1, 2); },
                                      [](std::size_t) { return Rat(1, 3); });
    std::vector<Rat> m = reconstruct_sequence(f, 6);
    CHECK(m[0] == Rat(1));
    CHECK(m[1] == Rat(1, 2));
    CHECK(m[2] == Rat(1, 4) + Rat(1, 3));
    CHECK(factorization_check(f, 4).ok());
    // Hankel determinant of the reconstructed moments obeys the product rule.
    ExactMatrix h(3, 3, [&](std::size_t i, std::size_t j) {
        return m[i + j];
    });
    CHECK(det_bareiss(h) == hankel_det_product(f, 3));
}

TEST_CASE("family codes are stable identifiers") {
    CHECK(family_code(FavardFamily::CentralBinomial) == 0);
    CHECK(family_code(FavardFamily::Shift1) == 1);
    CHECK(family_code(FavardFamily::AeratedCatalan) == 2);
    CHECK(family_code(FavardFamily::AeratedCentralBinomial) == 3);
}
