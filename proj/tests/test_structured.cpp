#include <doctest.h>

#include "hankel/linalg.hpp"
#include "hankel/structured.hpp"

using namespace hankel;

TEST_CASE("lower triangular binomial matrix") {
    ExactMatrix a = matrix_A(3);
    CHECK(a.at(0, 0) == Rat(1));
    CHECK(a.at(1, 0) == Rat(3));
    CHECK(a.at(1, 1) == Rat(1));
    CHECK(a.at(2, 0) == Rat(10));
    CHECK(a.at(2, 1) == Rat(5));
    CHECK(a.at(2, 2) == Rat(1));
    CHECK(a.at(0, 2) == Rat(0));
    CHECK(det_bareiss(matrix_A(8)) == Rat(1));
}

TEST_CASE("banded matrix with reflecting stub") {
    ExactMatrix g1 = gamma_k(1, 4);
    // Band |i-j| = 1 plus a single entry at (0,0) from the fold-back.
    ExactMatrix expect = ExactMatrix::from_rows({
        {Rat(1), Rat(1), Rat(0), Rat(0)},
        {Rat(1), Rat(0), Rat(1), Rat(0)},
        {Rat(0), Rat(1), Rat(0), Rat(1)},
        {Rat(0), Rat(0), Rat(1), Rat(0)},
    });
    CHECK(g1 == expect);

    ExactMatrix g3 = gamma_k(3, 2);
    CHECK(g3 == ExactMatrix::from_rows({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}}));

    CHECK(gamma_k(0, 4) == ExactMatrix::scalar(4, 2));
}

TEST_CASE("stub entries sit on the anti-diagonal i+j = k-1") {
    ExactMatrix g2 = gamma_k(2, 5);
    CHECK(g2.at(0, 1) == Rat(1));
    CHECK(g2.at(1, 0) == Rat(1));
    CHECK(g2.at(0, 2) == Rat(1));
    CHECK(g2.at(2, 4) == Rat(1));
    CHECK(g2.at(0, 0) == Rat(0));
    CHECK(g2.at(1, 1) == Rat(0));
}

TEST_CASE("corner-perturbed relatives of the banded matrix") {
    // eps = 0 reproduces the banded matrix itself.
    for (unsigned long k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 6; ++n)
            CHECK(alpha_beta(k, n, 0) == gamma_k(k, n));

    // For k = 1 the perturbation is a single +-1 in the last corner.
    std::size_t n = 5;
    Vec last = unit_vec(n - 1, n);
    CHECK(alpha_beta(1, n, 1) == gamma_k(1, n) + outer(last, last));
    CHECK(alpha_beta(1, n, -1) == gamma_k(1, n) - outer(last, last));

    // For larger k the two perturbations differ only inside the
    // bottom-right corner triangle of size k.
    for (unsigned long k = 2; k <= 4; ++k) {
        ExactMatrix diff = alpha_beta(k, n, 1) - alpha_beta(k, n, -1);
        CHECK_FALSE(diff.is_zero());
        CHECK(is_k_small(diff, k));
        CHECK_FALSE(is_k_small(diff, k - 2));
    }

    CHECK_THROWS_AS(alpha_beta(1, 3, 2), std::invalid_argument);
}

TEST_CASE("corner case: one-dimensional perturbed matrices") {
    CHECK(alpha_beta(1, 1, 1) == ExactMatrix::from_rows({{Rat(2)}}));
    CHECK(alpha_beta(1, 1, -1) == ExactMatrix::from_rows({{Rat(0)}}));
}

TEST_CASE("explicit inverse of the shifted corner matrix") {
    CHECK(beta_plus2_inverse(1) == ExactMatrix::from_rows({{Rat(1, 2)}}));

    for (std::size_t n : {2, 4, 6}) {
        ExactMatrix b2 =
            alpha_beta(1, n, -1) + ExactMatrix::scalar(n, 2);
        CHECK(b2 * beta_plus2_inverse(n) == ExactMatrix::identity(n));
        CHECK(det_bareiss(b2) == Rat(2));
    }

    ExactMatrix inv3 = beta_plus2_inverse(3);
    CHECK(inv3.at(0, 0) == Rat(1, 2));
    CHECK(inv3.at(0, 1) == Rat(-1, 2));
    CHECK(inv3.at(1, 1) == Rat(3, 2));
    CHECK(inv3.at(2, 2) == Rat(5, 2));
}

TEST_CASE("closed-form structure matrices need k < N") {
    CHECK_THROWS_AS(structure_g_alpha(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(structure_g_beta(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(structure_b_alpha(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(structure_b_beta(0, 3), std::invalid_argument);
    CHECK_NOTHROW(structure_g_alpha(0, 1));
}

TEST_CASE("closed-form structure matrices at small size") {
    // k = 0: g_0 = 1, so both evaluations are the identity.
    CHECK(structure_g_alpha(0, 3) == ExactMatrix::identity(3));

    // The corner correction is band-limited, so k = 0 stays the identity.
    CHECK(structure_g_beta(0, 4) == ExactMatrix::identity(4));

    ExactMatrix gb = structure_g_beta(1, 3);
    ExactMatrix expect_gb = ExactMatrix::from_rows({
        {Rat(0), Rat(1), Rat(0)},
        {Rat(1), Rat(-1), Rat(1)},
        {Rat(0), Rat(1), Rat(-2)},
    });
    CHECK(gb == expect_gb);

    ExactMatrix ba = structure_b_alpha(1, 3);
    ExactMatrix expect_ba = ExactMatrix::from_rows({
        {Rat(1), Rat(1), Rat(0)},
        {Rat(1), Rat(0), Rat(1)},
        {Rat(0), Rat(1), Rat(1)},
    });
    CHECK(ba == expect_ba);

    ExactMatrix bb = structure_b_beta(1, 3);
    CHECK(bb.at(2, 2) == Rat(-1));
    CHECK(bb.at(0, 0) == Rat(1));
}
