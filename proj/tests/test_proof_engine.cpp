#include <doctest.h>

#include "hankel/proof_engine.hpp"

using namespace hankel;

TEST_CASE("defining polynomial per parity of the shift") {
    CHECK(h_poly(1) == IntPolynomial::constant(1));
    CHECK(h_poly(2) == IntPolynomial::x());
    CHECK(h_poly(3) == IntPolynomial({-1, 1}));
    CHECK(h_poly(4) == IntPolynomial({-2, 0, 1}));
    CHECK(h_poly(5) == IntPolynomial({-1, -1, 1}));
    CHECK_THROWS_AS(h_poly(0), std::invalid_argument);
}

TEST_CASE("direct determinant values") {
    CHECK(d_r_direct(0, 0) == 1);
    CHECK(d_r_direct(0, 6) == 32);
    CHECK(d_r_direct(1, 10) == 1);
    CHECK(d_r_direct(2, 2) == -1);
    CHECK(d_r_direct(3, 8) == -12);
    CHECK(d_r_direct(4, 6) == -16);
    CHECK(d_r_direct(5, 4) == 61);
    CHECK(d_r_direct(5, 9) == 370);
    CHECK(d_r_direct(6, 9) == 576);
    CHECK(d_r_direct(7, 11) == 512);
}

TEST_CASE("factored evaluations agree with the direct one") {
    for (unsigned long r = 1; r <= 7; ++r)
        for (std::size_t N = 0; N <= 10; ++N) {
            Int expect = d_r_direct(r, N);
            FactoredDet g = d_r_via_gamma(r, N);
            FactoredDet ab = d_r_via_alpha_beta(r, N);
            CHECK(g.value == expect);
            CHECK(ab.value == expect);
            CaseSpec cs = CaseSpec::from_rN(r, N);
            CHECK(g.used_fallback == cs.vacuous());
            CHECK(ab.used_fallback == cs.vacuous());
        }
}

TEST_CASE("small truncations fall back to the direct route") {
    // r = 7 has k = l = 3, so N = 5 < 6 cannot use the factored form.
    CHECK(d_r_via_gamma(7, 5).used_fallback);
    CHECK_FALSE(d_r_via_gamma(7, 6).used_fallback);
}

TEST_CASE("closed form on the covered residues") {
    CHECK(closed_form(5, 10) == Int(25));
    CHECK(closed_form(3, 2) == Int(-4));
    CHECK(closed_form(6, 3) == Int(-144));
    CHECK(closed_form(6, 4) == Int(144));
    CHECK(closed_form(4, 2) == Int(-8));
    CHECK(closed_form(2, 6) == Int(-1));
    CHECK(closed_form(1, 9) == Int(1));
    CHECK(closed_form(5, 3) == Int(-16));
    CHECK_FALSE(closed_form(7, 5).has_value());
    CHECK_FALSE(closed_form(5, 2).has_value());
    CHECK_THROWS_AS(closed_form(0, 1), std::invalid_argument);
}

TEST_CASE("closed form agrees with the determinant wherever defined") {
    for (unsigned long r = 1; r <= 8; ++r)
        for (std::size_t N = 0; N <= 12; ++N)
            if (auto v = closed_form(r, N)) CHECK(*v == d_r_direct(r, N));
}

TEST_CASE("case parameters") {
    CaseSpec c1 = CaseSpec::from_case(1, 2, 1);
    CHECK(c1.r == 5);
    CHECK(c1.N == 5);
    CHECK(c1.k == 2);
    CHECK(c1.l == 2);

    CaseSpec c4 = CaseSpec::from_case(4, 3, 0);
    CHECK(c4.r == 6);
    CHECK(c4.N == 3);
    CHECK(c4.vacuous());  // N = 3 < k + l = 5

    CaseSpec c7 = CaseSpec::from_case(7, 2, 0);
    CHECK(c7.r == 4);
    CHECK(c7.N == 3);

    CHECK_THROWS_AS(CaseSpec::from_case(8, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(CaseSpec::from_case(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(CaseSpec::from_rN(0, 3), std::invalid_argument);
}

TEST_CASE("witness vectors in low cases") {
    // Nonsingular ladder, k = 1, n = 1: the additions collapse to e_0.
    Vec w1 = witness_vector(1, 1, 1);
    REQUIRE(w1.size() == 3);
    CHECK(w1[0] == Rat(1));
    CHECK(w1[1] == Rat(0));
    CHECK(w1[2] == Rat(0));

    // k = 1, n = 0 of the even nonsingular case: overlapping additions stack.
    Vec w4 = witness_vector(4, 1, 0);
    REQUIRE(w4.size() == 1);
    CHECK(w4[0] == Rat(2));

    // Singular ladder witnesses end with the normalization entry 1.
    for (int c : {5, 6, 7})
        for (unsigned long k = 1; k <= 2; ++k)
            for (unsigned long n = 0; n <= 2; ++n) {
                CaseSpec cs = CaseSpec::from_case(c, k, n);
                if (cs.N == 0) continue;
                Vec w = witness_vector(c, k, n);
                REQUIRE(w.size() == cs.N);
                CHECK(w[cs.N - 1] == Rat(1));
            }

    CHECK_THROWS_AS(witness_vector(9, 1, 0), std::invalid_argument);
}

TEST_CASE("nonsingular ladder evaluates the determinant") {
    CaseSpec cs = CaseSpec::from_case(1, 1, 1);  // r = 3, N = 3
    CHECK(lemma_main1(cs, witness_vector(1, 1, 1)) == 3);

    CaseSpec cs2 = CaseSpec::from_case(2, 1, 1);  // r = 3, N = 5
    CHECK(lemma_main1(cs2, witness_vector(2, 1, 1)) == -8);

    CaseSpec cs3 = CaseSpec::from_case(3, 2, 1);  // r = 4, N = 4
    CHECK(lemma_main1(cs3, witness_vector(3, 2, 1)) == 1);

    CaseSpec cs4 = CaseSpec::from_case(4, 2, 1);  // r = 4, N = 6
    CHECK(lemma_main1(cs4, witness_vector(4, 2, 1)) == -16);
}

TEST_CASE("nonsingular ladder rejects a wrong witness by name") {
    CaseSpec cs = CaseSpec::from_case(1, 2, 1);  // r = 5, N = 5
    Vec bad(cs.N, Rat(0));
    try {
        lemma_main1(cs, bad);
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.hypothesis == "mu0 w = h_r(alpha) v");
    }
}

TEST_CASE("nonsingular ladder refuses a singular base matrix") {
    // Case 5 parameters make mu_0 singular, so the nonsingular ladder must
    // report that hypothesis as failed.
    CaseSpec cs = CaseSpec::from_case(5, 1, 1);  // r = 3, N = 4
    Vec w = witness_vector(5, 1, 1);
    try {
        lemma_main1(cs, w);
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.hypothesis == "mu0 nonsingular");
    }
}

TEST_CASE("singular ladder evaluates the determinant") {
    CaseSpec c5 = CaseSpec::from_case(5, 2, 1);  // r = 5, N = 6
    CHECK(lemma_main2(c5, witness_vector(5, 2, 1)) == 9);

    CaseSpec c6 = CaseSpec::from_case(6, 2, 1);  // r = 4, N = 5
    CHECK(lemma_main2(c6, witness_vector(6, 2, 1)) == 1);

    CaseSpec c7 = CaseSpec::from_case(7, 2, 1);  // r = 4, N = 7
    CHECK(lemma_main2(c7, witness_vector(7, 2, 1)) == 16);
}

TEST_CASE("singular ladder rejects a wrong witness by name") {
    CaseSpec cs = CaseSpec::from_case(5, 2, 1);  // r = 5, N = 6
    Vec w = witness_vector(5, 2, 1);

    Vec zero(cs.N, Rat(0));
    try {
        lemma_main2(cs, zero);
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.hypothesis == "w nonzero");
    }

    Vec unnormalized = w;
    unnormalized[cs.N - 1] = Rat(2);
    try {
        lemma_main2(cs, unnormalized);
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        // The scaled vector is no longer in the kernel, so the kernel check
        // trips before the normalization check.
        CHECK(e.hypothesis == "mu0 w = 0");
    }

    // On nonsingular parameters the singularity hypothesis itself fails.
    CaseSpec c1 = CaseSpec::from_case(1, 1, 1);
    try {
        lemma_main2(c1, witness_vector(1, 1, 1));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.hypothesis == "mu0 singular");
    }
}

TEST_CASE("iterated rank-one updates reproduce the ladder value") {
    for (int c = 1; c <= 7; ++c)
        for (unsigned long k = 1; k <= 2; ++k)
            for (unsigned long n = 0; n <= 2; ++n) {
                CaseSpec cs = CaseSpec::from_case(c, k, n);
                if (cs.vacuous() || cs.N == 0) continue;
                CHECK(det_mu_iterated(cs) == d_r_direct(cs.r, cs.N));
            }
}

TEST_CASE("case sweeps pass and mark vacuous instances") {
    for (int c = 1; c <= 7; ++c) {
        VerificationReport rep = verify_case(c, 2, 2);
        CHECK(rep.ok());
        CHECK(rep.passes > 0);
    }
    // Case 4 at k = 3, n = 0 is vacuous: it must be reported, not checked.
    VerificationReport rep = verify_case(4, 3, 0);
    CHECK(rep.ok());
    bool saw_vacuous = false;
    for (const Record& rec : rep.records)
        if (rec.status == "vacuous") saw_vacuous = true;
    CHECK(saw_vacuous);
}

TEST_CASE("singular sweeps skip the height-zero instances") {
    // Cases 6 and 7 at k = 1 have l = 0 and a nonsingular mu_0; the sweep
    // records them as skipped rather than failed.
    VerificationReport rep = verify_case(6, 1, 2);
    CHECK(rep.ok());
    CHECK(rep.skips > 0);
}
