#include <doctest.h>

#include "hankel/linalg.hpp"
#include "hankel/sequences.hpp"

using namespace hankel;

TEST_CASE("central binomial shifts") {
    SequenceSpec c0 = SequenceSpec::binomial_shift(0);
    CHECK(seq_term(c0, 0) == 1);
    CHECK(seq_term(c0, 1) == 2);
    CHECK(seq_term(c0, 2) == 6);
    CHECK(seq_term(c0, 5) == 252);

    SequenceSpec c1 = SequenceSpec::binomial_shift(1);
    CHECK(seq_term(c1, 0) == 1);
    CHECK(seq_term(c1, 1) == 3);
    CHECK(seq_term(c1, 2) == 10);

    SequenceSpec c2 = SequenceSpec::binomial_shift(2);
    CHECK(seq_term(c2, 0) == 1);
    CHECK(seq_term(c2, 1) == 4);
    CHECK(seq_term(c2, 2) == 15);
}

TEST_CASE("weighted family terms are integers") {
    SequenceSpec w3 = SequenceSpec::d_prime(3);
    CHECK(seq_term(w3, 0) == 1);
    CHECK(seq_term(w3, 1) == 3);
    CHECK(seq_term(w3, 2) == 9);
    CHECK(seq_term(w3, 3) == 28);

    // r = 2 gives the Catalan numbers, offset by one.
    SequenceSpec w2 = SequenceSpec::d_prime(2);
    Int catalan[] = {1, 2, 5, 14, 42, 132, 429};
    for (unsigned long n = 0; n < 7; ++n) CHECK(seq_term(w2, n) == catalan[n]);
}

TEST_CASE("weighted family requires r >= 1") {
    CHECK_THROWS_AS(SequenceSpec::d_prime(0), std::invalid_argument);
}

TEST_CASE("aerated families") {
    SequenceSpec cat = SequenceSpec::aerated_catalan();
    CHECK(seq_term(cat, 0) == 1);
    CHECK(seq_term(cat, 1) == 0);
    CHECK(seq_term(cat, 2) == 1);
    CHECK(seq_term(cat, 6) == 5);
    CHECK(seq_term(cat, 7) == 0);

    SequenceSpec cb = SequenceSpec::aerated_central_binomial();
    CHECK(seq_term(cb, 0) == 1);
    CHECK(seq_term(cb, 2) == 2);
    CHECK(seq_term(cb, 4) == 6);
    CHECK(seq_term(cb, 3) == 0);
}

TEST_CASE("hankel matrix layout") {
    ExactMatrix h = hankel_matrix(SequenceSpec::binomial_shift(2), 2);
    CHECK(h.at(0, 0) == Rat(1));
    CHECK(h.at(0, 1) == Rat(4));
    CHECK(h.at(1, 0) == Rat(4));
    CHECK(h.at(1, 1) == Rat(15));
    CHECK(det_bareiss(h) == Rat(-1));

    CHECK(hankel_matrix(SequenceSpec::binomial_shift(0), 0).rows() == 0);
}

TEST_CASE("weighted hankel matrix can be singular") {
    ExactMatrix h = hankel_matrix(SequenceSpec::d_prime(3), 2);
    CHECK(h.at(0, 1) == Rat(3));
    CHECK(det_bareiss(h) == Rat(0));
}

TEST_CASE("binomial helper clamps out-of-range arguments") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(pow_int(Int(-3), 3) == -27);
    CHECK(pow_int(Int(7), 0) == 1);
}
