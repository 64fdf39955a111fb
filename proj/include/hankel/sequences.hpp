#pragma once

#include "hankel/matrix.hpp"

namespace hankel {

enum class Family {
    BinomialShift,           // C(2n + r, n)
    DPrime,                  // r/(2n + r) * C(2n + r, n), r >= 1
    AeratedCatalan,          // 1, 0, 1, 0, 2, 0, 5, ...
    AeratedCentralBinomial,  // 1, 0, 2, 0, 6, 0, 20, ...
};

struct SequenceSpec {
    Family family;
    unsigned long r;

    static SequenceSpec binomial_shift(unsigned long r);
    static SequenceSpec d_prime(unsigned long r);
    static SequenceSpec aerated_catalan();
    static SequenceSpec aerated_central_binomial();
};

Int seq_term(const SequenceSpec& s, unsigned long n);

// n x n Hankel matrix (term(i + j)); n = 0 gives the empty matrix.
ExactMatrix hankel_matrix(const SequenceSpec& s, std::size_t n);

}  // namespace hankel
