#include "hankel/sequences.hpp"

#include <stdexcept>

namespace hankel {

Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

SequenceSpec SequenceSpec::binomial_shift(unsigned long r) {
    return SequenceSpec{Family::BinomialShift, r};
}

SequenceSpec SequenceSpec::d_prime(unsigned long r) {
    if (r == 0)
        throw std::invalid_argument("d_prime family requires shift r >= 1");
    return SequenceSpec{Family::DPrime, r};
}

SequenceSpec SequenceSpec::aerated_catalan() {
    return SequenceSpec{Family::AeratedCatalan, 0};
}

SequenceSpec SequenceSpec::aerated_central_binomial() {
    return SequenceSpec{Family::AeratedCentralBinomial, 0};
}

Int seq_term(const SequenceSpec& s, unsigned long n) {
    switch (s.family) {
        case Family::BinomialShift:
            return binomial(2 * n + s.r, static_cast<long>(n));
        case Family::DPrime: {
            // r/(2n+r) * C(2n+r, n); the quotient is always an integer.
            Int c = binomial(2 * n + s.r, static_cast<long>(n));
            Int num = s.r * c;
            Int den = 2 * n + s.r;
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
                throw std::logic_error("d_prime term is not an integer");
            return num / den;
        }
        case Family::AeratedCatalan: {
            if (n % 2 == 1) return 0;
            unsigned long m = n / 2;
            return binomial(2 * m, static_cast<long>(m)) / Int(m + 1);
        }
        case Family::AeratedCentralBinomial: {
            if (n % 2 == 1) return 0;
            unsigned long m = n / 2;
            return binomial(2 * m, static_cast<long>(m));
        }
    }
    throw std::logic_error("seq_term: unknown family");
}

ExactMatrix hankel_matrix(const SequenceSpec& s, std::size_t n) {
    std::vector<Int> terms(n == 0 ? 0 : 2 * n - 1);
    for (std::size_t t = 0; t < terms.size(); ++t) terms[t] = seq_term(s, t);
    return ExactMatrix(n, n, [&](std::size_t i, std::size_t j) {
        return Rat(terms[i + j]);
    });
}

}  // namespace hankel
