#include "hankel/lucas.hpp"

#include <stdexcept>

#include "hankel/structured.hpp"

namespace hankel {

namespace {

// Iterate p_n = x p_{n-1} - p_{n-2} from the two given seeds.
IntPolynomial three_term(unsigned long n, IntPolynomial p0, IntPolynomial p1) {
    if (n == 0) return p0;
    IntPolynomial x = IntPolynomial::x();
    for (unsigned long i = 1; i < n; ++i) {
        IntPolynomial next = x * p1 - p0;
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

}  // namespace

IntPolynomial lucas_poly(unsigned long n) {
    return three_term(n, IntPolynomial::constant(2), IntPolynomial::x());
}

IntPolynomial lucas_bar(unsigned long n) {
    return n == 0 ? IntPolynomial::constant(1) : lucas_poly(n);
}

IntPolynomial g_poly(unsigned long n) {
    return three_term(n, IntPolynomial::constant(1),
                      IntPolynomial(std::vector<Int>{-1, 1}));
}

IntPolynomial a_poly(unsigned long n) {
    if (n == 0) return IntPolynomial(std::vector<Int>{2});
    return g_poly(n) - g_poly(n - 1);
}

IntPolynomial b_poly(unsigned long n) {
    if (n == 0) throw std::invalid_argument("b_poly: requires n >= 1");
    return g_poly(n) + g_poly(n - 1);
}

CharPolys char_polys(unsigned long n) {
    if (n == 0)
        return {g_poly(0), IntPolynomial::constant(1),
                IntPolynomial::constant(1)};
    return {g_poly(n), a_poly(n), b_poly(n)};
}

std::vector<Int> lucas_expand(const IntPolynomial& p) {
    std::vector<Int> out(p.is_zero() ? 0 : p.degree() + 1, Int(0));
    IntPolynomial rem = p;
    // Peel the top coefficient with the matching lucas_bar, which is monic.
    while (!rem.is_zero()) {
        std::size_t d = static_cast<std::size_t>(rem.degree());
        Int c = rem.leading_coeff();
        out[d] = c;
        rem = rem - lucas_bar(d) * c;
        if (!rem.is_zero() && rem.degree() >= static_cast<long>(d))
            throw std::logic_error("lucas_expand: degree did not drop");
    }
    return out;
}

ExactMatrix eval_at_gamma(const IntPolynomial& p, std::size_t N) {
    std::vector<Int> c = lucas_expand(p);
    ExactMatrix acc = ExactMatrix::zero(N, N);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        // lucas_bar(0) is the constant 1, so the j = 0 term contributes
        // c_0 * I rather than c_0 * gamma_k(0, N) = 2 c_0 * I.
        ExactMatrix basis =
            j == 0 ? ExactMatrix::identity(N) : gamma_k(j, N);
        acc = acc + Rat(c[j]) * basis;
    }
    return acc;
}

}  // namespace hankel
