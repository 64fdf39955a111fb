#pragma once

#include "hankel/polynomial.hpp"

namespace hankel {

// L_0 = 2, L_1 = x, L_n = x L_{n-1} - L_{n-2}.
IntPolynomial lucas_poly(unsigned long n);

// Normalized variant: value 1 at n = 0, L_n otherwise.
IntPolynomial lucas_bar(unsigned long n);

// g_0 = 1, g_1 = x - 1, g_n = x g_{n-1} - g_{n-2}, plus the two companions
// a_n = g_n - g_{n-1} and b_n = g_n + g_{n-1}.
IntPolynomial g_poly(unsigned long n);
IntPolynomial a_poly(unsigned long n);
IntPolynomial b_poly(unsigned long n);

struct CharPolys {
    IntPolynomial g, a, b;
};

// Characteristic polynomials of the three N x N band truncations:
// det(xI - gamma|_N) = g_N, det(xI - alpha_N) = a_N, det(xI - beta_N) = b_N.
CharPolys char_polys(unsigned long n);

// Coefficients of p in the basis {lucas_bar(0), lucas_bar(1), ...},
// ascending; the list has p.degree() + 1 entries (empty for p = 0).
std::vector<Int> lucas_expand(const IntPolynomial& p);

// Truncation of p applied to the infinite band operator: expand p in the
// lucas_bar basis and sum coefficient-weighted gamma_k truncations. This is
// exact entrywise, unlike evaluating p at a truncated matrix.
ExactMatrix eval_at_gamma(const IntPolynomial& p, std::size_t N);

}  // namespace hankel
