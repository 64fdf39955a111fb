#pragma once

#include "hankel/matrix.hpp"

namespace hankel {

// Lower triangular N x N matrix with entries C(2i + 1, i - j).
ExactMatrix matrix_A(std::size_t N);

// Truncation of the infinite 0/1 band operator: ones where |i - j| = k or
// i + j = k - 1. gamma_k(0, N) is 2I by convention.
ExactMatrix gamma_k(std::size_t k, std::size_t N);

// Q sigma^k Q^T where sigma is the 2N shift with corner entry eps.
// eps = +1 and -1 give the two bordered variants; eps = 0 recovers
// gamma_k(k, N).
ExactMatrix alpha_beta(std::size_t k, std::size_t N, int eps);

// Closed-form inverse of (beta + 2): entries (-1)^(i+j) (2 min(i,j) + 1) / 2.
ExactMatrix beta_plus2_inverse(std::size_t N);

// Entrywise closed forms for g_k and b_k evaluated at the bordered
// variants. All four require k < N (and k >= 1 for the b forms).
ExactMatrix structure_g_alpha(std::size_t k, std::size_t N);
ExactMatrix structure_g_beta(std::size_t k, std::size_t N);
ExactMatrix structure_b_alpha(std::size_t k, std::size_t N);
ExactMatrix structure_b_beta(std::size_t k, std::size_t N);

}  // namespace hankel
