#pragma once

#include <optional>
#include <stdexcept>

#include "hankel/lucas.hpp"
#include "hankel/report.hpp"
#include "hankel/sequences.hpp"

namespace hankel {

// Parameters of one determinant evaluation: shift r, truncation size N,
// and the derived band index k = floor(r/2) and ladder height
// l = floor((r-1)/2). Cases 1..7 are the residue classes with witness
// vectors; cases 1..4 run the nonsingular ladder, 5..7 the singular one.
struct CaseSpec {
    unsigned long r = 1;
    std::size_t N = 0;
    unsigned long k = 0, l = 0;
    int case_id = 0;
    unsigned long n = 0;

    bool vacuous() const { return N < k + l; }

    static CaseSpec from_rN(unsigned long r, std::size_t N);
    static CaseSpec from_case(int case_id, unsigned long k, unsigned long n);
};

struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& hypothesis)
        : std::runtime_error("hypothesis failed: " + hypothesis),
          hypothesis(hypothesis) {}
    std::string hypothesis;
};

// Defining polynomial of the shift-r family: g_k for odd r = 2k + 1,
// b_k for even r = 2k (r >= 1).
IntPolynomial h_poly(unsigned long r);

// Hankel determinant of C(2m + r, m), straight from the matrix.
Int d_r_direct(unsigned long r, std::size_t n);

struct FactoredDet {
    Int value;
    bool used_fallback;  // true when N < k + l forced the direct route
};

// Same determinant through det of h_r(gamma)(gamma+2)^l truncated to N;
// valid for N >= k + l, otherwise falls back to the direct route.
FactoredDet d_r_via_gamma(unsigned long r, std::size_t N);

// Same determinant through det of the average of the two bordered
// evaluations h_r(alpha)(alpha+2)^l and h_r(beta)(beta+2)^l.
FactoredDet d_r_via_alpha_beta(unsigned long r, std::size_t N);

// Closed-form value when N falls in one of the covered residue classes.
std::optional<Int> closed_form(unsigned long r, std::size_t N);

// Candidate witness vector for the given case, length N of that case.
Vec witness_vector(int case_id, unsigned long k, unsigned long n);

// Nonsingular ladder: asserts mu_0 w = h_r(alpha) v and the tail of
// h_r(beta) w vanishing, then returns det(mu_0) 2^l (1 + S)^l.
Int lemma_main1(const CaseSpec& cs, const Vec& w);

// Singular ladder: asserts det(mu_0) = 0 with nonsingular leading minor,
// mu_0 w = 0, the normalization w_{N-1} = 1, S != 0 and the prescribed
// zero window, then returns det(mu_0|_{N-1}) (2S)^l w^T (alpha+2)^{l-1}
// h_r(alpha) v. Throws HypothesisError naming the first failed hypothesis.
Int lemma_main2(const CaseSpec& cs, const Vec& w);

// det(mu_l) by the rank-one update iteration
// mu_{i+1} = mu_i (beta + 2) + ((alpha+2)^i h_r(alpha) v) v^T,
// cross-checked against the averaged closed form of mu_l.
Int det_mu_iterated(const CaseSpec& cs);

// Sweeps one case over 1 <= k <= k_max, 0 <= n <= n_max, comparing the
// ladder value, the iterated det, the direct det and the closed form, and
// checking witness uniqueness plus the internal ladder invariants.
VerificationReport verify_case(int case_id, unsigned long k_max,
                               unsigned long n_max);

}  // namespace hankel
