#pragma once

#include "hankel/report.hpp"
#include "hankel/sequences.hpp"

namespace hankel {

// Hankel determinant of the weighted family r/(2m+r) C(2m+r, m), r >= 1.
Int d_prime(unsigned long r, std::size_t n);

// One experimentally tested statement. Records carry per-instance values
// with status supported/refuted; `supported` summarizes them.
struct ConjectureResult {
    int id;
    std::string name;       // claim token conj1..conj7
    std::string statement;  // short human-readable formula
    bool supported;
    VerificationReport report;
};

// Residue-class value formulas for the weighted determinants, ids 1..5,
// plus id 7, a sign-flipped variant of id 5 kept as a control; the control
// is expected to come back refuted with explicit counterexamples.
std::vector<ConjectureResult> check_dprime_conjectures(unsigned long k_max,
                                                       unsigned long n_max);

// id 6: the weighted-family moment matrix equals A p_r(gamma) A^T for the
// band polynomial p_r of each parity; compared entrywise on the
// anti-diagonal window i + j <= window, for shifts 2..2*k_max+1.
ConjectureResult check_matrix_identity(unsigned long k_max,
                                       std::size_t window);

}  // namespace hankel
