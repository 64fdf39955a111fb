#pragma once

#include <optional>
#include <stdexcept>

#include "hankel/matrix.hpp"

namespace hankel {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularBlockError : std::domain_error {
    using std::domain_error::domain_error;
};

// Fraction-free Bareiss elimination; denominators are cleared row by row
// first so the pivoting stays in integers. det of the 0 x 0 matrix is 1.
Rat det_bareiss(const ExactMatrix& m);

// Recursive cofactor expansion, used as an independent oracle. Refuses
// matrices larger than max_dim.
Rat det_cofactor(const ExactMatrix& m, std::size_t max_dim = 8);

// Classical adjugate via signed cofactors; adj(m) * m = det(m) * I.
ExactMatrix adjugate(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// det of the block matrix [[a, b], [c, d]] through the Schur complement
// det(d) * det(a - b d^-1 c). Throws SingularBlockError when det(d) = 0.
Rat schur_block_det(const ExactMatrix& a, const ExactMatrix& b,
                    const ExactMatrix& c, const ExactMatrix& d);

// det(a + u v^T) = det(a) + v^T adj(a) u.
Rat matrix_det_lemma(const ExactMatrix& a, const Vec& u, const Vec& v);

// True when every entry with i + j <= 2(N - 1) - k vanishes, i.e. only the
// bottom-right corner of depth k may be populated.
bool is_k_small(const ExactMatrix& m, std::size_t k);

// One solution of m x = b with free variables set to zero, or nullopt when
// the system is inconsistent.
std::optional<Vec> solve(const ExactMatrix& m, const Vec& b);

// One nonzero kernel vector (free variable set to 1), or nullopt when the
// matrix has full column rank.
std::optional<Vec> kernel_vector(const ExactMatrix& m);

}  // namespace hankel
