#pragma once

#include <functional>
#include <optional>

#include "hankel/report.hpp"
#include "hankel/sequences.hpp"

namespace hankel {

enum class FavardFamily {
    CentralBinomial,         // s = 2, t_0 = 2, t = 1
    Shift1,                  // s_0 = 3 then 2, t = 1
    AeratedCatalan,          // s = 0, t = 1
    AeratedCentralBinomial,  // s = 0, t_0 = 2, t = 1
};

// Recurrence data (s_j, t_j) for a moment functional. Tagged instances
// carry the matching closed-form sequence for cross-checks.
struct FavardData {
    std::function<Rat(std::size_t)> s, t;
    std::optional<FavardFamily> tag;

    static FavardData tagged(FavardFamily f);
    static FavardData custom(std::function<Rat(std::size_t)> s,
                             std::function<Rat(std::size_t)> t);
};

// Closed-form moment sequence for a tagged family.
SequenceSpec family_sequence(FavardFamily f);
int family_code(FavardFamily f);

// Expansion coefficients of the monomials in the orthogonal basis:
// row n holds a_n(0..n) with x^n = sum_j a_n(j) p_j.
struct FavardTriangle {
    std::vector<std::vector<Rat>> rows;
    const Rat& at(std::size_t n, std::size_t j) const { return rows[n][j]; }
};

FavardTriangle triangle(const FavardData& f, std::size_t n_max);

// Moment sequence read off the triangle: m_n = a_n(0).
std::vector<Rat> reconstruct_sequence(const FavardData& f, std::size_t n_max);

// prod_{i<n} prod_{j<i} t_j, the predicted n x n Hankel determinant.
Rat hankel_det_product(const FavardData& f, std::size_t n);

// Checks H_n = A D A^T with A the triangle and D = diag(prod_{j<i} t_j).
VerificationReport factorization_check(const FavardData& f, std::size_t n);

// Monic orthogonal polynomial p_n as rational coefficients, ascending.
std::vector<Rat> orthogonal_poly(const FavardData& f, std::size_t n);

}  // namespace hankel
