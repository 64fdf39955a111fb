#pragma once

#include <vector>

#include "hankel/matrix.hpp"

namespace hankel {

// Integer-coefficient polynomial, dense ascending coefficients, kept
// canonical: no trailing zeros, the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(const Int& c);
    static IntPolynomial monomial(std::size_t deg, const Int& c = 1);
    static IntPolynomial x() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    Int leading_coeff() const { return c_.empty() ? Int(0) : c_.back(); }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& c) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    Int operator()(const Int& x) const;
    Rat eval(const Rat& x) const;
    // p(-x)
    IntPolynomial flip_sign() const;

private:
    void trim();
    std::vector<Int> c_;
};

// Horner evaluation at a square matrix; constants become c * I.
ExactMatrix eval_at_matrix(const IntPolynomial& p, const ExactMatrix& m);

}  // namespace hankel
