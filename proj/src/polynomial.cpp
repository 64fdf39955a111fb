#include "hankel/polynomial.hpp"

#include <stdexcept>

namespace hankel {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(const Int& c) {
    return IntPolynomial(std::vector<Int>{c});
}

IntPolynomial IntPolynomial::monomial(std::size_t deg, const Int& c) {
    std::vector<Int> v(deg + 1, Int(0));
    v[deg] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
    std::vector<Int> v(c_);
    for (Int& x : v) x *= c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const { return *this * Int(-1); }

Int IntPolynomial::operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::flip_sign() const {
    std::vector<Int> v(c_);
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPolynomial(std::move(v));
}

ExactMatrix eval_at_matrix(const IntPolynomial& p, const ExactMatrix& m) {
    if (!m.square())
        throw std::invalid_argument("eval_at_matrix: matrix not square");
    ExactMatrix acc = ExactMatrix::zero(m.rows(), m.rows());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * m + ExactMatrix::scalar(m.rows(), Rat(*it));
    return acc;
}

}  // namespace hankel
