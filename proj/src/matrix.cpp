#include "hankel/matrix.hpp"

#include <stdexcept>

namespace hankel {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const Gen& gen)
    : rows_(rows), cols_(cols), e_(rows * cols) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) ref(i, j) = gen(i, j);
}

ExactMatrix ExactMatrix::raw(std::size_t rows, std::size_t cols) {
    return ExactMatrix(rows, cols, std::vector<Rat>(rows * cols));
}

ExactMatrix ExactMatrix::identity(std::size_t n) { return scalar(n, 1); }

ExactMatrix ExactMatrix::scalar(std::size_t n, const Rat& c) {
    ExactMatrix m = raw(n, n);
    for (std::size_t i = 0; i < n; ++i) m.ref(i, i) = c;
    return m;
}

ExactMatrix ExactMatrix::zero(std::size_t rows, std::size_t cols) {
    return raw(rows, cols);
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m = raw(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) m.ref(i, j) = rows[i][j];
    }
    return m;
}

const Rat& ExactMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("ExactMatrix::at: index out of range");
    return cref(i, j);
}

bool ExactMatrix::is_integral() const {
    for (const Rat& x : e_)
        if (x.get_den() != 1) return false;
    return true;
}

bool ExactMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (cref(i, j) != cref(j, i)) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m = raw(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.ref(j, i) = cref(i, j);
    return m;
}

ExactMatrix ExactMatrix::leading(std::size_t n) const {
    if (n > rows_ || n > cols_)
        throw std::out_of_range("leading: block exceeds matrix");
    ExactMatrix m = raw(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.ref(i, j) = cref(i, j);
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    ExactMatrix m = raw(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix subtract: shape mismatch");
    ExactMatrix m = raw(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix multiply: shape mismatch");
    ExactMatrix m = raw(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = cref(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.cref(k, j) == 0) continue;
                m.ref(i, j) += a * o.cref(k, j);
            }
        }
    return m;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m = raw(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

ExactMatrix operator*(const Rat& c, const ExactMatrix& m) {
    ExactMatrix out = ExactMatrix::raw(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) out.e_[i] = c * m.e_[i];
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Vec matvec(const ExactMatrix& m, const Vec& x) {
    if (x.size() != m.cols())
        throw std::invalid_argument("matvec: shape mismatch");
    Vec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (x[j] != 0) s += m.at(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

ExactMatrix outer(const Vec& a, const Vec& b) {
    return ExactMatrix(a.size(), b.size(),
                       [&](std::size_t i, std::size_t j) { return a[i] * b[j]; });
}

ExactMatrix mat_pow(const ExactMatrix& m, unsigned long e) {
    if (!m.square()) throw std::invalid_argument("mat_pow: matrix not square");
    ExactMatrix acc = ExactMatrix::identity(m.rows());
    for (unsigned long i = 0; i < e; ++i) acc = acc * m;
    return acc;
}

Vec unit_vec(std::size_t i, std::size_t n) {
    Vec v(n, Rat(0));
    v.at(i) = 1;
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace hankel
