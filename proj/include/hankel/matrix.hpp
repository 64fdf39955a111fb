#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hankel/numbers.hpp"

namespace hankel {

// Dense matrix over the rationals. Entries are fixed at construction time;
// all operations return new matrices.
class ExactMatrix {
public:
    using Gen = std::function<Rat(std::size_t, std::size_t)>;

    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols, const Gen& gen);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix scalar(std::size_t n, const Rat& c);
    static ExactMatrix zero(std::size_t rows, std::size_t cols);
    static ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Rat& at(std::size_t i, std::size_t j) const;

    bool is_integral() const;
    bool is_symmetric() const;
    bool is_zero() const;

    ExactMatrix transpose() const;
    // Leading principal n x n block; n may not exceed either dimension.
    ExactMatrix leading(std::size_t n) const;

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-() const;

    friend ExactMatrix operator*(const Rat& c, const ExactMatrix& m);
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

private:
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> e)
        : rows_(rows), cols_(cols), e_(std::move(e)) {}
    Rat& ref(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& cref(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    static ExactMatrix raw(std::size_t rows, std::size_t cols);

    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

using Vec = std::vector<Rat>;

Vec matvec(const ExactMatrix& m, const Vec& x);
Rat dot(const Vec& a, const Vec& b);
ExactMatrix outer(const Vec& a, const Vec& b);
ExactMatrix mat_pow(const ExactMatrix& m, unsigned long e);
Vec unit_vec(std::size_t i, std::size_t n);
bool is_zero_vec(const Vec& v);

}  // namespace hankel
