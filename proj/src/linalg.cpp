#include "hankel/linalg.hpp"

#include <cassert>
#include <utility>

namespace hankel {

namespace {

std::vector<std::vector<Rat>> to_grid(const ExactMatrix& m) {
    std::vector<std::vector<Rat>> g(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j);
    return g;
}

Rat det_cofactor_grid(const std::vector<std::vector<Rat>>& g) {
    std::size_t n = g.size();
    if (n == 0) return 1;
    if (n == 1) return g[0][0];
    Rat acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (g[0][c] == 0) continue;
        std::vector<std::vector<Rat>> minor(n - 1, std::vector<Rat>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = g[i][j];
            }
        }
        Rat term = g[0][c] * det_cofactor_grid(minor);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace

Rat det_bareiss(const ExactMatrix& m) {
    if (!m.square()) throw DimensionError("det_bareiss: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Scale each row to integers, remembering the combined factor.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = m.at(i, j) * l;
            assert(scaled.get_den() == 1);
            a[i][j] = scaled.get_num();
        }
        scale *= l;
    }

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    Rat result(sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]), scale);
    result.canonicalize();
    return result;
}

Rat det_cofactor(const ExactMatrix& m, std::size_t max_dim) {
    if (!m.square()) throw DimensionError("det_cofactor: matrix not square");
    if (m.rows() > max_dim)
        throw DimensionError("det_cofactor: dimension exceeds oracle limit");
    return det_cofactor_grid(to_grid(m));
}

ExactMatrix adjugate(const ExactMatrix& m) {
    if (!m.square()) throw DimensionError("adjugate: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    if (n == 1) return ExactMatrix::identity(1);
    ExactMatrix adj(n, n, [&](std::size_t i, std::size_t j) {
        // Cofactor transpose: drop row j and column i.
        ExactMatrix minor(n - 1, n - 1, [&](std::size_t p, std::size_t q) {
            return m.at(p < j ? p : p + 1, q < i ? q : q + 1);
        });
        Rat d = det_bareiss(minor);
        return (i + j) % 2 == 0 ? d : Rat(-d);
    });
#ifndef NDEBUG
    ExactMatrix expect = ExactMatrix::scalar(n, det_bareiss(m));
    assert(adj * m == expect);
#endif
    return adj;
}

std::size_t rank(const ExactMatrix& m) {
    auto a = to_grid(m);
    const std::size_t n = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

Rat schur_block_det(const ExactMatrix& a, const ExactMatrix& b,
                    const ExactMatrix& c, const ExactMatrix& d) {
    if (!a.square() || !d.square() || b.rows() != a.rows() ||
        b.cols() != d.cols() || c.rows() != d.rows() || c.cols() != a.cols())
        throw DimensionError("schur_block_det: incompatible block shapes");
    Rat dd = det_bareiss(d);
    if (dd == 0)
        throw SingularBlockError("schur_block_det: lower-right block singular");
    ExactMatrix correction = b * adjugate(d) * c;
    ExactMatrix s = a - Rat(1) / dd * correction;
    return dd * det_bareiss(s);
}

Rat matrix_det_lemma(const ExactMatrix& a, const Vec& u, const Vec& v) {
    if (!a.square() || u.size() != a.rows() || v.size() != a.rows())
        throw DimensionError("matrix_det_lemma: shape mismatch");
    return det_bareiss(a) + dot(v, matvec(adjugate(a), u));
}

bool is_k_small(const ExactMatrix& m, std::size_t k) {
    if (!m.square()) throw DimensionError("is_k_small: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i + j + k <= 2 * (n - 1) && m.at(i, j) != 0) return false;
        }
    return true;
}

std::optional<Vec> solve(const ExactMatrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw DimensionError("solve: shape mismatch");
    const std::size_t n = m.rows(), cols = m.cols();
    auto a = to_grid(m);
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);

    std::vector<std::size_t> piv_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[r], a[piv]);
        Rat f = a[r][c];
        for (std::size_t j = 0; j <= cols; ++j) a[r][j] /= f;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat g = a[i][c];
            for (std::size_t j = 0; j <= cols; ++j) a[i][j] -= g * a[r][j];
        }
        piv_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    Vec x(cols, Rat(0));
    for (std::size_t idx = 0; idx < piv_cols.size(); ++idx)
        x[piv_cols[idx]] = a[idx][cols];
    return x;
}

std::optional<Vec> kernel_vector(const ExactMatrix& m) {
    const std::size_t n = m.rows(), cols = m.cols();
    auto a = to_grid(m);
    std::vector<long> piv_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[r], a[piv]);
        Rat f = a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[r][j] /= f;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat g = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= g * a[r][j];
        }
        piv_of_col[c] = static_cast<long>(r);
        ++r;
    }
    std::size_t fc = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (piv_of_col[c] < 0) {
            fc = c;
            break;
        }
    if (fc == cols) return std::nullopt;
    Vec x(cols, Rat(0));
    x[fc] = 1;
    for (std::size_t c = 0; c < cols; ++c)
        if (piv_of_col[c] >= 0) x[c] = -a[piv_of_col[c]][fc];
    return x;
}

}  // namespace hankel
