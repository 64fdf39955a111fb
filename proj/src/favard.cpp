#include "hankel/favard.hpp"

#include <sstream>
#include <stdexcept>

#include "hankel/linalg.hpp"

namespace hankel {

FavardData FavardData::tagged(FavardFamily f) {
    FavardData d;
    d.tag = f;
    switch (f) {
        case FavardFamily::CentralBinomial:
            d.s = [](std::size_t) { return Rat(2); };
            d.t = [](std::size_t j) { return Rat(j == 0 ? 2 : 1); };
            break;
        case FavardFamily::Shift1:
            d.s = [](std::size_t j) { return Rat(j == 0 ? 3 : 2); };
            d.t = [](std::size_t) { return Rat(1); };
            break;
        case FavardFamily::AeratedCatalan:
            d.s = [](std::size_t) { return Rat(0); };
            d.t = [](std::size_t) { return Rat(1); };
            break;
        case FavardFamily::AeratedCentralBinomial:
            d.s = [](std::size_t) { return Rat(0); };
            d.t = [](std::size_t j) { return Rat(j == 0 ? 2 : 1); };
            break;
    }
    return d;
}

FavardData FavardData::custom(std::function<Rat(std::size_t)> s,
                              std::function<Rat(std::size_t)> t) {
    FavardData d;
    d.s = std::move(s);
    d.t = std::move(t);
    return d;
}

SequenceSpec family_sequence(FavardFamily f) {
    switch (f) {
        case FavardFamily::CentralBinomial:
            return SequenceSpec::binomial_shift(0);
        case FavardFamily::Shift1:
            return SequenceSpec::binomial_shift(1);
        case FavardFamily::AeratedCatalan:
            return SequenceSpec::aerated_catalan();
        case FavardFamily::AeratedCentralBinomial:
            return SequenceSpec::aerated_central_binomial();
    }
    throw std::logic_error("family_sequence: unknown family");
}

int family_code(FavardFamily f) { return static_cast<int>(f); }

FavardTriangle triangle(const FavardData& f, std::size_t n_max) {
    FavardTriangle tri;
    tri.rows.reserve(n_max + 1);
    tri.rows.push_back({Rat(1)});
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto& prev = tri.rows.back();
        auto get = [&](long j) {
            return j < 0 || j >= static_cast<long>(prev.size()) ? Rat(0)
                                                                : prev[j];
        };
        std::vector<Rat> row(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            long lj = static_cast<long>(j);
            row[j] = get(lj - 1) + f.s(j) * get(lj) + f.t(j) * get(lj + 1);
        }
        tri.rows.push_back(std::move(row));
    }
    return tri;
}

std::vector<Rat> reconstruct_sequence(const FavardData& f, std::size_t n_max) {
    FavardTriangle tri = triangle(f, n_max);
    std::vector<Rat> out(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out[n] = tri.rows[n][0];
    return out;
}

Rat hankel_det_product(const FavardData& f, std::size_t n) {
    Rat acc = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) acc *= f.t(j);
    return acc;
}

std::vector<Rat> orthogonal_poly(const FavardData& f, std::size_t n) {
    std::vector<Rat> p0{Rat(1)};
    if (n == 0) return p0;
    std::vector<Rat> p1{-f.s(0), Rat(1)};
    for (std::size_t m = 2; m <= n; ++m) {
        // p_m = (x - s_{m-1}) p_{m-1} - t_{m-2} p_{m-2}
        std::vector<Rat> next(m + 1, Rat(0));
        for (std::size_t i = 0; i < p1.size(); ++i) {
            next[i + 1] += p1[i];
            next[i] -= f.s(m - 1) * p1[i];
        }
        for (std::size_t i = 0; i < p0.size(); ++i)
            next[i] -= f.t(m - 2) * p0[i];
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

VerificationReport factorization_check(const FavardData& f, std::size_t n) {
    VerificationReport rep;
    rep.claim = "ADA";

    std::vector<Rat> moments = reconstruct_sequence(f, n == 0 ? 0 : 2 * n - 2);
    ExactMatrix h(n, n, [&](std::size_t i, std::size_t j) {
        return moments[i + j];
    });
    FavardTriangle tri = triangle(f, n == 0 ? 0 : n - 1);
    ExactMatrix a(n, n, [&](std::size_t i, std::size_t j) {
        return j <= i ? tri.rows[i][j] : Rat(0);
    });
    Vec diag(n);
    Rat acc = 1;
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = acc;
        acc *= f.t(i);
    }
    ExactMatrix d(n, n, [&](std::size_t i, std::size_t j) {
        return i == j ? diag[i] : Rat(0);
    });

    ExactMatrix product = a * d * a.transpose();
    Record rec;
    rec.claim = rep.claim;
    if (f.tag) rec.r = family_code(*f.tag);
    rec.n = static_cast<long>(n);
    std::ostringstream shape;
    shape << n << "x" << n;
    rec.lhs = shape.str();
    rec.rhs = shape.str();
    rec.status = "pass";
    if (product != h) {
        for (std::size_t i = 0; i < n && rec.status == "pass"; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (product.at(i, j) != h.at(i, j)) {
                    std::ostringstream bad;
                    bad << shape.str() << ";(" << i << "," << j
                        << ")=" << product.at(i, j).get_str();
                    rec.rhs = bad.str();
                    rec.status = "fail";
                    break;
                }
    }
    rep.add(std::move(rec));
    return rep;
}

}  // namespace hankel
