#include "hankel/structured.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hankel {

namespace {

long diff(std::size_t a, std::size_t b) {
    return static_cast<long>(a) - static_cast<long>(b);
}

void require_band(std::size_t k, std::size_t N, std::size_t k_min,
                  const char* who) {
    if (k < k_min || k >= N)
        throw std::invalid_argument(std::string(who) +
                                    ": requires " +
                                    (k_min == 0 ? "0" : "1") +
                                    " <= k < N");
}

}  // namespace

ExactMatrix matrix_A(std::size_t N) {
    return ExactMatrix(N, N, [](std::size_t i, std::size_t j) {
        return Rat(binomial(2 * i + 1, diff(i, j)));
    });
}

ExactMatrix gamma_k(std::size_t k, std::size_t N) {
    if (k == 0) return ExactMatrix::scalar(N, 2);
    return ExactMatrix(N, N, [&](std::size_t i, std::size_t j) {
        bool band = std::labs(diff(i, j)) == static_cast<long>(k);
        bool stub = i + j + 1 == k;
        return Rat(band || stub ? 1 : 0);
    });
}

ExactMatrix alpha_beta(std::size_t k, std::size_t N, int eps) {
    if (N == 0) return ExactMatrix();
    if (eps < -1 || eps > 1)
        throw std::invalid_argument("alpha_beta: eps must be -1, 0 or +1");
    std::size_t M = 2 * N;
    ExactMatrix sigma(M, M, [&](std::size_t i, std::size_t j) {
        if (i == j + 1) return Rat(1);
        if (i == 0 && j == M - 1) return Rat(eps);
        return Rat(0);
    });
    ExactMatrix q(N, M, [&](std::size_t i, std::size_t j) {
        return Rat(j == N - 1 - i || j == N + i ? 1 : 0);
    });
    return q * mat_pow(sigma, k) * q.transpose();
}

ExactMatrix beta_plus2_inverse(std::size_t N) {
    return ExactMatrix(N, N, [](std::size_t i, std::size_t j) {
        Rat v(2 * std::min(i, j) + 1, 2);
        return (i + j) % 2 == 0 ? v : Rat(-v);
    });
}

ExactMatrix structure_g_alpha(std::size_t k, std::size_t N) {
    require_band(k, N, 0, "structure_g_alpha");
    return ExactMatrix(N, N, [&](std::size_t i, std::size_t j) {
        if (std::labs(diff(i, j)) > static_cast<long>(k)) return Rat(0);
        if (i + j < k || i + j > 2 * N - k - 2) return Rat(0);
        return Rat(neg_one_pow(i + j + k));
    });
}

ExactMatrix structure_g_beta(std::size_t k, std::size_t N) {
    require_band(k, N, 0, "structure_g_beta");
    return ExactMatrix(N, N, [&](std::size_t i, std::size_t j) {
        if (std::labs(diff(i, j)) > static_cast<long>(k)) return Rat(0);
        long v = 0;
        if (i + j >= k && i + j + k + 2 <= 2 * N) v += 1;
        if (i + j + k + 1 >= 2 * N) v += 2;  // bottom-right corner correction
        return Rat(v * neg_one_pow(i + j + k));
    });
}

ExactMatrix structure_b_alpha(std::size_t k, std::size_t N) {
    require_band(k, N, 1, "structure_b_alpha");
    return ExactMatrix(N, N, [&](std::size_t i, std::size_t j) {
        long v = 0;
        if (std::labs(diff(i, j)) == static_cast<long>(k)) v += 1;
        if (i + j + 1 == k) v += 1;
        if (i + j + k + 1 == 2 * N) v += 1;
        return Rat(v);
    });
}

ExactMatrix structure_b_beta(std::size_t k, std::size_t N) {
    require_band(k, N, 1, "structure_b_beta");
    return ExactMatrix(N, N, [&](std::size_t i, std::size_t j) {
        long v = 0;
        if (std::labs(diff(i, j)) == static_cast<long>(k)) v += 1;
        if (i + j + 1 == k) v += 1;
        if (i + j + k + 1 == 2 * N) v -= 1;
        return Rat(v);
    });
}

}  // namespace hankel
