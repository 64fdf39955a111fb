#include "hankel/conjecture.hpp"

#include <sstream>

#include "hankel/linalg.hpp"
#include "hankel/lucas.hpp"
#include "hankel/structured.hpp"

namespace hankel {

namespace {

Record value_record(const std::string& name, unsigned long r,
                    unsigned long k, unsigned long n, std::size_t N,
                    const Int& got, const Int& predicted) {
    Record rec;
    rec.claim = name;
    rec.r = static_cast<long>(r);
    rec.k = static_cast<long>(k);
    rec.n = static_cast<long>(n);
    rec.N = static_cast<long>(N);
    rec.lhs = got.get_str();
    rec.rhs = predicted.get_str();
    rec.status = got == predicted ? "supported" : "refuted";
    return rec;
}

ConjectureResult make_result(int id, std::string name, std::string statement) {
    ConjectureResult res;
    res.id = id;
    res.name = std::move(name);
    res.statement = std::move(statement);
    res.supported = true;
    res.report.claim = res.name;
    return res;
}

void finish(ConjectureResult& res) { res.supported = res.report.ok(); }

}  // namespace

Int d_prime(unsigned long r, std::size_t n) {
    Rat d = det_bareiss(hankel_matrix(SequenceSpec::d_prime(r), n));
    if (d.get_den() != 1)
        throw std::logic_error("d_prime: determinant is not an integer");
    return d.get_num();
}

std::vector<ConjectureResult> check_dprime_conjectures(unsigned long k_max,
                                                       unsigned long n_max) {
    std::vector<ConjectureResult> out;
    auto conj1 = make_result(1, "conj1",
                             "d'_{2k+1}((2k+1)n) = d'_{2k+1}((2k+1)n+1) = "
                             "(-1)^{kn}");
    auto conj2 = make_result(2, "conj2",
                             "d'_{2k+1}((2k+1)n+k) = "
                             "(-1)^{kn+k(k-1)/2} ((2k+1)(n+1))^{k-1}");
    auto conj3 = make_result(3, "conj3",
                             "d'_{2k+1}((2k+1)n+k+2) = "
                             "-(-1)^{kn+k(k-1)/2} ((2k+1)(n+1))^{k-1}");
    auto conj4 = make_result(4, "conj4", "d'_{2k+1}((2k+1)n+k+1) = 0");
    auto conj5 = make_result(5, "conj5",
                             "d'_{2k}(kn) = d'_{2k}(kn+1) = "
                             "(-1)^{n k(k-1)/2} (n+1)^{k-1}");
    auto conj7 = make_result(7, "conj7",
                             "control variant d'_{2k}(kn+1) = -d'_{2k}(kn); "
                             "expected to be refuted");

    for (unsigned long k = 1; k <= k_max; ++k) {
        unsigned long r_odd = 2 * k + 1;
        unsigned long r_even = 2 * k;
        for (unsigned long n = 0; n <= n_max; ++n) {
            Int odd_unit = Int(neg_one_pow(k * n));
            std::size_t base = static_cast<std::size_t>(r_odd) * n;
            conj1.report.add(value_record("conj1", r_odd, k, n, base,
                                          d_prime(r_odd, base), odd_unit));
            conj1.report.add(value_record("conj1", r_odd, k, n, base + 1,
                                          d_prime(r_odd, base + 1), odd_unit));

            Int odd_mag = neg_one_pow(k * n + choose2(k)) *
                          pow_int(Int(r_odd * (n + 1)), k - 1);
            conj2.report.add(value_record("conj2", r_odd, k, n, base + k,
                                          d_prime(r_odd, base + k), odd_mag));
            conj3.report.add(value_record("conj3", r_odd, k, n, base + k + 2,
                                          d_prime(r_odd, base + k + 2),
                                          -odd_mag));
            conj4.report.add(value_record("conj4", r_odd, k, n, base + k + 1,
                                          d_prime(r_odd, base + k + 1),
                                          Int(0)));

            Int even_val =
                neg_one_pow(n * choose2(k)) * pow_int(Int(n + 1), k - 1);
            std::size_t ebase = static_cast<std::size_t>(k) * n;
            conj5.report.add(value_record("conj5", r_even, k, n, ebase,
                                          d_prime(r_even, ebase), even_val));
            conj5.report.add(value_record("conj5", r_even, k, n, ebase + 1,
                                          d_prime(r_even, ebase + 1),
                                          even_val));
            conj7.report.add(value_record("conj7", r_even, k, n, ebase + 1,
                                          d_prime(r_even, ebase + 1),
                                          -even_val));
        }
    }
    for (auto* res : {&conj1, &conj2, &conj3, &conj4, &conj5, &conj7})
        finish(*res);
    out.push_back(std::move(conj1));
    out.push_back(std::move(conj2));
    out.push_back(std::move(conj3));
    out.push_back(std::move(conj4));
    out.push_back(std::move(conj5));
    out.push_back(std::move(conj7));
    return out;
}

ConjectureResult check_matrix_identity(unsigned long k_max,
                                       std::size_t window) {
    auto res = make_result(6, "conj6",
                           "weighted moment matrix equals A p_r(band) A^T "
                           "on the window i+j <= w");
    std::size_t T = window + 1;
    ExactMatrix a = matrix_A(T);
    ExactMatrix at = a.transpose();

    for (unsigned long k = 1; k <= k_max; ++k) {
        for (unsigned long r : {2 * k, 2 * k + 1}) {
            IntPolynomial xp2(std::vector<Int>{2, 1});
            IntPolynomial p;
            if (r % 2 == 0) {
                p = -a_poly(k);
            } else {
                IntPolynomial xm2(std::vector<Int>{-2, 1});
                p = g_poly(k).flip_sign() * xm2 * Int(neg_one_pow(k + 1));
            }
            for (unsigned long i = 0; i + 1 < k; ++i) p = p * xp2;

            ExactMatrix product = a * eval_at_gamma(p, T) * at;
            SequenceSpec spec = SequenceSpec::d_prime(r);

            Record rec;
            rec.claim = res.name;
            rec.r = static_cast<long>(r);
            rec.k = static_cast<long>(k);
            rec.N = static_cast<long>(window);
            std::ostringstream shape;
            shape << T << "x" << T;
            rec.lhs = shape.str();
            rec.rhs = shape.str();
            rec.status = "supported";
            for (std::size_t i = 0; i < T && rec.status == "supported"; ++i)
                for (std::size_t j = 0; j < T; ++j) {
                    if (i + j > window) continue;
                    if (product.at(i, j) != seq_term(spec, i + j)) {
                        std::ostringstream bad;
                        bad << shape.str() << ";(" << i << "," << j
                            << ")=" << product.at(i, j).get_str();
                        rec.rhs = bad.str();
                        rec.status = "refuted";
                        break;
                    }
                }
            res.report.add(std::move(rec));
        }
    }
    finish(res);
    return res;
}

}  // namespace hankel
