#include "hankel/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hankel/conjecture.hpp"
#include "hankel/favard.hpp"
#include "hankel/linalg.hpp"
#include "hankel/lucas.hpp"
#include "hankel/proof_engine.hpp"
#include "hankel/sequences.hpp"
#include "hankel/structured.hpp"
#include "hankel/threadpool.hpp"

namespace hankel {

namespace {

Range pick(const std::optional<Range>& given, long lo, long hi, long quick_hi,
           bool quick) {
    if (given) return *given;
    return {lo, quick ? std::min(hi, quick_hi) : hi};
}

std::string shape_str(const ExactMatrix& m) {
    std::ostringstream out;
    out << m.rows() << "x" << m.cols();
    return out.str();
}

// lhs and rhs carry the shape; on mismatch rhs gains the first offending
// entry as ";(i,j)=value".
void matrix_compare(Record& rec, const ExactMatrix& got,
                    const ExactMatrix& want) {
    rec.lhs = shape_str(want);
    rec.rhs = shape_str(want);
    rec.status = "pass";
    if (got == want) return;
    rec.status = "fail";
    if (got.rows() != want.rows() || got.cols() != want.cols()) {
        rec.rhs = shape_str(got);
        return;
    }
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j)
            if (got.at(i, j) != want.at(i, j)) {
                std::ostringstream bad;
                bad << shape_str(got) << ";(" << i << "," << j
                    << ")=" << got.at(i, j).get_str();
                rec.rhs = bad.str();
                return;
            }
}

void value_compare(Record& rec, const Rat& got, const Rat& want) {
    rec.lhs = got.get_str();
    rec.rhs = want.get_str();
    rec.status = got == want ? "pass" : "fail";
}

using Task = std::function<Record()>;

VerificationReport run_tasks(const std::string& claim, std::vector<Task> tasks,
                             unsigned threads) {
    std::vector<Record> recs(tasks.size());
    parallel_for(tasks.size(), threads,
                 [&](std::size_t i) { recs[i] = tasks[i](); });
    VerificationReport rep;
    rep.claim = claim;
    for (Record& r : recs) rep.add(std::move(r));
    return rep;
}

std::mt19937_64 trial_rng(unsigned long salt, unsigned long trial) {
    return std::mt19937_64(0x9e3779b97f4a7c15ULL ^ (salt << 32) ^ trial);
}

Rat random_entry(std::mt19937_64& rng, bool allow_fractions) {
    std::uniform_int_distribution<long> num(-9, 9);
    if (!allow_fractions) return Rat(num(rng));
    std::uniform_int_distribution<long> den(1, 4);
    Rat v(num(rng), den(rng));
    v.canonicalize();
    return v;
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                          std::size_t cols, bool allow_fractions = false) {
    std::vector<std::vector<Rat>> grid(rows, std::vector<Rat>(cols));
    for (auto& row : grid)
        for (Rat& x : row) x = random_entry(rng, allow_fractions);
    return ExactMatrix::from_rows(grid);
}

// Product of random n x r and r x n factors: rank at most r.
ExactMatrix random_low_rank(std::mt19937_64& rng, std::size_t n,
                            std::size_t r) {
    if (r == 0) return ExactMatrix::zero(n, n);
    return random_matrix(rng, n, r) * random_matrix(rng, r, n);
}

Record base_record(const std::string& claim) {
    Record rec;
    rec.claim = claim;
    return rec;
}

// ---- structured-family claims ----------------------------------------

VerificationReport claim_anan(const ClaimRanges& cfg) {
    Range nr = pick(cfg.N, 1, 25, 10, cfg.quick);
    std::vector<Task> tasks;
    for (long N = std::max(1L, nr.lo); N <= nr.hi; ++N)
        tasks.push_back([N] {
            Record rec = base_record("anan");
            rec.N = N;
            std::size_t sz = static_cast<std::size_t>(N);
            ExactMatrix a = matrix_A(sz);
            ExactMatrix want(sz, sz, [](std::size_t i, std::size_t j) {
                return Rat(binomial(2 * (i + j) + 1, i + j));
            });
            matrix_compare(rec, a * a.transpose(), want);
            return rec;
        });
    return run_tasks("anan", std::move(tasks), cfg.threads);
}

VerificationReport claim_angan(const ClaimRanges& cfg) {
    Range kr = pick(cfg.k, 1, 10, 5, cfg.quick);
    Range nr = pick(cfg.N, 1, 25, 10, cfg.quick);
    std::vector<Task> tasks;
    for (long k = std::max(1L, kr.lo); k <= kr.hi; ++k)
        for (long N = std::max(1L, nr.lo); N <= nr.hi; ++N)
            tasks.push_back([k, N] {
                Record rec = base_record("angan");
                rec.k = k;
                rec.N = N;
                std::size_t sz = static_cast<std::size_t>(N);
                ExactMatrix a = matrix_A(sz);
                ExactMatrix want(sz, sz, [&](std::size_t i, std::size_t j) {
                    return Rat(binomial(2 * (i + j) + 2,
                                        static_cast<long>(i + j) + 1 - k));
                });
                matrix_compare(
                    rec, a * gamma_k(static_cast<std::size_t>(k), sz) * a.transpose(),
                    want);
                return rec;
            });
    return run_tasks("angan", std::move(tasks), cfg.threads);
}

Int expected_band_det(unsigned long k, unsigned long N) {
    // Trichotomy shared by gamma_k and b_k evaluations.
    if (N % (2 * k) == 0) {
        unsigned long n = N / (2 * k);
        return Int(neg_one_pow(k * n));
    }
    if (N % (2 * k) == k) {
        unsigned long n = (N - k) / (2 * k);
        return Int(neg_one_pow(k * n + choose2(k)));
    }
    return 0;
}

VerificationReport claim_detckn(const ClaimRanges& cfg) {
    Range kr = pick(cfg.k, 1, 4, 3, cfg.quick);
    Range nr = pick(cfg.N, 0, 40, 16, cfg.quick);
    std::vector<Task> tasks;
    for (long k = std::max(1L, kr.lo); k <= kr.hi; ++k)
        for (long N = std::max(0L, nr.lo); N <= nr.hi; ++N)
            tasks.push_back([k, N] {
                Record rec = base_record("detckn");
                rec.k = k;
                rec.N = N;
                Rat got = det_bareiss(gamma_k(static_cast<std::size_t>(k),
                                              static_cast<std::size_t>(N)));
                value_compare(rec, got, Rat(expected_band_det(k, N)));
                return rec;
            });
    return run_tasks("detckn", std::move(tasks), cfg.threads);
}

VerificationReport claim_detgka(const ClaimRanges& cfg) {
    Range kr = pick(cfg.k, 1, 4, 3, cfg.quick);
    Range nr = pick(cfg.N, 0, 40, 16, cfg.quick);
    std::vector<Task> tasks;
    for (long k = std::max(1L, kr.lo); k <= kr.hi; ++k)
        for (long N = std::max(0L, nr.lo); N <= nr.hi; ++N)
            tasks.push_back([k, N] {
                Record rec = base_record("detgka");
                rec.k = k;
                rec.N = N;
                unsigned long p = 2 * k + 1;
                Int want = 0;
                if (N % p == 0) {
                    want = 1;
                } else if (N % p == static_cast<unsigned long>(k) + 1) {
                    want = neg_one_pow(choose2(k + 1));
                }
                Rat got = det_bareiss(eval_at_gamma(
                    g_poly(k), static_cast<std::size_t>(N)));
                value_compare(rec, got, Rat(want));
                return rec;
            });
    return run_tasks("detgka", std::move(tasks), cfg.threads);
}

VerificationReport claim_detbka(const ClaimRanges& cfg) {
    Range kr = pick(cfg.k, 1, 4, 3, cfg.quick);
    Range nr = pick(cfg.N, 0, 40, 16, cfg.quick);
    std::vector<Task> tasks;
    for (long k = std::max(1L, kr.lo); k <= kr.hi; ++k)
        for (long N = std::max(0L, nr.lo); N <= nr.hi; ++N)
            tasks.push_back([k, N] {
                Record rec = base_record("detbka");
                rec.k = k;
                rec.N = N;
                Rat got = det_bareiss(eval_at_gamma(
                    b_poly(k), static_cast<std::size_t>(N)));
                value_compare(rec, got, Rat(expected_band_det(k, N)));
                return rec;
            });
    return run_tasks("detbka", std::move(tasks), cfg.threads);
}

VerificationReport claim_gka(const ClaimRanges& cfg) {
    Range nr = pick(cfg.N, 1, 15, 8, cfg.quick);
    std::vector<Task> tasks;
    for (long N = std::max(1L, nr.lo); N <= nr.hi; ++N) {
        Range kr = cfg.k ? *cfg.k : Range{0, N - 1};
        for (long k = std::max(0L, kr.lo); k <= std::min(kr.hi, N - 1); ++k)
            tasks.push_back([k, N] {
                Record rec = base_record("gka");
                rec.k = k;
                rec.N = N;
                std::size_t sk = k, sn = N;
                IntPolynomial g = g_poly(k);
                ExactMatrix diff_a =
                    structure_g_alpha(sk, sn) -
                    eval_at_matrix(g, alpha_beta(1, sn, +1));
                ExactMatrix diff_b =
                    structure_g_beta(sk, sn) -
                    eval_at_matrix(g, alpha_beta(1, sn, -1));
                rec.lhs = shape_str(diff_a);
                rec.rhs = rec.lhs;
                rec.status = "pass";
                if (!diff_a.is_zero()) {
                    rec.status = "fail";
                    rec.rhs = "alpha variant differs";
                } else if (!diff_b.is_zero()) {
                    rec.status = "fail";
                    rec.rhs = "beta variant differs";
                }
                return rec;
            });
    }
    return run_tasks("gka", std::move(tasks), cfg.threads);
}

VerificationReport claim_bka(const ClaimRanges& cfg) {
    Range nr = pick(cfg.N, 2, 15, 8, cfg.quick);
    std::vector<Task> tasks;
    for (long N = std::max(2L, nr.lo); N <= nr.hi; ++N) {
        Range kr = cfg.k ? *cfg.k : Range{1, N - 1};
        for (long k = std::max(1L, kr.lo); k <= std::min(kr.hi, N - 1); ++k)
            tasks.push_back([k, N] {
                Record rec = base_record("bka");
                rec.k = k;
                rec.N = N;
                std::size_t sk = k, sn = N;
                IntPolynomial b = b_poly(k);
                ExactMatrix diff_a =
                    structure_b_alpha(sk, sn) -
                    eval_at_matrix(b, alpha_beta(1, sn, +1));
                ExactMatrix diff_b =
                    structure_b_beta(sk, sn) -
                    eval_at_matrix(b, alpha_beta(1, sn, -1));
                rec.lhs = shape_str(diff_a);
                rec.rhs = rec.lhs;
                rec.status = "pass";
                if (!diff_a.is_zero()) {
                    rec.status = "fail";
                    rec.rhs = "alpha variant differs";
                } else if (!diff_b.is_zero()) {
                    rec.status = "fail";
                    rec.rhs = "beta variant differs";
                }
                return rec;
            });
    }
    return run_tasks("bka", std::move(tasks), cfg.threads);
}

VerificationReport claim_B(const ClaimRanges& cfg) {
    Range nr = pick(cfg.N, 1, 30, 12, cfg.quick);
    std::vector<Task> tasks;
    for (long N = std::max(1L, nr.lo); N <= nr.hi; ++N)
        tasks.push_back([N] {
            Record rec = base_record("B");
            rec.N = N;
            std::size_t sn = N;
            ExactMatrix bp2 = alpha_beta(1, sn, -1) + ExactMatrix::scalar(sn, 2);
            bool inverse_ok =
                bp2 * beta_plus2_inverse(sn) == ExactMatrix::identity(sn);
            Rat det = det_bareiss(bp2);
            rec.lhs = det.get_str();
            rec.rhs = "2";
            rec.status = inverse_ok && det == 2 ? "pass" : "fail";
            if (!inverse_ok) rec.rhs = "inverse identity fails";
            return rec;
        });
    return run_tasks("B", std::move(tasks), cfg.threads);
}

VerificationReport claim_lkg(const ClaimRanges& cfg) {
    Range nr = pick(cfg.N, 1, 8, 5, cfg.quick);
    std::vector<Task> tasks;
    for (long N = std::max(1L, nr.lo); N <= nr.hi; ++N) {
        Range kr = cfg.k ? *cfg.k : Range{0, 2 * N};
        for (long k = std::max(0L, kr.lo); k <= std::min(kr.hi, 2 * N); ++k)
            tasks.push_back([k, N] {
                Record rec = base_record("lkg");
                rec.k = k;
                rec.N = N;
                std::size_t sk = k, sn = N;
                IntPolynomial lk = lucas_poly(sk);
                ExactMatrix alpha_k = alpha_beta(sk, sn, +1);
                ExactMatrix beta_k = alpha_beta(sk, sn, -1);
                bool ok =
                    eval_at_matrix(lk, alpha_beta(1, sn, +1)) == alpha_k &&
                    eval_at_matrix(lk, alpha_beta(1, sn, -1)) == beta_k;
                const char* what = "evaluation matches sigma powers";
                if (ok && sk <= sn) {
                    // Averaging the bordered pair recovers the band matrix
                    // as long as the band fits the truncation.
                    ok = Rat(1, 2) * (alpha_k + beta_k) ==
                         (sk == 0 ? ExactMatrix::scalar(sn, 2)
                                  : gamma_k(sk, sn));
                    what = "average equals band truncation";
                }
                rec.lhs = shape_str(alpha_k);
                rec.rhs = ok ? rec.lhs : what;
                rec.status = ok ? "pass" : "fail";
                return rec;
            });
    }
    return run_tasks("lkg", std::move(tasks), cfg.threads);
}

VerificationReport claim_abg(const ClaimRanges& cfg) {
    Range nr = pick(cfg.N, 1, 8, 5, cfg.quick);
    Range tr = pick(cfg.n, 0, 4, 2, cfg.quick);
    std::vector<Task> tasks;
    for (long N = std::max(1L, nr.lo); N <= nr.hi; ++N) {
        for (long t = std::max(0L, tr.lo); t <= tr.hi; ++t)
            tasks.push_back([N, t] {
                Record rec = base_record("abg");
                rec.n = t;
                rec.N = N;
                std::size_t sn = N;
                auto rng = trial_rng(1, static_cast<unsigned long>(N * 64 + t));
                std::uniform_int_distribution<long> deg_dist(0, 2 * N);
                std::uniform_int_distribution<long> coeff(-9, 9);
                long deg = deg_dist(rng);
                std::vector<Int> coeffs(deg + 1);
                for (Int& c : coeffs) c = coeff(rng);
                coeffs[deg] = coeff(rng) | 1;  // keep the top coefficient nonzero
                IntPolynomial p{std::move(coeffs)};
                ExactMatrix averaged =
                    Rat(1, 2) *
                    (eval_at_matrix(p, alpha_beta(1, sn, +1)) +
                     eval_at_matrix(p, alpha_beta(1, sn, -1)));
                matrix_compare(rec, averaged, eval_at_gamma(p, sn));
                return rec;
            });
        // Sharpness: averaging must stop matching at degree 2N + 1.
        tasks.push_back([N] {
            Record rec = base_record("abg");
            rec.N = N;
            std::size_t sn = N;
            IntPolynomial p = IntPolynomial::monomial(2 * sn + 1);
            ExactMatrix averaged =
                Rat(1, 2) * (eval_at_matrix(p, alpha_beta(1, sn, +1)) +
                             eval_at_matrix(p, alpha_beta(1, sn, -1)));
            bool differs = averaged != eval_at_gamma(p, sn);
            rec.lhs = "degree 2N+1 separates";
            rec.rhs = differs ? rec.lhs : "still equal past the bound";
            rec.status = differs ? "pass" : "fail";
            return rec;
        });
    }
    return run_tasks("abg", std::move(tasks), cfg.threads);
}

VerificationReport claim_mult(const ClaimRanges& cfg) {
    Range kr = pick(cfg.k, 2, 8, 5, cfg.quick);
    Range nr = pick(cfg.N, 1, 10, 6, cfg.quick);
    std::vector<Task> tasks;
    for (long k = std::max(2L, kr.lo); k <= kr.hi; ++k)
        for (long N = std::max(1L, nr.lo); N <= nr.hi; ++N)
            tasks.push_back([k, N] {
                Record rec = base_record("mult");
                rec.k = k;
                rec.N = N;
                std::size_t sk = k, sn = N;
                std::string what;
                for (int eps : {+1, -1}) {
                    ExactMatrix lhs = alpha_beta(1, sn, eps) *
                                      alpha_beta(sk - 1, sn, eps);
                    ExactMatrix rhs = alpha_beta(sk, sn, eps) +
                                      alpha_beta(sk - 2, sn, eps);
                    if (lhs != rhs) {
                        what = eps > 0 ? "alpha recurrence fails"
                                       : "beta recurrence fails";
                        break;
                    }
                }
                if (what.empty()) {
                    // The band truncation only satisfies the recurrence away
                    // from the last row, where the cut removes entries.
                    ExactMatrix lhs = gamma_k(1, sn) * gamma_k(sk - 1, sn);
                    ExactMatrix rhs = gamma_k(sk, sn) + gamma_k(sk - 2, sn);
                    for (std::size_t i = 0; i + 1 < sn && what.empty(); ++i)
                        for (std::size_t j = 0; j < sn; ++j)
                            if (lhs.at(i, j) != rhs.at(i, j)) {
                                what = "band recurrence fails inside window";
                                break;
                            }
                }
                rec.lhs = shape_str(gamma_k(sk, sn));
                rec.rhs = what.empty() ? rec.lhs : what;
                rec.status = what.empty() ? "pass" : "fail";
                return rec;
            });
    return run_tasks("mult", std::move(tasks), cfg.threads);
}

// ---- determinant-family claims ----------------------------------------

VerificationReport claim_Gamma(const ClaimRanges& cfg) {
    Range rr = pick(cfg.r, 1, 8, 5, cfg.quick);
    Range nr = pick(cfg.N, 0, 16, 10, cfg.quick);
    std::vector<Task> tasks;
    for (long r = std::max(1L, rr.lo); r <= rr.hi; ++r) {
        CaseSpec cs = CaseSpec::from_rN(r, 0);
        long start = std::max(nr.lo, static_cast<long>(cs.k + cs.l));
        for (long N = start; N <= nr.hi; ++N)
            tasks.push_back([r, N] {
                Record rec = base_record("Gamma");
                rec.r = r;
                rec.N = N;
                Int direct = d_r_direct(r, N);
                FactoredDet via_g = d_r_via_gamma(r, N);
                FactoredDet via_ab = d_r_via_alpha_beta(r, N);
                rec.lhs = direct.get_str();
                rec.rhs = via_g.value.get_str();
                bool ok = !via_g.used_fallback && !via_ab.used_fallback &&
                          via_g.value == direct && via_ab.value == direct;
                if (via_ab.value != via_g.value)
                    rec.rhs += ";averaged=" + via_ab.value.get_str();
                rec.status = ok ? "pass" : "fail";
                return rec;
            });
    }
    return run_tasks("Gamma", std::move(tasks), cfg.threads);
}

VerificationReport claim_formulas(const ClaimRanges& cfg) {
    Range kr = pick(cfg.k, 1, 3, 2, cfg.quick);
    Range nr = pick(cfg.n, 0, 3, 2, cfg.quick);
    // Enumerate the seven residue classes, dropping duplicate (r, N) pairs.
    std::map<std::pair<unsigned long, std::size_t>, bool> seen;
    std::vector<Task> tasks;
    for (int case_id = 1; case_id <= 7; ++case_id)
        for (long k = std::max(1L, kr.lo); k <= kr.hi; ++k)
            for (long n = std::max(0L, nr.lo); n <= nr.hi; ++n) {
                CaseSpec cs = CaseSpec::from_case(case_id, k, n);
                if (!seen.emplace(std::make_pair(cs.r, cs.N), true).second)
                    continue;
                tasks.push_back([cs] {
                    Record rec = base_record("formulas");
                    rec.r = static_cast<long>(cs.r);
                    rec.N = static_cast<long>(cs.N);
                    std::optional<Int> cf = closed_form(cs.r, cs.N);
                    if (!cf) {
                        rec.lhs = "no closed form";
                        rec.status = "fail";
                        return rec;
                    }
                    value_compare(rec, Rat(*cf), Rat(d_r_direct(cs.r, cs.N)));
                    return rec;
                });
            }
    return run_tasks("formulas", std::move(tasks), cfg.threads);
}

VerificationReport claim_ladder(const ClaimRanges& cfg, bool nonsingular) {
    Range kr = pick(cfg.k, 1, 3, 2, cfg.quick);
    Range nr = pick(cfg.n, 0, 3, 2, cfg.quick);
    std::vector<int> cases =
        nonsingular ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{5, 6, 7};
    std::vector<VerificationReport> parts(cases.size());
    parallel_for(cases.size(), cfg.threads, [&](std::size_t i) {
        parts[i] = verify_case(cases[i], std::max(1L, kr.hi),
                               std::max(0L, nr.hi));
    });
    VerificationReport rep;
    rep.claim = nonsingular ? "main1" : "main2";
    for (const auto& part : parts) rep.merge(part);
    return rep;
}

// ---- oracle claims -----------------------------------------------------

VerificationReport claim_oracle(const ClaimRanges& cfg) {
    Range tr = pick(cfg.n, 0, 199, 59, cfg.quick);
    std::vector<Task> tasks;
    for (long t = std::max(0L, tr.lo); t <= tr.hi; ++t)
        tasks.push_back([t] {
            Record rec = base_record("oracle");
            rec.n = t;
            auto rng = trial_rng(2, t);
            std::uniform_int_distribution<std::size_t> dim_dist(0, 7);
            std::size_t dim = dim_dist(rng);
            rec.N = static_cast<long>(dim);
            ExactMatrix m = random_matrix(rng, dim, dim, t % 4 == 0);
            value_compare(rec, det_bareiss(m), det_cofactor(m));
            return rec;
        });
    return run_tasks("oracle", std::move(tasks), cfg.threads);
}

VerificationReport claim_mdl(const ClaimRanges& cfg) {
    Range tr = pick(cfg.n, 0, 99, 39, cfg.quick);
    std::vector<Task> tasks;
    for (long t = std::max(0L, tr.lo); t <= tr.hi; ++t)
        tasks.push_back([t] {
            Record rec = base_record("mdl");
            rec.n = t;
            auto rng = trial_rng(3, t);
            std::uniform_int_distribution<std::size_t> dim_dist(1, 6);
            std::size_t dim = dim_dist(rng);
            rec.N = static_cast<long>(dim);
            // Every third matrix is singular by construction.
            ExactMatrix a = t % 3 == 0 ? random_low_rank(rng, dim, dim - 1)
                                       : random_matrix(rng, dim, dim);
            Vec u(dim), v(dim);
            for (Rat& x : u) x = random_entry(rng, false);
            for (Rat& x : v) x = random_entry(rng, false);
            Rat got = matrix_det_lemma(a, u, v);
            Rat want = det_bareiss(a + outer(u, v));
            value_compare(rec, got, want);
            return rec;
        });
    return run_tasks("mdl", std::move(tasks), cfg.threads);
}

VerificationReport claim_adj(const ClaimRanges& cfg) {
    Range nr = pick(cfg.N, 2, 6, 4, cfg.quick);
    std::vector<Task> tasks;
    for (long dim = std::max(2L, nr.lo); dim <= nr.hi; ++dim)
        for (long cls = 0; cls <= 2; ++cls)
            tasks.push_back([dim, cls] {
                Record rec = base_record("adj");
                rec.N = dim;
                rec.k = cls;  // 0: full rank, 1: rank n-1, 2: rank <= n-2
                std::size_t n = static_cast<std::size_t>(dim);
                auto rng = trial_rng(4, static_cast<unsigned long>(dim * 8 + cls));
                ExactMatrix m = ExactMatrix::zero(n, n);
                if (cls == 0) {
                    do {
                        m = random_matrix(rng, n, n);
                    } while (det_bareiss(m) == 0);
                } else if (cls == 1) {
                    do {
                        m = random_low_rank(rng, n, n - 1);
                    } while (rank(m) != n - 1);
                } else {
                    m = random_low_rank(rng, n, n - 2);
                }
                std::size_t adj_rank = rank(adjugate(m));
                std::size_t want =
                    cls == 0 ? n : (cls == 1 ? std::size_t(1) : std::size_t(0));
                value_compare(rec, Rat(static_cast<long>(adj_rank)),
                              Rat(static_cast<long>(want)));
                return rec;
            });
    return run_tasks("adj", std::move(tasks), cfg.threads);
}

VerificationReport claim_block(const ClaimRanges& cfg) {
    Range tr = pick(cfg.n, 0, 39, 11, cfg.quick);
    std::vector<Task> tasks;
    for (long t = std::max(0L, tr.lo); t <= tr.hi; ++t)
        tasks.push_back([t] {
            Record rec = base_record("block");
            rec.n = t;
            auto rng = trial_rng(5, t);
            std::uniform_int_distribution<std::size_t> dim_dist(1, 4);
            std::size_t p = dim_dist(rng), q = dim_dist(rng);
            rec.N = static_cast<long>(p + q);
            ExactMatrix a = random_matrix(rng, p, p);
            ExactMatrix b = random_matrix(rng, p, q);
            ExactMatrix c = random_matrix(rng, q, p);
            ExactMatrix d = ExactMatrix::zero(q, q);
            do {
                d = random_matrix(rng, q, q);
            } while (det_bareiss(d) == 0);
            ExactMatrix full(p + q, p + q, [&](std::size_t i, std::size_t j) {
                if (i < p && j < p) return a.at(i, j);
                if (i < p) return b.at(i, j - p);
                if (j < p) return c.at(i - p, j);
                return d.at(i - p, j - p);
            });
            value_compare(rec, schur_block_det(a, b, c, d), det_bareiss(full));
            return rec;
        });
    return run_tasks("block", std::move(tasks), cfg.threads);
}

VerificationReport claim_corner(const ClaimRanges& cfg) {
    Range tr = pick(cfg.n, 0, 59, 19, cfg.quick);
    std::vector<Task> tasks;
    for (long t = std::max(0L, tr.lo); t <= tr.hi; ++t)
        tasks.push_back([t] {
            Record rec = base_record("corner");
            rec.n = t;
            auto rng = trial_rng(6, t);
            std::uniform_int_distribution<std::size_t> dim_dist(1, 10);
            std::size_t N = dim_dist(rng);
            std::uniform_int_distribution<std::size_t> deg_dist(0, N - 1);
            std::size_t deg = deg_dist(rng);
            rec.N = static_cast<long>(N);
            rec.k = static_cast<long>(deg);
            std::uniform_int_distribution<long> coeff(-9, 9);
            std::vector<Int> coeffs(deg + 1);
            for (Int& c : coeffs) c = coeff(rng);
            coeffs[deg] = coeff(rng) | 1;
            IntPolynomial p{std::move(coeffs)};
            // Bordered evaluations agree except in the bottom-right corner
            // whose depth is the polynomial degree.
            ExactMatrix diff = eval_at_matrix(p, alpha_beta(1, N, +1)) -
                               eval_at_matrix(p, alpha_beta(1, N, -1));
            bool ok = is_k_small(diff, deg);
            rec.lhs = "corner depth <= degree";
            rec.rhs = ok ? rec.lhs : "difference escapes the corner";
            rec.status = ok ? "pass" : "fail";
            return rec;
        });
    return run_tasks("corner", std::move(tasks), cfg.threads);
}

// ---- recurrence-family claims ------------------------------------------

const std::vector<FavardFamily>& all_families() {
    static const std::vector<FavardFamily> fams = {
        FavardFamily::CentralBinomial, FavardFamily::Shift1,
        FavardFamily::AeratedCatalan, FavardFamily::AeratedCentralBinomial};
    return fams;
}

VerificationReport claim_fav(const ClaimRanges& cfg) {
    Range nr = pick(cfg.n, 0, 20, 12, cfg.quick);
    std::vector<Task> tasks;
    for (FavardFamily fam : all_families())
        tasks.push_back([fam, nr] {
            Record rec = base_record("fav");
            rec.r = family_code(fam);
            rec.n = nr.hi;
            FavardData data = FavardData::tagged(fam);
            SequenceSpec spec = family_sequence(fam);
            auto moments = reconstruct_sequence(data, std::max(0L, nr.hi));
            rec.status = "pass";
            rec.lhs = "moments 0.." + std::to_string(nr.hi);
            rec.rhs = rec.lhs;
            for (long n = std::max(0L, nr.lo); n <= nr.hi; ++n)
                if (moments[n] != seq_term(spec, n)) {
                    rec.status = "fail";
                    rec.rhs = "mismatch at n=" + std::to_string(n) + ": " +
                              moments[n].get_str();
                    break;
                }
            return rec;
        });
    return run_tasks("fav", std::move(tasks), cfg.threads);
}

VerificationReport claim_favdet(const ClaimRanges& cfg) {
    Range nr = pick(cfg.n, 0, 12, 8, cfg.quick);
    std::vector<Task> tasks;
    for (FavardFamily fam : all_families())
        for (long n = std::max(0L, nr.lo); n <= nr.hi; ++n)
            tasks.push_back([fam, n] {
                Record rec = base_record("favdet");
                rec.r = family_code(fam);
                rec.n = n;
                FavardData data = FavardData::tagged(fam);
                ExactMatrix h = hankel_matrix(family_sequence(fam), n);
                value_compare(rec, hankel_det_product(data, n),
                              det_bareiss(h));
                return rec;
            });
    return run_tasks("favdet", std::move(tasks), cfg.threads);
}

VerificationReport claim_fav2(const ClaimRanges& cfg) {
    Range nr = pick(cfg.n, 0, 10, 6, cfg.quick);
    std::vector<Task> tasks;
    for (FavardFamily fam : all_families())
        for (long n = std::max(0L, nr.lo); n <= nr.hi; ++n)
            tasks.push_back([fam, n] {
                Record rec = base_record("fav2");
                rec.r = family_code(fam);
                rec.n = n;
                FavardData data = FavardData::tagged(fam);
                FavardTriangle tri = triangle(data, n);
                // Recombine sum_j a_n(j) p_j and compare with x^n.
                std::vector<Rat> acc(n + 1, Rat(0));
                for (long j = 0; j <= n; ++j) {
                    std::vector<Rat> pj = orthogonal_poly(data, j);
                    for (std::size_t i = 0; i < pj.size(); ++i)
                        acc[i] += tri.rows[n][j] * pj[i];
                }
                bool ok = acc[n] == 1;
                for (long i = 0; i < n && ok; ++i) ok = acc[i] == 0;
                rec.lhs = "x^" + std::to_string(n);
                rec.rhs = ok ? rec.lhs : "recombination differs";
                rec.status = ok ? "pass" : "fail";
                return rec;
            });
    return run_tasks("fav2", std::move(tasks), cfg.threads);
}

VerificationReport claim_ADA(const ClaimRanges& cfg) {
    Range nr = pick(cfg.n, 0, 8, 5, cfg.quick);
    std::vector<Task> tasks;
    for (FavardFamily fam : all_families())
        for (long n = std::max(0L, nr.lo); n <= nr.hi; ++n)
            tasks.push_back([fam, n] {
                VerificationReport one =
                    factorization_check(FavardData::tagged(fam), n);
                return one.records.front();
            });
    return run_tasks("ADA", std::move(tasks), cfg.threads);
}

// ---- polynomial claims ---------------------------------------------------

VerificationReport claim_inv(const ClaimRanges& cfg) {
    Range nr = pick(cfg.n, 0, 12, 8, cfg.quick);
    std::vector<Task> tasks;
    for (long n = std::max(0L, nr.lo); n <= nr.hi; ++n)
        tasks.push_back([n] {
            Record rec = base_record("inv");
            rec.n = n;
            std::vector<Int> c = lucas_expand(IntPolynomial::monomial(n));
            bool ok = true;
            // x^n = sum_k C(n, k) lucas_bar(n - 2k)
            for (long j = 0; j <= n && ok; ++j) {
                Int want = (n - j) % 2 == 0 ? binomial(n, (n - j) / 2) : Int(0);
                ok = c[j] == want;
            }
            rec.lhs = "x^" + std::to_string(n);
            rec.rhs = ok ? rec.lhs : "expansion coefficients differ";
            rec.status = ok ? "pass" : "fail";
            return rec;
        });
    return run_tasks("inv", std::move(tasks), cfg.threads);
}

VerificationReport claim_charpoly(const ClaimRanges& cfg) {
    Range nr = pick(cfg.N, 1, 30, 12, cfg.quick);
    std::vector<Task> tasks;
    for (long N = std::max(1L, nr.lo); N <= nr.hi; ++N)
        tasks.push_back([N] {
            Record rec = base_record("charpoly");
            rec.N = N;
            std::size_t sn = N;
            std::string what;
            CharPolys cp = char_polys(sn);
            // Signed value at -2 first: cheap and covers large N.
            if (neg_one_pow(sn) * cp.b(Int(-2)) != 2)
                what = "signed value of b at -2 differs from 2";
            if (what.empty() && N <= 8) {
                // Degree-N monic polynomials agree once they match the
                // characteristic values at N + 1 points.
                ExactMatrix gamma = gamma_k(1, sn);
                ExactMatrix alpha = alpha_beta(1, sn, +1);
                ExactMatrix beta = alpha_beta(1, sn, -1);
                for (long x = 0; x <= N && what.empty(); ++x) {
                    ExactMatrix xi = ExactMatrix::scalar(sn, x);
                    if (det_bareiss(xi - gamma) != cp.g(Int(x)))
                        what = "band char poly differs";
                    else if (det_bareiss(xi - alpha) != cp.a(Int(x)))
                        what = "alpha char poly differs";
                    else if (det_bareiss(xi - beta) != cp.b(Int(x)))
                        what = "beta char poly differs";
                }
            }
            rec.lhs = "2";
            rec.rhs = what.empty() ? "2" : what;
            rec.status = what.empty() ? "pass" : "fail";
            return rec;
        });
    return run_tasks("charpoly", std::move(tasks), cfg.threads);
}

VerificationReport claim_window(const ClaimRanges& cfg) {
    Range kr = pick(cfg.k, 1, 4, 3, cfg.quick);
    long window = cfg.N ? cfg.N->hi : (cfg.quick ? 10 : 16);
    std::vector<Task> tasks;
    for (long k = std::max(1L, kr.lo); k <= kr.hi; ++k)
        tasks.push_back([k, window] {
            Record rec = base_record("window");
            rec.k = k;
            rec.N = window;
            std::size_t sk = k, T = static_cast<std::size_t>(window) + 1;
            ExactMatrix a = matrix_A(T);
            ExactMatrix at = a.transpose();
            ExactMatrix g_prod = a * eval_at_gamma(g_poly(sk), T) * at;
            IntPolynomial xp2(std::vector<Int>{2, 1});
            IntPolynomial pb = b_poly(sk);
            for (std::size_t i = 0; i + 1 < sk; ++i) pb = pb * xp2;
            ExactMatrix b_prod = a * eval_at_gamma(pb, T) * at;
            std::string what;
            for (std::size_t i = 0; i < T && what.empty(); ++i)
                for (std::size_t j = 0; j < T; ++j) {
                    std::size_t s = i + j;
                    if (s > static_cast<std::size_t>(window)) continue;
                    if (g_prod.at(i, j) !=
                        binomial(2 * s + 1, static_cast<long>(s) - k)) {
                        what = "odd-shift window differs";
                        break;
                    }
                    if (b_prod.at(i, j) !=
                        binomial(2 * s + 2 * sk, static_cast<long>(s))) {
                        what = "even-shift window differs";
                        break;
                    }
                }
            rec.lhs = "window<=" + std::to_string(window);
            rec.rhs = what.empty() ? rec.lhs : what;
            rec.status = what.empty() ? "pass" : "fail";
            return rec;
        });
    return run_tasks("window", std::move(tasks), cfg.threads);
}

VerificationReport claim_shift(const ClaimRanges& cfg) {
    Range kr = pick(cfg.k, 1, 6, 4, cfg.quick);
    long window = cfg.N ? cfg.N->hi : (cfg.quick ? 8 : 12);
    std::vector<Task> tasks;
    for (long k = std::max(1L, kr.lo); k <= kr.hi; ++k)
        tasks.push_back([k, window] {
            Record rec = base_record("shift");
            rec.k = k;
            rec.N = window;
            std::size_t sk = k, T = static_cast<std::size_t>(window) + 2;
            ExactMatrix a = matrix_A(T);
            ExactMatrix at = a.transpose();
            IntPolynomial p = g_poly(sk);
            IntPolynomial xp2(std::vector<Int>{2, 1});
            ExactMatrix base = a * eval_at_gamma(p, T) * at;
            ExactMatrix shifted = a * eval_at_gamma(p * xp2, T) * at;
            std::string what;
            for (std::size_t i = 0; i < T && what.empty(); ++i)
                for (std::size_t j = 0; j < T; ++j) {
                    std::size_t s = i + j;
                    if (s > static_cast<std::size_t>(window)) continue;
                    // Anti-diagonal constancy of both products ...
                    if (base.at(i, j) != base.at(s, 0) ||
                        shifted.at(i, j) != shifted.at(s, 0)) {
                        what = "product is not Hankel on the window";
                        break;
                    }
                    // ... and multiplying the symbol by (x + 2) advances
                    // the window by one anti-diagonal.
                    if (shifted.at(i, j) != base.at(s + 1, 0)) {
                        what = "symbol shift does not advance the window";
                        break;
                    }
                }
            rec.lhs = "window<=" + std::to_string(window);
            rec.rhs = what.empty() ? rec.lhs : what;
            rec.status = what.empty() ? "pass" : "fail";
            return rec;
        });
    return run_tasks("shift", std::move(tasks), cfg.threads);
}

// ---- conjecture claims (wrapped so `verify --all` covers them too) ------

VerificationReport claim_conjectures(const ClaimRanges& cfg) {
    Range kr = pick(cfg.k, 1, 2, 2, cfg.quick);
    Range nr = pick(cfg.n, 0, 3, 2, cfg.quick);
    VerificationReport rep;
    rep.claim = "conjectures";
    for (const auto& res :
         check_dprime_conjectures(std::max(1L, kr.hi), std::max(0L, nr.hi))) {
        if (res.id == 7) {
            // The control variant is supposed to be refuted; surface it as a
            // pass/fail record rather than raw refutations.
            Record rec = base_record("conjectures");
            rec.r = res.id;
            rec.lhs = "control variant refuted";
            rec.rhs = res.supported ? "unexpectedly supported" : rec.lhs;
            rec.status = res.supported ? "fail" : "pass";
            rep.add(std::move(rec));
            continue;
        }
        Record rec = base_record("conjectures");
        rec.r = res.id;
        rec.lhs = res.name + " supported";
        rec.rhs = res.supported ? rec.lhs : "refuted";
        rec.status = res.supported ? "pass" : "fail";
        rep.add(std::move(rec));
    }
    long window = cfg.N ? cfg.N->hi : (cfg.quick ? 8 : 12);
    ConjectureResult ident =
        check_matrix_identity(std::max(1L, kr.hi), window);
    Record rec = base_record("conjectures");
    rec.r = ident.id;
    rec.lhs = ident.name + " supported";
    rec.rhs = ident.supported ? rec.lhs : "refuted";
    rec.status = ident.supported ? "pass" : "fail";
    rep.add(std::move(rec));
    return rep;
}

using ClaimFn = VerificationReport (*)(const ClaimRanges&);

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
    static const std::vector<std::pair<std::string, ClaimFn>> table = {
        {"anan", claim_anan},
        {"angan", claim_angan},
        {"detckn", claim_detckn},
        {"detgka", claim_detgka},
        {"detbka", claim_detbka},
        {"gka", claim_gka},
        {"bka", claim_bka},
        {"B", claim_B},
        {"lkg", claim_lkg},
        {"abg", claim_abg},
        {"mult", claim_mult},
        {"Gamma", claim_Gamma},
        {"formulas", claim_formulas},
        {"main1",
         [](const ClaimRanges& cfg) { return claim_ladder(cfg, true); }},
        {"main2",
         [](const ClaimRanges& cfg) { return claim_ladder(cfg, false); }},
        {"oracle", claim_oracle},
        {"mdl", claim_mdl},
        {"adj", claim_adj},
        {"block", claim_block},
        {"corner", claim_corner},
        {"fav", claim_fav},
        {"favdet", claim_favdet},
        {"fav2", claim_fav2},
        {"ADA", claim_ADA},
        {"inv", claim_inv},
        {"charpoly", claim_charpoly},
        {"window", claim_window},
        {"shift", claim_shift},
        {"conjectures", claim_conjectures},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool has_claim(const std::string& name) {
    for (const auto& [known, fn] : registry())
        if (known == name) return true;
    return false;
}

VerificationReport run_claim(const std::string& name,
                             const ClaimRanges& cfg) {
    for (const auto& [known, fn] : registry())
        if (known == name) return fn(cfg);
    throw std::invalid_argument("unknown claim: " + name);
}

}  // namespace hankel
