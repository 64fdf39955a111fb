// Acceptance gate: every release-blocking criterion, one line of output
// each, exact arithmetic throughout. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hankel/conjecture.hpp"
#include "hankel/favard.hpp"
#include "hankel/proof_engine.hpp"
#include "hankel/verify.hpp"

using namespace hankel;

namespace {

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;  // <= 0 means no wall-clock requirement
    std::function<bool(std::string&)> run;
};

bool expect_seq(unsigned long r, const std::vector<long>& want,
                std::string& why) {
    for (std::size_t n = 0; n < want.size(); ++n) {
        if (d_r_direct(r, n) != want[n]) {
            std::ostringstream msg;
            msg << "d_" << r << "(" << n << ") = " << d_r_direct(r, n).get_str()
                << ", expected " << want[n];
            why = msg.str();
            return false;
        }
    }
    return true;
}

bool expect_at(unsigned long r, const std::vector<std::size_t>& at,
               const std::vector<long>& want, std::string& why) {
    for (std::size_t i = 0; i < at.size(); ++i) {
        if (d_r_direct(r, at[i]) != want[i]) {
            std::ostringstream msg;
            msg << "d_" << r << "(" << at[i] << ") = "
                << d_r_direct(r, at[i]).get_str() << ", expected " << want[i];
            why = msg.str();
            return false;
        }
    }
    return true;
}

bool claim_ok(const std::string& name, ClaimRanges cfg, std::string& why) {
    VerificationReport rep = run_claim(name, cfg);
    if (rep.ok()) return true;
    std::ostringstream msg;
    msg << name << ": " << rep.failures << " failure(s)";
    if (rep.first_counterexample) {
        const Record& c = *rep.first_counterexample;
        msg << "; first at";
        if (c.r) msg << " r=" << *c.r;
        if (c.k) msg << " k=" << *c.k;
        if (c.n) msg << " n=" << *c.n;
        if (c.N) msg << " N=" << *c.N;
        msg << ": " << c.lhs << " vs " << c.rhs;
    }
    why = msg.str();
    return false;
}

ClaimRanges ranges(std::optional<Range> r, std::optional<Range> k,
                   std::optional<Range> n, std::optional<Range> N) {
    ClaimRanges cfg;
    cfg.r = r;
    cfg.k = k;
    cfg.n = n;
    cfg.N = N;
    return cfg;
}

bool criterion_sequences(std::string& why) {
    if (!expect_seq(0, {1, 1, 2, 4, 8, 16, 32}, why)) return false;
    if (!expect_seq(1, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, why)) return false;
    if (!expect_seq(2, {1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1}, why))
        return false;
    if (!expect_seq(3, {1, 1, -4, 3, 3, -8, 5, 5, -12, 7, 7, -16}, why))
        return false;
    if (!expect_seq(4, {1, 1, -8, 8, 1, 1, -16, 16, 1, 1, -24, 24}, why))
        return false;
    if (!expect_seq(5,
                    {1, 1, -13, -16, 61, 9, 9, -178, -64, 370, 25, 25, -695,
                     -144, 1127},
                    why))
        return false;
    if (!expect_at(6, {3, 4, 9, 10, 15, 16, 21, 22},
                   {-144, 144, 576, -576, -1296, 1296, 2304, -2304}, why))
        return false;
    if (!expect_at(7, {0, 1, 4, 7, 8, 11}, {1, 1, 64, 27, 27, 512}, why))
        return false;
    for (std::size_t n = 1; n <= 10; ++n) {
        if (d_r_direct(0, n) != pow_int(Int(2), n - 1)) {
            why = "d_0 power-of-two law failed at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool criterion_closed_form(std::string& why) {
    return claim_ok("formulas",
                    ranges(std::nullopt, Range{1, 3}, Range{0, 3},
                           std::nullopt),
                    why);
}

bool criterion_ladders(std::string& why) {
    ClaimRanges cfg =
        ranges(std::nullopt, Range{1, 3}, Range{0, 3}, std::nullopt);
    return claim_ok("main1", cfg, why) && claim_ok("main2", cfg, why);
}

bool criterion_product_identity(std::string& why) {
    return claim_ok(
        "angan",
        ranges(std::nullopt, Range{1, 10}, std::nullopt, Range{1, 25}), why);
}

bool criterion_three_way(std::string& why) {
    return claim_ok(
        "Gamma",
        ranges(Range{1, 8}, std::nullopt, std::nullopt, Range{0, 16}), why);
}

bool criterion_structure(std::string& why) {
    if (!claim_ok("B",
                  ranges(std::nullopt, std::nullopt, std::nullopt,
                         Range{1, 30}),
                  why))
        return false;
    ClaimRanges small =
        ranges(std::nullopt, std::nullopt, std::nullopt, Range{1, 15});
    if (!claim_ok("gka", small, why)) return false;
    if (!claim_ok("bka", small, why)) return false;
    ClaimRanges tri =
        ranges(std::nullopt, Range{1, 4}, std::nullopt, Range{0, 40});
    return claim_ok("detckn", tri, why) && claim_ok("detgka", tri, why) &&
           claim_ok("detbka", tri, why);
}

bool criterion_oracles(std::string& why) {
    ClaimRanges dflt;
    return claim_ok("oracle", dflt, why) && claim_ok("mdl", dflt, why) &&
           claim_ok("adj", dflt, why) && claim_ok("corner", dflt, why);
}

bool criterion_favard(std::string& why) {
    ClaimRanges dflt;
    if (!claim_ok("fav", dflt, why)) return false;
    if (!claim_ok("favdet", dflt, why)) return false;
    // Spot high point: the reconstructed determinant law for the plain
    // central binomial family.
    FavardData f = FavardData::tagged(FavardFamily::CentralBinomial);
    if (hankel_det_product(f, 12) != Rat(pow_int(Int(2), 11))) {
        why = "central binomial product law failed at n = 12";
        return false;
    }
    return true;
}

bool criterion_conjectures(std::string& why) {
    auto results = check_dprime_conjectures(2, 3);
    for (const ConjectureResult& res : results) {
        bool want_supported = res.id != 7;
        if (res.supported != want_supported) {
            why = res.name + (res.supported ? " unexpectedly supported"
                                            : " unexpectedly refuted");
            if (res.report.first_counterexample) {
                const Record& c = *res.report.first_counterexample;
                why += " at lhs=" + c.lhs + " rhs=" + c.rhs;
            }
            return false;
        }
    }
    ConjectureResult identity = check_matrix_identity(2, 12);
    if (!identity.supported) {
        why = "matrix identity failed";
        if (identity.report.first_counterexample)
            why += ": " + identity.report.first_counterexample->rhs;
        return false;
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "printed determinant sequences, r = 0..7", 5.0,
         criterion_sequences},
        {2, "closed form vs direct determinant, k <= 3, n <= 3", 60.0,
         criterion_closed_form},
        {3, "both determinant ladders across all seven cases, k <= 3", 120.0,
         criterion_ladders},
        {4, "binomial product identity, N <= 25, k <= 10", 0.0,
         criterion_product_identity},
        {5, "direct, banded and bordered evaluations agree, r <= 8", 0.0,
         criterion_three_way},
        {6, "structure matrices, inverse and determinant trichotomies", 0.0,
         criterion_structure},
        {7, "determinant, adjugate and corner oracles", 0.0,
         criterion_oracles},
        {8, "moment recurrence reconstruction and product law", 0.0,
         criterion_favard},
        {9, "value conjectures, control refutation and matrix identity", 0.0,
         criterion_conjectures},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            ok = false;
            why = "exceeded " + std::to_string(c.budget_seconds) +
                  "s wall-clock budget";
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n",
                    ok ? "PASS" : "FAIL", c.id, c.label.c_str(), secs,
                    why.empty() ? "" : " -- ", why.c_str());
        if (!ok) ++failed;
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed ? 1 : 0;
}
