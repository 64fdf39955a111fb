#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hankel/conjecture.hpp"
#include "hankel/proof_engine.hpp"
#include "hankel/report.hpp"
#include "hankel/threadpool.hpp"
#include "hankel/verify.hpp"

namespace {

using hankel::Range;
using hankel::Record;

Range parse_range(const std::string& text) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            long v = std::stol(text);
            return {v, v};
        }
        Range r{std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
        if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("range", "expected INT or INT..INT, got " + text);
    } catch (const std::out_of_range&) {
        throw CLI::ValidationError("range", "range bound out of range: " + text);
    }
}

struct OutputOptions {
    std::string format = "pretty";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json-lines", "pretty"}));
    cmd->add_option("--out", opts.out_path, "write records to a file");
}

std::string render(const std::vector<Record>& recs, const std::string& format) {
    if (format == "csv") return hankel::to_csv(recs);
    if (format == "json-lines") return hankel::to_json_lines(recs);
    return hankel::to_pretty(recs);
}

// Sorted records go to --out or stdout; summary lines go to stdout unless
// they would corrupt a machine-readable stream, in which case stderr.
void emit(std::vector<Record> recs, const OutputOptions& opts,
          const std::vector<std::string>& summary) {
    hankel::sort_records(recs);
    std::string body = render(recs, opts.format);
    std::ostream* summary_stream = &std::cout;
    if (!opts.out_path.empty()) {
        std::ofstream file(opts.out_path);
        if (!file) {
            std::cerr << "cannot write " << opts.out_path << "\n";
            std::exit(2);
        }
        file << body;
    } else {
        std::cout << body;
        if (opts.format != "pretty") summary_stream = &std::cerr;
    }
    for (const std::string& line : summary) *summary_stream << line << "\n";
    if (!opts.out_path.empty())
        *summary_stream << "wrote " << opts.out_path << "\n";
}

std::string report_summary(const hankel::VerificationReport& rep) {
    std::string line = rep.claim + ": " + std::to_string(rep.passes) +
                       " pass, " + std::to_string(rep.failures) + " fail, " +
                       std::to_string(rep.skips) + " skipped";
    if (rep.first_counterexample) {
        const Record& c = *rep.first_counterexample;
        line += "; first counterexample:";
        if (c.r) line += " r=" + std::to_string(*c.r);
        if (c.k) line += " k=" + std::to_string(*c.k);
        if (c.n) line += " n=" + std::to_string(*c.n);
        if (c.N) line += " N=" + std::to_string(*c.N);
        line += " " + c.lhs + (c.rhs.empty() ? "" : " vs " + c.rhs);
    }
    return line;
}

int cmd_table(const std::string& family, const Range& r_range,
              const Range& n_range, const OutputOptions& opts,
              unsigned threads) {
    struct Cell {
        long r, n;
    };
    bool dprime = family == "dprime";
    // The weighted family starts at shift 1, so the shared default range
    // 0..8 silently drops its r = 0 end.
    long r_lo = std::max(dprime ? 1L : 0L, r_range.lo);
    std::vector<Cell> cells;
    for (long r = r_lo; r <= r_range.hi; ++r)
        for (long n = std::max(0L, n_range.lo); n <= n_range.hi; ++n)
            cells.push_back({r, n});

    std::vector<Record> recs(cells.size());
    hankel::parallel_for(cells.size(), threads, [&](std::size_t i) {
        Record rec;
        rec.claim = dprime ? "dprime" : "d";
        rec.r = cells[i].r;
        rec.n = cells[i].n;
        rec.N = cells[i].n;
        hankel::Int value = dprime
                                ? hankel::d_prime(cells[i].r, cells[i].n)
                                : hankel::d_r_direct(cells[i].r, cells[i].n);
        rec.lhs = value.get_str();
        if (!dprime && cells[i].r >= 1) {
            auto cf = hankel::closed_form(cells[i].r, cells[i].n);
            if (cf) {
                rec.rhs = cf->get_str();
                rec.status = *cf == value ? "closed-form" : "fail";
            }
        }
        recs[i] = std::move(rec);
    });

    int failures = 0;
    for (const Record& rec : recs)
        if (rec.status == "fail") ++failures;
    emit(std::move(recs), opts,
         {family + " table: " + std::to_string(cells.size()) + " entries" +
          (failures ? ", " + std::to_string(failures) + " closed-form mismatches"
                    : "")});
    return failures ? 1 : 0;
}

int cmd_verify(const std::vector<std::string>& claims,
               const hankel::ClaimRanges& cfg, const OutputOptions& opts) {
    std::vector<Record> all;
    std::vector<std::string> summary;
    bool ok = true;
    for (const std::string& name : claims) {
        hankel::VerificationReport rep = hankel::run_claim(name, cfg);
        ok = ok && rep.ok();
        summary.push_back(report_summary(rep));
        all.insert(all.end(), rep.records.begin(), rep.records.end());
    }
    emit(std::move(all), opts, summary);
    return ok ? 0 : 1;
}

int cmd_conjecture(long k_max, long n_max, long window,
                   const OutputOptions& opts) {
    std::vector<hankel::ConjectureResult> results =
        hankel::check_dprime_conjectures(k_max, n_max);
    results.push_back(hankel::check_matrix_identity(k_max, window));

    std::vector<Record> all;
    std::vector<std::string> summary;
    for (const auto& res : results) {
        std::string verdict = res.supported ? "supported" : "refuted";
        if (res.id == 7)
            verdict += res.supported ? " (control: expected refuted!)"
                                     : " (control: refutation expected)";
        summary.push_back(res.name + ": " + verdict + " over " +
                          std::to_string(res.report.records.size()) +
                          " instances; " + res.statement);
        all.insert(all.end(), res.report.records.begin(),
                   res.report.records.end());
    }
    emit(std::move(all), opts, summary);
    return 0;  // experiments report findings; refutations are not errors
}

int cmd_selftest(unsigned threads) {
    hankel::ClaimRanges cfg;
    cfg.quick = true;
    cfg.threads = threads;
    bool ok = true;
    for (const std::string& name : hankel::claim_names()) {
        hankel::VerificationReport rep = hankel::run_claim(name, cfg);
        ok = ok && rep.ok();
        std::cout << (rep.ok() ? "[PASS] " : "[FAIL] ") << report_summary(rep)
                  << "\n";
    }
    std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact Hankel determinant workbench for shifted central binomial "
        "families"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "0.1.0");

    unsigned threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (default: HANKEL_LAB_THREADS or hardware)");

    // table
    auto* table = app.add_subcommand("table", "evaluate determinant tables");
    table->fallthrough();
    std::string family = "d";
    std::string table_r = "0..8", table_n = "0..10";
    OutputOptions table_out;
    table->add_option("--family", family, "d or dprime")
        ->check(CLI::IsMember({"d", "dprime"}));
    table->add_option("--r", table_r, "shift range INT or INT..INT");
    table->add_option("--n", table_n, "size range INT or INT..INT");
    add_output_flags(table, table_out);

    // verify
    auto* verify = app.add_subcommand("verify", "run identity sweeps");
    verify->fallthrough();
    std::string claim;
    bool all_claims = false, quick = false;
    std::string v_r, v_k, v_n, v_N;
    OutputOptions verify_out;
    verify->add_option("--claim", claim, "claim name (see --list)");
    verify->add_flag("--all", all_claims, "run every claim");
    verify->add_flag("--quick", quick, "shrink default ranges");
    verify->add_option("--r", v_r, "override r range");
    verify->add_option("--k", v_k, "override k range");
    verify->add_option("--n", v_n, "override n range");
    verify->add_option("--N", v_N, "override N range");
    bool list_claims = false;
    verify->add_flag("--list", list_claims, "list claim names and exit");
    add_output_flags(verify, verify_out);

    // conjecture
    auto* conjecture =
        app.add_subcommand("conjecture", "test the open value formulas");
    conjecture->fallthrough();
    std::string c_k = "1..2", c_n = "0..3";
    long window = 12;
    OutputOptions conj_out;
    conjecture->add_option("--k", c_k, "k range (upper bound is used)");
    conjecture->add_option("--n", c_n, "n range (upper bound is used)");
    conjecture->add_option("--window", window,
                           "anti-diagonal window for the matrix identity");
    add_output_flags(conjecture, conj_out);

    // selftest
    auto* selftest =
        app.add_subcommand("selftest", "quick pass over every claim");
    selftest->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed())
            return cmd_table(family, parse_range(table_r), parse_range(table_n),
                             table_out, threads);
        if (verify->parsed()) {
            if (list_claims) {
                for (const std::string& name : hankel::claim_names())
                    std::cout << name << "\n";
                return 0;
            }
            if (claim.empty() && !all_claims) {
                std::cerr << "verify: pass --claim NAME or --all\n";
                return 2;
            }
            if (!claim.empty() && !hankel::has_claim(claim)) {
                std::cerr << "unknown claim: " << claim
                          << " (use verify --list)\n";
                return 2;
            }
            hankel::ClaimRanges cfg;
            cfg.quick = quick;
            cfg.threads = threads;
            if (!v_r.empty()) cfg.r = parse_range(v_r);
            if (!v_k.empty()) cfg.k = parse_range(v_k);
            if (!v_n.empty()) cfg.n = parse_range(v_n);
            if (!v_N.empty()) cfg.N = parse_range(v_N);
            std::vector<std::string> claims =
                all_claims ? hankel::claim_names()
                           : std::vector<std::string>{claim};
            return cmd_verify(claims, cfg, verify_out);
        }
        if (conjecture->parsed())
            return cmd_conjecture(parse_range(c_k).hi, parse_range(c_n).hi,
                                  window, conj_out);
        if (selftest->parsed()) return cmd_selftest(threads);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
