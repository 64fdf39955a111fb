#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hankel {

// One checked instance. lhs and rhs are decimal strings (or shape markers
// for matrix comparisons); params that do not apply stay unset.
struct Record {
    std::string claim;
    std::optional<long> r, k, n, N;
    std::string lhs, rhs;
    std::string status;  // pass | fail | vacuous | skipped | supported | refuted

    bool failed() const { return status == "fail" || status == "refuted"; }
};

struct VerificationReport {
    std::string claim;
    std::vector<Record> records;
    std::size_t passes = 0, failures = 0, skips = 0;
    std::optional<Record> first_counterexample;

    void add(Record rec);
    void merge(const VerificationReport& other);
    bool ok() const { return failures == 0; }
};

// Orders by (claim, r, k, n, N); unset params sort first.
void sort_records(std::vector<Record>& recs);

std::string to_csv(const std::vector<Record>& recs);
std::string to_json_lines(const std::vector<Record>& recs);
std::string to_pretty(const std::vector<Record>& recs);

}  // namespace hankel
