#include "hankel/report.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

namespace hankel {

namespace {

long key(const std::optional<long>& v) { return v.value_or(LONG_MIN); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string opt_str(const std::optional<long>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

void VerificationReport::add(Record rec) {
    if (rec.status == "pass" || rec.status == "supported") {
        ++passes;
    } else if (rec.failed()) {
        ++failures;
        if (!first_counterexample) first_counterexample = rec;
    } else {
        ++skips;
    }
    records.push_back(std::move(rec));
}

void VerificationReport::merge(const VerificationReport& other) {
    passes += other.passes;
    failures += other.failures;
    skips += other.skips;
    if (!first_counterexample && other.first_counterexample)
        first_counterexample = other.first_counterexample;
    records.insert(records.end(), other.records.begin(), other.records.end());
}

void sort_records(std::vector<Record>& recs) {
    std::stable_sort(recs.begin(), recs.end(),
                     [](const Record& a, const Record& b) {
                         return std::make_tuple(a.claim, key(a.r), key(a.k),
                                                key(a.n), key(a.N)) <
                                std::make_tuple(b.claim, key(b.r), key(b.k),
                                                key(b.n), key(b.N));
                     });
}

std::string to_csv(const std::vector<Record>& recs) {
    std::ostringstream out;
    out << "claim,r,k,n,N,lhs,rhs,status\n";
    for (const Record& rec : recs) {
        out << csv_field(rec.claim) << ',' << opt_str(rec.r) << ','
            << opt_str(rec.k) << ',' << opt_str(rec.n) << ','
            << opt_str(rec.N) << ',' << csv_field(rec.lhs) << ','
            << csv_field(rec.rhs) << ',' << csv_field(rec.status) << '\n';
    }
    return out.str();
}

std::string to_json_lines(const std::vector<Record>& recs) {
    std::ostringstream out;
    for (const Record& rec : recs) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        if (rec.r) params["r"] = *rec.r;
        if (rec.k) params["k"] = *rec.k;
        if (rec.n) params["n"] = *rec.n;
        if (rec.N) params["N"] = *rec.N;
        nlohmann::ordered_json line = {{"claim", rec.claim},
                                       {"params", params},
                                       {"lhs", rec.lhs},
                                       {"rhs", rec.rhs},
                                       {"status", rec.status}};
        out << line.dump() << '\n';
    }
    return out.str();
}

std::string to_pretty(const std::vector<Record>& recs) {
    std::ostringstream out;
    for (const Record& rec : recs) {
        out << rec.claim;
        if (rec.r) out << " r=" << *rec.r;
        if (rec.k) out << " k=" << *rec.k;
        if (rec.n) out << " n=" << *rec.n;
        if (rec.N) out << " N=" << *rec.N;
        out << ": " << rec.lhs;
        if (!rec.rhs.empty() && rec.rhs != rec.lhs) out << " vs " << rec.rhs;
        if (!rec.status.empty()) out << " [" << rec.status << "]";
        out << '\n';
    }
    return out.str();
}

}  // namespace hankel
