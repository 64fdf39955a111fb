#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hankel/report.hpp"

using namespace hankel;

namespace {

Record make(std::string claim, std::optional<long> r, std::optional<long> N,
            std::string status) {
    Record rec;
    rec.claim = std::move(claim);
    rec.r = r;
    rec.N = N;
    rec.lhs = "1";
    rec.rhs = "1";
    rec.status = std::move(status);
    return rec;
}

}  // namespace

TEST_CASE("records sort by claim then parameters, unset first") {
    std::vector<Record> recs;
    recs.push_back(make("b", 2, 1, "pass"));
    recs.push_back(make("a", 1, 5, "pass"));
    recs.push_back(make("b", std::nullopt, 9, "pass"));
    recs.push_back(make("b", 2, 0, "pass"));
    sort_records(recs);
    CHECK(recs[0].claim == "a");
    CHECK_FALSE(recs[1].r.has_value());
    CHECK(recs[2].N == 0);
    CHECK(recs[3].N == 1);
}

TEST_CASE("report counters and first counterexample") {
    VerificationReport rep;
    rep.claim = "demo";
    rep.add(make("demo", 1, 1, "pass"));
    rep.add(make("demo", 1, 2, "vacuous"));
    Record bad = make("demo", 1, 3, "fail");
    bad.lhs = "2";
    bad.rhs = "3";
    rep.add(bad);
    rep.add(make("demo", 1, 4, "fail"));
    CHECK(rep.passes == 1);
    CHECK(rep.skips == 1);
    CHECK(rep.failures == 2);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.first_counterexample.has_value());
    CHECK(rep.first_counterexample->N == 3);

    VerificationReport other;
    other.claim = "demo2";
    other.add(make("demo2", 2, 1, "supported"));
    other.add(make("demo2", 2, 2, "refuted"));
    CHECK(other.passes == 1);
    CHECK(other.failures == 1);

    rep.merge(std::move(other));
    CHECK(rep.failures == 3);
    CHECK(rep.first_counterexample->N == 3);  // keeps the earliest
}

TEST_CASE("csv output escapes embedded separators") {
    std::vector<Record> recs;
    Record rec = make("c", 4, 2, "fail");
    rec.lhs = "3x3";
    rec.rhs = "3x3;(0,1)=\"7,5\"";
    recs.push_back(rec);
    std::string csv = to_csv(recs);
    CHECK(csv.find("claim,r,k,n,N,lhs,rhs,status") == 0);
    CHECK(csv.find("\"3x3;(0,1)=\"\"7,5\"\"\"") != std::string::npos);
    // Unset parameters serialize as empty fields.
    CHECK(csv.find("c,4,,,2,") != std::string::npos);
}

TEST_CASE("json lines output carries only the set parameters") {
    std::vector<Record> recs;
    recs.push_back(make("j", std::nullopt, 7, "pass"));
    std::string lines = to_json_lines(recs);
    auto parsed = nlohmann::json::parse(lines);
    CHECK(parsed["claim"] == "j");
    CHECK(parsed["params"].contains("N"));
    CHECK_FALSE(parsed["params"].contains("r"));
    CHECK(parsed["params"]["N"] == 7);
    CHECK(parsed["status"] == "pass");
}

TEST_CASE("pretty output names the claim and status") {
    std::vector<Record> recs;
    recs.push_back(make("p", 1, 2, "pass"));
    std::string text = to_pretty(recs);
    CHECK(text.find('p') != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
    CHECK(text.find("N=2") != std::string::npos);
}
