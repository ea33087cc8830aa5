#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcalc/audit.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/tables.hpp"

#include <algorithm>
#include <set>
#include <sstream>

using namespace qcalc;

namespace {

const AuditResult& single(const AuditReport& r) {
    REQUIRE(r.results.size() == 1);
    return r.results.front();
}

} // namespace

TEST_CASE("single-case selection and aliases") {
    const AuditReport r1 = run_audit({"EQ03-PARTITION"});
    CHECK(single(r1).status == "pass");
    const AuditReport r2 = run_audit({"EQ03"});
    CHECK(single(r2).id == "EQ03-PARTITION");
    CHECK(r1.pass == 1);
    CHECK(r1.fail == 0);
}

TEST_CASE("expected failures carry concrete counterexamples") {
    const AuditReport r = run_audit({"THM1-PRINTED"});
    const AuditResult& res = single(r);
    CHECK(res.status == "expected-fail-confirmed");
    REQUIRE(res.counterexample.has_value());
    REQUIRE(res.counterexample->params.size() == 1);
    CHECK(res.counterexample->params[0].first == "m");
    CHECK(res.counterexample->params[0].second == 0);
    CHECK(res.counterexample->lhs == "1");
    CHECK(res.counterexample->rhs == "q");
}

TEST_CASE("eq31 passes") {
    const AuditReport r = run_audit({"EQ31"});
    CHECK(single(r).status == "pass");
    CHECK(!single(r).counterexample.has_value());
}

TEST_CASE("unknown ids are rejected") {
    CHECK_THROWS_AS(run_audit({"NO-SUCH"}), UnknownCaseId);
}

TEST_CASE("range override is capped") {
    AuditOptions o;
    o.max_n = 100;
    CHECK_THROWS_AS(run_audit({"EQ02-FORM1"}, o), RangeBoundExceeded);
    o.max_n = 6;
    CHECK(single(run_audit({"EQ02-FORM1"}, o)).status == "pass");
}

TEST_CASE("report json is deterministic and schema-shaped") {
    const std::vector<std::string> ids = {"EQ03-PARTITION", "THM1-PRINTED", "EQ31"};
    const std::string j1 = report_to_json(run_audit(ids));
    const std::string j2 = report_to_json(run_audit(ids));
    CHECK(j1 == j2);
    CHECK(j1.find("\"version\"") != std::string::npos);
    CHECK(j1.find("\"cases\"") != std::string::npos);
    CHECK(j1.find("\"summary\"") != std::string::npos);
    CHECK(j1.find("\"expected_fail_confirmed\": 1") != std::string::npos);
    CHECK(j1.find("\"counterexample\": null") != std::string::npos);
    CHECK(j1.find("\"ms\": 0") != std::string::npos);
    // Results ordered by id regardless of selection order.
    const std::string j3 = report_to_json(run_audit({"EQ31", "EQ03", "THM1-PRINTED"}));
    CHECK(j1 == j3);
}

TEST_CASE("must-pass and audit-only sets match the contract") {
    const std::set<std::string> expected_audit_only = {
        "EQ02-FORM2",          "EQ12-PRINTED", "EQ13-PRINTED",
        "EQ23-PRINTED",        "EQ33-PRINTED-FINITE", "THM1-PRINTED",
        "THM2-PRINTED",        "S2-BETA-PRINTED-SUPERSCRIPT"};
    std::set<std::string> actual;
    for (const auto& c : audit_catalog())
        if (!c.must_pass) actual.insert(c.id);
    CHECK(actual == expected_audit_only);

    const std::vector<std::string> required_must_pass = {
        "EQ02-FORM1",    "EQ03-PARTITION", "EQ05-VOLKENBORN", "EQ06-SHIFT-NEGATION",
        "EQ08-NEWTON",   "EQ10-EQ11-EQUIV", "EQ12-C2-READING", "EQ15", "EQ16",
        "EQ18-BRIDGE",   "EQ19", "EQ20", "EQ21", "EQ22-VS-PRODUCT", "EQ23-CORRECTED",
        "EQ24-VS-PRODUCT", "EQ26-THM4-EQUIV", "EQ29", "EQ28-EQ30-EQUIV", "EQ31",
        "MOMENT-SUM",    "S2-BETA-REL", "FINAL-S1-PRODUCT", "EQ33-CORRECTED-FINITE",
        "EQ33-SERIES",   "EQ34-EQ35-EQUIV", "PROP6", "THM1-CORRECTED", "THM3",
        "EULER-CLOSED-VS-INTEGRAL"};
    for (const auto& id : required_must_pass) {
        const auto& catalog = audit_catalog();
        const auto it = std::find_if(catalog.begin(), catalog.end(),
                                     [&](const IdentityCase& c) { return c.id == id; });
        REQUIRE(it != catalog.end());
        CHECK(it->must_pass);
    }
}

TEST_CASE("catalog coverage is complete") {
    std::set<std::string> anchors;
    for (const auto& e : catalog_coverage()) {
        anchors.insert(e.anchor);
        CHECK((!e.cases.empty() || !e.note.empty()));
        // every referenced case id must exist
        std::stringstream ss(e.cases);
        std::string id;
        while (std::getline(ss, id, ',')) {
            const auto from = id.find_first_not_of(' ');
            id = id.substr(from == std::string::npos ? 0 : from);
            if (id.empty()) continue;
            const auto& catalog = audit_catalog();
            const bool found =
                std::any_of(catalog.begin(), catalog.end(),
                            [&](const IdentityCase& c) { return c.id == id; });
            CHECK_MESSAGE(found, "unknown case id in coverage: ", id);
        }
    }
    for (int e = 1; e <= 35; ++e) {
        std::ostringstream os;
        os << "EQ" << (e < 10 ? "0" : "") << e;
        CHECK_MESSAGE(anchors.count(os.str()) == 1, "missing coverage for ", os.str());
    }
    for (const char* a : {"THM1", "THM2", "THM3", "THM4", "THM5", "PROP6",
                          "S3-DISPLAY-S2-BETA", "S3-DISPLAY-BETA-VALUES",
                          "S3-DISPLAY-MOMENT-SUM", "S3-DISPLAY-S1-PRODUCT"})
        CHECK_MESSAGE(anchors.count(a) == 1, "missing coverage for ", a);
}

TEST_CASE("catalog ids are unique and aliases resolve") {
    std::set<std::string> seen;
    for (const auto& c : audit_catalog()) {
        CHECK(seen.insert(c.id).second);
        CHECK(!c.ranges.empty());
        CHECK(!c.description.empty());
    }
}

TEST_CASE("value tables") {
    TableRequest req;
    req.family = "carlitz-beta";
    req.n_lo = 0;
    req.n_hi = 2;
    req.format = TableFormat::json;
    const std::string json = emit_table(req);
    CHECK(json.find("\"1\"") != std::string::npos);
    CHECK(json.find("\"(-1)/(1 + q)\"") != std::string::npos);
    CHECK(json.find("\"(q)/(1 + 2q + 2q^2 + q^3)\"") != std::string::npos);

    TableRequest gb;
    gb.family = "gauss-binom";
    gb.n_lo = gb.n_hi = 4;
    gb.k_range = {{2, 2}};
    gb.format = TableFormat::csv;
    CHECK(emit_table(gb) == "n,k,value\n4,2,1 + q + 2q^2 + q^3 + q^4\n");

    TableRequest lat = gb;
    lat.format = TableFormat::latex;
    const std::string tex = emit_table(lat);
    CHECK(tex.find("\\binom{n}{k}_q") != std::string::npos);
    CHECK(tex.find("1 + q + 2q^{2} + q^{3} + q^{4}") != std::string::npos);

    const std::string limits = emit_limits("carlitz-beta", 0, 4, std::nullopt);
    CHECK(limits == "m=0: 1\nm=1: -1/2\nm=2: 1/6\nm=3: 0\nm=4: -1/30\n");

    TableRequest bad = req;
    bad.n_hi = 1000;
    CHECK_THROWS_AS(emit_table(bad), RangeBoundExceeded);
    bad.family = "no-such-family";
    bad.n_hi = 2;
    CHECK_THROWS_AS(emit_table(bad), std::invalid_argument);
}
