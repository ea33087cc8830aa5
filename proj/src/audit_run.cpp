#include "qcalc/audit.hpp"

#include "qcalc/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace qcalc {

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr const char* kCatalogVersion = "1";

const IdentityCase* resolve(const std::string& name) {
    for (const auto& c : audit_catalog()) {
        if (c.id == name) return &c;
        for (const auto& a : c.aliases)
            if (a == name) return &c;
    }
    return nullptr;
}

} // namespace

AuditReport run_audit(const std::vector<std::string>& selection,
                      const AuditOptions& options) {
    std::set<std::string> selected_ids;
    const bool all = selection.empty() ||
                     (selection.size() == 1 && selection[0] == "all");
    if (all) {
        for (const auto& c : audit_catalog()) selected_ids.insert(c.id);
    } else {
        for (const auto& name : selection) {
            const IdentityCase* c = resolve(name);
            if (!c) throw UnknownCaseId("unknown audit case id: " + name);
            selected_ids.insert(c->id);
        }
    }

    AuditReport report;
    report.tool_version = kToolVersion;
    report.catalog_version = kCatalogVersion;
    for (const auto& c : audit_catalog()) {
        if (!selected_ids.count(c.id)) continue;
        AuditResult r;
        r.id = c.id;
        r.ranges = c.ranges;
        const auto t0 = std::chrono::steady_clock::now();
        r.counterexample = c.run(options);
        const auto t1 = std::chrono::steady_clock::now();
        r.measured_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        r.ms = 0;
        if (!r.counterexample) {
            r.status = "pass";
            ++report.pass;
        } else if (c.must_pass) {
            r.status = "fail";
            ++report.fail;
        } else {
            r.status = "expected-fail-confirmed";
            ++report.expected_fail_confirmed;
        }
        report.results.push_back(std::move(r));
    }
    std::sort(report.results.begin(), report.results.end(),
              [](const AuditResult& a, const AuditResult& b) { return a.id < b.id; });
    return report;
}

std::string report_to_json(const AuditReport& report) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["version"] = report.tool_version + "+catalog." + report.catalog_version;
    doc["cases"] = json::array();
    for (const auto& r : report.results) {
        json c;
        c["id"] = r.id;
        c["status"] = r.status;
        json ranges;
        for (const auto& [sym, interval] : r.ranges) ranges[sym] = interval;
        c["ranges"] = ranges;
        if (r.counterexample) {
            json ce;
            json params;
            for (const auto& [sym, value] : r.counterexample->params)
                params[sym] = value;
            ce["params"] = params;
            ce["lhs"] = r.counterexample->lhs;
            ce["rhs"] = r.counterexample->rhs;
            c["counterexample"] = ce;
        } else {
            c["counterexample"] = nullptr;
        }
        c["ms"] = r.ms;
        doc["cases"].push_back(std::move(c));
    }
    doc["summary"] = {{"pass", report.pass},
                      {"fail", report.fail},
                      {"expected_fail_confirmed", report.expected_fail_confirmed}};
    return doc.dump(2) + "\n";
}

} // namespace qcalc
