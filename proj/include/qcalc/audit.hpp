#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcalc {

struct AuditOptions {
    // When > 0, replaces the primary grid bound of every case that scales
    // (polynomial-identity grids); p-adic levels keep their budgeted
    // defaults.  Hard-capped at kMaxAuditRange.
    long max_n = 0;
};

inline constexpr long kMaxAuditRange = 24;

struct Counterexample {
    std::vector<std::pair<std::string, long long>> params;
    std::string lhs;
    std::string rhs;
};

/**
 * One identity of the audit catalog.  Cases marked must_pass gate the
 * exit status; audit-only cases record their status (a failure there is
 * expected and confirmed with a concrete counterexample).
 */
struct IdentityCase {
    std::string id;
    std::vector<std::string> aliases;
    std::string description;
    bool must_pass = true;
    std::vector<std::pair<std::string, std::string>> ranges;
    // Evaluates the full parameter grid; returns the first failure.
    std::function<std::optional<Counterexample>(const AuditOptions&)> run;
};

struct AuditResult {
    std::string id;
    // "pass", "fail" (must-pass case failed) or "expected-fail-confirmed".
    std::string status;
    std::vector<std::pair<std::string, std::string>> ranges;
    std::optional<Counterexample> counterexample;
    // Wall time is reported on the console; the JSON field stays 0 so
    // reports are byte-identical across runs.
    long long ms = 0;
    long long measured_ms = 0;
};

struct AuditReport {
    std::string tool_version;
    std::string catalog_version;
    std::vector<AuditResult> results;
    long pass = 0;
    long fail = 0;
    long expected_fail_confirmed = 0;

    bool all_must_pass_ok() const { return fail == 0; }
};

const std::vector<IdentityCase>& audit_catalog();

// Resolves ids or aliases; {"all"} or an empty list selects everything.
// Unknown ids raise UnknownCaseId.  Results are ordered by case id.
AuditReport run_audit(const std::vector<std::string>& selection,
                      const AuditOptions& options = {});

// Deterministic JSON rendering: fixed key order, fixed serialization.
std::string report_to_json(const AuditReport& report);

// Catalog bookkeeping: every display of the audited source material maps
// to at least one case id or an explicit out-of-scope note.
struct CoverageEntry {
    std::string anchor;  // e.g. "EQ12", "THM2", "S3-DISPLAY-MOMENT-SUM"
    std::string cases;   // comma-separated case ids, or empty if out of scope
    std::string note;    // out-of-scope rationale when cases is empty
};
const std::vector<CoverageEntry>& catalog_coverage();

} // namespace qcalc
