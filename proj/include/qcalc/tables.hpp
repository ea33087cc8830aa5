#pragma once

#include <optional>
#include <string>

namespace qcalc {

enum class TableFormat { csv, json, latex };

struct TableRequest {
    std::string family; // gauss-binom, stirling1, stirling2-S, stirling2-C,
                        // carlitz-beta, beta-order, beta-neg-order,
                        // euler-order, euler-neg-order, classical-limits
    long n_lo = 0, n_hi = -1; // primary index range (or m for single-index)
    std::optional<std::pair<long, long>> k_range; // secondary index / order
    TableFormat format = TableFormat::csv;
};

// Deterministic value table with canonical serialization; throws
// RangeBoundExceeded outside desk-scale bounds and std::invalid_argument
// for unknown families.
std::string emit_table(const TableRequest& request);

// q -> 1 limits of a single-index family over m = lo..hi, one per line.
std::string emit_limits(const std::string& family, long lo, long hi,
                        std::optional<long> order);

} // namespace qcalc
