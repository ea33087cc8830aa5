#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

// Error hierarchy for the exact kernel and the p-adic evaluator.  Every
// failure mode named in the public contracts has its own type so callers
// can catch precisely.

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct EvalAtPole : std::domain_error {
    explicit EvalAtPole(const std::string& what) : std::domain_error(what) {}
};

struct PoleAtOne : std::domain_error {
    explicit PoleAtOne(const std::string& what) : std::domain_error(what) {}
};

struct SeriesAtPole : std::domain_error {
    explicit SeriesAtPole(const std::string& what) : std::domain_error(what) {}
};

struct SeriesDomainError : std::domain_error {
    explicit SeriesDomainError(const std::string& what) : std::domain_error(what) {}
};

struct ArityError : std::invalid_argument {
    explicit ArityError(const std::string& what) : std::invalid_argument(what) {}
};

struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct TermBudgetExceeded : std::runtime_error {
    explicit TermBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCaseId : std::invalid_argument {
    explicit UnknownCaseId(const std::string& what) : std::invalid_argument(what) {}
};

struct RangeBoundExceeded : std::invalid_argument {
    explicit RangeBoundExceeded(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qcalc
