#pragma once

#include <stdexcept>
#include <string>

namespace hyperlin {

// A randomized routine exhausted its retry budget. Signals parameters outside
// the probabilistic regime; callers reduce constants or enlarge the instance.
struct FailedAfterRetries : std::runtime_error {
    explicit FailedAfterRetries(const std::string& what) : std::runtime_error(what) {}
};

// A lemma hypothesis failed at runtime. `trace` names the exact inequality or
// structural condition that broke, so each proof branch is testable in isolation.
struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& trace)
        : std::runtime_error(trace), trace(trace) {}
    std::string trace;
};

// An exact search ran past its node budget. Distinct from "not found": callers
// that can degrade return bounds instead of letting this escape.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperlin
