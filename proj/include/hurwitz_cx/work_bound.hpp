#pragma once

#include "hurwitz_cx/numbers.hpp"

#include <stdexcept>
#include <string>

namespace hurwitz_cx {

/// Raised when an enumeration would exceed the configured work bound.
/// Carries the estimate so front ends can report both numbers.
class WorkBoundError : public std::runtime_error {
public:
    WorkBoundError(Int estimated_cost, Int bound)
        : std::runtime_error("estimated cost " + estimated_cost.str() +
                             " exceeds work bound " + bound.str()),
          estimated_cost_(std::move(estimated_cost)),
          bound_(std::move(bound)) {}

    const Int& estimated_cost() const { return estimated_cost_; }
    const Int& bound() const { return bound_; }

private:
    Int estimated_cost_;
    Int bound_;
};

/// Execution knobs shared by the enumerating operations.
/// Chunks are always merged in index order, so results do not
/// depend on `threads`.
struct WorkPolicy {
    Int work_bound = default_work_bound();
    int threads = 1;

    static Int default_work_bound() { return Int(1000000000); }
};

inline void ensure_within_bound(const Int& estimated_cost, const WorkPolicy& policy) {
    if (estimated_cost > policy.work_bound)
        throw WorkBoundError(estimated_cost, policy.work_bound);
}

}  // namespace hurwitz_cx
