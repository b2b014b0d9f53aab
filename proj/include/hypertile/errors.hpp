#pragma once

#include <stdexcept>
#include <string>

namespace hypertile {

// Enumeration / solver guard exceeded. Callers that can degrade gracefully
// (sampling estimators, lower-bound-only solves) catch this.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested barrier kind does not exist for this tile spec
// (e.g. DivIII with even d, Tiling with a = 1).
struct ConstructionNotApplicable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A feasible part-size choice does not exist at this n.
struct InfeasibleSize : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 64-bit exact arithmetic would overflow; results are never silently wrapped.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

}  // namespace hypertile
