#pragma once

#include <stdexcept>
#include <string>

namespace boxlogic {

/// Malformed caller input: unknown event, bad index, invalid table, parse failure.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured element budget; the scenario is
/// too large for desk-scale exhaustive verification.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An invariant the construction is supposed to guarantee was violated.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace boxlogic
