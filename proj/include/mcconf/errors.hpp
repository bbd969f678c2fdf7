#pragma once

#include <stdexcept>

namespace mcconf {

// Invalid argument to a factory or operation.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A guard on the total number of function evaluations would be exceeded.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside the range where a bound is stated. Raised instead of
// extrapolating; not a falsification of the bound.
struct range_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

}  // namespace mcconf
