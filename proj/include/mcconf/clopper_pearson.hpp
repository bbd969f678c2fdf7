#pragma once

#include <cstdint>

namespace mcconf {

struct ClopperPearsonInterval {
    double low;
    double high;
};

// Exact (conservative) two-sided Clopper-Pearson interval for a binomial
// proportion with `successes` out of `trials` at the given confidence level.
// Endpoints are the usual beta quantiles, found by bisection on the
// regularized incomplete beta function; low = 0 when successes = 0 and
// high = 1 when successes = trials.
ClopperPearsonInterval clopper_pearson(uint64_t successes, uint64_t trials,
                                       double confidence = 0.99);

}  // namespace mcconf
