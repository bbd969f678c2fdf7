#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mcconf/estimators.hpp"
#include "mcconf/testfn.hpp"

namespace mcconf {

// Confidence level of the Clopper-Pearson intervals attached to empirical
// failure rates.
inline constexpr double kCpConfidence = 0.99;

// A repeated-trial experiment: run `trials` independent copies of the
// estimator on `fn`, with per-trial sources child(master_seed, t), and count
// |value - exact_integral| > epsilon as a failure (strict inequality).
struct TrialPlan {
    EstimatorKind estimator;
    TestFunction fn;
    std::string function_id;  // descriptor echo for reports
    double epsilon = 0.0;
    uint64_t trials = 0;
    uint64_t master_seed = 0;
    uint64_t eval_budget = kDefaultEvalBudget;
};

struct FailureStats {
    uint64_t trials = 0;
    uint64_t failures = 0;
    double rate = 0.0;
    double ci_low = 0.0;   // exact two-sided 99% Clopper-Pearson
    double ci_high = 1.0;
};

// Deterministic in master_seed and independent of the worker count:
// per-trial seeds are derived by index and the aggregation is an integer
// count. `threads` <= 0 means the OpenMP default.
FailureStats empirical_failure(const TrialPlan& plan, int threads = 0);

// |value - exact_integral| per trial, ordered by trial index.
std::vector<double> error_samples(const TrialPlan& plan, int threads = 0);

// Serial reference implementations, kept for testing the parallel kernels
// and for the benchmark tool.
FailureStats empirical_failure_serial(const TrialPlan& plan);
std::vector<double> error_samples_serial(const TrialPlan& plan);

// Log-log least-squares fit over an (n, statistic) sweep.
struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<std::pair<uint64_t, double>> points;
};

// OLS of log(statistic) on log(n); needs >= 3 points with positive
// statistics and strictly increasing n.
RateFit fit_rate(const std::vector<std::pair<uint64_t, double>>& points);

enum class SweepStatistic { median_abs_error, rmse, failure_rate };

struct SweepRow {
    uint64_t n;
    double statistic;
};

// Per-n statistic over `reps` trials; rows in order of `ns`; deterministic
// in master_seed (per-n substream, per-trial child seeds).
// epsilon_of_n is only consulted for the failure_rate statistic.
std::vector<SweepRow> sweep(const std::vector<uint64_t>& ns,
                            const std::function<EstimatorKind(uint64_t)>& estimator_of_n,
                            const TestFunction& f, uint64_t reps, SweepStatistic stat,
                            const std::function<double(uint64_t)>& epsilon_of_n,
                            uint64_t master_seed, int threads = 0);

const char* to_string(SweepStatistic stat);

}  // namespace mcconf
