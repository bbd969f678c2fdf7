#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "mcconf/rng.hpp"
#include "mcconf/testfn.hpp"

namespace mcconf {

// One randomized-estimator output. evals_used is the exact number of calls
// made to the integrand.
struct Estimate {
    double value = 0.0;
    uint64_t evals_used = 0;
};

inline constexpr uint64_t kDefaultEvalBudget = 100'000'000;

// Estimator configuration, recursively composable through the median wrapper.
struct EstimatorKind {
    enum class Type { plain_mc, stratified, median, control_variate, frolov_1d };

    Type type = Type::plain_mc;
    uint64_t n = 0;       // plain_mc / frolov_1d budget
    uint64_t m = 0;       // stratified cells per axis
    int k = 0;            // median repetitions, odd
    std::shared_ptr<const EstimatorKind> inner;  // median only
    uint64_t m_grid = 0;  // control_variate grid resolution
    uint64_t n_mc = 0;    // control_variate residual samples

    static EstimatorKind plain(uint64_t n);
    static EstimatorKind strat(uint64_t m);
    static EstimatorKind median(int k, EstimatorKind inner);
    static EstimatorKind cv(uint64_t m_grid, uint64_t n_mc);
    static EstimatorKind frolov(uint64_t n);

    std::string name() const;
};

// value = (1/n) sum f(U_i), U_i iid uniform on the cube; unbiased.
Estimate plain_mc(const TestFunction& f, uint64_t n, RandomSource& rng);

// One uniform sample per half-open cell of the m-per-axis partition,
// averaged with equal weights; m^d evaluations; unbiased.
Estimate stratified(const TestFunction& f, uint64_t m, RandomSource& rng,
                    uint64_t eval_budget = kDefaultEvalBudget);

// Integrates the d-linear interpolant on the (m_grid+1)^d tensor grid
// exactly (trapezoidal weights) and estimates the residual by plain Monte
// Carlo with n_mc samples; unbiased. Requires d <= 3.
Estimate control_variate(const TestFunction& f, uint64_t m_grid, uint64_t n_mc,
                         RandomSource& rng, uint64_t eval_budget = kDefaultEvalBudget);

// Randomly dilated and shifted 1-D lattice rule: u uniform on [1/2,3/2],
// v uniform on [0,1], value = (1/(un)) sum over points (m+v)/(un) in [0,1].
Estimate frolov_1d(const TestFunction& f, uint64_t n, RandomSource& rng);

// Deterministic kernel of frolov_1d for fixed (u, v).
Estimate frolov_1d_fixed(const TestFunction& f, uint64_t n, double u, double v);

// Median of k independent runs of `run_inner`, each on a child source derived
// from master_seed. evals_used accumulates over the runs.
Estimate median_of_runs(int k, uint64_t master_seed,
                        const std::function<Estimate(RandomSource&)>& run_inner);

// Median of k independent runs of the inner estimator with child-derived
// seeds; k must be odd.
Estimate median_amplify(const EstimatorKind& inner, int k, const TestFunction& f,
                        RandomSource& rng, uint64_t eval_budget = kDefaultEvalBudget);

// Dispatch on an EstimatorKind. Pure function of (kind, f, rng seed).
Estimate run_estimator(const EstimatorKind& kind, const TestFunction& f, RandomSource& rng,
                       uint64_t eval_budget = kDefaultEvalBudget);

}  // namespace mcconf
