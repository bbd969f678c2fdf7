#include "mcconf/harness.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcconf/clopper_pearson.hpp"
#include "mcconf/errors.hpp"

namespace mcconf {

namespace {

void validate(const TrialPlan& plan) {
    if (plan.trials < 1) throw parameter_error("plan needs trials >= 1");
    if (!(plan.epsilon > 0.0)) throw parameter_error("plan needs epsilon > 0");
    if (!plan.fn.eval) throw parameter_error("plan has no test function");
}

double trial_abs_error(const TrialPlan& plan, uint64_t t) {
    RandomSource rng = RandomSource::child(plan.master_seed, t);
    const Estimate e = run_estimator(plan.estimator, plan.fn, rng, plan.eval_budget);
    return std::abs(e.value - plan.fn.exact_integral);
}

FailureStats stats_from_counts(uint64_t failures, uint64_t trials) {
    FailureStats s;
    s.trials = trials;
    s.failures = failures;
    s.rate = static_cast<double>(failures) / static_cast<double>(trials);
    const auto ci = clopper_pearson(failures, trials, kCpConfidence);
    s.ci_low = ci.low;
    s.ci_high = ci.high;
    return s;
}

#ifdef _OPENMP
int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }
#endif

}  // namespace

FailureStats empirical_failure_serial(const TrialPlan& plan) {
    validate(plan);
    uint64_t failures = 0;
    for (uint64_t t = 0; t < plan.trials; ++t) {
        failures += trial_abs_error(plan, t) > plan.epsilon ? 1u : 0u;
    }
    return stats_from_counts(failures, plan.trials);
}

FailureStats empirical_failure(const TrialPlan& plan, int threads) {
#ifndef _OPENMP
    (void)threads;
    return empirical_failure_serial(plan);
#else
    validate(plan);
    const auto T = static_cast<int64_t>(plan.trials);
    uint64_t failures = 0;
#pragma omp parallel for schedule(static) reduction(+ : failures) \
    num_threads(resolve_threads(threads))
    for (int64_t t = 0; t < T; ++t) {
        failures += trial_abs_error(plan, static_cast<uint64_t>(t)) > plan.epsilon ? 1u : 0u;
    }
    return stats_from_counts(failures, plan.trials);
#endif
}

std::vector<double> error_samples_serial(const TrialPlan& plan) {
    validate(plan);
    std::vector<double> out(plan.trials);
    for (uint64_t t = 0; t < plan.trials; ++t) out[t] = trial_abs_error(plan, t);
    return out;
}

std::vector<double> error_samples(const TrialPlan& plan, int threads) {
#ifndef _OPENMP
    (void)threads;
    return error_samples_serial(plan);
#else
    validate(plan);
    std::vector<double> out(plan.trials);
    const auto T = static_cast<int64_t>(plan.trials);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
    for (int64_t t = 0; t < T; ++t) {
        out[static_cast<size_t>(t)] = trial_abs_error(plan, static_cast<uint64_t>(t));
    }
    return out;
#endif
}

RateFit fit_rate(const std::vector<std::pair<uint64_t, double>>& points) {
    if (points.size() < 3) throw parameter_error("rate fit needs >= 3 points");
    for (size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].second > 0.0)) throw parameter_error("statistics must be positive");
        if (i > 0 && points[i].first <= points[i - 1].first) {
            throw parameter_error("n must be strictly increasing");
        }
    }
    const auto n = static_cast<double>(points.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [pn, ps] : points) {
        sx += std::log(static_cast<double>(pn));
        sy += std::log(ps);
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [pn, ps] : points) {
        const double dx = std::log(static_cast<double>(pn)) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(ps) - my);
    }
    RateFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0, ss_tot = 0.0;
    for (const auto& [pn, ps] : points) {
        const double y = std::log(ps);
        const double yhat = fit.intercept + fit.slope * std::log(static_cast<double>(pn));
        ss_res += (y - yhat) * (y - yhat);
        ss_tot += (y - my) * (y - my);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    fit.points = points;
    return fit;
}

std::vector<SweepRow> sweep(const std::vector<uint64_t>& ns,
                            const std::function<EstimatorKind(uint64_t)>& estimator_of_n,
                            const TestFunction& f, uint64_t reps, SweepStatistic stat,
                            const std::function<double(uint64_t)>& epsilon_of_n,
                            uint64_t master_seed, int threads) {
    if (ns.empty()) throw parameter_error("sweep needs at least one n");
    if (reps < 1) throw parameter_error("sweep needs reps >= 1");
    for (size_t i = 1; i < ns.size(); ++i) {
        if (ns[i] <= ns[i - 1]) throw parameter_error("ns must be strictly increasing");
    }
    if (stat == SweepStatistic::failure_rate && !epsilon_of_n) {
        throw parameter_error("failure-rate sweep needs an epsilon rule");
    }

    std::vector<SweepRow> rows;
    rows.reserve(ns.size());
    for (size_t gi = 0; gi < ns.size(); ++gi) {
        const uint64_t n = ns[gi];
        TrialPlan plan;
        plan.estimator = estimator_of_n(n);
        plan.fn = f;
        plan.epsilon = stat == SweepStatistic::failure_rate ? epsilon_of_n(n) : 1.0;
        plan.trials = reps;
        plan.master_seed = RandomSource::child_seed(master_seed, gi);

        std::vector<double> errs = error_samples(plan, threads);
        double value = 0.0;
        switch (stat) {
            case SweepStatistic::median_abs_error: {
                std::sort(errs.begin(), errs.end());
                const size_t h = errs.size() / 2;
                value = errs.size() % 2 == 1 ? errs[h] : 0.5 * (errs[h - 1] + errs[h]);
                break;
            }
            case SweepStatistic::rmse: {
                double acc = 0.0;
                for (double e : errs) acc += e * e;
                value = std::sqrt(acc / static_cast<double>(errs.size()));
                break;
            }
            case SweepStatistic::failure_rate: {
                uint64_t fails = 0;
                for (double e : errs) fails += e > plan.epsilon ? 1u : 0u;
                value = static_cast<double>(fails) / static_cast<double>(errs.size());
                break;
            }
        }
        rows.push_back({n, value});
    }
    return rows;
}

const char* to_string(SweepStatistic stat) {
    switch (stat) {
        case SweepStatistic::median_abs_error:
            return "median-abs-error";
        case SweepStatistic::rmse:
            return "rmse";
        case SweepStatistic::failure_rate:
            return "failure-rate";
    }
    return "?";
}

}  // namespace mcconf
