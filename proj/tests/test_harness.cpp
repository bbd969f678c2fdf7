#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "mcconf/bounds.hpp"
#include "mcconf/clopper_pearson.hpp"
#include "mcconf/errors.hpp"
#include "mcconf/harness.hpp"

using namespace mcconf;

namespace {

// failure-injection function: plain_mc with n=1 fails exactly when the
// single uniform lands below `p`
TrialPlan injector_plan(double p, uint64_t trials, uint64_t seed) {
    TestFunction f;
    f.dim = 1;
    f.exact_integral = 0.0;
    f.cls = SmoothnessClass::lp(std::numeric_limits<double>::infinity(), 1);
    f.support_note = "failure injector";
    f.eval = [p](std::span<const double> x) { return x[0] < p ? 1.0 : 0.0; };
    TrialPlan plan;
    plan.estimator = EstimatorKind::plain(1);
    plan.fn = f;
    plan.epsilon = 0.5;
    plan.trials = trials;
    plan.master_seed = seed;
    return plan;
}

double binom_cdf(uint64_t k, uint64_t n, double p) {
    double acc = 0.0, term = std::pow(1.0 - p, static_cast<double>(n));
    for (uint64_t j = 0; j <= k; ++j) {
        acc += term;
        term *= static_cast<double>(n - j) / static_cast<double>(j + 1) * p / (1.0 - p);
    }
    return acc;
}

}  // namespace

TEST_CASE("clopper-pearson endpoints solve the binomial tail equations") {
    const double alpha = 1.0 - kCpConfidence;
    for (uint64_t t : {1ull, 7ull, 30ull, 50ull}) {
        for (uint64_t f = 0; f <= t; ++f) {
            auto ci = clopper_pearson(f, t, kCpConfidence);
            const double rate = static_cast<double>(f) / static_cast<double>(t);
            CHECK(ci.low <= rate + 1e-12);
            CHECK(ci.high >= rate - 1e-12);
            if (f == 0) {
                CHECK(ci.low == 0.0);
            } else {
                // P(X >= f | p = low) = alpha/2
                CHECK(1.0 - binom_cdf(f - 1, t, ci.low) ==
                      doctest::Approx(alpha / 2).epsilon(1e-9));
            }
            if (f == t) {
                CHECK(ci.high == 1.0);
            } else {
                // P(X <= f | p = high) = alpha/2
                CHECK(binom_cdf(f, t, ci.high) == doctest::Approx(alpha / 2).epsilon(1e-9));
            }
        }
    }
    CHECK_THROWS_AS(clopper_pearson(2, 1), parameter_error);
    CHECK_THROWS_AS(clopper_pearson(0, 0), parameter_error);
}

TEST_CASE("empirical failure: exact estimator never fails") {
    TrialPlan plan;
    plan.estimator = EstimatorKind::strat(4);
    plan.fn = make_constant(1.25, 2);
    plan.epsilon = 1e-9;
    plan.trials = 500;
    plan.master_seed = 7;
    auto stats = empirical_failure(plan);
    CHECK(stats.failures == 0);
    CHECK(stats.rate == 0.0);
    CHECK(stats.ci_low == 0.0);

    plan.trials = 0;
    CHECK_THROWS_AS(empirical_failure(plan), parameter_error);
}

TEST_CASE("empirical failure concentrates on the injected rate") {
    auto plan = injector_plan(0.2, 100000, 99991);
    auto stats = empirical_failure(plan);
    const double se = std::sqrt(0.2 * 0.8 / static_cast<double>(plan.trials));
    CHECK(stats.rate >= 0.2 - 4 * se);
    CHECK(stats.rate <= 0.2 + 4 * se);
    CHECK(stats.ci_low <= 0.2);
    CHECK(stats.ci_high >= 0.2);
}

TEST_CASE("error samples: order, length, caps") {
    TrialPlan plan;
    plan.estimator = EstimatorKind::strat(4);
    plan.fn = make_constant(0.5, 1);
    plan.epsilon = 1.0;
    plan.trials = 257;
    plan.master_seed = 3;
    auto errs = error_samples(plan);
    CHECK(errs.size() == 257);
    for (double e : errs) CHECK(e == 0.0);

    plan.fn = make_holder_bump(1.0, 1);
    plan.estimator = EstimatorKind::strat(256);
    plan.trials = 2000;
    auto errs2 = error_samples(plan);
    for (double e : errs2) REQUIRE(e <= 1.0 / 256.0);
}

TEST_CASE("rate fit: exact power laws and degenerate data") {
    std::vector<std::pair<uint64_t, double>> pts;
    for (uint64_t n : {16ull, 64ull, 256ull}) {
        pts.push_back({n, 7.0 * std::pow(static_cast<double>(n), -1.5)});
    }
    auto fit = fit_rate(pts);
    CHECK(fit.slope == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(7.0)).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<std::pair<uint64_t, double>> flat = {{2, 3.7}, {8, 3.7}, {64, 3.7}};
    auto fit2 = fit_rate(flat);
    CHECK(fit2.slope == doctest::Approx(0.0).epsilon(1e-14));

    std::vector<std::pair<uint64_t, double>> two = {{2, 1.0}, {4, 0.5}};
    CHECK_THROWS_AS(fit_rate(two), parameter_error);
    std::vector<std::pair<uint64_t, double>> bad = {{2, 1.0}, {4, 0.0}, {8, 0.25}};
    CHECK_THROWS_AS(fit_rate(bad), parameter_error);
    std::vector<std::pair<uint64_t, double>> unordered = {{4, 1.0}, {2, 0.5}, {8, 0.25}};
    CHECK_THROWS_AS(fit_rate(unordered), parameter_error);
}

TEST_CASE("sweep: exact estimator gives all-zero statistics") {
    auto rows = sweep({2, 4, 8}, [](uint64_t n) { return EstimatorKind::strat(n); },
                      make_constant(2.0, 1), 1, SweepStatistic::median_abs_error, {}, 5);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) CHECK(row.statistic == 0.0);
}

TEST_CASE("sweep: plain MC rmse halves per 4x budget") {
    std::vector<uint64_t> ns;
    for (int p = 6; p <= 14; ++p) ns.push_back(1ull << p);
    auto rows = sweep(ns, [](uint64_t n) { return EstimatorKind::plain(n); },
                      make_holder_bump(1.0, 1), 200, SweepStatistic::rmse, {}, 31337);
    std::vector<std::pair<uint64_t, double>> pts;
    for (const auto& row : rows) pts.push_back({row.n, row.statistic});
    auto fit = fit_rate(pts);
    CHECK(fit.slope == doctest::Approx(-0.5).epsilon(0.2));  // +-0.1 absolute
    CHECK(std::abs(fit.slope + 0.5) <= 0.1);
}

TEST_CASE("sweep: failure rates honor the stratified holder guarantee") {
    const double delta = 0.05;
    auto eps_rule = [delta](uint64_t n) {
        return strat_holder_epsilon(n, 1, 1.0, delta).epsilon;
    };
    auto rows = sweep({16, 64, 256}, [](uint64_t n) { return EstimatorKind::strat(n); },
                      make_holder_bump(1.0, 1), 2000, SweepStatistic::failure_rate,
                      eps_rule, 2718);
    for (const auto& row : rows) {
        const auto fails = static_cast<uint64_t>(std::llround(row.statistic * 2000));
        const auto ci = clopper_pearson(fails, 2000, kCpConfidence);
        CHECK(ci.low <= delta);
    }
}

TEST_CASE("sweep rejects malformed requests") {
    auto est = [](uint64_t n) { return EstimatorKind::plain(n); };
    auto f = make_constant(1.0, 1);
    CHECK_THROWS_AS(sweep({}, est, f, 1, SweepStatistic::rmse, {}, 1), parameter_error);
    CHECK_THROWS_AS(sweep({4, 2}, est, f, 1, SweepStatistic::rmse, {}, 1), parameter_error);
    CHECK_THROWS_AS(sweep({2, 4}, est, f, 0, SweepStatistic::rmse, {}, 1), parameter_error);
    CHECK_THROWS_AS(sweep({2, 4}, est, f, 1, SweepStatistic::failure_rate, {}, 1),
                    parameter_error);
}
