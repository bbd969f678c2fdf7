// mcconf: randomized integration with confidence guarantees.
//
// Subcommands: estimate, failure-prob, rate-sweep, verify-lemmas,
// verify-bounds, counterexample. Exit codes: 0 pass, 1 runtime or
// statistical failure, 2 usage error. Every subcommand is deterministic
// given its full argument vector; numeric output uses 17 significant
// digits so files round-trip exactly.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mcconf/bounds.hpp"
#include "mcconf/clopper_pearson.hpp"
#include "mcconf/errors.hpp"
#include "mcconf/estimators.hpp"
#include "mcconf/harness.hpp"
#include "mcconf/testfn.hpp"

using namespace mcconf;

namespace {

constexpr uint64_t kDefaultSeed = 123456789;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// ---------------------------------------------------------------- functions

std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw parameter_error("expected key=value in '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

double parse_real(const std::string& s) {
    if (s == "inf") return kInf;
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw parameter_error("bad number '" + s + "'");
    return v;
}

std::string take(std::map<std::string, std::string>& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw parameter_error("missing key '" + key + "' in function spec");
    std::string v = it->second;
    kv.erase(it);
    return v;
}

// descriptor grammar:
//   holder:beta=B,d=D
//   sobolev:r=R,p=P,d=D            (p may be inf)
//   frolovcx:n=N,r=R
//   fooling:base=holder|sobolev,(beta=B | r=R,p=P),d=D,m=M0,M=M1,signs=plus|alt
//   const:c=C,d=D
TestFunction parse_function(const std::string& desc) {
    const auto colon = desc.find(':');
    if (colon == std::string::npos) throw parameter_error("function spec needs 'kind:params'");
    const std::string kind = desc.substr(0, colon);
    auto kv = parse_kv(desc.substr(colon + 1));
    auto done = [&kv, &desc]() {
        if (!kv.empty()) {
            throw parameter_error("unknown key '" + kv.begin()->first + "' in '" + desc + "'");
        }
    };

    if (kind == "holder") {
        const double beta = parse_real(take(kv, "beta"));
        const int d = static_cast<int>(parse_real(take(kv, "d")));
        done();
        return make_holder_bump(beta, d);
    }
    if (kind == "sobolev") {
        const int r = static_cast<int>(parse_real(take(kv, "r")));
        const double p = parse_real(take(kv, "p"));
        const int d = static_cast<int>(parse_real(take(kv, "d")));
        done();
        return make_sobolev_poly_bump(r, p, d);
    }
    if (kind == "frolovcx") {
        const auto n = static_cast<uint64_t>(parse_real(take(kv, "n")));
        const int r = static_cast<int>(parse_real(take(kv, "r")));
        done();
        return make_frolov_counterexample(n, r);
    }
    if (kind == "const") {
        const double c = parse_real(take(kv, "c"));
        const int d = static_cast<int>(parse_real(take(kv, "d")));
        done();
        return make_constant(c, d);
    }
    if (kind == "fooling") {
        const std::string base = take(kv, "base");
        const int d = static_cast<int>(parse_real(take(kv, "d")));
        const auto m = static_cast<uint64_t>(parse_real(take(kv, "m")));
        const auto M = static_cast<uint64_t>(parse_real(take(kv, "M")));
        const std::string signs = take(kv, "signs");
        if (signs != "plus" && signs != "alt") throw parameter_error("signs must be plus|alt");

        TestFunction bump;
        SmoothnessClass cls{SmoothKind::lp, d};
        if (base == "holder") {
            const double beta = parse_real(take(kv, "beta"));
            bump = make_holder_bump(beta, d);
            cls = SmoothnessClass::holder(beta, d);
        } else if (base == "sobolev") {
            const int r = static_cast<int>(parse_real(take(kv, "r")));
            const double p = parse_real(take(kv, "p"));
            bump = make_sobolev_poly_bump(r, p, d);
            cls = SmoothnessClass::sobolev(r, p, d);
        } else {
            throw parameter_error("fooling base must be holder|sobolev");
        }
        done();

        FoolingSpec spec;
        spec.m = m;
        for (uint64_t c = 0; c < M; ++c) {  // first M cells in lexicographic order
            std::vector<uint32_t> idx(static_cast<size_t>(d));
            uint64_t rem = c;
            for (int j = d - 1; j >= 0; --j) {
                idx[static_cast<size_t>(j)] = static_cast<uint32_t>(rem % m);
                rem /= m;
            }
            spec.cells.push_back({idx, signs == "plus" ? 1 : (c % 2 == 0 ? 1 : -1)});
        }
        spec.scale = fooling_scale(cls, m, M);
        return make_fooling_sum(bump, spec, cls);
    }
    throw parameter_error("unknown function kind '" + kind + "'");
}

// --------------------------------------------------------------- estimators

struct EstimatorOpts {
    std::string est;
    uint64_t n = 64;
    uint64_t m = 8;
    int k = 3;
    std::string inner = "plain";
    uint64_t m_grid = 8;
    uint64_t n_mc = 8;
};

void add_estimator_flags(CLI::App* cmd, EstimatorOpts& opts) {
    cmd->add_option("--est", opts.est, "estimator: plain|stratified|median|cv|frolov")
        ->required();
    cmd->add_option("--n", opts.n, "sample budget (plain, frolov)");
    cmd->add_option("--m", opts.m, "cells per axis (stratified)");
    cmd->add_option("--k", opts.k, "median repetitions (odd)");
    cmd->add_option("--inner", opts.inner, "inner estimator of the median wrapper");
    cmd->add_option("--m-grid", opts.m_grid, "interpolation grid (control variates)");
    cmd->add_option("--n-mc", opts.n_mc, "residual samples (control variates)");
}

EstimatorKind build_simple(const std::string& name, const EstimatorOpts& o) {
    if (name == "plain") return EstimatorKind::plain(o.n);
    if (name == "stratified") return EstimatorKind::strat(o.m);
    if (name == "cv") return EstimatorKind::cv(o.m_grid, o.n_mc);
    if (name == "frolov") return EstimatorKind::frolov(o.n);
    throw parameter_error("unknown estimator '" + name + "'");
}

EstimatorKind build_estimator(const EstimatorOpts& o) {
    if (o.est == "median") {
        if (o.k % 2 == 0) throw parameter_error("k must be odd");
        return EstimatorKind::median(o.k, build_simple(o.inner, o));
    }
    return build_simple(o.est, o);
}

// ------------------------------------------------------------------ output

int write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open output path: " << path << "\n";
        return 1;
    }
    out << text;
    out.flush();
    return out.good() ? 0 : 1;
}

// ------------------------------------------------------------- subcommands

struct CommonOpts {
    uint64_t seed = kDefaultSeed;
    uint64_t trials = 10000;
    int threads = 0;
    std::string out;
    bool json = false;
};

int cmd_estimate(const EstimatorOpts& eo, const std::string& fn_desc, const CommonOpts& c) {
    const auto kind = build_estimator(eo);
    const auto fn = parse_function(fn_desc);
    RandomSource rng(c.seed);
    const auto e = run_estimator(kind, fn, rng);
    std::string j = "{";
    j += jstr("command") + ":" + jstr("estimate") + ",";
    j += jstr("estimator") + ":" + jstr(kind.name()) + ",";
    j += jstr("function") + ":" + jstr(fn_desc) + ",";
    j += jstr("seed") + ":" + std::to_string(c.seed) + ",";
    j += jstr("value") + ":" + num(e.value) + ",";
    j += jstr("evals_used") + ":" + std::to_string(e.evals_used) + "}\n";
    return write_text(c.out, j);
}

int cmd_failure_prob(const EstimatorOpts& eo, const std::string& fn_desc, double epsilon,
                     const CommonOpts& c) {
    TrialPlan plan;
    plan.estimator = build_estimator(eo);
    plan.fn = parse_function(fn_desc);
    plan.function_id = fn_desc;
    plan.epsilon = epsilon;
    plan.trials = c.trials;
    plan.master_seed = c.seed;
    const auto stats = empirical_failure(plan, c.threads);
    std::string j = "{";
    j += jstr("command") + ":" + jstr("failure-prob") + ",";
    j += jstr("plan") + ":{";
    j += jstr("estimator") + ":" + jstr(plan.estimator.name()) + ",";
    j += jstr("function") + ":" + jstr(fn_desc) + ",";
    j += jstr("epsilon") + ":" + num(plan.epsilon) + ",";
    j += jstr("trials") + ":" + std::to_string(plan.trials) + ",";
    j += jstr("seed") + ":" + std::to_string(plan.master_seed) + "},";
    j += jstr("failures") + ":" + std::to_string(stats.failures) + ",";
    j += jstr("rate") + ":" + num(stats.rate) + ",";
    j += jstr("ci_low") + ":" + num(stats.ci_low) + ",";
    j += jstr("ci_high") + ":" + num(stats.ci_high) + "}\n";
    return write_text(c.out, j);
}

int cmd_rate_sweep(const EstimatorOpts& eo, const std::string& fn_desc,
                   const std::string& ns_csv, uint64_t reps, const std::string& stat_name,
                   const std::string& eps_rule, double delta, const CommonOpts& c) {
    std::vector<uint64_t> ns;
    std::stringstream ss(ns_csv);
    std::string item;
    while (std::getline(ss, item, ',')) ns.push_back(std::stoull(item));
    if (ns.size() < 3) throw parameter_error("need >= 3 points for a rate fit");

    const auto fn = parse_function(fn_desc);
    SweepStatistic stat;
    if (stat_name == "mae") {
        stat = SweepStatistic::median_abs_error;
    } else if (stat_name == "rmse") {
        stat = SweepStatistic::rmse;
    } else if (stat_name == "fail") {
        stat = SweepStatistic::failure_rate;
    } else {
        throw parameter_error("stat must be mae|rmse|fail");
    }

    const int d = fn.dim;
    auto est_of_n = [&](uint64_t n) -> EstimatorKind {
        if (eo.est == "plain") return EstimatorKind::plain(n);
        if (eo.est == "stratified") {
            const auto m = static_cast<uint64_t>(
                std::floor(std::pow(static_cast<double>(n), 1.0 / d)));
            return EstimatorKind::strat(std::max<uint64_t>(1, m));
        }
        if (eo.est == "cv") {
            return EstimatorKind::cv(std::max<uint64_t>(1, n / 2), std::max<uint64_t>(1, n / 2));
        }
        if (eo.est == "frolov") return EstimatorKind::frolov(n);
        throw parameter_error("rate-sweep supports plain|stratified|cv|frolov");
    };

    std::function<double(uint64_t)> eps_of_n;
    if (stat == SweepStatistic::failure_rate) {
        if (eps_rule == "strat-holder") {
            const double beta = fn.cls.kind == SmoothKind::holder ? fn.cls.beta : 1.0;
            eps_of_n = [=](uint64_t n) {
                const auto m = static_cast<uint64_t>(
                    std::floor(std::pow(static_cast<double>(n), 1.0 / d)));
                return strat_holder_epsilon(std::max<uint64_t>(1, m), d, beta, delta).epsilon;
            };
        } else if (eps_rule == "strat-w1p") {
            const double q = std::min(fn.cls.p, 2.0);
            eps_of_n = [=](uint64_t n) { return strat_w1p_epsilon(n, q, delta).epsilon; };
        } else {
            throw parameter_error("eps rule must be strat-holder|strat-w1p");
        }
    }

    const auto rows = sweep(ns, est_of_n, fn, reps, stat, eps_of_n, c.seed, c.threads);

    std::string csv = "n,statistic\n";
    std::string json_rows = "[";
    std::vector<std::pair<uint64_t, double>> pts;
    bool fit_ok = true;
    for (size_t i = 0; i < rows.size(); ++i) {
        csv += std::to_string(rows[i].n) + "," + num(rows[i].statistic) + "\n";
        json_rows += std::string(i ? "," : "") + "[" + std::to_string(rows[i].n) + "," +
                     num(rows[i].statistic) + "]";
        if (rows[i].statistic > 0.0) {
            pts.push_back({rows[i].n, rows[i].statistic});
        } else {
            fit_ok = false;
        }
    }
    json_rows += "]";

    std::string j = "{";
    j += jstr("command") + ":" + jstr("rate-sweep") + ",";
    j += jstr("estimator") + ":" + jstr(eo.est) + ",";
    j += jstr("function") + ":" + jstr(fn_desc) + ",";
    j += jstr("statistic") + ":" + jstr(to_string(stat)) + ",";
    j += jstr("reps") + ":" + std::to_string(reps) + ",";
    j += jstr("seed") + ":" + std::to_string(c.seed) + ",";
    j += jstr("rows") + ":" + json_rows + ",";
    if (fit_ok && pts.size() >= 3) {
        const auto fit = fit_rate(pts);
        j += jstr("slope") + ":" + num(fit.slope) + ",";
        j += jstr("intercept") + ":" + num(fit.intercept) + ",";
        j += jstr("r_squared") + ":" + num(fit.r_squared) + "}";
    } else {
        j += jstr("slope") + ":null}";
    }
    j += "\n";

    if (c.json) return write_text(c.out, j);
    if (!c.out.empty()) {
        const int rc = write_text(c.out, csv);
        if (rc != 0) return rc;
        std::cout << j;
        return 0;
    }
    std::cout << csv << j;
    return 0;
}

int cmd_verify_lemmas(uint32_t k_max, const CommonOpts& c) {
    std::string csv = "lemma,k,param,lhs,rhs,holds\n";
    uint64_t violations = 0, rows = 0;
    for (uint32_t k = 1; k <= k_max; ++k) {
        const uint32_t t_max = (k % 2 == 1) ? (k + 3) / 8 : (k + 6) / 8;
        for (uint32_t t = 0; t <= t_max; ++t) {
            const auto res = lemma_a1_check(k, t);
            violations += res.holds ? 0u : 1u;
            csv += "A1," + std::to_string(k) + "," + std::to_string(t) + "," +
                   res.lhs.to_string() + "," + num(res.rhs) + "," +
                   (res.holds ? "1" : "0") + "\n";
            ++rows;
        }
        for (uint32_t kp = 0; kp <= k; ++kp) {
            const auto res = lemma_a2_check(k, kp);
            violations += res.holds ? 0u : 1u;
            csv += "A2," + std::to_string(k) + "," + std::to_string(kp) + "," +
                   res.lhs.to_string() + "," + num(std::pow(2.0, -static_cast<double>(kp))) +
                   "," + (res.holds ? "1" : "0") + "\n";
            ++rows;
        }
    }
    if (c.json) {
        std::string j = "{";
        j += jstr("command") + ":" + jstr("verify-lemmas") + ",";
        j += jstr("k_max") + ":" + std::to_string(k_max) + ",";
        j += jstr("rows") + ":" + std::to_string(rows) + ",";
        j += jstr("violations") + ":" + std::to_string(violations) + ",";
        j += jstr("pass") + ":" + (violations == 0 ? "true" : "false") + "}\n";
        if (!c.out.empty()) {
            const int rc = write_text(c.out, csv);
            if (rc != 0) return rc;
        }
        std::cout << j;
        return violations == 0 ? 0 : 1;
    }
    const int rc = write_text(c.out, csv);
    if (rc != 0) return rc;
    if (!c.out.empty()) {
        std::cout << "verify-lemmas: k_max=" << k_max << " violations=" << violations << "\n";
    }
    return violations == 0 ? 0 : 1;
}

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

int finish_suite(const std::string& suite, const std::vector<CheckLine>& checks,
                 const CommonOpts& c) {
    bool all = true;
    std::string text;
    for (const auto& chk : checks) {
        all = chk.pass && all;
        text += std::string(chk.pass ? "[PASS] " : "[FAIL] ") + chk.name + ": " + chk.detail +
                "\n";
    }
    std::string j = "{";
    j += jstr("command") + ":" + jstr("verify-bounds") + ",";
    j += jstr("suite") + ":" + jstr(suite) + ",";
    j += jstr("checks") + ":" + std::to_string(checks.size()) + ",";
    j += jstr("pass") + ":" + (all ? "true" : "false") + "}\n";
    const int rc = write_text(c.out, text + j);
    if (rc != 0) return rc;
    return all ? 0 : 1;
}

int suite_strat_holder(double delta, const CommonOpts& c) {
    auto hat = make_holder_bump(1.0, 1);
    std::vector<CheckLine> checks;
    for (uint64_t n : {64ull, 256ull, 1024ull}) {
        const auto spec = strat_holder_epsilon(n, 1, 1.0, delta);
        TrialPlan plan;
        plan.estimator = EstimatorKind::strat(n);
        plan.fn = hat;
        plan.function_id = "holder:beta=1,d=1";
        plan.epsilon = spec.epsilon;
        plan.trials = c.trials;
        plan.master_seed = c.seed + n;
        const auto stats = empirical_failure(plan, c.threads);
        const auto errs = error_samples(plan, c.threads);
        double worst = 0.0;
        for (double e : errs) worst = std::max(worst, e);
        const double cap = std::pow(static_cast<double>(n), -1.0);
        const bool pass = stats.ci_low <= delta && worst <= cap;
        checks.push_back({"strat-holder n=" + std::to_string(n), pass,
                          "rate=" + num(stats.rate) + " ci_low=" + num(stats.ci_low) +
                              " delta=" + num(delta) + " worst=" + num(worst) +
                              " cap=" + num(cap)});
    }
    return finish_suite("strat-holder", checks, c);
}

int suite_strat_w1p(double delta, const CommonOpts& c) {
    auto bump = make_sobolev_poly_bump(1, 2.0, 1);
    std::vector<CheckLine> checks;
    for (uint64_t n : {64ull, 256ull, 1024ull}) {
        const auto spec = strat_w1p_epsilon(n, 2.0, delta);
        TrialPlan plan;
        plan.estimator = EstimatorKind::strat(n);
        plan.fn = bump;
        plan.function_id = "sobolev:r=1,p=2,d=1";
        plan.epsilon = spec.epsilon;
        plan.trials = c.trials;
        plan.master_seed = c.seed + n;
        const auto stats = empirical_failure(plan, c.threads);
        const bool pass = stats.ci_low <= delta;
        checks.push_back({"strat-w1p n=" + std::to_string(n), pass,
                          "rate=" + num(stats.rate) + " ci_low=" + num(stats.ci_low) +
                              " delta=" + num(delta)});
    }
    return finish_suite("strat-w1p", checks, c);
}

int suite_median(double alpha, int k, const CommonOpts& c) {
    if (!(alpha > 0.0 && alpha < 0.5)) throw parameter_error("alpha must be in (0,1/2)");
    if (k < 1 || k % 2 == 0) throw parameter_error("k must be odd");
    const double bound = median_failure_bound(alpha, k).tight;
    uint64_t failures = 0;
    for (uint64_t t = 0; t < c.trials; ++t) {
        const auto e = median_of_runs(k, RandomSource::child_seed(c.seed, t),
                                      [&](RandomSource& r) -> Estimate {
                                          return {r.next_double() < alpha ? 1.0 : 0.0, 1};
                                      });
        failures += std::abs(e.value) > 0.5 ? 1u : 0u;
    }
    const auto ci = clopper_pearson(failures, c.trials, kCpConfidence);
    const double rate = static_cast<double>(failures) / static_cast<double>(c.trials);
    std::vector<CheckLine> checks{
        {"median alpha=" + num(alpha) + " k=" + std::to_string(k), ci.low <= bound,
         "rate=" + num(rate) + " ci_low=" + num(ci.low) + " bound=" + num(bound)}};
    return finish_suite("median", checks, c);
}

int suite_bakhvalov(const CommonOpts& c) {
    uint64_t violations = 0, total = 0;
    for (uint32_t n = 17; n <= 60; ++n) {
        const uint32_t k = 4 * n + 6;
        for (int i = 1; i <= 50; ++i) {
            const double t = static_cast<double>(n) * i / 50.0;
            const auto exact = bakhvalov_exact_uncertainty(k, t);
            const double rhs = (1.0 / 3.0) * std::pow(4.0, -t * t / n) * (1.0 + 1e-12);
            violations += compare(exact, rhs) > 0 ? 0u : 1u;
            ++total;
        }
    }
    std::vector<CheckLine> checks{{"bakhvalov chain n=17..60", violations == 0,
                                   std::to_string(total) + " grid points, " +
                                       std::to_string(violations) + " violations"}};
    return finish_suite("bakhvalov", checks, c);
}

int suite_counterexample(uint64_t n, int r, const CommonOpts& c) {
    auto fn = make_frolov_counterexample(n, r);
    auto base = make_sobolev_poly_bump(r, 2.0, 1);
    const double closed = base.exact_integral * std::pow(2.0, -(r + 1)) *
                          std::pow(static_cast<double>(n), -r);
    const bool integral_ok = std::abs(fn.exact_integral - closed) <= 1e-12 * std::abs(closed);

    uint64_t zeros = 0;
    for (uint64_t t = 0; t < c.trials; ++t) {
        RandomSource rng = RandomSource::child(c.seed, t);
        zeros += frolov_1d(fn, n, rng).value == 0.0 ? 1u : 0u;
    }
    const auto ci = clopper_pearson(zeros, c.trials, kCpConfidence);
    const double target = 1.0 / (16.0 * static_cast<double>(n));
    const double rate = static_cast<double>(zeros) / static_cast<double>(c.trials);

    std::vector<CheckLine> checks;
    checks.push_back({"closed-form integral n=" + std::to_string(n), integral_ok,
                      "exact=" + num(fn.exact_integral) + " formula=" + num(closed)});
    checks.push_back({"zero-return probability n=" + std::to_string(n), ci.high >= target,
                      "empirical=" + num(rate) + " ci=[" + num(ci.low) + "," + num(ci.high) +
                          "] target=" + num(target)});
    return finish_suite("counterexample", checks, c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mcconf: randomized integration on the unit cube with (eps,delta) confidence "
        "guarantees, lower-bound ensembles, and exact bound verification"};
    app.require_subcommand(1);
    app.fallthrough();
    // config values sit in a [subcommand] section; command-line flags win
    app.set_config("--config");
    app.allow_config_extras(false);

    CommonOpts common;
    EstimatorOpts eo;
    std::string fn_desc = "holder:beta=1,d=1";
    double epsilon = 0.01;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", common.seed, "master seed (default 123456789)");
        cmd->add_option("--trials", common.trials, "trial count");
        cmd->add_option("--threads", common.threads, "worker threads (0 = all)");
        cmd->add_option("--out", common.out, "output file (default stdout)");
        cmd->add_flag("--json", common.json, "emit a JSON document instead of CSV");
    };

    auto* est = app.add_subcommand("estimate", "run one estimate, print JSON");
    add_estimator_flags(est, eo);
    est->add_option("--fn", fn_desc, "function descriptor");
    add_common(est);

    auto* fp = app.add_subcommand("failure-prob", "empirical failure probability");
    add_estimator_flags(fp, eo);
    fp->add_option("--fn", fn_desc, "function descriptor");
    fp->add_option("--eps", epsilon, "error threshold")->required();
    add_common(fp);

    std::string ns_csv = "16,32,64,128,256,512,1024,2048,4096";
    uint64_t reps = 1000;
    std::string stat_name = "mae";
    std::string eps_rule = "strat-holder";
    double delta = 0.05;
    auto* rs = app.add_subcommand("rate-sweep", "budget sweep with a log-log rate fit");
    rs->add_option("--est", eo.est, "plain|stratified|cv|frolov")->required();
    rs->add_option("--fn", fn_desc, "function descriptor");
    rs->add_option("--ns", ns_csv, "comma-separated budgets");
    rs->add_option("--reps", reps, "trials per budget");
    rs->add_option("--stat", stat_name, "mae|rmse|fail");
    rs->add_option("--eps-rule", eps_rule, "epsilon rule for the fail statistic");
    rs->add_option("--delta", delta, "uncertainty for the epsilon rule");
    add_common(rs);

    uint32_t k_max = 300;
    auto* vl = app.add_subcommand("verify-lemmas", "exact binomial tail scan, CSV");
    vl->add_option("--k-max", k_max, "largest k to scan");
    add_common(vl);

    std::string suite;
    double alpha = 0.125;
    uint64_t cx_n = 8;
    int cx_r = 1;
    auto* vb = app.add_subcommand("verify-bounds", "guarantee-validity suites");
    vb->add_option("--suite", suite, "strat-holder|strat-w1p|median|bakhvalov|counterexample")
        ->required();
    vb->add_option("--delta", delta, "uncertainty level");
    vb->add_option("--alpha", alpha, "inner failure probability (median suite)");
    vb->add_option("--k", eo.k, "median repetitions");
    vb->add_option("--n", cx_n, "counterexample bump count");
    vb->add_option("--r", cx_r, "counterexample smoothness");
    add_common(vb);

    auto* cx = app.add_subcommand("counterexample", "alias for verify-bounds counterexample");
    cx->add_option("--n", cx_n, "bump count");
    cx->add_option("--r", cx_r, "smoothness");
    add_common(cx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (est->parsed()) return cmd_estimate(eo, fn_desc, common);
        if (fp->parsed()) return cmd_failure_prob(eo, fn_desc, epsilon, common);
        if (rs->parsed()) {
            return cmd_rate_sweep(eo, fn_desc, ns_csv, reps, stat_name, eps_rule, delta,
                                  common);
        }
        if (vl->parsed()) return cmd_verify_lemmas(k_max, common);
        if (vb->parsed()) {
            if (suite == "strat-holder") return suite_strat_holder(delta, common);
            if (suite == "strat-w1p") return suite_strat_w1p(delta, common);
            if (suite == "median") return suite_median(alpha, eo.k, common);
            if (suite == "bakhvalov") return suite_bakhvalov(common);
            if (suite == "counterexample") return suite_counterexample(cx_n, cx_r, common);
            std::cerr << "unknown suite: " << suite << "\n";
            return 2;
        }
        if (cx->parsed()) return suite_counterexample(cx_n, cx_r, common);
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
