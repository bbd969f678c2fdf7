#include "mcconf/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mcconf/errors.hpp"

namespace mcconf {

namespace {

uint64_t checked_grid_size(uint64_t per_axis, int d, uint64_t budget, const char* what) {
    uint64_t total = 1;
    for (int j = 0; j < d; ++j) {
        if (per_axis != 0 && total > budget / per_axis) {
            throw budget_error(std::string(what) + " exceeds the evaluation budget");
        }
        total *= per_axis;
    }
    if (total > budget) throw budget_error(std::string(what) + " exceeds the evaluation budget");
    return total;
}

}  // namespace

EstimatorKind EstimatorKind::plain(uint64_t n) {
    if (n < 1) throw parameter_error("plain_mc needs n >= 1");
    EstimatorKind k;
    k.type = Type::plain_mc;
    k.n = n;
    return k;
}

EstimatorKind EstimatorKind::strat(uint64_t m) {
    if (m < 1) throw parameter_error("stratified needs m >= 1");
    EstimatorKind k;
    k.type = Type::stratified;
    k.m = m;
    return k;
}

EstimatorKind EstimatorKind::median(int k, EstimatorKind inner) {
    if (k < 1 || k % 2 == 0) throw parameter_error("median needs odd k >= 1");
    EstimatorKind e;
    e.type = Type::median;
    e.k = k;
    e.inner = std::make_shared<const EstimatorKind>(std::move(inner));
    return e;
}

EstimatorKind EstimatorKind::cv(uint64_t m_grid, uint64_t n_mc) {
    if (m_grid < 1 || n_mc < 1) throw parameter_error("control_variate needs m_grid, n_mc >= 1");
    EstimatorKind k;
    k.type = Type::control_variate;
    k.m_grid = m_grid;
    k.n_mc = n_mc;
    return k;
}

EstimatorKind EstimatorKind::frolov(uint64_t n) {
    if (n < 1) throw parameter_error("frolov_1d needs n >= 1");
    EstimatorKind k;
    k.type = Type::frolov_1d;
    k.n = n;
    return k;
}

std::string EstimatorKind::name() const {
    switch (type) {
        case Type::plain_mc:
            return "plain_mc(n=" + std::to_string(n) + ")";
        case Type::stratified:
            return "stratified(m=" + std::to_string(m) + ")";
        case Type::median:
            return "median(k=" + std::to_string(k) + ", inner=" + inner->name() + ")";
        case Type::control_variate:
            return "control_variate(m_grid=" + std::to_string(m_grid) +
                   ", n_mc=" + std::to_string(n_mc) + ")";
        case Type::frolov_1d:
            return "frolov_1d(n=" + std::to_string(n) + ")";
    }
    return "?";
}

Estimate plain_mc(const TestFunction& f, uint64_t n, RandomSource& rng) {
    if (n < 1) throw parameter_error("plain_mc needs n >= 1");
    const int d = f.dim;
    std::vector<double> x(static_cast<size_t>(d));
    double sum = 0.0;
    for (uint64_t i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) x[static_cast<size_t>(j)] = rng.next_double();
        sum += f.eval(x);
    }
    return {sum / static_cast<double>(n), n};
}

Estimate stratified(const TestFunction& f, uint64_t m, RandomSource& rng, uint64_t eval_budget) {
    if (m < 1) throw parameter_error("stratified needs m >= 1");
    const int d = f.dim;
    const uint64_t cells = checked_grid_size(m, d, eval_budget, "stratified m^d");

    const double inv_m = 1.0 / static_cast<double>(m);
    std::vector<uint64_t> idx(static_cast<size_t>(d), 0);
    std::vector<double> x(static_cast<size_t>(d));
    double sum = 0.0;
    for (uint64_t c = 0; c < cells; ++c) {
        for (int j = 0; j < d; ++j) {
            x[static_cast<size_t>(j)] =
                (static_cast<double>(idx[static_cast<size_t>(j)]) + rng.next_double()) * inv_m;
        }
        sum += f.eval(x);
        for (int j = d - 1; j >= 0; --j) {  // odometer, last axis fastest
            if (++idx[static_cast<size_t>(j)] < m) break;
            idx[static_cast<size_t>(j)] = 0;
        }
    }
    return {sum / static_cast<double>(cells), cells};
}

Estimate control_variate(const TestFunction& f, uint64_t m_grid, uint64_t n_mc,
                         RandomSource& rng, uint64_t eval_budget) {
    if (m_grid < 1 || n_mc < 1) throw parameter_error("control_variate needs m_grid, n_mc >= 1");
    const int d = f.dim;
    if (d > 3) throw parameter_error("control_variate tensor grid supports d <= 3");
    const uint64_t nodes_per_axis = m_grid + 1;
    const uint64_t nodes = checked_grid_size(nodes_per_axis, d, eval_budget, "interpolation grid");
    if (nodes > eval_budget - std::min(eval_budget, n_mc)) {
        throw budget_error("grid plus residual samples exceed the evaluation budget");
    }

    // tabulate f on the tensor grid, axis 0 slowest
    const double h = 1.0 / static_cast<double>(m_grid);
    std::vector<double> values(nodes);
    std::vector<uint64_t> idx(static_cast<size_t>(d), 0);
    std::vector<double> x(static_cast<size_t>(d));
    double integral_g = 0.0;  // trapezoidal rule == exact integral of the interpolant
    for (uint64_t c = 0; c < nodes; ++c) {
        double w = 1.0;
        for (int j = 0; j < d; ++j) {
            const uint64_t i = idx[static_cast<size_t>(j)];
            x[static_cast<size_t>(j)] = static_cast<double>(i) * h;
            if (i == 0 || i == m_grid) w *= 0.5;
        }
        values[c] = f.eval(x);
        integral_g += w * values[c];
        for (int j = d - 1; j >= 0; --j) {
            if (++idx[static_cast<size_t>(j)] <= m_grid) break;
            idx[static_cast<size_t>(j)] = 0;
        }
    }
    integral_g *= std::pow(h, d);

    // d-linear interpolant lookup
    auto interp = [&](std::span<const double> pt) -> double {
        uint64_t base[3];
        double frac[3];
        for (int j = 0; j < d; ++j) {
            double t = pt[static_cast<size_t>(j)] * static_cast<double>(m_grid);
            auto cell = static_cast<uint64_t>(t);
            if (cell >= m_grid) cell = m_grid - 1;
            base[j] = cell;
            frac[j] = t - static_cast<double>(cell);
        }
        double acc = 0.0;
        for (int corner = 0; corner < (1 << d); ++corner) {
            double w = 1.0;
            uint64_t flat = 0;
            for (int j = 0; j < d; ++j) {
                const bool hi = (corner >> j) & 1;
                w *= hi ? frac[j] : 1.0 - frac[j];
                flat = flat * nodes_per_axis + base[j] + (hi ? 1 : 0);
            }
            acc += w * values[flat];
        }
        return acc;
    };

    double residual_sum = 0.0;
    for (uint64_t i = 0; i < n_mc; ++i) {
        for (int j = 0; j < d; ++j) x[static_cast<size_t>(j)] = rng.next_double();
        residual_sum += f.eval(x) - interp(x);
    }
    return {integral_g + residual_sum / static_cast<double>(n_mc), nodes + n_mc};
}

Estimate frolov_1d_fixed(const TestFunction& f, uint64_t n, double u, double v) {
    if (f.dim != 1) throw parameter_error("frolov_1d requires a one-dimensional integrand");
    if (n < 1) throw parameter_error("frolov_1d needs n >= 1");
    const double un = u * static_cast<double>(n);
    if (un - v < 0.0) return {0.0, 0};  // no lattice point lands in [0,1]
    const auto m_max = static_cast<uint64_t>(std::floor(un - v));
    double sum = 0.0;
    uint64_t count = 0;
    for (uint64_t m = 0; m <= m_max; ++m) {
        const double x = (static_cast<double>(m) + v) / un;
        sum += f(x);
        ++count;
    }
    return {sum / un, count};
}

Estimate frolov_1d(const TestFunction& f, uint64_t n, RandomSource& rng) {
    const double u = 0.5 + rng.next_double();  // uniform on [1/2, 3/2)
    const double v = rng.next_double();        // uniform on [0, 1)
    return frolov_1d_fixed(f, n, u, v);
}

Estimate median_of_runs(int k, uint64_t master_seed,
                        const std::function<Estimate(RandomSource&)>& run_inner) {
    if (k < 1 || k % 2 == 0) throw parameter_error("median needs odd k >= 1");
    std::vector<double> values;
    values.reserve(static_cast<size_t>(k));
    uint64_t evals = 0;
    for (int j = 0; j < k; ++j) {
        RandomSource child = RandomSource::child(master_seed, static_cast<uint64_t>(j));
        Estimate e = run_inner(child);
        values.push_back(e.value);
        evals += e.evals_used;
    }
    std::nth_element(values.begin(), values.begin() + k / 2, values.end());
    return {values[static_cast<size_t>(k / 2)], evals};
}

Estimate median_amplify(const EstimatorKind& inner, int k, const TestFunction& f,
                        RandomSource& rng, uint64_t eval_budget) {
    return median_of_runs(k, rng.seed(), [&](RandomSource& child) {
        return run_estimator(inner, f, child, eval_budget);
    });
}

Estimate run_estimator(const EstimatorKind& kind, const TestFunction& f, RandomSource& rng,
                       uint64_t eval_budget) {
    switch (kind.type) {
        case EstimatorKind::Type::plain_mc:
            return plain_mc(f, kind.n, rng);
        case EstimatorKind::Type::stratified:
            return stratified(f, kind.m, rng, eval_budget);
        case EstimatorKind::Type::median:
            return median_amplify(*kind.inner, kind.k, f, rng, eval_budget);
        case EstimatorKind::Type::control_variate:
            return control_variate(f, kind.m_grid, kind.n_mc, rng, eval_budget);
        case EstimatorKind::Type::frolov_1d:
            return frolov_1d(f, kind.n, rng);
    }
    throw parameter_error("unknown estimator kind");
}

}  // namespace mcconf
