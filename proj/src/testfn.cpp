#include "mcconf/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <unordered_map>

#include "mcconf/errors.hpp"

namespace mcconf {

namespace {

bool is_inf(double p) { return std::isinf(p) && p > 0; }

void check_class_params(double beta, int r, double p, int d, SmoothKind kind) {
    if (d < 1) throw parameter_error("dimension must be >= 1");
    switch (kind) {
        case SmoothKind::holder:
            if (!(beta > 0.0 && beta <= 1.0)) throw parameter_error("beta must be in (0,1]");
            break;
        case SmoothKind::sobolev_iso:
            if (r < 1) throw parameter_error("r must be >= 1");
            if (!(p >= 1.0)) throw parameter_error("p must be >= 1");
            break;
        case SmoothKind::lp:
            if (!(p >= 1.0)) throw parameter_error("p must be >= 1");
            break;
    }
}

// dense polynomial in one variable, coefficient of x^i at c[i]
struct Poly {
    std::vector<double> c;

    double operator()(double x) const {
        double v = 0.0;
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly{{0.0}};
        Poly d;
        d.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * static_cast<double>(i);
        return d;
    }
};

// (x(1-x))^r = sum_j C(r,j) (-1)^j x^(r+j)
Poly bump_poly(int r) {
    Poly q;
    q.c.assign(2 * static_cast<size_t>(r) + 1, 0.0);
    double binom = 1.0;
    for (int j = 0; j <= r; ++j) {
        q.c[static_cast<size_t>(r + j)] = (j % 2 == 0 ? binom : -binom);
        binom = binom * (r - j) / (j + 1);
    }
    return q;
}

constexpr int kNormGridPanels = 4096;

// L_p[0,1] norm of a polynomial: grid max for p = inf, composite Simpson of
// |q|^p otherwise. Only used to certify norm bounds, with 10% inflation.
double poly_lp_norm(const Poly& q, double p) {
    if (is_inf(p)) {
        double mx = 0.0;
        for (int i = 0; i <= kNormGridPanels; ++i) {
            mx = std::max(mx, std::abs(q(static_cast<double>(i) / kNormGridPanels)));
        }
        return mx;
    }
    const double h = 1.0 / kNormGridPanels;
    double acc = std::pow(std::abs(q(0.0)), p) + std::pow(std::abs(q(1.0)), p);
    for (int i = 1; i < kNormGridPanels; ++i) {
        const double w = (i % 2 == 1) ? 4.0 : 2.0;
        acc += w * std::pow(std::abs(q(i * h)), p);
    }
    return std::pow(acc * h / 3.0, 1.0 / p);
}

// W_p^r norm of the tensor product prod_j q(x_j) from the per-axis derivative
// norms nu[s] = ||q^(s)||_p, summing over all multi-indices |alpha|_1 <= r.
double tensor_wpr_norm(const std::vector<double>& nu, int r, int d, double p) {
    double acc = 0.0;  // sum of products for finite p, max for p = inf
    const bool pinf = is_inf(p);
    std::vector<int> alpha(static_cast<size_t>(d), 0);
    auto recurse = [&](auto&& self, int axis, int budget, double partial) -> void {
        if (axis == d) {
            if (pinf) {
                acc = std::max(acc, partial);
            } else {
                acc += partial;
            }
            return;
        }
        for (int s = 0; s <= budget; ++s) {
            const double factor = pinf ? nu[static_cast<size_t>(s)]
                                       : std::pow(nu[static_cast<size_t>(s)], p);
            self(self, axis + 1, budget - s, partial * factor);
        }
    };
    recurse(recurse, 0, r, 1.0);
    return pinf ? acc : std::pow(acc, 1.0 / p);
}

uint64_t checked_pow_u64(uint64_t base, int exp) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw parameter_error("cell count overflows");
        r *= base;
    }
    return r;
}

}  // namespace

double SmoothnessClass::q() const {
    if (kind == SmoothKind::holder) return 2.0;
    return std::min(p, 2.0);
}

SmoothnessClass SmoothnessClass::holder(double beta, int d) {
    check_class_params(beta, 0, 0, d, SmoothKind::holder);
    SmoothnessClass c{SmoothKind::holder, d};
    c.beta = beta;
    return c;
}

SmoothnessClass SmoothnessClass::sobolev(int r, double p, int d) {
    check_class_params(0, r, p, d, SmoothKind::sobolev_iso);
    SmoothnessClass c{SmoothKind::sobolev_iso, d};
    c.r = r;
    c.p = p;
    return c;
}

SmoothnessClass SmoothnessClass::lp(double p, int d) {
    check_class_params(0, 0, p, d, SmoothKind::lp);
    SmoothnessClass c{SmoothKind::lp, d};
    c.p = p;
    return c;
}

TestFunction make_holder_bump(double beta, int d) {
    check_class_params(beta, 0, 0, d, SmoothKind::holder);
    const double c = (1.0 / d) * std::pow(2.0, beta * (d - 1));
    const double per_axis_integral = std::pow(0.5, beta) / (beta + 1.0);

    TestFunction f;
    f.dim = d;
    f.cls = SmoothnessClass::holder(beta, d);
    f.exact_integral = c * std::pow(per_axis_integral, d);
    f.norm_bound = 1.0;
    f.support_note = "product hat on [0,1]^d";
    f.eval = [c, beta, d](std::span<const double> x) -> double {
        double v = c;
        for (int j = 0; j < d; ++j) {
            const double t = std::min(x[static_cast<size_t>(j)], 1.0 - x[static_cast<size_t>(j)]);
            if (t <= 0.0) return 0.0;
            v *= (beta == 1.0) ? t : std::pow(t, beta);
        }
        return v;
    };
    return f;
}

TestFunction make_sobolev_poly_bump(int r, double p, int d) {
    check_class_params(0, r, p, d, SmoothKind::sobolev_iso);

    const Poly base = bump_poly(r);
    std::vector<double> nu;
    nu.reserve(static_cast<size_t>(r) + 1);
    Poly q = base;
    for (int s = 0; s <= r; ++s) {
        nu.push_back(poly_lp_norm(q, p));
        q = q.derivative();
    }
    const double raw_norm = tensor_wpr_norm(nu, r, d, p);
    const double c = 1.0 / (1.1 * raw_norm);  // 10% certification margin

    // per-axis integral of x^r (1-x)^r is the Beta value r!^2 / (2r+1)!
    double beta_val = 1.0;
    for (int i = 1; i <= r; ++i) beta_val *= i;
    for (int i = r + 1; i <= 2 * r + 1; ++i) beta_val /= i;

    TestFunction f;
    f.dim = d;
    f.cls = SmoothnessClass::sobolev(r, p, d);
    f.exact_integral = c * std::pow(beta_val, d);
    f.norm_bound = 1.0;
    f.support_note = "polynomial bump (x(1-x))^r on [0,1]^d";
    auto shared = std::make_shared<const Poly>(base);
    f.eval = [shared, c, d](std::span<const double> x) -> double {
        double v = c;
        for (int j = 0; j < d; ++j) {
            const double t = x[static_cast<size_t>(j)];
            if (t < 0.0 || t > 1.0) return 0.0;
            v *= (*shared)(t);
        }
        return v;
    };
    return f;
}

double fooling_scale(const SmoothnessClass& cls, uint64_t m, uint64_t M) {
    if (m < 1 || M < 1) throw parameter_error("fooling grid needs m >= 1, M >= 1");
    const double md = std::pow(static_cast<double>(m), cls.dimension);
    switch (cls.kind) {
        case SmoothKind::holder:
            return 0.5 * std::pow(static_cast<double>(m), -cls.beta);
        case SmoothKind::sobolev_iso:
        case SmoothKind::lp: {
            const int r = cls.kind == SmoothKind::lp ? 0 : cls.r;
            const double base = std::pow(static_cast<double>(m), -static_cast<double>(r));
            if (cls.p >= 2.0) return base;
            return base * std::pow(md / static_cast<double>(M), 1.0 / cls.p);
        }
    }
    throw parameter_error("unknown smoothness kind");
}

TestFunction make_fooling_sum(const TestFunction& bump, const FoolingSpec& spec,
                              const SmoothnessClass& cls) {
    const int d = cls.dimension;
    if (bump.dim != d) throw parameter_error("bump dimension does not match class");
    if (bump.norm_bound > 1.0) throw parameter_error("bump must be a unit-ball member");
    if (bump.cls.kind != cls.kind) throw parameter_error("bump class kind does not match");
    if (spec.m < 1) throw parameter_error("m must be >= 1");
    if (d > 8) throw parameter_error("fooling sums support d <= 8");

    const uint64_t n_cells = checked_pow_u64(spec.m, d);
    const uint64_t M = spec.cells.size();
    if (M < 1 || M > n_cells) throw parameter_error("need 1 <= |I| <= m^d");

    const double want = fooling_scale(cls, spec.m, M);
    if (!(std::abs(spec.scale - want) <= 1e-12 * want)) {
        throw parameter_error("scale inconsistent with the declared class");
    }

    auto signs = std::make_shared<std::unordered_map<uint64_t, int>>();
    signs->reserve(M);
    long long sign_sum = 0;
    for (const auto& cell : spec.cells) {
        if (cell.index.size() != static_cast<size_t>(d)) {
            throw parameter_error("cell index has wrong dimension");
        }
        uint64_t linear = 0;
        for (uint32_t ix : cell.index) {
            if (ix >= spec.m) throw parameter_error("cell index out of range");
            linear = linear * spec.m + ix;
        }
        if (cell.sign != 1 && cell.sign != -1) throw parameter_error("sign must be +-1");
        if (!signs->emplace(linear, cell.sign).second) {
            throw parameter_error("duplicate cell index");
        }
        sign_sum += cell.sign;
    }

    const double m_real = static_cast<double>(spec.m);
    const double gamma0 = bump.exact_integral;
    const double scale = spec.scale;

    TestFunction f;
    f.dim = d;
    f.cls = cls;
    f.exact_integral =
        scale * std::pow(m_real, -d) * gamma0 * static_cast<double>(sign_sum);
    f.norm_bound = 1.0;
    f.support_note = std::to_string(M) + " signed bumps on an m^d cell grid, m=" +
                     std::to_string(spec.m);
    auto base_eval = bump.eval;
    const uint64_t m_cells = spec.m;
    f.eval = [base_eval, signs, scale, m_real, m_cells, d](std::span<const double> x) -> double {
        uint64_t linear = 0;
        double local[8];
        for (int j = 0; j < d; ++j) {
            const double t = x[static_cast<size_t>(j)];
            if (t < 0.0 || t >= 1.0) return 0.0;  // half-open cells tile [0,1)^d
            const auto cell = static_cast<uint64_t>(t * m_real);
            const uint64_t ix = std::min<uint64_t>(cell, m_cells - 1);
            linear = linear * m_cells + ix;
            local[j] = t * m_real - static_cast<double>(ix);
        }
        const auto it = signs->find(linear);
        if (it == signs->end()) return 0.0;
        return it->second * scale *
               base_eval(std::span<const double>(local, static_cast<size_t>(d)));
    };
    return f;
}

double fooling_per_bump_integral(const TestFunction& bump, const FoolingSpec& spec) {
    return spec.scale * std::pow(static_cast<double>(spec.m), -bump.dim) * bump.exact_integral;
}

TestFunction make_frolov_counterexample(uint64_t n, int r) {
    if (n < 1) throw parameter_error("n must be >= 1");
    if (r < 1) throw parameter_error("r must be >= 1");

    const TestFunction base = make_sobolev_poly_bump(r, 2.0, 1);
    const double gamma0 = base.exact_integral;
    const double amp = std::pow(2.0 * static_cast<double>(n), -r);

    TestFunction f;
    f.dim = 1;
    f.cls = SmoothnessClass::sobolev(r, 2.0, 1);
    f.exact_integral = gamma0 * std::pow(2.0, -(r + 1)) * std::pow(static_cast<double>(n), -r);
    f.norm_bound = base.norm_bound / std::sqrt(2.0);
    f.support_note = "n bumps of width 1/(2n) at the points k/n";
    auto base_eval = base.eval;
    const double two_n = 2.0 * static_cast<double>(n);
    f.eval = [base_eval, amp, two_n, n](std::span<const double> x) -> double {
        const double t = x[0] * two_n;
        if (t < 0.0) return 0.0;
        const auto k = static_cast<uint64_t>(t / 2.0);
        if (k >= n) return 0.0;
        const double u = t - 2.0 * static_cast<double>(k);
        return amp * base_eval(std::span<const double>(&u, 1));
    };
    return f;
}

TestFunction make_constant(double c, int d) {
    if (d < 1) throw parameter_error("dimension must be >= 1");
    TestFunction f;
    f.dim = d;
    f.cls = SmoothnessClass::lp(std::numeric_limits<double>::infinity(), d);
    f.exact_integral = c;
    f.norm_bound = std::abs(c);
    f.support_note = "constant on the cube";
    f.eval = [c](std::span<const double>) { return c; };
    return f;
}

}  // namespace mcconf
