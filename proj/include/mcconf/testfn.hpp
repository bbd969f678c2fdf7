#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace mcconf {

enum class SmoothKind { holder, sobolev_iso, lp };

// Smoothness descriptor of an input class on [0,1]^d.
struct SmoothnessClass {
    SmoothKind kind;
    int dimension;
    double beta = 0.0;  // holder: exponent in (0,1]
    int r = 0;          // sobolev_iso: derivative order >= 1
    double p = std::numeric_limits<double>::infinity();  // integrability, inf allowed

    // q := min{p, 2}; equals 2 whenever p >= 2 (holder counts as p = inf).
    double q() const;

    static SmoothnessClass holder(double beta, int d);
    static SmoothnessClass sobolev(int r, double p, int d);
    static SmoothnessClass lp(double p, int d);
};

// Evaluable function on [0,1]^d with known exact integral and a certified
// upper bound on its class (semi)norm. Immutable after construction;
// evaluation is side-effect-free and safe to call from concurrent workers.
struct TestFunction {
    int dim = 1;
    std::function<double(std::span<const double>)> eval;
    double exact_integral = 0.0;
    SmoothnessClass cls{SmoothKind::lp, 1};
    double norm_bound = 1.0;
    std::string support_note;

    double operator()(std::span<const double> x) const { return eval(x); }
    double operator()(double x) const { return eval(std::span<const double>(&x, 1)); }
};

// One signed bump cell of a fooling ensemble.
struct FoolingCell {
    std::vector<uint32_t> index;  // cell index in [m]^d
    int sign;                     // +1 or -1
};

// Placement plan for a sum of sign-weighted bumps on an m^d grid of cells.
struct FoolingSpec {
    uint64_t m = 1;
    std::vector<FoolingCell> cells;
    double scale = 0.0;
};

// Scale the construction requires for `cls` on an m-per-axis grid with M
// occupied cells: m^{-r} for p >= 2, m^{-r} (N/M)^{1/p} for 1 <= p < 2
// (N = m^d), and (1/2) m^{-beta} for Holder classes.
double fooling_scale(const SmoothnessClass& cls, uint64_t m, uint64_t M);

// f(x) = c prod_j min(x_j, 1-x_j)^beta with c = (1/d) 2^{beta(d-1)}, so the
// Holder seminorm (sup-norm metric) is at most 1.
TestFunction make_holder_bump(double beta, int d);

// phi(x) = c prod_j (x_j (1-x_j))^r, scaled so the certified W_p^r norm
// bound is at most 1. exact_integral = c ((r!)^2/(2r+1)!)^d > 0.
TestFunction make_sobolev_poly_bump(int r, double p, int d);

// Sum of sign-weighted copies of `bump` scaled into the cells of `spec`.
// The scale must match fooling_scale(cls, m, M) for the declared class.
TestFunction make_fooling_sum(const TestFunction& bump, const FoolingSpec& spec,
                              const SmoothnessClass& cls);

// Integral contributed by one positive cell: scale * m^{-d} * gamma0.
double fooling_per_bump_integral(const TestFunction& bump, const FoolingSpec& spec);

// f_n(x) = (2n)^{-r} sum_{k<n} phi(2n x - 2k) with phi the d=1 polynomial
// bump; vanishes on every interval [(2k+1)/(2n), (k+1)/n].
TestFunction make_frolov_counterexample(uint64_t n, int r);

// Degenerate constant function, handy for exactness tests.
TestFunction make_constant(double c, int d);

}  // namespace mcconf
