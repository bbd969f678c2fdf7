#include "mcconf/clopper_pearson.hpp"

#include <cmath>

#include "mcconf/errors.hpp"

namespace mcconf {

namespace {

// Continued fraction for the regularized incomplete beta, modified Lentz.
double beta_cont_frac(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

// I_x(a, b)
double reg_inc_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cont_frac(a, b, x) / a;
    return 1.0 - front * beta_cont_frac(b, a, 1.0 - x) / b;
}

// Smallest x with I_x(a, b) >= target, by bisection.
double inv_reg_inc_beta(double a, double b, double target) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (reg_inc_beta(a, b, mid) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ClopperPearsonInterval clopper_pearson(uint64_t successes, uint64_t trials, double confidence) {
    if (trials < 1) throw parameter_error("trials must be >= 1");
    if (successes > trials) throw parameter_error("successes must not exceed trials");
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw parameter_error("confidence must be in (0,1)");
    }
    const double alpha = 1.0 - confidence;
    const auto f = static_cast<double>(successes);
    const auto t = static_cast<double>(trials);
    ClopperPearsonInterval ci{0.0, 1.0};
    if (successes > 0) ci.low = inv_reg_inc_beta(f, t - f + 1.0, alpha / 2.0);
    if (successes < trials) ci.high = inv_reg_inc_beta(f + 1.0, t - f, 1.0 - alpha / 2.0);
    return ci;
}

}  // namespace mcconf
