#include "mcconf/bounds.hpp"

#include <cmath>
#include <limits>

#include "mcconf/errors.hpp"

namespace mcconf {

namespace {

// Upward rounding margin covering libm error in exp/sqrt/div (a few ulp).
double round_up(double v) { return v * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()); }

std::vector<BigUint> prefix_sums(const std::vector<BigUint>& row) {
    std::vector<BigUint> pre;
    pre.reserve(row.size() + 1);
    pre.emplace_back();
    for (const auto& b : row) pre.push_back(pre.back() + b);
    return pre;
}

}  // namespace

double ExactProb::to_double() const {
    return std::ldexp(numerator.to_double(), -static_cast<int>(denominator_log2));
}

std::string ExactProb::to_string() const {
    return numerator.to_decimal() + "/2^" + std::to_string(denominator_log2);
}

int compare(const ExactProb& lhs, double rhs) {
    if (std::isnan(rhs)) throw parameter_error("cannot compare against NaN");
    if (rhs < 0.0) return 1;
    if (rhs == 0.0) return lhs.numerator.is_zero() ? 0 : 1;
    if (std::isinf(rhs)) return -1;
    int e = 0;
    const double mant = std::frexp(rhs, &e);          // rhs = mant * 2^e
    const auto m53 = static_cast<uint64_t>(std::ldexp(mant, 53));  // exact 53-bit integer
    // lhs = num * 2^{-k} vs rhs = m53 * 2^{e-53}:  num  vs  m53 * 2^{e-53+k}
    const int64_t shift = static_cast<int64_t>(e) - 53 + lhs.denominator_log2;
    BigUint r(m53);
    if (shift >= 0) {
        r.shl_bits(static_cast<uint32_t>(shift));
        return lhs.numerator.compare(r);
    }
    BigUint l = lhs.numerator;
    l.shl_bits(static_cast<uint32_t>(-shift));
    return l.compare(r);
}

double hoeffding_failure_bound(uint64_t n, double epsilon, std::span<const double> spreads) {
    if (n < 1 || spreads.empty()) throw parameter_error("need n >= 1 spreads");
    if (n != spreads.size()) throw parameter_error("n must match the number of spreads");
    if (!(epsilon >= 0.0)) throw parameter_error("epsilon must be >= 0");
    double sum_sq = 0.0;
    for (double b : spreads) {
        if (!(b > 0.0)) throw parameter_error("spreads must be positive");
        sum_sq += b * b;
    }
    const double nn = static_cast<double>(n);
    return 2.0 * std::exp(-2.0 * nn * nn * epsilon * epsilon / sum_sq);
}

GuaranteeSpec strat_holder_epsilon(uint64_t m, int d, double beta, double delta) {
    if (m < 1 || d < 1) throw parameter_error("need m >= 1, d >= 1");
    if (!(beta > 0.0 && beta <= 1.0)) throw parameter_error("beta must be in (0,1]");
    if (!(delta > 0.0 && delta < 1.0)) throw parameter_error("delta must be in (0,1)");
    uint64_t n = 1;
    for (int j = 0; j < d; ++j) {
        if (n > UINT64_MAX / m) throw parameter_error("m^d overflows");
        n *= m;
    }
    const double eps = (1.0 / std::sqrt(2.0)) *
                       std::pow(static_cast<double>(m), -(beta + 0.5 * d)) *
                       std::sqrt(std::log(2.0 / delta));
    return {n, eps, delta, "stratified-holder"};
}

GuaranteeSpec strat_w1p_epsilon(uint64_t n, double q, double delta) {
    if (n < 1) throw parameter_error("need n >= 1");
    if (!(q > 1.0 && q <= 2.0)) throw parameter_error("q must be in (1,2]");
    if (!(delta > 0.0 && delta < 1.0)) throw parameter_error("delta must be in (0,1)");
    const double eps = (1.0 / std::sqrt(2.0)) *
                       std::pow(static_cast<double>(n), -(2.0 - 1.0 / q)) *
                       std::sqrt(std::log(2.0 / delta));
    return {n, eps, delta, "stratified-w1p-d1"};
}

MedianBounds median_failure_bound(double alpha, int k) {
    if (!(alpha > 0.0 && alpha < 0.5)) throw parameter_error("alpha must be in (0,1/2)");
    if (k < 1 || k % 2 == 0) throw parameter_error("k must be odd and >= 1");
    const double half_k = 0.5 * k;
    const double tight = 0.5 * std::pow(4.0 * alpha * (1.0 - alpha), half_k);
    const double loose = std::pow(2.0, k - 1) * std::pow(alpha, half_k);
    return {tight, loose};
}

MedianComplexity median_complexity_upper(double delta, double epsilon, double ell,
                                         const std::function<uint64_t(double)>& n_mean) {
    if (!(delta > 0.0 && delta <= 0.5)) throw parameter_error("delta must be in (0,1/2]");
    if (!(epsilon > 0.0)) throw parameter_error("epsilon must be > 0");
    if (!(ell >= 1.0)) throw parameter_error("ell must be >= 1");
    const double log2_inv_delta = std::log2(1.0 / delta);
    const auto factor = static_cast<uint64_t>(std::ceil(2.0 * log2_inv_delta));
    const double k_min = 2.0 * std::log2(1.0 / (2.0 * delta));
    int k = std::max<int>(1, static_cast<int>(std::ceil(k_min)));
    if (k % 2 == 0) ++k;
    const double inner_eps = std::pow(8.0, -1.0 / ell) * epsilon;
    return {factor * n_mean(inner_eps), k, inner_eps};
}

double lower_envelope_aux1(uint64_t n, double delta, double gamma) {
    if (n < 17) throw range_error("the bound is stated for n >= 17");
    if (!(delta > 0.0 && delta < 1.0 / 3.0)) throw range_error("delta must be in (0,1/3)");
    if (!(gamma > 0.0)) throw parameter_error("gamma must be > 0");
    const double nn = static_cast<double>(n);
    const double log4 = std::log(1.0 / (3.0 * delta)) / std::log(4.0);
    return gamma * std::min(std::sqrt(nn) * std::sqrt(log4), nn);
}

EnvelopeAux2 lower_envelope_aux2(double gamma, uint64_t M) {
    if (!(gamma > 0.0)) throw parameter_error("gamma must be > 0");
    if (M < 1) throw parameter_error("M must be >= 1");
    const double eps = 0.5 * gamma * static_cast<double>(M);
    const double ceiling = 0.5 * std::pow(2.0, -std::ceil(0.5 * static_cast<double>(M)));
    return {eps, ceiling};
}

double rate_envelope(uint64_t n, double delta, int r, int d, double p) {
    if (n < 2) throw parameter_error("need n >= 2");
    if (!(delta > 0.0 && delta < 1.0)) throw parameter_error("delta must be in (0,1)");
    if (r < 0 || d < 1 || !(p >= 1.0)) throw parameter_error("need r >= 0, d >= 1, p >= 1");
    const double q = std::min(p, 2.0);
    const double nn = static_cast<double>(n);
    const double main = std::pow(nn, -static_cast<double>(r) / d);
    const double expo = 1.0 - 1.0 / q;
    const double gain = std::pow(std::log(1.0 / delta) / nn, expo);
    return main * std::min(1.0, gain);
}

LemmaA1Result lemma_a1_check(uint32_t k, uint32_t t) {
    if (k < 1) throw parameter_error("k must be >= 1");
    const bool odd = (k % 2 == 1);
    if (odd ? (8 * t > k + 3) : (8 * t > k + 6)) {
        throw range_error("t outside the stated range");
    }
    const auto row = binomial_row(k);
    const uint32_t upto = k / 2 - t;  // floor(k/2) - t, nonnegative in range
    BigUint num;
    for (uint32_t j = 0; j <= upto; ++j) num += row[j];
    ExactProb lhs{std::move(num), k};

    const double centered = odd ? static_cast<double>(t) : (static_cast<double>(t) - 0.5);
    const double rhs_raw = (1.0 / (2.0 + 4.0 / std::sqrt(M_PI))) *
                           std::exp(-16.0 * std::log(2.0) * centered * centered / k);
    const double rhs = round_up(rhs_raw);
    const bool holds = compare(lhs, rhs) >= 0;
    return {std::move(lhs), rhs, holds};
}

LemmaA2Result lemma_a2_check(uint32_t k, uint32_t k_prime) {
    if (k < k_prime) throw parameter_error("requires k >= k'");
    const auto row = binomial_row(k);
    const uint32_t lo_upto = (k - k_prime) / 2;            // floor
    const uint32_t hi_from = (k + k_prime + 1 + 1) / 2;    // ceil((k+k'+1)/2)
    BigUint num;
    for (uint32_t j = 0; j <= lo_upto; ++j) num += row[j];
    for (uint32_t j = hi_from; j <= k; ++j) num += row[j];
    // lhs >= 2^{-k'}  <=>  num >= 2^{k-k'}
    const bool holds = num.compare(BigUint::power_of_two(k - k_prime)) >= 0;
    return {ExactProb{std::move(num), k}, holds};
}

ExactProb bakhvalov_exact_uncertainty(uint32_t k, double eps_over_gamma) {
    if (k < 1) throw parameter_error("k must be >= 1");
    if (!(eps_over_gamma >= 0.0)) throw parameter_error("eps/gamma must be >= 0");
    // X_k lives on the lattice {2j - k : j = 0..k} with spacing 2; a window
    // [a-T, a+T] covers at most floor(T)+1 consecutive lattice points.
    const double width = std::floor(eps_over_gamma) + 1.0;
    if (width > static_cast<double>(k)) {
        return {BigUint(), k};  // every term can be removed: probability 0
    }
    const auto w = static_cast<uint32_t>(width);
    const auto row = binomial_row(k);
    const auto pre = prefix_sums(row);
    BigUint best;  // max over all contiguous windows of w terms
    for (uint32_t j = 0; j + w <= k + 1; ++j) {
        BigUint window = pre[j + w] - pre[j];
        if (window > best) best = std::move(window);
    }
    BigUint total = BigUint::power_of_two(k);
    total -= best;
    return {std::move(total), k};
}

}  // namespace mcconf
