#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "mcconf/bignum.hpp"

namespace mcconf {

// Theoretical (n, epsilon, delta) triple produced by a bound formula.
struct GuaranteeSpec {
    uint64_t n = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    std::string source;
};

// Exact dyadic probability, numerator / 2^denominator_log2. No rounding.
struct ExactProb {
    BigUint numerator;
    uint32_t denominator_log2 = 0;

    double to_double() const;
    std::string to_string() const;  // "numerator/2^k"
};

// Exact three-way comparison of an ExactProb against a finite double.
int compare(const ExactProb& lhs, double rhs);

// 2 exp(-2 n^2 eps^2 / sum b_i^2) for independent summands spread on
// intervals of length b_i. May exceed 1; callers cap when interpreting as
// a probability.
double hoeffding_failure_bound(uint64_t n, double epsilon, std::span<const double> spreads);

// Stratified-sampling guarantee on the Holder class:
// eps = (1/sqrt 2) m^{-(beta+d/2)} sqrt(log(2/delta)), n = m^d.
GuaranteeSpec strat_holder_epsilon(uint64_t m, int d, double beta, double delta);

// Stratified-sampling guarantee for W^1_p on [0,1], q = min{p,2} in (1,2]:
// eps = (1/sqrt 2) n^{-(2-1/q)} sqrt(log(2/delta)).
GuaranteeSpec strat_w1p_epsilon(uint64_t n, double q, double delta);

struct MedianBounds {
    double tight;  // (1/2) (4 a (1-a))^{k/2}
    double loose;  // 2^{k-1} a^{k/2}
};
MedianBounds median_failure_bound(double alpha, int k);

struct MedianComplexity {
    uint64_t n_prob;       // ceil(2 log2(1/delta)) * n_mean(inner_epsilon)
    int k;                 // smallest odd integer >= 2 log2(1/(2 delta))
    double inner_epsilon;  // 8^{-1/ell} * epsilon
};
MedianComplexity median_complexity_upper(double delta, double epsilon, double ell,
                                         const std::function<uint64_t(double)>& n_mean);

// gamma * min{ sqrt(n) sqrt(log_4(1/(3 delta))), n }, stated for n >= 17 and
// delta in (0, 1/3).
double lower_envelope_aux1(uint64_t n, double delta, double gamma);

struct EnvelopeAux2 {
    double epsilon;        // gamma M / 2
    double delta_ceiling;  // (1/2) 2^{-ceil(M/2)}
};
EnvelopeAux2 lower_envelope_aux2(double gamma, uint64_t M);

// Shape of the optimal error rate, no constant claimed:
// n^{-r/d} min{1, (log(1/delta)/n)^{1-1/q}}, q = min{p,2}.
double rate_envelope(uint64_t n, double delta, int r, int d, double p);

struct LemmaA1Result {
    ExactProb lhs;
    double rhs;
    bool holds;
};
// Binomial tail inequality: 2^{-k} sum_{j<=floor(k/2)-t} C(k,j) against
// (2+4/sqrt(pi))^{-1} exp(-16 log2 t^2/k) (odd k; (t-1/2)^2 for even k).
// The right side is rounded up so holds=true is a sound certificate.
LemmaA1Result lemma_a1_check(uint32_t k, uint32_t t);

struct LemmaA2Result {
    ExactProb lhs;
    bool holds;
};
// Two-sided binomial tail sum with a k'-wide central gap, compared exactly
// against 2^{-k'}.
LemmaA2Result lemma_a2_check(uint32_t k, uint32_t k_prime);

// Exact inf over window centers of P{ |X_k - a| > eps/gamma } for X_k a sum
// of k Rademacher variables: removes the best window of floor(eps/gamma)+1
// consecutive binomial terms, searched exhaustively over all offsets.
ExactProb bakhvalov_exact_uncertainty(uint32_t k, double eps_over_gamma);

}  // namespace mcconf
