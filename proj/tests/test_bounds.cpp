#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mcconf/bignum.hpp"
#include "mcconf/bounds.hpp"
#include "mcconf/errors.hpp"

using namespace mcconf;

TEST_CASE("BigUint arithmetic basics") {
    BigUint a(0xffffffffffffffffull);
    BigUint b(1);
    auto c = a + b;
    CHECK(c.to_decimal() == "18446744073709551616");  // 2^64
    c -= b;
    CHECK(c == a);
    CHECK(BigUint::power_of_two(100).bit_length() == 101);
    CHECK(BigUint(0).is_zero());
    CHECK(BigUint(10).compare(BigUint(11)) < 0);

    BigUint d(123456789);
    d.mul_u64(1000000007);
    CHECK(d.to_decimal() == "123456789864197523");
    CHECK(d.divmod_u64(1000000007) == 0);
    CHECK(d.to_decimal() == "123456789");
}

TEST_CASE("binomial rows are exact") {
    auto row = binomial_row(300);
    CHECK(row[0].to_decimal() == "1");
    CHECK(row[300].to_decimal() == "1");
    // symmetry and total mass 2^300
    BigUint total;
    for (size_t j = 0; j < row.size(); ++j) {
        CHECK(row[j] == row[300 - j]);
        total += row[j];
    }
    CHECK(total == BigUint::power_of_two(300));
    CHECK(binomial_row(9)[3].to_decimal() == "84");
}

TEST_CASE("ExactProb compares exactly against doubles") {
    ExactProb half{BigUint(1), 1};
    CHECK(compare(half, 0.5) == 0);
    CHECK(compare(half, std::nextafter(0.5, 0.0)) > 0);
    CHECK(compare(half, std::nextafter(0.5, 1.0)) < 0);
    CHECK(compare(half, 0.0) > 0);
    ExactProb zero{BigUint(0), 4};
    CHECK(compare(zero, 0.0) == 0);
    CHECK(half.to_string() == "1/2^1");
    CHECK(half.to_double() == 0.5);
}

TEST_CASE("hoeffding failure bound") {
    std::vector<double> one{1.0};
    CHECK(hoeffding_failure_bound(1, 0.0, one) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(hoeffding_failure_bound(1, 1.0, one) ==
          doctest::Approx(0.2706705664732254).epsilon(1e-14));

    // doubling all spreads is the same as halving epsilon
    std::vector<double> b{0.5, 1.0, 0.25}, b2{1.0, 2.0, 0.5};
    for (double eps : {0.01, 0.1, 0.5}) {
        CHECK(hoeffding_failure_bound(3, eps, b2) ==
              doctest::Approx(hoeffding_failure_bound(3, eps / 2, b)).epsilon(1e-13));
    }

    std::vector<double> empty;
    CHECK_THROWS_AS(hoeffding_failure_bound(1, 0.1, empty), parameter_error);
    std::vector<double> neg{-1.0};
    CHECK_THROWS_AS(hoeffding_failure_bound(1, 0.1, neg), parameter_error);
}

TEST_CASE("stratified holder guarantee formula") {
    const double delta_e = 2.0 / std::exp(1.0);  // log(2/delta) = 1
    auto g = strat_holder_epsilon(1, 1, 1.0, delta_e);
    CHECK(g.epsilon == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(g.n == 1);

    auto h = strat_holder_epsilon(100, 1, 1.0, 0.01);
    CHECK(h.epsilon == doctest::Approx(0.0016276236307187291).epsilon(1e-13));
    CHECK(h.n == 100);

    // m -> 2m at beta=1, d=1 divides epsilon by 2^{3/2}
    auto a = strat_holder_epsilon(64, 1, 1.0, 0.05);
    auto b = strat_holder_epsilon(128, 1, 1.0, 0.05);
    CHECK(a.epsilon / b.epsilon == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-13));

    auto two_d = strat_holder_epsilon(10, 2, 0.5, 0.1);
    CHECK(two_d.n == 100);

    CHECK_THROWS_AS(strat_holder_epsilon(10, 1, 1.0, 0.0), parameter_error);
    CHECK_THROWS_AS(strat_holder_epsilon(10, 1, 1.0, 1.0), parameter_error);
    CHECK_THROWS_AS(strat_holder_epsilon(10, 1, 2.0, 0.1), parameter_error);
}

TEST_CASE("stratified W1p guarantee formula") {
    const double delta_e = 2.0 / std::exp(1.0);
    CHECK(strat_w1p_epsilon(1, 2.0, delta_e).epsilon ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(strat_w1p_epsilon(100, 2.0, 0.05).epsilon ==
          doctest::Approx(0.0013581015157406195).epsilon(1e-13));

    // q = 2 coincides with the holder formula at beta=1, d=1
    for (uint64_t n : {10ull, 50ull, 400ull}) {
        CHECK(strat_w1p_epsilon(n, 2.0, 0.03).epsilon ==
              doctest::Approx(strat_holder_epsilon(n, 1, 1.0, 0.03).epsilon).epsilon(1e-13));
    }

    CHECK_THROWS_AS(strat_w1p_epsilon(10, 1.0, 0.1), parameter_error);
    CHECK_THROWS_AS(strat_w1p_epsilon(10, 2.5, 0.1), parameter_error);
}

TEST_CASE("median failure bounds") {
    auto b3 = median_failure_bound(0.125, 3);
    CHECK(b3.tight == doctest::Approx(0.1446895248238448).epsilon(1e-13));
    CHECK(b3.loose == doctest::Approx(0.1767766952966369).epsilon(1e-13));
    auto b5 = median_failure_bound(0.1, 5);
    CHECK(b5.tight == doctest::Approx(0.03888).epsilon(1e-13));

    // tight < loose everywhere tested; tight decreases in k for any alpha,
    // loose only once 4 alpha < 1
    for (double alpha : {0.05, 0.125, 0.3, 0.45}) {
        double prev_tight = 1e9, prev_loose = 1e9;
        for (int k : {1, 3, 5, 7, 9, 11}) {
            auto b = median_failure_bound(alpha, k);
            CHECK(b.tight < b.loose);
            CHECK(b.tight < prev_tight);
            if (alpha < 0.25) CHECK(b.loose < prev_loose);
            prev_tight = b.tight;
            prev_loose = b.loose;
        }
    }
    // alpha -> 0 sends both to 0
    auto tiny = median_failure_bound(1e-12, 3);
    CHECK(tiny.tight < 1e-15);
    CHECK(tiny.loose < 1e-15);

    CHECK_THROWS_AS(median_failure_bound(0.5, 3), parameter_error);
    CHECK_THROWS_AS(median_failure_bound(0.1, 4), parameter_error);
}

TEST_CASE("median complexity upper bound") {
    auto n_mean = [](double eps) {
        return static_cast<uint64_t>(std::ceil(1.0 / (eps * eps)));
    };
    auto a = median_complexity_upper(0.5, 0.1, 2.0, n_mean);
    CHECK(a.n_prob == 2 * n_mean(std::pow(8.0, -0.5) * 0.1));
    CHECK(a.k == 1);

    auto b = median_complexity_upper(std::pow(2.0, -10), 0.1, 2.0, n_mean);
    CHECK(b.n_prob == 20 * n_mean(b.inner_epsilon));
    CHECK(b.k == 19);  // smallest odd >= 2 log2(2^9)

    CHECK(median_complexity_upper(0.25, 1.0, 2.0, n_mean).inner_epsilon ==
          doctest::Approx(0.35355339059327379).epsilon(1e-14));

    CHECK_THROWS_AS(median_complexity_upper(0.6, 0.1, 2.0, n_mean), parameter_error);
}

TEST_CASE("lower envelope, binary-information lemma") {
    CHECK(lower_envelope_aux1(100, 0.01, 1.0) ==
          doctest::Approx(15.904234796200615).epsilon(1e-13));
    // linear in gamma
    CHECK(lower_envelope_aux1(100, 0.01, 2.5) ==
          doctest::Approx(2.5 * 15.904234796200615).epsilon(1e-13));
    // crossover at delta = (1/3) 4^{-n}: both branches equal gamma n
    const uint64_t n = 20;
    const double delta_cross = std::pow(4.0, -static_cast<double>(n)) / 3.0;
    CHECK(lower_envelope_aux1(n, delta_cross, 1.0) ==
          doctest::Approx(static_cast<double>(n)).epsilon(1e-12));

    CHECK_THROWS_AS(lower_envelope_aux1(16, 0.01, 1.0), range_error);
    CHECK_THROWS_AS(lower_envelope_aux1(100, 0.4, 1.0), range_error);
    CHECK_THROWS_AS(lower_envelope_aux1(100, 0.01, 0.0), parameter_error);
}

TEST_CASE("lower envelope, sparse-support lemma") {
    auto a = lower_envelope_aux2(1.0, 1);
    CHECK(a.epsilon == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(a.delta_ceiling == doctest::Approx(0.25).epsilon(1e-15));

    auto b = lower_envelope_aux2(0.01, 4);
    CHECK(b.epsilon == doctest::Approx(0.02).epsilon(1e-15));
    CHECK(b.delta_ceiling == doctest::Approx(0.125).epsilon(1e-15));  // ceil(4/2)=2

    CHECK_THROWS_AS(lower_envelope_aux2(0.0, 4), parameter_error);
    CHECK_THROWS_AS(lower_envelope_aux2(1.0, 0), parameter_error);
}

TEST_CASE("rate envelope shape") {
    CHECK(rate_envelope(10000, 1e-3, 1, 1, std::numeric_limits<double>::infinity()) ==
          doctest::Approx(2.6282608848784662e-06).epsilon(1e-13));

    // p = 1 kills the delta dependence exactly
    for (uint64_t n : {2ull, 10ull, 1000ull}) {
        const double ref = rate_envelope(n, 0.5, 2, 3, 1.0);
        for (double delta : {1e-1, 1e-3, 1e-6, 1e-12}) {
            CHECK(rate_envelope(n, delta, 2, 3, 1.0) == ref);
        }
    }

    // branch boundary: delta = e^{-n} makes the second factor exactly 1
    const uint64_t n = 50;
    CHECK(rate_envelope(n, std::exp(-50.0), 1, 1, 2.0) ==
          doctest::Approx(1.0 / 50.0).epsilon(1e-12));

    // monotone: decreasing in n, increasing in log(1/delta)
    double prev = 1e100;
    for (uint64_t nn : {4ull, 16ull, 64ull, 256ull}) {
        const double v = rate_envelope(nn, 0.01, 1, 2, 2.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(rate_envelope(100, 0.001, 1, 1, 2.0) > rate_envelope(100, 0.01, 1, 1, 2.0));
}

TEST_CASE("guarantee formulas are monotone") {
    for (double delta : {0.2, 0.05, 0.001}) {
        double prev = 1e100;
        for (uint64_t m : {2ull, 8ull, 32ull, 128ull}) {
            const double eps = strat_holder_epsilon(m, 2, 0.5, delta).epsilon;
            CHECK(eps < prev);
            prev = eps;
        }
    }
    for (uint64_t n : {4ull, 64ull}) {
        CHECK(strat_w1p_epsilon(n, 1.5, 0.001).epsilon >
              strat_w1p_epsilon(n, 1.5, 0.01).epsilon);
    }
}

TEST_CASE("appendix tail lemma, first form") {
    auto a = lemma_a1_check(9, 1);
    CHECK(a.lhs.to_string() == "130/2^9");
    CHECK(a.lhs.to_double() == doctest::Approx(0.25390625).epsilon(1e-15));
    CHECK(a.rhs == doctest::Approx(0.0685104102696148).epsilon(1e-10));
    CHECK(a.holds);

    auto b = lemma_a1_check(10, 0);
    CHECK(b.lhs.to_string() == "638/2^10");
    CHECK(b.holds);

    CHECK_THROWS_AS(lemma_a1_check(9, 2), range_error);  // t > (9+3)/8
    CHECK(lemma_a1_check(13, 2).holds);                  // t = (13+3)/8 boundary
}

TEST_CASE("appendix tail lemma, second form") {
    auto eq = lemma_a2_check(5, 5);
    CHECK(eq.lhs.to_string() == "1/2^5");
    CHECK(eq.holds);  // equality case
    auto eq2 = lemma_a2_check(6, 5);
    CHECK(eq2.lhs.to_string() == "2/2^6");  // equality again
    CHECK(eq2.holds);

    auto b = lemma_a2_check(10, 2);
    CHECK(b.lhs.to_string() == "562/2^10");
    CHECK(b.holds);

    CHECK_THROWS_AS(lemma_a2_check(6, 7), parameter_error);
}

TEST_CASE("adversarial uncertainty: exact window removal") {
    auto a = bakhvalov_exact_uncertainty(4, 0.0);
    CHECK(a.to_string() == "10/2^4");  // removes only C(4,2)

    CHECK(bakhvalov_exact_uncertainty(4, 4.0).numerator.is_zero());
    CHECK(bakhvalov_exact_uncertainty(4, 17.0).numerator.is_zero());

    auto c = bakhvalov_exact_uncertainty(7, 2.5);
    CHECK(c.to_string() == "37/2^7");
}

TEST_CASE("adversarial uncertainty matches a dense center scan") {
    // brute force over a dense grid of window centers a
    auto brute = [](uint32_t k, double T) {
        auto row = binomial_row(k);
        double best_removed = -1.0;
        BigUint best;
        for (double a = -double(k) - 2.0; a <= double(k) + 2.0; a += 0.0625) {
            BigUint removed;
            for (uint32_t j = 0; j <= k; ++j) {
                const double point = 2.0 * j - static_cast<double>(k);
                if (std::abs(point - a) <= T) removed += row[j];
            }
            if (removed.to_double() > best_removed) {
                best_removed = removed.to_double();
                best = removed;
            }
        }
        BigUint total = BigUint::power_of_two(k);
        total -= best;
        return total;
    };
    for (uint32_t k : {3u, 6u, 9u, 12u}) {
        for (double T : {0.0, 0.5, 1.0, 1.5, 2.5, 3.0}) {
            auto exact = bakhvalov_exact_uncertainty(k, T);
            CHECK(exact.numerator == brute(k, T));
        }
    }
}

TEST_CASE("adversarial uncertainty dominates the exponential bound") {
    // chain at n = 17, k = 4n+6, eps/gamma = n
    const uint32_t n = 17;
    auto exact = bakhvalov_exact_uncertainty(4 * n + 6, static_cast<double>(n));
    const double rhs = (1.0 / 3.0) * std::pow(4.0, -static_cast<double>(n));
    CHECK(compare(exact, rhs) > 0);
}
