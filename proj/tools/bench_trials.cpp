// Benchmark: serial reference kernels vs the OpenMP trial kernels on a
// representative failure-probability workload, verifying identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcconf/bounds.hpp"
#include "mcconf/harness.hpp"

using namespace mcconf;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    uint64_t trials = 20000;
    uint64_t m = 256;
    if (argc > 1) trials = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) m = std::strtoull(argv[2], nullptr, 10);

    TrialPlan plan;
    plan.estimator = EstimatorKind::strat(m);
    plan.fn = make_holder_bump(1.0, 1);
    plan.epsilon = strat_holder_epsilon(m, 1, 1.0, 0.05).epsilon;
    plan.trials = trials;
    plan.master_seed = 123456789;

    std::printf("workload: stratified(m=%llu) on the holder bump, %llu trials\n",
                (unsigned long long)m, (unsigned long long)trials);

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = empirical_failure_serial(plan);
    const double t_serial = seconds_since(t0);
    std::printf("serial   : %8.3f s   failures=%llu rate=%.5f\n", t_serial,
                (unsigned long long)serial.failures, serial.rate);

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    bool identical = true;
    for (int threads = 1; threads <= max_threads; threads *= 2) {
        t0 = std::chrono::steady_clock::now();
        const auto par = empirical_failure(plan, threads);
        const double t_par = seconds_since(t0);
        identical = identical && par.failures == serial.failures &&
                    par.rate == serial.rate && par.ci_low == serial.ci_low &&
                    par.ci_high == serial.ci_high;
        std::printf("threads=%d: %8.3f s   speedup=%.2fx   identical=%s\n", threads, t_par,
                    t_serial / t_par, identical ? "yes" : "NO");
    }

    t0 = std::chrono::steady_clock::now();
    const auto es = error_samples_serial(plan);
    const double t_es = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto ep = error_samples(plan, 0);
    const double t_ep = seconds_since(t0);
    bool same = es.size() == ep.size();
    for (size_t i = 0; same && i < es.size(); ++i) same = es[i] == ep[i];
    std::printf("error_samples: serial %.3f s, parallel %.3f s (%.2fx), identical=%s\n", t_es,
                t_ep, t_es / t_ep, same ? "yes" : "NO");

    if (!identical || !same) {
        std::printf("MISMATCH between serial and parallel kernels\n");
        return 1;
    }
    return 0;
}
