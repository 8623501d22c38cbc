// Benchmark: OpenMP kernels vs their serial reference implementations.

#include <chrono>
#include <cstdio>

#if defined(QCLIQUE_HAVE_OPENMP)
#include <omp.h>
#endif

#include "qclique/experiment.hpp"
#include "qclique/flatness.hpp"

using namespace qclique;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_of(F&& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
#if defined(QCLIQUE_HAVE_OPENMP)
    std::printf("openmp enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled; parallel kernels run serially\n");
#endif

    {
        double frac_par = 0.0, frac_ser = 0.0;
        double par = time_of([&] { frac_par = sample_flat_fraction(120, RationalDensity(1, 2), 60, Seed{1}); });
        double ser = time_of([&] { frac_ser = sample_flat_fraction_serial(120, RationalDensity(1, 2), 60, Seed{1}); });
        std::printf("flat-sampling k=120 x60     parallel %.3fs   serial %.3fs   speedup %.2fx   equal=%d\n",
                    par, ser, ser / par, frac_par == frac_ser);
    }

    {
        ExperimentConfig cfg;
        cfg.n = 40;
        cfg.p = 0.2;
        cfg.gammas = {RationalDensity(1, 2), RationalDensity(3, 5)};
        cfg.instances = 20;
        cfg.master_seed = Seed{2};
        ExperimentReport rep_par, rep_ser;
        double par = time_of([&] { rep_par = run_experiment(cfg); });
        double ser = time_of([&] { rep_ser = run_experiment_serial(cfg); });
        bool equal = rep_par.rows.size() == rep_ser.rows.size();
        for (std::size_t i = 0; equal && i < rep_par.rows.size(); ++i)
            equal = rep_par.rows[i].omega_avg == rep_ser.rows[i].omega_avg &&
                    rep_par.rows[i].omega_min == rep_ser.rows[i].omega_min &&
                    rep_par.rows[i].omega_max == rep_ser.rows[i].omega_max;
        std::printf("experiment n=40 2x20        parallel %.3fs   serial %.3fs   speedup %.2fx   equal=%d\n",
                    par, ser, ser / par, equal);
    }

    return 0;
}
