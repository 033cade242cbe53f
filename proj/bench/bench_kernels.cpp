// Timing comparison of the serial reference kernels against the OpenMP
// paths: tridiagonal eigensolve (per-index bisection + inverse iteration)
// and bulk eigenfunction sampling.  Also asserts the two paths agree bitwise.

#include <chrono>
#include <cstdio>
#include <vector>

#include "singwell/analysis.hpp"
#include "singwell/oracle.hpp"
#include "singwell/spectra.hpp"
#include "singwell/tridiag.hpp"

using namespace singwell;

namespace {

template <typename F>
double time_of(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

int main() {
    std::printf("%-34s %10s %10s %8s %6s\n", "kernel", "serial[s]", "openmp[s]", "speedup",
                "equal");

    // eigensolver on the hydrogen discretization
    for (int n : {20000, 100000}) {
        const auto pot = analysis::PotentialSpec::coulomb(-10.0);
        oracle::GridConfig cfg = oracle::suggest_grid(-10.0, 0.0, 8);
        cfg.num_points = n;
        cfg.num_eigenvalues = 8;

        oracle::GridSpectrum serial, parallel;
        const double ts = time_of([&] { serial = oracle::solve_grid(pot, cfg, Exec::serial); });
        const double tp = time_of([&] { parallel = oracle::solve_grid(pot, cfg, Exec::parallel); });
        bool equal = bitwise_equal(serial.energies, parallel.energies);
        for (std::size_t v = 0; v < serial.vectors.size() && equal; ++v)
            equal = bitwise_equal(serial.vectors[v], parallel.vectors[v]);

        char label[64];
        std::snprintf(label, sizeof label, "solve_grid N=%d k=8", n);
        std::printf("%-34s %10.4f %10.4f %7.2fx %6s\n", label, ts, tp, ts / tp,
                    equal ? "yes" : "NO");
    }

    // bulk eigenfunction sampling
    {
        const double g1 = -10.0, g2 = 0.3;
        const auto state = spectra::normalize(spectra::kratzer_spectrum(g1, g2, 5).back(), g1, g2);
        std::vector<double> zetas(4'000'000);
        for (std::size_t i = 0; i < zetas.size(); ++i) zetas[i] = 1e-6 + 2.0 * i / zetas.size();

        std::vector<double> serial, parallel;
        const double ts = time_of(
            [&] { serial = spectra::sample_eigenfunction(state, g1, g2, zetas, Exec::serial); });
        const double tp = time_of(
            [&] { parallel = spectra::sample_eigenfunction(state, g1, g2, zetas, Exec::parallel); });
        std::printf("%-34s %10.4f %10.4f %7.2fx %6s\n", "sample_eigenfunction 4M points", ts, tp,
                    ts / tp, bitwise_equal(serial, parallel) ? "yes" : "NO");
    }
    return 0;
}
