// Timing comparison of the serial reference stepper against the
// block-parallel kernel on the three-link benchmark system
//   D^(1/2) x = y1, D^(1/2) y1 = y2, D^(1/2) y2 = -x - y1,
// x(0) = 1, y2(0) = 1. Usage: bench_abm [max_N]   (default 16384)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fracsplit/solver.hpp"
#include "fracsplit/splitter.hpp"

using namespace fracsplit;

namespace {

template <typename F>
double time_once(F&& run) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 16384;
    if (max_n < 8) {
        std::fprintf(stderr, "max_N must be at least 8\n");
        return 2;
    }

    MultiTermFDE fde;
    fde.coeffs = {Rational(1), Rational(1), Rational(0), Rational(1)};
    fde.orders = {Rational(1, 2), Rational(3, 2), Rational(5, 2)};
    fde.ics = {Rational(1), Rational(0), Rational(1)};
    const SplitSystem sys = splitter::build_split_2m1(fde);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%8s %12s %12s %9s %12s\n", "N", "serial [s]", "blocked [s]", "speedup", "max |diff|");
    for (int n = 2048; n <= max_n; n *= 2) {
        solver::Trajectory serial, blocked;
        const double ts = time_once([&] { serial = solver::abm_solve_reference(sys, 1.0, n); });
        const double tb = time_once([&] { blocked = solver::abm_solve(sys, 1.0, n); });
        double diff = 0.0;
        for (std::size_t i = 0; i < serial.values.size(); ++i)
            for (std::size_t u = 0; u < serial.values[i].size(); ++u)
                diff = std::max(diff, std::abs(serial.values[i][u] - blocked.values[i][u]));
        std::printf("%8d %12.4f %12.4f %8.2fx %12.3e\n", n, ts, tb, ts / tb, diff);
    }
    return 0;
}
