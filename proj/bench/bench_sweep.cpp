// Times the OpenMP invariant sweep against the serial reference loop.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "twodist/sweep.hpp"

using namespace twodist;

template <typename F>
double time_it(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  SweepOptions opts;
  opts.n_max = argc > 1 ? std::atoi(argv[1]) : 5;
  opts.samples = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 0;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 3;

  SweepSummary serial, parallel;
  double t_serial = 1e300, t_parallel = 1e300;
  for (int r = 0; r < reps; ++r) {
    t_serial = std::min(t_serial, time_it([&] { serial = invariant_sweep_serial(opts); }));
    t_parallel = std::min(t_parallel, time_it([&] { parallel = invariant_sweep(opts); }));
  }

  std::printf("n_max=%d samples=%zu graphs=%zu threads=%d\n", opts.n_max, opts.samples, serial.graphs_checked(),
              omp_get_max_threads());
  std::printf("serial   %9.3f s  %8.1f graphs/s\n", t_serial, serial.graphs_checked() / t_serial);
  std::printf("parallel %9.3f s  %8.1f graphs/s  speedup %.2fx\n", t_parallel, parallel.graphs_checked() / t_parallel,
              t_serial / t_parallel);
  if (!serial.same_findings(parallel)) {
    std::printf("MISMATCH: serial and parallel findings differ\n");
    return 1;
  }
  return 0;
}
