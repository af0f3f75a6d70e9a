// Times each sweep kernel against its serial twin and checks they agree.

#include <chrono>
#include <cstdint>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "theo/sweep.hpp"

namespace {

double now_s() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <typename Serial, typename Parallel>
void row(const char* name, Serial serial, Parallel parallel) {
  const double t0 = now_s();
  const auto expected = serial();
  const double serial_s = now_s() - t0;

  const double t1 = now_s();
  const auto actual = parallel();
  const double parallel_s = now_s() - t1;

  std::printf("%-36s %8.3f s %10.3f s %7.2fx   %s\n", name, serial_s,
              parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0,
              actual == expected ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  namespace sweep = theo::sweep;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-36s %10s %12s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  row("count_verdicts(200000)",
      [] { return sweep::count_verdicts_serial(200000); },
      [] { return sweep::count_verdicts(200000); });
  row("odd_squares_remainder_one(10^6)",
      [] { return sweep::odd_squares_remainder_one_serial(1000000); },
      [] { return sweep::odd_squares_remainder_one(1000000); });
  row("agreement_scan(20000)",
      [] { return sweep::agreement_scan_serial(20000); },
      [] { return sweep::agreement_scan(20000); });
  row("falsification_mismatches(1000,100)",
      [] { return sweep::falsification_mismatches_serial(1000, 100); },
      [] { return sweep::falsification_mismatches(1000, 100); });
  row("surd_scan(5000)",
      [] { return sweep::surd_scan_serial(5000, 10000); },
      [] { return sweep::surd_scan(5000, 10000); });
  row("gcd_grid_mismatches(300,300)",
      [] { return sweep::gcd_grid_mismatches_serial(300, 300); },
      [] { return sweep::gcd_grid_mismatches(300, 300); });
  return 0;
}
