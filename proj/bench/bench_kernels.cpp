// Times the grid kernels serial vs OpenMP and checks that both engines
// produce bitwise-identical results. The verification kernel is dominated by
// the protocol quadrature (the expensive path); the sweep kernel by the
// closed forms.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "xxring/sweep.hpp"
#include "xxring/verify.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double best_of_ms(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void print_row(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   identical: %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms, identical ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both engines run serially\n");
#endif

  {
    xxring::SweepSpec spec;
    spec.J = -1.0;
    spec.B = {0.0, 4.0, 161};
    spec.T = {0.05, 2.0, 120};
    spec.quantities = {xxring::Quantity::Concurrence, xxring::Quantity::AvgFidelity,
                       xxring::Quantity::Advantage, xxring::Quantity::Probabilities};
    xxring::SweepTable serial_table, parallel_table;
    const double serial_ms = best_of_ms(3, [&] { serial_table = run_sweep(spec, false); });
    const double parallel_ms = best_of_ms(3, [&] { parallel_table = run_sweep(spec, true); });
    bool identical = serial_table.rows.size() == parallel_table.rows.size();
    for (std::size_t r = 0; identical && r < serial_table.rows.size(); ++r) {
      for (std::size_t c = 0; c < serial_table.rows[r].size(); ++c) {
        if (serial_table.rows[r][c] != parallel_table.rows[r][c]) {
          identical = false;
          break;
        }
      }
    }
    print_row("sweep 161x120 closed forms", serial_ms, parallel_ms, identical);
  }

  {
    const auto& grid = xxring::standard_grid();
    xxring::VerifyOutcome serial_out, parallel_out;
    const double serial_ms =
        best_of_ms(2, [&] { serial_out = run_verification(grid, 0.0, false); });
    const double parallel_ms =
        best_of_ms(2, [&] { parallel_out = run_verification(grid, 0.0, true); });
    const bool identical = serial_out.max_thermal_dev == parallel_out.max_thermal_dev &&
                           serial_out.max_concurrence_dev == parallel_out.max_concurrence_dev &&
                           serial_out.max_fidelity_dev == parallel_out.max_fidelity_dev;
    print_row("verification grid 5x5x4", serial_ms, parallel_ms, identical);
  }

  return 0;
}
