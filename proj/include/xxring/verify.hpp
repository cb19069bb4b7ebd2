#pragma once

#include <span>
#include <vector>

namespace xxring {

struct GridPoint {
  double J = 0.0;
  double B = 0.0;
  double beta = 0.0;
};

/// The standard cross-validation grid: J in {-2, -1, -0.5, 1, 2},
/// B in {0, 0.5, 1, 2, 4}, beta in {0.2, 1, 5, 20} (5 x 5 x 4 points).
const std::vector<GridPoint>& standard_grid();

/// Reduced 3 x 3 x 3 grid for quick runs.
const std::vector<GridPoint>& small_grid();

/// Worst deviations between each closed form and its independent oracle.
struct VerifyOutcome {
  static constexpr double kThermalTol = 1e-10;      // state vs matrix exponential
  static constexpr double kConcurrenceTol = 1e-9;   // closed form vs spin-flip pipeline
  static constexpr double kFidelityTol = 1e-8;      // closed form vs protocol quadrature

  double max_thermal_dev = 0.0;
  GridPoint thermal_argmax;
  double max_concurrence_dev = 0.0;
  GridPoint concurrence_argmax;
  double max_fidelity_dev = 0.0;
  GridPoint fidelity_argmax;

  bool pass() const {
    return max_thermal_dev <= kThermalTol && max_concurrence_dev <= kConcurrenceTol &&
           max_fidelity_dev <= kFidelityTol;
  }
};

/// Runs the three oracle suites over the grid. `perturb` is a fault-injection
/// knob: it is added to the closed-form values before comparison, so any
/// nonzero setting beyond the tolerances must turn the run into a failure.
/// Grid points evaluate independently; the parallel path is bitwise identical
/// to the serial one.
VerifyOutcome run_verification(std::span<const GridPoint> grid, double perturb = 0.0,
                               bool parallel = true);

}  // namespace xxring
