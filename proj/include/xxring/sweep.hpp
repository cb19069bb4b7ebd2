#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xxring {

enum class Quantity { Concurrence, AvgFidelity, Advantage, Probabilities };

std::optional<Quantity> quantity_from_name(std::string_view name);
std::string_view quantity_name(Quantity q);

/// Inclusive linear range; count == 1 collapses to `start`.
struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  double at(int i) const;
};

/// A (B, T) grid of closed-form quantities at fixed J. With units_of_J set
/// (the default) the B and T axis values are multiples of |J|; otherwise
/// they are absolute. `theta` only enters the outcome-probability columns.
struct SweepSpec {
  double J = -1.0;
  SweepRange B;
  SweepRange T;
  std::vector<Quantity> quantities;
  double theta = 1.0471975511965976;  // pi/3
  bool units_of_J = true;

  /// Throws std::invalid_argument on empty quantities, bad ranges,
  /// non-positive temperatures, or J = 0 in units-of-J mode.
  void validate() const;
};

/// Column-labeled numeric table; rows ordered by (B index, T index).
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Evaluates the grid. Rows are independent; the parallel path assigns one
/// output slot per row and is bitwise identical to the serial path.
SweepTable run_sweep(const SweepSpec& spec, bool parallel = true);

}  // namespace xxring
