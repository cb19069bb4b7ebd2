#include "xxring/verify.hpp"

#include <cmath>

#include "xxring/concurrence.hpp"
#include "xxring/parallel.hpp"
#include "xxring/ring.hpp"
#include "xxring/teleport.hpp"

namespace xxring {

namespace {

std::vector<GridPoint> make_grid(std::span<const double> js, std::span<const double> bs,
                                 std::span<const double> betas) {
  std::vector<GridPoint> grid;
  grid.reserve(js.size() * bs.size() * betas.size());
  for (double j : js) {
    for (double b : bs) {
      for (double beta : betas) grid.push_back({j, b, beta});
    }
  }
  return grid;
}

}  // namespace

const std::vector<GridPoint>& standard_grid() {
  static const std::vector<GridPoint> grid = [] {
    const double js[] = {-2.0, -1.0, -0.5, 1.0, 2.0};
    const double bs[] = {0.0, 0.5, 1.0, 2.0, 4.0};
    const double betas[] = {0.2, 1.0, 5.0, 20.0};
    return make_grid(js, bs, betas);
  }();
  return grid;
}

const std::vector<GridPoint>& small_grid() {
  static const std::vector<GridPoint> grid = [] {
    const double js[] = {-1.0, -0.5, 1.0};
    const double bs[] = {0.0, 1.0, 2.0};
    const double betas[] = {0.2, 1.0, 5.0};
    return make_grid(js, bs, betas);
  }();
  return grid;
}

VerifyOutcome run_verification(std::span<const GridPoint> grid, double perturb, bool parallel) {
  struct PointDevs {
    double thermal = 0.0;
    double concurrence = 0.0;
    double fidelity = 0.0;
  };
  std::vector<PointDevs> devs(grid.size());

  for_each_index(grid.size(), parallel, [&](std::size_t i) {
    const GridPoint& g = grid[i];
    const RingParams p{g.J, g.B, g.beta};

    const ComplexMatrix chi = thermal_state(p);
    devs[i].thermal = max_abs_diff(chi, thermal_state_oracle(p));

    const double c_closed = thermal_concurrence(p) + perturb;
    const double c_pipeline = wootters_concurrence(reduced_pair_state(chi));
    devs[i].concurrence = std::abs(c_closed - c_pipeline);

    const double f_closed = average_fidelity_closed(p) + perturb;
    const double f_quadrature = average_fidelity_for_resource(chi);
    devs[i].fidelity = std::abs(f_closed - f_quadrature);
  });

  VerifyOutcome out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (devs[i].thermal > out.max_thermal_dev) {
      out.max_thermal_dev = devs[i].thermal;
      out.thermal_argmax = grid[i];
    }
    if (devs[i].concurrence > out.max_concurrence_dev) {
      out.max_concurrence_dev = devs[i].concurrence;
      out.concurrence_argmax = grid[i];
    }
    if (devs[i].fidelity > out.max_fidelity_dev) {
      out.max_fidelity_dev = devs[i].fidelity;
      out.fidelity_argmax = grid[i];
    }
  }
  return out;
}

}  // namespace xxring
