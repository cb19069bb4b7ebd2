#include "xxring/ring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "exp_guards.hpp"

namespace xxring {

namespace {

void require_finite_params(const RingParams& p) {
  if (!std::isfinite(p.J) || !std::isfinite(p.B)) {
    throw std::invalid_argument("ring parameters must be finite");
  }
}

void require_thermal(const RingParams& p) {
  require_finite_params(p);
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
    throw std::invalid_argument("thermal operation requires finite beta > 0");
  }
}

// Equal-amplitude state over three basis indices with phase winding
// 1, q^w, q^{2w}, q = exp(i 2 pi / 3).
ComplexVector w_state(std::size_t i0, std::size_t i1, std::size_t i2, int winding) {
  const double amp = 1.0 / std::sqrt(3.0);
  ComplexVector v(8);
  v[i0] = amp;
  v[i1] = amp * std::polar(1.0, winding * 2.0 * std::numbers::pi / 3.0);
  v[i2] = amp * std::polar(1.0, winding * 4.0 * std::numbers::pi / 3.0);
  return v;
}

}  // namespace

RingParams RingParams::from_temperature(double J, double B, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("from_temperature requires T > 0");
  return {J, B, 1.0 / T};
}

RingParams RingParams::zero_temperature(double J, double B) {
  return {J, B, std::numeric_limits<double>::infinity()};
}

bool RingParams::is_zero_temperature() const { return std::isinf(beta); }

ComplexMatrix build_hamiltonian(const RingParams& p) {
  require_finite_params(p);
  const ComplexMatrix& id = pauli_id();
  const ComplexMatrix& sx = pauli_x();
  const ComplexMatrix& sy = pauli_y();
  const ComplexMatrix& sz = pauli_z();

  ComplexMatrix h(8, 8);
  // Ring bonds AB, BC, CA.
  h += kron(kron(sx, sx), id);
  h += kron(kron(id, sx), sx);
  h += kron(kron(sx, id), sx);
  h += kron(kron(sy, sy), id);
  h += kron(kron(id, sy), sy);
  h += kron(kron(sy, id), sy);
  h *= cplx{0.5 * p.J, 0.0};

  ComplexMatrix zeeman(8, 8);
  zeeman += kron(kron(sz, id), id);
  zeeman += kron(kron(id, sz), id);
  zeeman += kron(kron(id, id), sz);
  zeeman *= cplx{0.5 * p.B, 0.0};

  return h + zeeman;
}

Spectrum analytic_spectrum(const RingParams& p) {
  require_finite_params(p);
  const double J = p.J, B = p.B;

  Spectrum s;
  // Basis indices: |001> = 1, |010> = 2, |100> = 4 (one excitation);
  //                |011> = 3, |101> = 5, |110> = 6 (two excitations).
  s.levels[0] = {1.5 * B, basis_vector(8, 0), "000"};
  s.levels[1] = {0.5 * (B + 4.0 * J), w_state(1, 2, 4, 0), "W1"};
  s.levels[2] = {0.5 * (B - 2.0 * J), w_state(1, 2, 4, 1), "W2"};
  s.levels[3] = {0.5 * (B - 2.0 * J), w_state(1, 2, 4, 2), "W3"};
  s.levels[4] = {-0.5 * (B - 4.0 * J), w_state(3, 5, 6, 0), "W4"};
  s.levels[5] = {-0.5 * (B + 2.0 * J), w_state(3, 5, 6, 1), "W5"};
  s.levels[6] = {-0.5 * (B + 2.0 * J), w_state(3, 5, 6, 2), "W6"};
  s.levels[7] = {-1.5 * B, basis_vector(8, 7), "111"};
  return s;
}

double partition_function(const RingParams& p) {
  require_thermal(p);
  const double bJ = p.beta * p.J;
  const double bB = p.beta * p.B;
  const double z = 2.0 * detail::checked_cosh(1.5 * bB) +
                   2.0 * detail::checked_exp(-2.0 * bJ) * detail::checked_cosh(0.5 * bB) +
                   4.0 * detail::checked_exp(bJ) * detail::checked_cosh(0.5 * bB);
  return detail::ensure_finite(z, "partition function overflow");
}

ComplexMatrix thermal_state(const RingParams& p) {
  require_thermal(p);
  const Spectrum s = analytic_spectrum(p);

  std::array<double, 8> weights{};
  double z = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    weights[k] = detail::checked_exp(-p.beta * s.levels[k].energy);
    z += weights[k];
  }
  detail::ensure_finite(z, "thermal state overflow");

  ComplexMatrix chi(8, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    chi += cplx{weights[k] / z, 0.0} * outer(s.levels[k].vector);
  }
  return chi;
}

ComplexMatrix thermal_state_oracle(const RingParams& p) {
  require_thermal(p);
  const HermitianEig eig = hermitian_eig(build_hamiltonian(p));

  double e_min = eig.eigenvalues.front();
  double e_abs = 0.0;
  for (double e : eig.eigenvalues) {
    e_min = std::min(e_min, e);
    e_abs = std::max(e_abs, std::abs(e));
  }
  detail::check_exp_arg(p.beta * e_abs);

  std::array<double, 8> weights{};
  double z = 0.0;
  for (std::size_t k = 0; k < 8; ++k) {
    weights[k] = std::exp(-p.beta * (eig.eigenvalues[k] - e_min));
    z += weights[k];
  }

  ComplexMatrix chi(8, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    chi += cplx{weights[k] / z, 0.0} * outer(eig.eigenvector(k));
  }
  return chi;
}

ComplexMatrix ground_state_limit(double J, double B) {
  if (!std::isfinite(J) || !std::isfinite(B)) {
    throw std::invalid_argument("ground_state_limit: parameters must be finite");
  }
  if (J == 0.0) {
    throw std::invalid_argument("ground_state_limit: undefined at J = 0");
  }
  if (B < 0.0) {
    throw std::invalid_argument("ground_state_limit: requires B >= 0");
  }

  const Spectrum s = analytic_spectrum({J, B, 1.0});
  double e_min = s.levels[0].energy;
  for (const auto& level : s.levels) e_min = std::min(e_min, level.energy);

  // Degenerate levels enter the limit with equal weight; exact parameter
  // ties (B = J, B = -2J) land here via the tolerance.
  const double tie_tol = 1e-12 * std::max({1.0, std::abs(J), std::abs(B)});
  std::vector<const EigenLevel*> ground;
  for (const auto& level : s.levels) {
    if (level.energy <= e_min + tie_tol) ground.push_back(&level);
  }

  ComplexMatrix chi(8, 8);
  for (const EigenLevel* level : ground) {
    chi += cplx{1.0 / static_cast<double>(ground.size()), 0.0} * outer(level->vector);
  }
  return chi;
}

ComplexMatrix reduced_pair_state(const ComplexMatrix& chi) {
  if (!validate_density(chi, 1e-8)) {
    throw std::invalid_argument("reduced_pair_state: input is not a density operator");
  }
  return partial_trace(chi, {2, 2, 2}, {0, 1});
}

}  // namespace xxring
