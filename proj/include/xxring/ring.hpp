#pragma once

#include <array>
#include <string_view>

#include "xxring/linalg.hpp"

namespace xxring {

/// Physical parameters of the three-qubit XX ring: exchange coupling J,
/// magnetic field B along z, and inverse temperature beta = 1/T with k = 1.
/// beta = +infinity marks the zero-temperature limit; thermal operations
/// require finite beta and the T -> 0 physics lives in the *_zero_T /
/// ground_state_limit functions instead.
struct RingParams {
  double J = 0.0;
  double B = 0.0;
  double beta = 1.0;

  static RingParams from_temperature(double J, double B, double T);
  static RingParams zero_temperature(double J, double B);
  bool is_zero_temperature() const;
};

/// One labeled eigenpair of the ring Hamiltonian.
struct EigenLevel {
  double energy = 0.0;
  ComplexVector vector;
  std::string_view label;  // one of 000, W1..W6, 111
};

/// The full analytic eigensystem, in the fixed label order
/// 000, W1, W2, W3, W4, W5, W6, 111. Energies:
///   3B/2, (B+4J)/2, (B-2J)/2 (x2), -(B-4J)/2, -(B+2J)/2 (x2), -3B/2.
struct Spectrum {
  std::array<EigenLevel, 8> levels;
};

/// 8x8 ring Hamiltonian
///   H = (J/2) * sum over ring bonds of (XX + YY)  +  (B/2) * sum of Z,
/// in the computational basis |q_A q_B q_C> with A as the most significant
/// bit (index = 4 q_A + 2 q_B + q_C) and |0> the +1 eigenstate of Z.
ComplexMatrix build_hamiltonian(const RingParams& p);

/// The eight labeled eigenpairs in closed form. The one- and two-excitation
/// eigenvectors are W states with amplitudes 1/sqrt(3) and phase windings
/// 1, q, q^2 where q = exp(i 2 pi / 3).
Spectrum analytic_spectrum(const RingParams& p);

/// Z = 2 cosh(3 beta B / 2) + 2 e^{-2 beta J} cosh(beta B / 2)
///   + 4 e^{beta J} cosh(beta B / 2).
/// Throws std::range_error when an exponent argument exceeds |x| = 700.
double partition_function(const RingParams& p);

/// Gibbs state assembled from the eight analytic projectors with Boltzmann
/// weights, normalized so the trace is exactly the weight sum. Same overflow
/// policy as partition_function.
ComplexMatrix thermal_state(const RingParams& p);

/// Independent route to the same state: e^{-beta H} / tr(e^{-beta H}) via
/// hermitian_eig of build_hamiltonian, with the minimum eigenvalue subtracted
/// before exponentiating. Does not touch analytic_spectrum.
ComplexMatrix thermal_state_oracle(const RingParams& p);

/// T -> 0 limit of the thermal state: the equal-weight mixture over the
/// degenerate ground space. Tied ground levels all enter with equal weight,
/// which reproduces the boundary mixtures at B = J (antiferro) and B = -2J
/// (ferro). Requires J != 0 and B >= 0 (throws std::invalid_argument).
///
/// For J < 0 the windows -2J <= B <= -4|J|-style case boundaries overlap on
/// paper; at B = -4J the two-excitation W level is subdominant, so the limit
/// is still the fully polarized state, which is what the energy-tie rule
/// produces.
ComplexMatrix ground_state_limit(double J, double B);

/// rho_AB = tr_C(chi). By the cyclic symmetry of the ring this equals the
/// reduction onto any nearest-neighbor pair. `chi` must pass
/// validate_density(1e-8).
ComplexMatrix reduced_pair_state(const ComplexMatrix& chi);

}  // namespace xxring
