#pragma once

#include <array>

#include "xxring/linalg.hpp"
#include "xxring/ring.hpp"

namespace xxring {

/// Square roots of the spin-flip operator eigenvalues for the thermal ring,
/// in closed form. lambda1..lambda4 follow the conventional labeling of the
/// closed-form expressions (lambda3 == lambda4 exactly); they carry the
/// overall scale of the unnormalized Boltzmann weights, so only their
/// normalized combination in thermal_concurrence is physical.
struct SpinFlipEigenvalues {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double lambda4 = 0.0;

  /// The four values sorted non-increasing.
  std::array<double, 4> descending() const;
};

/// Wootters concurrence of an arbitrary two-qubit density matrix:
/// C = max{l1 - l2 - l3 - l4, 0} where l_k are the square roots of the
/// eigenvalues, in decreasing order, of R = rho (Y(x)Y) rho* (Y(x)Y).
///
/// The eigenvalues of R are obtained through Hermitian machinery only: they
/// equal the eigenvalues of M^dag M with M = sqrt(rho) (Y(x)Y) conj(sqrt(rho)).
/// Negative eigenvalue noise below 1e-10 is clamped to zero.
///
/// `rho` must pass validate_density(1e-8); throws std::invalid_argument.
double wootters_concurrence(const ComplexMatrix& rho);

/// Closed-form lambda expressions for the thermal ring (unnormalized scale).
/// Overflow policy as in partition_function.
SpinFlipEigenvalues closed_form_lambdas(const RingParams& p);

/// Closed-form thermal concurrence of the nearest-neighbor pair,
///   C = max{ [2|e^{-2bJ} - e^{bJ}| cosh(bB/2) - sqrt(P^2 + 6P cosh(bB) + 9)]
///            / [3(cosh(3bB/2) + e^{-2bJ} cosh(bB/2) + 2 e^{bJ} cosh(bB/2))], 0 }
/// with P = e^{-2bJ} + 2 e^{bJ}, b = beta. Invariant under B -> -B (the field
/// is canonicalized to |B|) but not under J -> -J. Result in [0, 1].
double thermal_concurrence(const RingParams& p);

/// Exact T -> 0 concurrence by case analysis.
///   J > 0:  0 at B = 0;  1/3 for 0 < B < J;  2/9 at B = J;  0 for B > J.
///   J < 0:  1/3 at B = 0;  2/3 for 0 < B < -2J;  1/3 at B = -2J;  0 above.
/// Requires J != 0 and B >= 0 (throws std::invalid_argument).
double concurrence_zero_T(double J, double B);

}  // namespace xxring
