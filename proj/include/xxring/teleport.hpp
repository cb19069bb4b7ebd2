#pragma once

#include <array>
#include <optional>

#include "xxring/linalg.hpp"
#include "xxring/ring.hpp"

namespace xxring {

/// |psi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> with theta in [0, pi],
/// phi in [0, 2 pi).
ComplexVector input_ket(double theta, double phi);

/// Rank-one projector onto input_ket. Throws std::invalid_argument for
/// out-of-range angles.
ComplexMatrix input_state(double theta, double phi);

/// Bell projectors on the sender pair (S, A), basis index = 2 q_S + q_A,
/// ordered Phi+, Phi-, Psi+, Psi- (outcomes j = 1..4). Complete and
/// mutually orthogonal.
const std::array<ComplexMatrix, 4>& bell_projectors();

/// One Bell-measurement branch: outcome probability and, when the
/// probability exceeds 1e-12, the conditioned state of the receiver pair.
struct BranchMeasurement {
  double probability = 0.0;
  std::optional<ComplexMatrix> conditioned_pair;  // 4x4, receivers (B, C)
};

/// p_j = tr[(Pi_j (x) I)(pi_S (x) chi)] and the normalized SA-traced
/// remainder. Both inputs must pass validate_density(1e-8); j in 1..4.
BranchMeasurement measure_branch(const ComplexMatrix& pi_S, const ComplexMatrix& chi, int j);

/// Closed-form outcome probabilities for the thermal resource:
/// p1 = p2 = e^{-2 beta (B+J)} (f + g cos theta) / (12 Z), p3 = p4 with
/// -cos theta. Overflow policy as in partition_function.
std::array<double, 4> outcome_probabilities_closed(const RingParams& p, double theta);

/// Receiver corrections conditioned on the broadcast outcome:
/// U1 = X, U2 = Y, U3 = I, U4 = Z applied as U (x) U, then both single-qubit
/// reductions of the corrected pair (they coincide by ring symmetry).
struct CorrectedOutputs {
  ComplexMatrix tau_B;
  ComplexMatrix tau_C;
};
CorrectedOutputs apply_correction(const ComplexMatrix& rho_BC, int j);

/// tr(tau pi_in).
double branch_fidelity(const ComplexMatrix& tau, const ComplexMatrix& pi_in);

/// Closed-form branch fidelity (h1 + h2 cos 2theta) / (4 (f +- g cos theta)),
/// + for j in {1,2}, - for j in {3,4}. Independent of phi.
double branch_fidelity_closed(const RingParams& p, double theta, int j);

/// One simulated protocol branch end to end.
struct TeleportOutcome {
  int j = 0;
  double probability = 0.0;
  std::optional<ComplexMatrix> conditioned_pair;  // 4x4 before correction
  std::optional<ComplexMatrix> output_single;     // 2x2 corrected output
};

/// All four branches of the simulated protocol for a given input projector
/// and resource state. Probabilities sum to 1.
std::array<TeleportOutcome, 4> teleport_outcomes(const ComplexMatrix& pi_S,
                                                 const ComplexMatrix& chi);

/// Bloch-sphere average of sum_j p_j F_j over the simulated protocol (no
/// closed forms): 64-node Gauss-Legendre in cos theta, phi averaged over
/// {0, pi/2, pi, 3 pi/2} (the integrand is phi-independent). Node
/// contributions are accumulated in index order, so the result is bitwise
/// deterministic. `chi` must pass validate_density(1e-8).
double average_fidelity_for_resource(const ComplexMatrix& chi);

/// average_fidelity_for_resource with the thermal state of `p` as resource.
double average_fidelity_quadrature(const RingParams& p);

/// Closed-form average fidelity
///   <F> = 1/3 + (2/9) (2 + e^{3bJ}) cosh(bB/2)
///             / [(1 + 2 e^{3bJ}) cosh(bB/2) + e^{2bJ} cosh(3bB/2)].
double average_fidelity_closed(const RingParams& p);

/// True iff the thermal resource beats every classical protocol:
/// (e^{-2bJ} - 4 e^{bJ})/3 > cosh(3bB/2)/cosh(bB/2), equivalent to
/// average_fidelity_closed(p) > 2/3. False for all J > 0.
bool quantum_advantage(const RingParams& p);

/// T -> 0 limit of the average fidelity. For J < 0 the exact piecewise
/// values: 7/9 for 0 <= B < -2J, 5/9 at B = -2J, 1/3 above. For J > 0 no
/// exact case table is exposed; the value is a converged large-beta
/// evaluation of the closed form. Requires J != 0, B >= 0.
double average_fidelity_zero_T(double J, double B);

}  // namespace xxring
