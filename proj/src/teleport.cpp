#include "xxring/teleport.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "exp_guards.hpp"
#include "xxring/quadrature.hpp"

namespace xxring {

namespace {

constexpr double kBranchCutoff = 1e-12;  // below this a branch is undefined
constexpr int kQuadratureOrder = 64;

void require_outcome(int j) {
  if (j < 1 || j > 4) throw std::invalid_argument("outcome index must be in 1..4");
}

const std::array<ComplexMatrix, 4>& corrections() {
  static const std::array<ComplexMatrix, 4> u = {pauli_x(), pauli_y(), pauli_id(), pauli_z()};
  return u;
}

// f, g of the closed-form outcome probabilities and h1, h2 of the
// closed-form branch fidelities share these Boltzmann building blocks.
struct ClosedFormTerms {
  double f, g, h1, h2;
};

ClosedFormTerms closed_form_terms(const RingParams& p) {
  const double bJ = p.beta * p.J;
  const double bB = p.beta * p.B;
  const double e32 = detail::checked_exp(1.5 * bB);
  const double e12 = detail::checked_exp(0.5 * bB);
  const double e1B = detail::checked_exp(bB);
  const double e3B = detail::checked_exp(3.0 * bB);
  const double e3J = detail::checked_exp(3.0 * bJ);
  const double e2J = detail::checked_exp(2.0 * bJ);

  ClosedFormTerms t{};
  t.f = 3.0 * e32 * (1.0 + e1B) * (1.0 + 2.0 * e3J) + 3.0 * e12 * (1.0 + e3B) * e2J;
  t.g = e32 * (1.0 - e1B) * (1.0 + 2.0 * e3J) + 3.0 * e12 * (1.0 - e3B) * e2J;
  t.h1 = 3.0 * e32 * (1.0 + e1B) * (3.0 + 4.0 * e3J) + 3.0 * e12 * (1.0 + e3B) * e2J;
  t.h2 = -e32 * (1.0 + e1B) * (1.0 - 4.0 * e3J) - 3.0 * e12 * (1.0 + e3B) * e2J;
  detail::ensure_finite(t.f, "closed-form probability overflow");
  detail::ensure_finite(std::abs(t.g) + std::abs(t.h1) + std::abs(t.h2),
                        "closed-form fidelity overflow");
  return t;
}

// Protocol core without density revalidation; callers vet their inputs.
std::array<TeleportOutcome, 4> run_protocol(const ComplexMatrix& pi_S, const ComplexMatrix& chi) {
  const ComplexMatrix sigma_total = kron(pi_S, chi);  // S (x) A B C
  const ComplexMatrix id_bc = ComplexMatrix::identity(4);

  std::array<TeleportOutcome, 4> out;
  for (int j = 1; j <= 4; ++j) {
    const ComplexMatrix projected = kron(bell_projectors()[j - 1], id_bc) * sigma_total;
    const double pj = trace(projected).real();
    TeleportOutcome& branch = out[j - 1];
    branch.j = j;
    branch.probability = pj;
    if (pj > kBranchCutoff) {
      ComplexMatrix rho_bc = partial_trace(projected, {4, 4}, {1});
      rho_bc *= cplx{1.0 / pj, 0.0};
      const ComplexMatrix& u = corrections()[j - 1];
      const ComplexMatrix uu = kron(u, u);
      const ComplexMatrix corrected = uu * rho_bc * dagger(uu);
      branch.output_single = partial_trace(corrected, {2, 2}, {0});
      branch.conditioned_pair = std::move(rho_bc);
    }
  }
  return out;
}

double protocol_fidelity_sum(const ComplexMatrix& chi, double theta, double phi) {
  const ComplexMatrix pi_in = input_state(theta, phi);
  double sum = 0.0;
  for (const TeleportOutcome& branch : run_protocol(pi_in, chi)) {
    if (branch.output_single) {
      sum += branch.probability * branch_fidelity(*branch.output_single, pi_in);
    }
  }
  return sum;
}

}  // namespace

ComplexVector input_ket(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("input state: theta must lie in [0, pi]");
  }
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    throw std::invalid_argument("input state: phi must lie in [0, 2 pi)");
  }
  ComplexVector v(2);
  v[0] = std::cos(0.5 * theta);
  v[1] = std::polar(std::sin(0.5 * theta), phi);
  return v;
}

ComplexMatrix input_state(double theta, double phi) { return outer(input_ket(theta, phi)); }

const std::array<ComplexMatrix, 4>& bell_projectors() {
  static const std::array<ComplexMatrix, 4> projectors = [] {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexVector phip(4), phim(4), psip(4), psim(4);
    phip[0] = r; phip[3] = r;
    phim[0] = r; phim[3] = -r;
    psip[1] = r; psip[2] = r;
    psim[1] = r; psim[2] = -r;
    return std::array<ComplexMatrix, 4>{outer(phip), outer(phim), outer(psip), outer(psim)};
  }();
  return projectors;
}

BranchMeasurement measure_branch(const ComplexMatrix& pi_S, const ComplexMatrix& chi, int j) {
  require_outcome(j);
  if (pi_S.rows() != 2 || !validate_density(pi_S, 1e-8)) {
    throw std::invalid_argument("measure_branch: pi_S is not a qubit density operator");
  }
  if (chi.rows() != 8 || !validate_density(chi, 1e-8)) {
    throw std::invalid_argument("measure_branch: chi is not an 8x8 density operator");
  }
  const ComplexMatrix projected =
      kron(bell_projectors()[j - 1], ComplexMatrix::identity(4)) * kron(pi_S, chi);
  BranchMeasurement result;
  result.probability = trace(projected).real();
  if (result.probability > kBranchCutoff) {
    ComplexMatrix rho_bc = partial_trace(projected, {4, 4}, {1});
    rho_bc *= cplx{1.0 / result.probability, 0.0};
    result.conditioned_pair = std::move(rho_bc);
  }
  return result;
}

std::array<double, 4> outcome_probabilities_closed(const RingParams& p, double theta) {
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
    throw std::invalid_argument("outcome_probabilities_closed: requires finite beta > 0");
  }
  const ClosedFormTerms t = closed_form_terms(p);
  const double z = partition_function(p);
  const double pre = detail::checked_exp(-2.0 * p.beta * (p.B + p.J)) / (12.0 * z);
  const double c = std::cos(theta);
  const double p12 = detail::ensure_finite(pre * (t.f + t.g * c), "probability overflow");
  const double p34 = detail::ensure_finite(pre * (t.f - t.g * c), "probability overflow");
  return {p12, p12, p34, p34};
}

CorrectedOutputs apply_correction(const ComplexMatrix& rho_BC, int j) {
  require_outcome(j);
  if (rho_BC.rows() != 4 || rho_BC.cols() != 4) {
    throw std::invalid_argument("apply_correction: expected a 4x4 pair state");
  }
  const ComplexMatrix uu = kron(corrections()[j - 1], corrections()[j - 1]);
  const ComplexMatrix corrected = uu * rho_BC * dagger(uu);
  return {partial_trace(corrected, {2, 2}, {0}), partial_trace(corrected, {2, 2}, {1})};
}

double branch_fidelity(const ComplexMatrix& tau, const ComplexMatrix& pi_in) {
  return trace(tau * pi_in).real();
}

double branch_fidelity_closed(const RingParams& p, double theta, int j) {
  require_outcome(j);
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
    throw std::invalid_argument("branch_fidelity_closed: requires finite beta > 0");
  }
  const ClosedFormTerms t = closed_form_terms(p);
  const double sign = (j <= 2) ? 1.0 : -1.0;
  const double value = (t.h1 + t.h2 * std::cos(2.0 * theta)) /
                       (4.0 * (t.f + sign * t.g * std::cos(theta)));
  return detail::ensure_finite(value, "branch fidelity overflow");
}

std::array<TeleportOutcome, 4> teleport_outcomes(const ComplexMatrix& pi_S,
                                                 const ComplexMatrix& chi) {
  if (pi_S.rows() != 2 || !validate_density(pi_S, 1e-8)) {
    throw std::invalid_argument("teleport_outcomes: pi_S is not a qubit density operator");
  }
  if (chi.rows() != 8 || !validate_density(chi, 1e-8)) {
    throw std::invalid_argument("teleport_outcomes: chi is not an 8x8 density operator");
  }
  return run_protocol(pi_S, chi);
}

double average_fidelity_for_resource(const ComplexMatrix& chi) {
  if (chi.rows() != 8 || !validate_density(chi, 1e-8)) {
    throw std::invalid_argument("average_fidelity_for_resource: invalid resource state");
  }
  static const GaussLegendreRule rule = gauss_legendre(kQuadratureOrder);
  static const std::array<double, 4> phis = {0.0, 0.5 * std::numbers::pi, std::numbers::pi,
                                             1.5 * std::numbers::pi};

  std::array<double, kQuadratureOrder> node_values{};
  for (int i = 0; i < kQuadratureOrder; ++i) {
    const double theta = std::acos(rule.nodes[i]);
    double phi_sum = 0.0;
    for (double phi : phis) phi_sum += protocol_fidelity_sum(chi, theta, phi);
    node_values[i] = rule.weights[i] * (phi_sum / static_cast<double>(phis.size()));
  }
  // Fixed accumulation order keeps the result bitwise deterministic.
  double total = 0.0;
  for (int i = 0; i < kQuadratureOrder; ++i) total += node_values[i];
  return 0.5 * total;
}

double average_fidelity_quadrature(const RingParams& p) {
  return average_fidelity_for_resource(thermal_state(p));
}

double average_fidelity_closed(const RingParams& p) {
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
    throw std::invalid_argument("average_fidelity_closed: requires finite beta > 0");
  }
  const double bJ = p.beta * p.J;
  const double bB = p.beta * std::abs(p.B);
  const double e3J = detail::checked_exp(3.0 * bJ);
  const double e2J = detail::checked_exp(2.0 * bJ);
  const double ch1 = detail::checked_cosh(0.5 * bB);
  const double ch3 = detail::checked_cosh(1.5 * bB);
  const double value =
      1.0 / 3.0 + (2.0 / 9.0) * (2.0 + e3J) * ch1 / ((1.0 + 2.0 * e3J) * ch1 + e2J * ch3);
  return detail::ensure_finite(value, "average fidelity overflow");
}

bool quantum_advantage(const RingParams& p) {
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
    throw std::invalid_argument("quantum_advantage: requires finite beta > 0");
  }
  const double bJ = p.beta * p.J;
  const double bB = p.beta * std::abs(p.B);
  const double lhs =
      (detail::checked_exp(-2.0 * bJ) - 4.0 * detail::checked_exp(bJ)) / 3.0;
  const double rhs = detail::checked_cosh(1.5 * bB) / detail::checked_cosh(0.5 * bB);
  detail::ensure_finite(lhs, "advantage criterion overflow");
  detail::ensure_finite(rhs, "advantage criterion overflow");
  return lhs > rhs;
}

double average_fidelity_zero_T(double J, double B) {
  if (!std::isfinite(J) || !std::isfinite(B)) {
    throw std::invalid_argument("average_fidelity_zero_T: parameters must be finite");
  }
  if (J == 0.0) throw std::invalid_argument("average_fidelity_zero_T: undefined at J = 0");
  if (B < 0.0) throw std::invalid_argument("average_fidelity_zero_T: requires B >= 0");

  if (J < 0.0) {
    const double b_crit = -2.0 * J;
    if (B < b_crit) return 7.0 / 9.0;
    if (B == b_crit) return 5.0 / 9.0;
    return 1.0 / 3.0;
  }
  // Antiferromagnetic side: converged large-beta evaluation of the closed form.
  const double beta = 50.0 / std::max({1.0, std::abs(J), B});
  return average_fidelity_closed({J, B, beta});
}

}  // namespace xxring
