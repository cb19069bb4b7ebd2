#include "xxring/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "exp_guards.hpp"

namespace xxring {

namespace {

constexpr double kEigNoiseClamp = 1e-10;

// Positive-semidefinite square root via the spectral decomposition,
// clamping eigenvalue noise.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho) {
  const HermitianEig eig = hermitian_eig(rho);
  const std::size_t n = rho.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = std::max(eig.eigenvalues[k], 0.0);
    out += cplx{std::sqrt(lam), 0.0} * outer(eig.eigenvector(k));
  }
  return out;
}

const ComplexMatrix& spin_flip_yy() {
  static const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  return yy;
}

}  // namespace

std::array<double, 4> SpinFlipEigenvalues::descending() const {
  std::array<double, 4> v{lambda1, lambda2, lambda3, lambda4};
  std::stable_sort(v.begin(), v.end(), std::greater<double>{});
  return v;
}

double wootters_concurrence(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4 || !validate_density(rho, 1e-8)) {
    throw std::invalid_argument("wootters_concurrence: input is not a 4x4 density operator");
  }

  const ComplexMatrix root = psd_sqrt(rho);
  const ComplexMatrix m = root * spin_flip_yy() * conjugate(root);
  const HermitianEig eig = hermitian_eig(dagger(m) * m);

  std::array<double, 4> lam{};
  for (std::size_t k = 0; k < 4; ++k) {
    double v = eig.eigenvalues[k];
    if (v < 0.0 && v > -kEigNoiseClamp) v = 0.0;
    lam[k] = std::sqrt(std::max(v, 0.0));
  }
  std::stable_sort(lam.begin(), lam.end(), std::greater<double>{});

  const double c = lam[0] - lam[1] - lam[2] - lam[3];
  return std::clamp(c, 0.0, 1.0);
}

SpinFlipEigenvalues closed_form_lambdas(const RingParams& p) {
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
    throw std::invalid_argument("closed_form_lambdas: requires finite beta > 0");
  }
  const double bJ = p.beta * p.J;
  const double bB = p.beta * std::abs(p.B);
  const double em2 = detail::checked_exp(-2.0 * bJ);
  const double ep1 = detail::checked_exp(bJ);
  const double ch = detail::checked_cosh(0.5 * bB);
  const double pp = em2 + 2.0 * ep1;

  SpinFlipEigenvalues out;
  out.lambda1 = (2.0 / 3.0) * (2.0 * em2 + ep1) * ch;
  out.lambda2 = 2.0 * ep1 * ch;
  out.lambda3 = std::sqrt(pp * pp / 9.0 + (2.0 / 3.0) * pp * detail::checked_cosh(bB) + 1.0);
  out.lambda4 = out.lambda3;
  detail::ensure_finite(out.lambda1 + out.lambda2 + out.lambda3, "spin-flip eigenvalue overflow");
  return out;
}

double thermal_concurrence(const RingParams& p) {
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
    throw std::invalid_argument("thermal_concurrence: requires finite beta > 0");
  }
  const double bJ = p.beta * p.J;
  const double bB = p.beta * std::abs(p.B);  // invariant under B -> -B
  const double em2 = detail::checked_exp(-2.0 * bJ);
  const double ep1 = detail::checked_exp(bJ);
  const double ch = detail::checked_cosh(0.5 * bB);
  const double pp = em2 + 2.0 * ep1;

  const double root =
      std::sqrt(pp * pp + 6.0 * pp * detail::checked_cosh(bB) + 9.0);
  const double num = 2.0 * std::abs(em2 - ep1) * ch - root;
  const double den =
      3.0 * (detail::checked_cosh(1.5 * bB) + em2 * ch + 2.0 * ep1 * ch);
  detail::ensure_finite(num, "thermal concurrence overflow");
  detail::ensure_finite(den, "thermal concurrence overflow");

  // The two leading terms cancel exactly at B = 0 for J > 0; below the
  // relative rounding floor of the subtraction the sign is not resolvable
  // and the true value is a clean zero.
  if (num <= 1e-13 * root) return 0.0;
  return std::clamp(num / den, 0.0, 1.0);
}

double concurrence_zero_T(double J, double B) {
  if (!std::isfinite(J) || !std::isfinite(B)) {
    throw std::invalid_argument("concurrence_zero_T: parameters must be finite");
  }
  if (J == 0.0) throw std::invalid_argument("concurrence_zero_T: undefined at J = 0");
  if (B < 0.0) throw std::invalid_argument("concurrence_zero_T: requires B >= 0");

  if (J > 0.0) {
    if (B == 0.0) return 0.0;
    if (B < J) return 1.0 / 3.0;
    if (B == J) return 2.0 / 9.0;
    return 0.0;
  }
  const double b_crit = -2.0 * J;
  if (B == 0.0) return 1.0 / 3.0;
  if (B < b_crit) return 2.0 / 3.0;
  if (B == b_crit) return 1.0 / 3.0;
  return 0.0;
}

}  // namespace xxring
