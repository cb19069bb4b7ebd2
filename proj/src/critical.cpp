#include "xxring/critical.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "xxring/parallel.hpp"

namespace xxring {

namespace {

constexpr double kBracketLow = 1e-6;   // units of |J|
constexpr double kBracketHigh = 10.0;  // units of |J|
constexpr double kSolveTol = 1e-10;
constexpr int kScanPoints = 64;

// log(cosh(x)) without overflow.
double log_cosh(double x) {
  const double a = std::abs(x);
  return a - std::numbers::ln2 + std::log1p(std::exp(-2.0 * a));
}

double log_sum_exp(std::initializer_list<double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

// Sign-equivalent log form of the concurrence numerator
//   2 |e^{-2u} - e^{u}| cosh(c/2) - sqrt(P^2 + 6 P cosh(c) + 9),
// u = J/T, c = B/T (J normalized to +-1). Positive below the transition.
// Working in logs keeps the tails finite down to T = 1e-6 at any field.
double t1_log_margin(double T, double j_sign, double b_over_j) {
  const double u = j_sign / T;
  const double c = b_over_j / T;
  const double log_diff = std::max(-2.0 * u, u) + std::log1p(-std::exp(-3.0 * std::abs(u)));
  const double lhs = std::numbers::ln2 + log_diff + log_cosh(0.5 * c);
  const double log_p = log_sum_exp({-2.0 * u, std::numbers::ln2 + u});
  const double log_rad = log_sum_exp(
      {2.0 * log_p, std::log(6.0) + log_p + log_cosh(c), std::log(9.0)});
  return lhs - 0.5 * log_rad;
}

// Sign-equivalent log form of the fidelity criterion
//   (e^{-2u} - 4 e^{u}) cosh(c/2) - 3 cosh(3c/2),
// valid for J < 0 (u < 0). Positive below the transition.
double t2_log_margin(double T, double b_over_j) {
  const double u = -1.0 / T;
  const double c = b_over_j / T;
  const double lhs = -2.0 * u + log_cosh(0.5 * c);
  const double rhs = log_sum_exp(
      {std::log(4.0) + u + log_cosh(0.5 * c), std::log(3.0) + log_cosh(1.5 * c)});
  return lhs - rhs;
}

// Geometric scan of [kBracketLow, kBracketHigh] for a sign change, then
// root refinement. Returns nullopt when f keeps one sign on the whole scan.
// Evaluations that underflow to exactly 0.0 carry no sign information (the
// two log terms of the margin can round to the same value deep in a tail)
// and are skipped rather than read as roots.
std::optional<CriticalResult> scan_and_solve(const std::function<double(double)>& f) {
  double prev_t = 0.0, prev_f = 0.0;
  bool have_prev = false;
  const double ratio = std::pow(kBracketHigh / kBracketLow, 1.0 / (kScanPoints - 1));
  for (int i = 0; i < kScanPoints; ++i) {
    const double t = kBracketLow * std::pow(ratio, i);
    const double ft = f(t);
    if (!std::isfinite(ft)) throw std::runtime_error("critical solve: non-finite evaluation");
    if (ft == 0.0) continue;
    if (have_prev && (prev_f < 0.0) != (ft < 0.0)) {
      return root_find(f, prev_t, t, kSolveTol);
    }
    prev_t = t;
    prev_f = ft;
    have_prev = true;
  }
  return std::nullopt;
}

double poly_antiferro(double x) {
  // x^6 - 6x^5 - 2x^3 - 3x^2 + 1, Horner form.
  return (((((x - 6.0) * x) * x - 2.0) * x - 3.0) * x) * x + 1.0;
}

double poly_ferro(double y) {
  // y^6 - 3y^4 - 2y^3 - 6y + 1, Horner form.
  return (((((y * y) - 3.0) * y - 2.0) * y) * y - 6.0) * y + 1.0;
}

// Locates the unique root in (1, 10] of a one-root polynomial by sign scan
// plus refinement; asserts uniqueness of the sign change.
double polynomial_root(double (*poly)(double)) {
  constexpr double lo = 1.01, hi = 10.0;
  constexpr int n = 256;
  double root_lo = 0.0, root_hi = 0.0;
  int crossings = 0;
  double prev_x = lo, prev_f = poly(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double fx = poly(x);
    if ((prev_f < 0.0) != (fx < 0.0)) {
      ++crossings;
      root_lo = prev_x;
      root_hi = x;
    }
    prev_x = x;
    prev_f = fx;
  }
  if (crossings != 1) {
    throw std::logic_error("asymptotic polynomial: expected exactly one root in (1, 10]");
  }
  return root_find([&](double x) { return poly(x); }, root_lo, root_hi, 1e-15).value;
}

}  // namespace

CriticalResult root_find(const std::function<double(double)>& f, double low, double high,
                         double tol) {
  if (!(low < high)) throw std::invalid_argument("root_find: empty bracket");
  double a = low, b = high;
  double fa = f(a), fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    throw std::runtime_error("root_find: non-finite function value");
  }
  if (fa == 0.0) return {a, 0.0, low, high, 0};
  if (fb == 0.0) return {b, 0.0, low, high, 0};
  if ((fa < 0.0) == (fb < 0.0)) {
    throw std::invalid_argument("root_find: no sign change over bracket");
  }

  int iterations = 0;
  for (; iterations < 200; ++iterations) {
    if (std::abs(b - a) <= tol * std::max(1.0, 0.5 * std::abs(a + b))) break;

    // Secant proposal, clipped into the open bracket; fall back to bisection.
    double mid = 0.5 * (a + b);
    const double denom = fb - fa;
    if (denom != 0.0) {
      const double secant = b - fb * (b - a) / denom;
      if (secant > a + 0.25 * tol * std::abs(a) && secant < b - 0.25 * tol * std::abs(b) &&
          std::isfinite(secant)) {
        // Alternate secant and bisection steps so stalls cannot happen.
        if (iterations % 2 == 0) mid = secant;
      }
    }

    const double fm = f(mid);
    if (!std::isfinite(fm)) throw std::runtime_error("root_find: non-finite function value");
    if (fm == 0.0) {
      a = b = mid;
      fa = fb = fm;
      break;
    }
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }

  const double value = 0.5 * (a + b);
  return {value, f(value), low, high, iterations};
}

std::optional<CriticalResult> solve_T1(double J, double B) {
  if (!std::isfinite(J) || !std::isfinite(B)) {
    throw std::invalid_argument("solve_T1: parameters must be finite");
  }
  if (J == 0.0) throw std::invalid_argument("solve_T1: undefined at J = 0");
  const double j_sign = J > 0.0 ? 1.0 : -1.0;
  const double b_over_j = std::abs(B) / std::abs(J);
  return scan_and_solve([=](double t) { return t1_log_margin(t, j_sign, b_over_j); });
}

std::optional<CriticalResult> solve_T2(double J, double B) {
  if (!std::isfinite(J) || !std::isfinite(B)) {
    throw std::invalid_argument("solve_T2: parameters must be finite");
  }
  if (J >= 0.0) {
    throw std::invalid_argument("solve_T2: requires J < 0 (no advantage for J >= 0)");
  }
  const double b_over_j = std::abs(B) / std::abs(J);
  return scan_and_solve([=](double t) { return t2_log_margin(t, b_over_j); });
}

double asymptotic_T1_antiferro() { return 1.0 / std::log(polynomial_root(poly_antiferro)); }

double asymptotic_T1_ferro() { return 1.0 / std::log(polynomial_root(poly_ferro)); }

double t2_small_T_approx(double eta, double J) {
  if (!(J < 0.0)) throw std::invalid_argument("t2_small_T_approx: requires J < 0");
  if (!(eta > 0.0) || eta > 2.0) {
    throw std::invalid_argument("t2_small_T_approx: requires 0 < eta <= 2");
  }
  return -(2.0 - eta) * J / std::log(3.0);
}

std::vector<PhaseScanRow> phase_scan(double J, const std::vector<double>& eta_values,
                                     bool parallel) {
  if (!std::isfinite(J) || J == 0.0) {
    throw std::invalid_argument("phase_scan: requires finite J != 0");
  }
  std::vector<PhaseScanRow> rows(eta_values.size());
  for_each_index(eta_values.size(), parallel, [&](std::size_t i) {
    const double eta = eta_values[i];
    const double field = eta * std::abs(J);
    PhaseScanRow row;
    row.eta = eta;
    if (auto t1 = solve_T1(J, field)) row.T1 = t1->value;
    if (J < 0.0) {
      if (auto t2 = solve_T2(J, field)) {
        row.T2 = t2->value;
      } else if (eta == 2.0) {
        row.T2 = 0.0;  // the transition closes exactly at B = -2J
      }
    }
    rows[i] = std::move(row);
  });
  return rows;
}

}  // namespace xxring
