#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace xxring {

/// A solved critical temperature (or generic root) with residual and bracket
/// metadata. For solve_T1/solve_T2 the value is in units of |J|.
struct CriticalResult {
  double value = 0.0;
  double residual = 0.0;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  int iterations = 0;
};

/// Bracketed root finding: bisection with secant acceleration that never
/// leaves the bracket, until |high - low| <= tol * max(1, |value|).
/// Deterministic. Throws std::invalid_argument when f(low) and f(high) have
/// the same sign, std::runtime_error on non-finite evaluations.
CriticalResult root_find(const std::function<double(double)>& f, double low, double high,
                         double tol);

/// Temperature (units of |J|) above which the thermal concurrence vanishes,
/// solved from the sign change of the concurrence numerator on the bracket
/// [1e-6, 10] (geometric scan, then root refinement at relative 1e-10).
/// Returns nullopt when the numerator never changes sign (e.g. J > 0 with
/// B = 0, where the concurrence is zero at every temperature). Requires
/// J != 0; the field enters through |B|.
std::optional<CriticalResult> solve_T1(double J, double B);

/// Temperature (units of |J|) above which the average teleportation fidelity
/// drops to the classical ceiling 2/3, from
///   (e^{-2bJ} - 4 e^{bJ}) cosh(bB/2) - 3 cosh(3bB/2) = 0.
/// Requires J < 0 (throws std::invalid_argument otherwise). Returns nullopt
/// when there is no transition (B >= -2J; exactly at B = -2J the transition
/// temperature degenerates to 0).
std::optional<CriticalResult> solve_T2(double J, double B);

/// Large-field limit of solve_T1 for J > 0: the root x > 1 of
/// x^6 - 6x^5 - 2x^3 - 3x^2 + 1 with x = e^{J/T}, giving T ~ 0.554641 in
/// units of J.
double asymptotic_T1_antiferro();

/// Large-field limit of solve_T1 for J < 0: the root y > 1 of
/// y^6 - 3y^4 - 2y^3 - 6y + 1 with y = e^{-J/T}, giving T ~ 1.32639 in
/// units of |J|.
double asymptotic_T1_ferro();

/// Small-T expansion of the fidelity transition for J < 0 and B = -eta J:
/// T2 ~ -(2 - eta) J / ln 3 (physical units; >= 0 for eta <= 2). Requires
/// J < 0 and 0 < eta <= 2.
double t2_small_T_approx(double eta, double J);

/// One row of a critical-temperature scan over field ratios eta (B = eta|J|).
struct PhaseScanRow {
  double eta = 0.0;
  std::optional<double> T1;  // units of |J|
  std::optional<double> T2;  // units of |J|; only solved for J < 0
};

/// Batch solve over the eta list. Rows are independent and may be solved
/// concurrently; output order matches the input order. For J < 0 the row at
/// exactly eta = 2 reports T2 = 0 (the transition closes there); rows with
/// no transition report nullopt.
std::vector<PhaseScanRow> phase_scan(double J, const std::vector<double>& eta_values,
                                     bool parallel = true);

}  // namespace xxring
