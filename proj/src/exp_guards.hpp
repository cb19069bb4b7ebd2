#pragma once

#include <cmath>
#include <stdexcept>

namespace xxring::detail {

// Overflow policy shared by the closed-form evaluators: exponent arguments
// are capped at |x| <= 700 (IEEE double overflows just above 709), and any
// non-finite result is reported as a range error instead of propagating.
inline constexpr double kMaxExpArg = 700.0;

inline void check_exp_arg(double x) {
  if (!(std::abs(x) <= kMaxExpArg)) {
    throw std::range_error("exponent argument exceeds overflow guard (|x| > 700)");
  }
}

inline double checked_exp(double x) {
  check_exp_arg(x);
  return std::exp(x);
}

inline double checked_cosh(double x) {
  check_exp_arg(x);
  return std::cosh(x);
}

inline double ensure_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::range_error(what);
  return v;
}

}  // namespace xxring::detail
