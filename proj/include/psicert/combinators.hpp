#pragma once

// Checkers for three generic higher-order lemmas. Each takes an arbitrary
// function and returns a margin that is positive when the lemma's conclusion
// holds at the probed points.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "psicert/error.hpp"

namespace psicert {

namespace detail {

template <class F>
double positive_log(F& f, double t) {
  const double v = f(t);
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw EvalError(ErrorKind::OutOfDomain, "function is not positive at probe " + std::to_string(t));
  }
  return std::log(v);
}

}  // namespace detail

/// Power-ratio monotonicity for log-convex f: g(t) = f(t)^a / f(a t) decreases
/// when a >= 1 (increases when 0 < a < 1), and is bounded by f(0+)^(a-1).
///
/// Returns, in log space, min(ln g(x) - ln g(y), (a-1) ln f(0+) - ln g(x)) for
/// a >= 1 and the reversed pair for 0 < a < 1. The bound against f(0+) is
/// skipped when `f_at_zero` is absent or infinite.
template <class F>
double neuman_check(F&& f, double a, double x, double y, std::optional<double> f_at_zero = std::nullopt) {
  if (!(a > 0.0) || !(x >= 0.0) || !(x <= y)) {
    throw EvalError(ErrorKind::OutOfDomain, "neuman_check requires a > 0 and 0 <= x <= y");
  }
  const auto log_g = [&](double t) { return a * detail::positive_log(f, t) - detail::positive_log(f, a * t); };
  const double gx = log_g(x);
  const double gy = log_g(y);
  const bool grows = a < 1.0;
  double margin = grows ? gy - gx : gx - gy;
  if (f_at_zero && std::isfinite(*f_at_zero)) {
    if (!(*f_at_zero > 0.0)) {
      throw EvalError(ErrorKind::OutOfDomain, "neuman_check requires f(0+) > 0");
    }
    const double bound = (a - 1.0) * std::log(*f_at_zero);
    margin = std::min(margin, grows ? gx - bound : bound - gx);
  }
  return margin;
}

enum class Curvature { Convex, Concave };

/// Monotone direction of g(x) = f(x^k) / f(x)^k when h(x) = ln f(e^x) is
/// convex or concave. For convex h, g increases when k in (0,1) and x in (0,1),
/// when k > 1 and x > 1, and when k < 0 and x > 1; it decreases in the three
/// mirrored cases. Concave h swaps the two lists.
///
/// Returns +/-(g(x2) - g(x1)) oriented so that a positive value means g moved
/// in the predicted direction. x1 < x2 must lie on the same side of 1.
template <class F>
double power_ratio_check(F&& f, double k, double x1, double x2, Curvature h_shape) {
  if (k == 0.0 || !std::isfinite(k)) {
    throw EvalError(ErrorKind::OutOfDomain, "power_ratio_check requires finite k != 0");
  }
  const bool unit_interval = x1 > 0.0 && x2 < 1.0;
  const bool above_one = x1 > 1.0 && std::isfinite(x2);
  if (!(x1 < x2) || !(unit_interval || above_one)) {
    throw EvalError(ErrorKind::OutOfDomain,
                    "power_ratio_check requires x1 < x2 both in (0,1) or both in (1,inf)");
  }
  bool increasing = true;
  if (k > 0.0 && k < 1.0) {
    increasing = unit_interval;
  } else if (k > 1.0) {
    increasing = above_one;
  } else if (k < 0.0) {
    increasing = above_one;
  }
  if (h_shape == Curvature::Concave) increasing = !increasing;

  const auto g = [&](double t) {
    const double base = f(t);
    const double powered = f(std::pow(t, k));
    if (!(base > 0.0) || !(powered > 0.0)) {
      throw EvalError(ErrorKind::OutOfDomain, "function is not positive at probe " + std::to_string(t));
    }
    return powered / std::pow(base, k);
  };
  const double diff = g(x2) - g(x1);
  return increasing ? diff : -diff;
}

enum class Monotone { Increasing, Decreasing };

/// Grunbaum-type superadditivity: if g(t) = (f(t) - 1) / t is increasing on
/// (threshold, inf), then h(t) = f(t^2) satisfies 1 + h(z) >= h(x) + h(y) with
/// z^2 = x^2 + y^2; a decreasing g reverses it.
///
/// Returns 1 + h(z) - h(x) - h(y), negated when g is declared decreasing.
template <class F>
double grunbaum_check(F&& f, double x, double y, double threshold = 0.0, Monotone g_direction = Monotone::Increasing) {
  if (!(x >= threshold) || !(y >= threshold) || !std::isfinite(x) || !std::isfinite(y)) {
    throw EvalError(ErrorKind::OutOfDomain, "grunbaum_check requires x, y >= threshold");
  }
  const double x2 = x * x;
  const double y2 = y * y;
  const double margin = 1.0 + f(x2 + y2) - f(x2) - f(y2);
  return g_direction == Monotone::Increasing ? margin : -margin;
}

}  // namespace psicert
