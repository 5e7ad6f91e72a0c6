#pragma once

// Gamma-family special functions on real arguments: log Gamma (with sign
// tracking through the reflection formula), digamma, trigamma, tetragamma,
// the positive digamma root, and a few hyperbolic helpers.
//
// All routines are pure and reentrant. Preconditions are enforced with
// EvalError; every successful return is finite.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>

#include "psicert/error.hpp"

namespace psicert {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLn2 = std::numbers::ln2;

namespace detail {

// zeta(k) - 1 for k = 2..30.
inline constexpr std::array<double, 29> kZetaMinusOne = {
    6.4493406684822643647e-1, 2.020569031595942854e-1,  8.2323233711138191516e-2,
    3.6927755143369926331e-2, 1.7343061984449139715e-2, 8.3492773819228268398e-3,
    4.0773561979443393787e-3, 2.0083928260822144179e-3, 9.9457512781808533715e-4,
    4.941886041194645587e-4,  2.4608655330804829864e-4, 1.2271334757848914675e-4,
    6.1248135058704829259e-5, 3.0588236307020493552e-5, 1.5282259408651871733e-5,
    7.6371976378997622736e-6, 3.8172932649998398565e-6, 1.9082127165539389257e-6,
    9.5396203387279611315e-7, 4.7693298678780646312e-7, 2.3845050272773299e-7,
    1.1921992596531107307e-7, 5.9608189051259479612e-8, 2.9803503514652280186e-8,
    1.4901554828365041235e-8, 7.450711789835429492e-9,  3.7253340247884570548e-9,
    1.8626597235130490064e-9, 9.3132743241966818287e-10,
};

// Bernoulli numbers B_2, B_4, ..., B_20.
inline constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,       -1.0 / 30.0,  1.0 / 42.0,          -1.0 / 30.0,     5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,    -3617.0 / 510.0,     43867.0 / 798.0, -174611.0 / 330.0,
};

// Arguments below this are shifted up by the recurrence before the
// asymptotic series is used.
inline constexpr double kAsymptoticThreshold = 10.0;

// log Gamma(1 + z) - z (1 - gamma) + log1p(z) for |z| <= 1/2:
//   sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k.
inline double lgamma_tail_series(double z) {
  double sum = 0.0;
  for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
    const double k = static_cast<double>(i + 2);
    sum = sum * -z + kZetaMinusOne[i] / k;
  }
  return sum * z * z;
}

// psi(1 + z) + gamma - z / (1 + z) for |z| <= 1/2:
//   sum_{k>=2} (-1)^k (zeta(k) - 1) z^(k-1).
inline double digamma_tail_series(double z) {
  double sum = 0.0;
  for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
    sum = sum * -z + kZetaMinusOne[i];
  }
  return sum * z;
}

// log Gamma on x >= 13 by Stirling's series.
inline double lgamma_stirling(double x) {
  constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (std::size_t i = 8; i-- > 0;) {
    const double k2 = 2.0 * static_cast<double>(i + 1);
    series = series * inv2 + kBernoulli[i] / (k2 * (k2 - 1.0));
  }
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series * inv;
}

// sin(pi x) with argument reduction around the nearest integer.
inline double sin_pi(double x) {
  const double n = std::nearbyint(x);
  const double d = x - n;
  const double s = std::sin(kPi * d);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw EvalError(ErrorKind::OutOfDomain, std::string(what) + " requires a finite argument");
  }
}

inline void require_positive(double x, const char* what) {
  require_finite(x, what);
  if (!(x > 0.0)) {
    throw EvalError(ErrorKind::PoleOrNonpositive,
                    std::string(what) + " requires x > 0, got " + std::to_string(x));
  }
}

}  // namespace detail

/// ln Gamma(x) for x > 0.
///
/// Series about 1 and 2 on [0.5, 2.5), downward recurrence into that band up
/// to 13, Stirling beyond. Relative error stays near a few ulp on
/// [1e-3, 1e6], including around the zeros at 1 and 2.
inline double log_gamma(double x) {
  detail::require_positive(x, "log_gamma");
  constexpr double one_minus_gamma = 1.0 - kEulerGamma;
  if (x < 0.5) {
    const double z = x;  // Gamma(x) = Gamma(1 + x) / x
    return -std::log1p(z) + z * one_minus_gamma + detail::lgamma_tail_series(z) - std::log(x);
  }
  if (x < 1.5) {
    const double z = x - 1.0;
    return -std::log1p(z) + z * one_minus_gamma + detail::lgamma_tail_series(z);
  }
  if (x < 2.5) {
    const double z = x - 2.0;
    return z * one_minus_gamma + detail::lgamma_tail_series(z);
  }
  if (x < 13.0) {
    double y = x;
    double product = 1.0;
    while (y >= 2.5) {
      y -= 1.0;
      product *= y;
    }
    const double z = y - 2.0;
    return z * one_minus_gamma + detail::lgamma_tail_series(z) + std::log(product);
  }
  return detail::lgamma_stirling(x);
}

struct SignedLogGamma {
  int sign = 1;
  double log_abs = 0.0;
};

/// sign(Gamma(x)) and ln|Gamma(x)| for any real x that is not a pole.
/// Arguments below 1/2 go through Gamma(x) Gamma(1 - x) = pi / sin(pi x).
inline SignedLogGamma log_abs_gamma_signed(double x) {
  detail::require_finite(x, "log_abs_gamma_signed");
  if (x <= 0.0 && x == std::nearbyint(x)) {
    throw EvalError(ErrorKind::PoleOrNonpositive,
                    "Gamma has a pole at non-positive integer " + std::to_string(x));
  }
  if (x >= 0.5) {
    return {1, log_gamma(x)};
  }
  const double s = detail::sin_pi(x);
  return {s > 0.0 ? 1 : -1, std::log(kPi) - std::log(std::fabs(s)) - log_gamma(1.0 - x)};
}

/// Gamma(x) for real non-pole x.
inline double gamma(double x) {
  const auto [sign, log_abs] = log_abs_gamma_signed(x);
  if (log_abs > std::log(std::numeric_limits<double>::max())) {
    throw EvalError(ErrorKind::Overflow, "Gamma(" + std::to_string(x) + ") exceeds double range");
  }
  return sign * std::exp(log_abs);
}

/// psi(x) = Gamma'(x) / Gamma(x) for x > 0.
///
/// Taylor series about 1 on [0.5, 1.5), reached from below by one step and
/// from [1.5, 10) by downward recurrence; asymptotic series from 10 on.
inline double digamma(double x) {
  detail::require_positive(x, "digamma");
  const auto near_one = [](double z) { return -kEulerGamma + (z / (1.0 + z) + detail::digamma_tail_series(z)); };
  if (x < 0.5) return near_one(x) - 1.0 / x;
  if (x < 1.5) return near_one(x - 1.0);
  if (x < detail::kAsymptoticThreshold) {
    double y = x;
    double correction = 0.0;
    while (y >= 2.5) {
      y -= 1.0;
      correction += 1.0 / y;
    }
    // y in [1.5, 2.5), where psi(y) > 0
    return (near_one(y - 2.0) + 1.0 / (y - 1.0)) + correction;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  for (std::size_t i = 7; i-- > 0;) {
    series = series * inv2 + detail::kBernoulli[i] / (2.0 * static_cast<double>(i + 1));
  }
  return std::log(x) - 0.5 / x - series * inv2;
}

/// psi'(x) for x > 0; strictly positive.
inline double trigamma(double x) {
  detail::require_positive(x, "trigamma");
  double shifted = x;
  int shifts = 0;
  while (shifted < detail::kAsymptoticThreshold) {
    shifted += 1.0;
    ++shifts;
  }
  const double inv = 1.0 / shifted;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (std::size_t i = detail::kBernoulli.size(); i-- > 0;) {
    series = series * inv2 + detail::kBernoulli[i];
  }
  double result = inv + 0.5 * inv2 + series * inv2 * inv;
  for (int j = shifts; j-- > 0;) {
    const double t = x + j;
    result += 1.0 / (t * t);
  }
  return result;
}

/// psi''(x) for x > 0; strictly negative.
inline double tetragamma(double x) {
  detail::require_positive(x, "tetragamma");
  double shifted = x;
  int shifts = 0;
  while (shifted < detail::kAsymptoticThreshold) {
    shifted += 1.0;
    ++shifts;
  }
  const double inv = 1.0 / shifted;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (std::size_t i = detail::kBernoulli.size(); i-- > 0;) {
    series = series * inv2 + (2.0 * static_cast<double>(i + 1) + 1.0) * detail::kBernoulli[i];
  }
  double result = -inv2 - inv2 * inv - series * inv2 * inv2;
  for (int j = shifts; j-- > 0;) {
    const double t = x + j;
    result -= 2.0 / (t * t * t);
  }
  return result;
}

/// The unique positive zero of digamma, c = 1.46163...
///
/// Bisection on [1.4, 1.5] down to a 1e-15 bracket, then one Newton step
/// with trigamma. Computed once per process.
inline double psi_root() {
  static const double root = [] {
    double lo = 1.4;
    double hi = 1.5;
    int iterations = 0;
    while (hi - lo > 1e-15) {
      if (++iterations > 200) {
        throw EvalError(ErrorKind::NotConverged, "psi_root bisection exceeded its budget");
      }
      const double mid = 0.5 * (lo + hi);
      (digamma(mid) < 0.0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    x -= digamma(x) / trigamma(x);
    if (!(std::fabs(digamma(x)) <= 1e-13)) {
      throw EvalError(ErrorKind::NotConverged, "psi_root residual above 1e-13");
    }
    return x;
  }();
  return root;
}

struct Constants {
  double euler_gamma;
  double psi_root_c;
  double ln2;
  double pi;
};

inline const Constants& constants() {
  static const Constants values{kEulerGamma, psi_root(), kLn2, kPi};
  return values;
}

/// Gamma(1 + x)^a / Gamma(1 - a x) on the positive branch a >= 1, 0 <= x < 1/a.
inline double sth_ratio(double a, double x) {
  detail::require_finite(a, "sth_ratio");
  detail::require_finite(x, "sth_ratio");
  if (!(a >= 1.0)) {
    throw EvalError(ErrorKind::OutOfDomain, "sth_ratio requires a >= 1");
  }
  const double reflected = 1.0 - a * x;
  if (!(x >= 0.0) || !(x < 1.0 / a) || !(reflected > 0.0)) {
    throw EvalError(ErrorKind::OutOfDomain, "sth_ratio requires 0 <= x < 1/a");
  }
  const double log_ratio = a * log_gamma(1.0 + x) - log_gamma(reflected);
  if (log_ratio > std::log(std::numeric_limits<double>::max()) ||
      log_ratio < std::log(std::numeric_limits<double>::min())) {
    throw EvalError(ErrorKind::Overflow, "sth_ratio magnitude outside double range");
  }
  return std::exp(log_ratio);
}

inline double artanh(double x) {
  if (!(std::fabs(x) < 1.0)) {
    throw EvalError(ErrorKind::OutOfDomain, "artanh requires |x| < 1");
  }
  return std::atanh(x);
}

inline double arcosh(double x) {
  if (!(x >= 1.0) || std::isinf(x)) {
    throw EvalError(ErrorKind::OutOfDomain, "arcosh requires finite x >= 1");
  }
  return std::acosh(x);
}

inline double tanh(double x) {
  detail::require_finite(x, "tanh");
  return std::tanh(x);
}

inline double cosh(double x) {
  detail::require_finite(x, "cosh");
  const double y = std::cosh(x);
  if (std::isinf(y)) throw EvalError(ErrorKind::Overflow, "cosh overflow");
  return y;
}

inline double sinh(double x) {
  detail::require_finite(x, "sinh");
  const double y = std::sinh(x);
  if (std::isinf(y)) throw EvalError(ErrorKind::Overflow, "sinh overflow");
  return y;
}

/// cosh((arcosh r + arcosh s) / 2) = sqrt((1 + r s + sqrt((r^2 - 1)(s^2 - 1))) / 2).
inline double cosh_half_sum(double r, double s) {
  if (!(r >= 1.0) || !(s >= 1.0) || std::isinf(r) || std::isinf(s)) {
    throw EvalError(ErrorKind::OutOfDomain, "cosh_half_sum requires finite r, s >= 1");
  }
  if (r == s) return r;
  const double cross = std::sqrt((r - 1.0) * (r + 1.0)) * std::sqrt((s - 1.0) * (s + 1.0));
  const double value = std::sqrt(0.5 * (1.0 + r * s + cross));
  if (std::isfinite(value)) return value;
  return std::cosh(0.5 * (std::acosh(r) + std::acosh(s)));
}

}  // namespace psicert
