#pragma once

// Volume of the Euclidean unit n-ball, Omega_n = pi^(n/2) / Gamma(n/2 + 1),
// and the inequalities built on it. All arithmetic is in log space because
// Omega_n underflows long before n reaches the ranges scanned here.

#include <array>
#include <cmath>
#include <string>

#include "psicert/specfun.hpp"

namespace psicert {

/// ln Omega_n for real n >= 0.
inline double log_omega(double n) {
  detail::require_finite(n, "log_omega");
  if (!(n >= 0.0)) {
    throw EvalError(ErrorKind::OutOfDomain, "log_omega requires n >= 0");
  }
  return 0.5 * n * std::log(kPi) - log_gamma(0.5 * n + 1.0);
}

inline double omega(double n) {
  const double lo = log_omega(n);
  if (lo < std::log(std::numeric_limits<double>::min())) {
    throw EvalError(ErrorKind::Overflow, "Omega_n underflows double range");
  }
  return std::exp(lo);
}

inline constexpr int kWallisMaxDimension = 300;

/// ln Omega_n as a sum of ln I_j, I_j = int_0^pi sin^j t dt, from the Wallis
/// recurrence I_0 = pi, I_1 = 2, I_j = I_{j-2} (j-1)/j.
inline double omega_product_oracle(int n) {
  if (n < 0 || n > kWallisMaxDimension) {
    throw EvalError(ErrorKind::OutOfDomain,
                    "omega_product_oracle requires 0 <= n <= 300, got " + std::to_string(n));
  }
  if (n == 0) return 0.0;
  double two_back = kPi;  // I_{j-2}
  double one_back = 2.0;  // I_{j-1}
  double sum = std::log(one_back);
  for (int j = 2; j <= n; ++j) {
    const double current = two_back * (j - 1.0) / j;
    sum += std::log(current);
    two_back = one_back;
    one_back = current;
  }
  return sum;
}

/// ln Omega_{2n-1} - (ln Omega_{2n} + ln Omega_{2n-2}) / 2; n >= 1.
inline double ball_ineq_1(int n) {
  if (n < 1) throw EvalError(ErrorKind::OutOfDomain, "ball_ineq_1 requires n >= 1");
  return log_omega(2.0 * n - 1.0) - 0.5 * (log_omega(2.0 * n) + log_omega(2.0 * n - 2.0));
}

/// (ln Omega_{k(n-1)} - ln Omega_{kn}) - k (ln Omega_{n-1} - ln Omega_n); n, k >= 1.
/// Exactly zero for k = 1.
inline double ball_ineq_2(int n, int k) {
  if (n < 1 || k < 1) throw EvalError(ErrorKind::OutOfDomain, "ball_ineq_2 requires n, k >= 1");
  const double scaled = log_omega(static_cast<double>(k) * (n - 1)) - log_omega(static_cast<double>(k) * n);
  const double base = log_omega(n - 1.0) - log_omega(static_cast<double>(n));
  return scaled - k * base;
}

/// ln(1/Omega_n) midpoint convexity: ln Omega_n - (ln Omega_{n-1} + ln Omega_{n+1}) / 2.
inline double ball_log_convexity(int n) {
  if (n < 1) throw EvalError(ErrorKind::OutOfDomain, "ball_log_convexity requires n >= 1");
  return log_omega(static_cast<double>(n)) - 0.5 * (log_omega(n - 1.0) + log_omega(n + 1.0));
}

namespace detail {

// Neumaier-compensated sum.
template <std::size_t N>
double compensated_sum(const std::array<double, N>& terms) {
  double sum = 0.0;
  double carry = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    carry += std::fabs(sum) >= std::fabs(t) ? (sum - next) + t : (t - next) + sum;
    sum = next;
  }
  return sum + carry;
}

inline double grunbaum_ball_margin(double r, double s) {
  if (r + s <= 60.0) {
    const double wr = omega(r);
    const double ws = omega(s);
    const double wrs = omega(r + s);
    return (1.0 + wrs) / wrs - (wr + ws) / (wr * ws);
  }
  const double inv_rs = std::exp(-log_omega(r + s));
  if (std::isinf(inv_rs)) {
    throw EvalError(ErrorKind::Overflow, "1/Omega_{r+s} exceeds double range");
  }
  return compensated_sum(std::array<double, 4>{inv_rs, 1.0, -std::exp(-log_omega(r)),
                                               -std::exp(-log_omega(s))});
}

}  // namespace detail

/// (1 + Omega_{r+s}) / Omega_{r+s} - (Omega_r + Omega_s) / (Omega_r Omega_s); r, s >= 2.
inline double grunbaum_ball(int r, int s) {
  if (r < 2 || s < 2) throw EvalError(ErrorKind::OutOfDomain, "grunbaum_ball requires r, s >= 2");
  return detail::grunbaum_ball_margin(r, s);
}

/// Same margin with real dimensions r, s >= 2.
inline double grunbaum_ball_real(double r, double s) {
  if (!(r >= 2.0) || !(s >= 2.0)) {
    throw EvalError(ErrorKind::OutOfDomain, "grunbaum_ball_real requires r, s >= 2");
  }
  return detail::grunbaum_ball_margin(r, s);
}

}  // namespace psicert
