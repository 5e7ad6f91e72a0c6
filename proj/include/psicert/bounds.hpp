#pragma once

// Elementary digamma bounds and their satisfied-positive margins.

#include <cmath>

#include "psicert/specfun.hpp"

namespace psicert {

/// ln x - 1/x
inline double psi_lower(double x) {
  detail::require_positive(x, "psi_lower");
  return std::log(x) - 1.0 / x;
}

/// ln x - 1/(2x)
inline double psi_upper(double x) {
  detail::require_positive(x, "psi_upper");
  return std::log(x) - 0.5 / x;
}

/// Raw differences (greater side minus lesser side) for the five bounds
///   (1) ln x - 1/x < psi(x) < ln x - 1/(2x)
///   (2) psi'(x) > 1/x + 1/(2x^2)
///   (3) psi''(x) < 1/x - 2 psi'(x)
///   (4) psi'(x)^2 + psi''(x) > 0
///   (5) psi'(x) exp(psi(x)) < 1
/// A bound holds at x exactly when its field is positive.
struct Lemma21Margins {
  double m1_lower = 0.0;
  double m1_upper = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  double m5 = 0.0;

  [[nodiscard]] bool all_positive() const noexcept {
    return m1_lower > 0.0 && m1_upper > 0.0 && m2 > 0.0 && m3 > 0.0 && m4 > 0.0 && m5 > 0.0;
  }
};

inline Lemma21Margins check_lemma21(double x) {
  detail::require_positive(x, "check_lemma21");
  const double psi = digamma(x);
  const double psi1 = trigamma(x);
  const double psi2 = tetragamma(x);
  Lemma21Margins m;
  m.m1_lower = psi - psi_lower(x);
  m.m1_upper = psi_upper(x) - psi;
  m.m2 = psi1 - 1.0 / x - 0.5 / (x * x);
  m.m3 = (1.0 / x - 2.0 * psi1) - psi2;
  m.m4 = psi1 * psi1 + psi2;
  m.m5 = 1.0 - psi1 * std::exp(psi);
  return m;
}

}  // namespace psicert
