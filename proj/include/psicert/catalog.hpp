#pragma once

// The fixed catalog of inequality and shape claims about psi, Gamma and the
// unit-ball volume, each paired with its parameter region.
//
// Margins follow one convention: greater side minus lesser side, so a
// positive margin means the statement holds. Ratio and power statements
// with positive sides are compared in log space.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "psicert/ballvol.hpp"
#include "psicert/bounds.hpp"
#include "psicert/domain.hpp"
#include "psicert/error.hpp"
#include "psicert/specfun.hpp"

namespace psicert {

inline constexpr std::string_view kCatalogVersion = "1";

enum class Relation { Strict, NonStrict };
enum class CaseStatus { Asserted, AssertedWithCorrection, Empirical };
enum class ClaimKind { Increasing, Decreasing, Convex, Concave };

constexpr std::string_view to_string(CaseStatus s) noexcept {
  switch (s) {
    case CaseStatus::Asserted: return "asserted";
    case CaseStatus::AssertedWithCorrection: return "asserted-with-correction";
    case CaseStatus::Empirical: return "empirical";
  }
  return "asserted";
}

constexpr std::string_view to_string(ClaimKind k) noexcept {
  switch (k) {
    case ClaimKind::Increasing: return "increasing";
    case ClaimKind::Decreasing: return "decreasing";
    case ClaimKind::Convex: return "convex";
    case ClaimKind::Concave: return "concave";
  }
  return "increasing";
}

constexpr bool is_asserted(CaseStatus s) noexcept { return s != CaseStatus::Empirical; }

/// Margin at a point; nullopt marks a point where the statement's
/// sub-expressions leave the real line (counted as skipped, not violated).
using MarginFn = std::function<std::optional<double>(PointView)>;
using ScalarFn = std::function<double(PointView)>;

struct InequalityCase {
  std::string id;
  std::string statement;
  CaseStatus status = CaseStatus::Asserted;
  Relation relation = Relation::Strict;
  DomainSpec domain;
  MarginFn margin;
  ScalarFn frontier_distance;  // distance to the equality set; empty when there is none

  [[nodiscard]] std::size_t arity() const noexcept { return domain.arity(); }
};

/// Shape claim about target(x; params) in its first coordinate.
struct ClaimCheck {
  std::string id;
  std::string statement;
  CaseStatus status = CaseStatus::Asserted;
  ClaimKind kind = ClaimKind::Increasing;
  DomainSpec domain;  // variable 0 is x, the rest are parameters
  ScalarFn target;
  /// Open x-interval on which target is evaluable for the given parameters;
  /// finite-difference stencils are kept inside it.
  std::function<std::pair<double, double>(PointView)> definition;
  ScalarFn derivative;  // explicit d target / dx when one is known
};

using CatalogEntry = std::variant<InequalityCase, ClaimCheck>;

inline const std::string& id_of(const CatalogEntry& e) {
  return std::visit([](const auto& c) -> const std::string& { return c.id; }, e);
}
inline const DomainSpec& domain_of(const CatalogEntry& e) {
  return std::visit([](const auto& c) -> const DomainSpec& { return c.domain; }, e);
}
inline CaseStatus status_of(const CatalogEntry& e) {
  return std::visit([](const auto& c) { return c.status; }, e);
}
inline const std::string& statement_of(const CatalogEntry& e) {
  return std::visit([](const auto& c) -> const std::string& { return c.statement; }, e);
}

// ---------------------------------------------------------------------------
// Derived constants used by the catalog and the constants report.

namespace detail {

template <class F>
double bisect(F&& f, double lo, double hi, double width = 1e-15) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > width; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

struct DerivedConstants {
  double c;              // positive root of psi
  double C;              // psi(3/2)^2 / psi(2)
  double inv_psi_cosh1;  // 1 / psi(cosh 1)
  double l;              // artanh(psi(tanh c))
  double m;              // -artanh(gamma)
  double a;              // d/dx artanh(psi(tanh x)) at x = c
  double t;              // solution of psi(e^x) = 1
  double r5_lo;          // x below which psi(tanh x) <= -1
};

inline double r5_target(double x) { return artanh(digamma(std::tanh(x))); }

inline double r5_derivative(double x) {
  const double r = std::tanh(x);
  const double p = digamma(r);
  const double sech = 1.0 / std::cosh(x);
  return trigamma(r) * sech * sech / (1.0 - p * p);
}

inline const DerivedConstants& derived_constants() {
  static const DerivedConstants k = [] {
    DerivedConstants d{};
    d.c = psi_root();
    const double p32 = digamma(1.5);
    d.C = p32 * p32 / digamma(2.0);
    d.inv_psi_cosh1 = 1.0 / digamma(std::cosh(1.0));
    d.l = r5_target(d.c);
    d.m = -artanh(kEulerGamma);
    d.a = r5_derivative(d.c);
    d.t = detail::bisect([](double x) { return digamma(std::exp(x)) - 1.0; }, 1.0, 1.5);
    const double r0 = detail::bisect([](double r) { return digamma(r) + 1.0; }, 0.5, 1.0);
    d.r5_lo = std::atanh(r0);
    return d;
  }();
  return k;
}

// ---------------------------------------------------------------------------

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline Constraint ordered(std::string text, std::size_t greater, std::size_t lesser, bool strict) {
  return Constraint{std::move(text), [=](PointView p) { return strict ? p[greater] > p[lesser] : p[greater] >= p[lesser]; }};
}

inline InequalityCase inequality(std::string id, std::string statement, CaseStatus status, Relation relation,
                                 DomainSpec domain, MarginFn margin, ScalarFn frontier = {}) {
  return InequalityCase{std::move(id), std::move(statement), status,           relation,
                        std::move(domain), std::move(margin), std::move(frontier)};
}

inline ClaimCheck claim(std::string id, std::string statement, ClaimKind kind, DomainSpec domain, ScalarFn target,
                        std::function<std::pair<double, double>(PointView)> definition, ScalarFn derivative = {}) {
  return ClaimCheck{std::move(id),     std::move(statement),  CaseStatus::Asserted,   kind,
                    std::move(domain), std::move(target),     std::move(definition), std::move(derivative)};
}

inline ScalarFn abs_diff(std::size_t i, std::size_t j) {
  return [=](PointView p) { return std::fabs(p[i] - p[j]); };
}

inline double log_psi(double x) { return std::log(digamma(x)); }

// Elementary digamma bounds on a log grid.
inline std::vector<CatalogEntry> lemma21_cases() {
  const DomainSpec dom{{closed("x", 1e-3, 1e4, Scale::Log)}, {}};
  std::vector<CatalogEntry> out;
  const auto add = [&](std::string id, std::string text, double (*pick)(const Lemma21Margins&)) {
    out.emplace_back(inequality(std::move(id), std::move(text), CaseStatus::Asserted, Relation::Strict, dom,
                                [pick](PointView p) -> std::optional<double> { return pick(check_lemma21(p[0])); }));
  };
  add("lem21-1", "ln x - 1/x < psi(x) < ln x - 1/(2x)",
      [](const Lemma21Margins& m) { return std::min(m.m1_lower, m.m1_upper); });
  add("lem21-2", "psi'(x) > 1/x + 1/(2x^2)", [](const Lemma21Margins& m) { return m.m2; });
  add("lem21-3", "psi''(x) < 1/x - 2 psi'(x)", [](const Lemma21Margins& m) { return m.m3; });
  add("lem21-4", "psi'(x)^2 + psi''(x) > 0", [](const Lemma21Margins& m) { return m.m4; });
  add("lem21-5", "psi'(x) exp(psi(x)) < 1", [](const Lemma21Margins& m) { return m.m5; });
  return out;
}

inline std::vector<CatalogEntry> build_catalog() {
  const DerivedConstants& k = derived_constants();
  const double c = k.c;
  const double cosh1 = std::cosh(1.0);
  std::vector<CatalogEntry> cases = lemma21_cases();

  // Gamma(1+x)^a / Gamma(1-ax) on the positive branch.
  cases.emplace_back(claim(
      "sth-decreasing", "Gamma(1+x)^a / Gamma(1-ax) is decreasing on [0, 1/a)", ClaimKind::Decreasing,
      DomainSpec{{left_closed("x", 0.0, 1.0), choice("a", {1.0, 1.5, 2.0, 5.0})},
                 {{"x <= 1/a - 1e-3", [](PointView p) { return p[0] <= 1.0 / p[1] - 1e-3; }}}},
      [](PointView p) { return std::exp(p[1] * log_gamma(1.0 + p[0]) - log_gamma(1.0 - p[1] * p[0])); },
      [](PointView p) { return std::pair{-1.0, 1.0 / p[1]}; }));

  // psi(1+bx)^a / psi(1+ax)^b
  const auto r1_target = [](PointView p) {
    const double x = p[0], a = p[1], b = p[2];
    return std::pow(digamma(1.0 + b * x), a) / std::pow(digamma(1.0 + a * x), b);
  };
  const auto r1_definition = [c](PointView p) { return std::pair{(c - 1.0) / std::min(p[1], p[2]), kInf}; };
  cases.emplace_back(claim("thm-r1-monotone-inc",
                           "psi(1+bx)^a / psi(1+ax)^b is increasing on (1/2, inf) for a > 2, b > 1, a > b",
                           ClaimKind::Increasing,
                           DomainSpec{{open("x", 0.5, kInf, 1e4), choice("a", {2.5, 3.0, 5.0, 10.0}),
                                       choice("b", {1.5, 2.0, 3.0})},
                                      {ordered("a > b", 1, 2, true)}},
                           r1_target, r1_definition));
  cases.emplace_back(claim("thm-r1-monotone-dec",
                           "psi(1+bx)^a / psi(1+ax)^b is decreasing on (1/2, inf) for a > 1, b > 2, a < b",
                           ClaimKind::Decreasing,
                           DomainSpec{{open("x", 0.5, kInf, 1e4), choice("a", {1.5, 2.0, 3.0}),
                                       choice("b", {2.5, 3.0, 5.0, 10.0})},
                                      {ordered("a < b", 2, 1, true)}},
                           r1_target, r1_definition));

  const auto frontier_half = [](PointView p) { return p[0] - 0.5; };
  cases.emplace_back(inequality(
      "thm-r1-ineq1", "(psi(1+b/2)/psi(1+bx))^a < (psi(1+a/2)/psi(1+ax))^b, x > 1/2, a > 2, b > 1, a > b",
      CaseStatus::Asserted, Relation::Strict,
      DomainSpec{{open("x", 0.5, kInf, 1e4), open("a", 2.0, 12.0), open("b", 1.0, 12.0)},
                 {ordered("a > b", 1, 2, true)}},
      [](PointView p) -> std::optional<double> {
        const double x = p[0], a = p[1], b = p[2];
        return b * (log_psi(1.0 + 0.5 * a) - log_psi(1.0 + a * x)) -
               a * (log_psi(1.0 + 0.5 * b) - log_psi(1.0 + b * x));
      },
      frontier_half));
  cases.emplace_back(inequality(
      "thm-r1-ineq2", "(psi(1+bx)/psi(1+b/2))^a < (psi(1+ax)/psi(1+a/2))^b, x > 1/2, a > 1, b > 2, a < b",
      CaseStatus::Asserted, Relation::Strict,
      DomainSpec{{open("x", 0.5, kInf, 1e4), open("a", 1.0, 12.0), open("b", 2.0, 12.0)},
                 {ordered("a < b", 2, 1, true)}},
      [](PointView p) -> std::optional<double> {
        const double x = p[0], a = p[1], b = p[2];
        return b * (log_psi(1.0 + a * x) - log_psi(1.0 + 0.5 * a)) -
               a * (log_psi(1.0 + b * x) - log_psi(1.0 + 0.5 * b));
      },
      frontier_half));
  cases.emplace_back(inequality(
      "thm-r1-ineq3", "C psi(1+2x) < psi(1+x)^2, x > 1/2, C = psi(3/2)^2 / psi(2)", CaseStatus::Asserted,
      Relation::Strict, DomainSpec{{open("x", 0.5, kInf, 1e6)}, {}},
      [C = k.C](PointView p) -> std::optional<double> {
        const double q = digamma(1.0 + p[0]);
        return q * q - C * digamma(1.0 + 2.0 * p[0]);
      },
      frontier_half));

  // 1 / psi(cosh x)
  const auto r4_target = [](PointView p) { return 1.0 / digamma(std::cosh(p[0])); };
  const auto r4_derivative = [](PointView p) {
    const double r = std::cosh(p[0]);
    const double q = digamma(r);
    return -trigamma(r) * std::sinh(p[0]) / (q * q);
  };
  const auto r4_definition = [c](PointView) { return std::pair{std::acosh(c), 700.0}; };
  cases.emplace_back(claim("thm-r4-decreasing", "1/psi(cosh x) is decreasing on (1, inf)", ClaimKind::Decreasing,
                           DomainSpec{{open("x", 1.0, kInf, 300.0)}, {}}, r4_target, r4_definition, r4_derivative));
  cases.emplace_back(claim("thm-r4-convex", "1/psi(cosh x) is convex on (1, inf)", ClaimKind::Convex,
                           DomainSpec{{open("x", 1.0, kInf, 300.0)}, {}}, r4_target, r4_definition, r4_derivative));

  const auto harmonic = [](double r, double s, double inner) -> std::optional<double> {
    const double pr = digamma(r);
    const double ps = digamma(s);
    return pr + ps - 2.0 * pr * ps / digamma(inner);
  };
  cases.emplace_back(inequality(
      "thm-r4-harmonic", "2 psi(r) psi(s) / psi(cosh_half_sum(r, s)) <= psi(r) + psi(s), r, s in (cosh 1, inf)",
      CaseStatus::AssertedWithCorrection, Relation::NonStrict,
      DomainSpec{{open("r", cosh1, kInf, 1e6), open("s", cosh1, kInf, 1e6)}, {}},
      [harmonic](PointView p) { return harmonic(p[0], p[1], cosh_half_sum(p[0], p[1])); }, abs_diff(0, 1)));
  cases.emplace_back(inequality(
      "thm-r4-harmonic-printed",
      "2 psi(r) psi(s) / psi(sqrt((1 + rs + r's')/(rs))) <= psi(r) + psi(s), z' = sqrt(1 - z^2), r, s in (1, inf)",
      CaseStatus::Empirical, Relation::NonStrict,
      DomainSpec{{open("r", 1.0, kInf, 1e6), open("s", 1.0, kInf, 1e6)}, {}},
      [harmonic](PointView p) {
        const double r = p[0], s = p[1];
        // r' s' = (i sqrt(r^2-1)) (i sqrt(s^2-1)) for r, s > 1
        const double cross = -std::sqrt((r - 1.0) * (r + 1.0)) * std::sqrt((s - 1.0) * (s + 1.0));
        return harmonic(r, s, std::sqrt((1.0 + r * s + cross) / (r * s)));
      },
      abs_diff(0, 1)));
  cases.emplace_back(inequality(
      "thm-r4-harmonic-printed-domain",
      "2 psi(r) psi(s) / psi(cosh_half_sum(r, s)) <= psi(r) + psi(s), r, s in (1, inf)", CaseStatus::Empirical,
      Relation::NonStrict, DomainSpec{{open("r", 1.0, kInf, 1e6), open("s", 1.0, kInf, 1e6)}, {}},
      [harmonic](PointView p) { return harmonic(p[0], p[1], cosh_half_sum(p[0], p[1])); }, abs_diff(0, 1)));

  cases.emplace_back(claim(
      "lem4b-decreasing", "psi'(cosh x) sinh x / psi(cosh x)^2 is decreasing on (1, inf)", ClaimKind::Decreasing,
      DomainSpec{{open("x", 1.0, kInf, 300.0)}, {}},
      [](PointView p) {
        const double r = std::cosh(p[0]);
        const double q = digamma(r);
        return trigamma(r) * std::sinh(p[0]) / (q * q);
      },
      r4_definition));

  cases.emplace_back(inequality(
      "cor-r2-powerratio", "(psi(x)/psi(y))^k <= psi(kx)/psi(ky), k > 1, c < x <= y", CaseStatus::Asserted,
      Relation::NonStrict,
      DomainSpec{{open("x", c, kInf, 1e4), open("y", c, kInf, 1e4), choice("k", {1.5, 2.0, 3.0, 10.0})},
                 {ordered("x <= y", 1, 0, false)}},
      [](PointView p) -> std::optional<double> {
        const double x = p[0], y = p[1], kk = p[2];
        return (log_psi(kk * x) - log_psi(kk * y)) - kk * (log_psi(x) - log_psi(y));
      },
      abs_diff(0, 1)));

  // artanh(psi(tanh x))
  const auto r5_claim_target = [](PointView p) { return r5_target(p[0]); };
  const auto r5_definition = [lo = k.r5_lo](PointView) { return std::pair{lo, kInf}; };
  const auto r5_claim_derivative = [](PointView p) { return r5_derivative(p[0]); };
  cases.emplace_back(claim("cor-r5-increasing", "artanh(psi(tanh x)) is strictly increasing on (c, inf)",
                           ClaimKind::Increasing, DomainSpec{{open("x", c, kInf, 30.0)}, {}}, r5_claim_target,
                           r5_definition, r5_claim_derivative));
  cases.emplace_back(claim("cor-r5-concave", "artanh(psi(tanh x)) is concave on (c, inf)", ClaimKind::Concave,
                           DomainSpec{{open("x", c, kInf, 30.0)}, {}}, r5_claim_target, r5_definition,
                           r5_claim_derivative));

  cases.emplace_back(inequality(
      "cor-r5-ineq1",
      "psi((r+s)/(1+rs+r's')) > (psi(r)+psi(s)) / (1 + psi(r)psi(s) + sqrt(1-psi(r)^2) sqrt(1-psi(s)^2)), r, s in (0,1)",
      CaseStatus::Asserted, Relation::Strict, DomainSpec{{open("r", 0.0, 1.0), open("s", 0.0, 1.0)}, {}},
      [](PointView p) -> std::optional<double> {
        const double r = p[0], s = p[1];
        const double A = digamma(r);
        const double B = digamma(s);
        if (!(std::fabs(A) < 1.0) || !(std::fabs(B) < 1.0)) return std::nullopt;
        const double inner = (r + s) / (1.0 + r * s + std::sqrt(1.0 - r * r) * std::sqrt(1.0 - s * s));
        const double rhs = (A + B) / (1.0 + A * B + std::sqrt(1.0 - A * A) * std::sqrt(1.0 - B * B));
        return digamma(inner) - rhs;
      },
      abs_diff(0, 1)));
  cases.emplace_back(inequality(
      "cor-r5-ineq2",
      "psi((r+s)/(1+rs)) > tanh(artanh((psi(2r)+psi(2s)) / (1+psi(2r)psi(2s))) / 2), r, s in (0,1)",
      CaseStatus::Empirical, Relation::Strict, DomainSpec{{open("r", 0.0, 1.0), open("s", 0.0, 1.0)}, {}},
      [](PointView p) -> std::optional<double> {
        const double r = p[0], s = p[1];
        const double A = digamma(2.0 * r);
        const double B = digamma(2.0 * s);
        const double den = 1.0 + A * B;
        if (den == 0.0) return std::nullopt;
        const double q = (A + B) / den;
        if (!(std::fabs(q) < 1.0)) return std::nullopt;
        return digamma((r + s) / (1.0 + r * s)) - std::tanh(0.5 * std::atanh(q));
      },
      abs_diff(0, 1)));

  const auto r5_ineq3 = [a = k.a](PointView p) -> std::optional<double> {
    const double r = p[0], s = p[1];
    const auto log_ratio = [](double t) {
      const double A = digamma(std::tanh(t));
      return std::log((1.0 + A) / (1.0 - A));
    };
    return 2.0 * a * (r - s) - (log_ratio(r) - log_ratio(s));
  };
  cases.emplace_back(inequality(
      "cor-r5-ineq3",
      "(1+psi(tanh r))/(1-psi(tanh r)) * (1-psi(tanh s))/(1+psi(tanh s)) < exp(2a(r-s)), c < s <= r",
      CaseStatus::Asserted, Relation::Strict,
      DomainSpec{{open("r", c, kInf, 1e3), open("s", c, kInf, 1e3)}, {ordered("r >= s", 0, 1, false)}}, r5_ineq3,
      abs_diff(0, 1)));
  cases.emplace_back(inequality(
      "cor-r5-ineq3-printed-domain",
      "(1+psi(tanh r))/(1-psi(tanh r)) * (1-psi(tanh s))/(1+psi(tanh s)) < exp(2a(r-s)), r, s in (c, inf)",
      CaseStatus::Empirical, Relation::Strict,
      DomainSpec{{open("r", c, kInf, 1e3), open("s", c, kInf, 1e3)}, {}}, r5_ineq3, abs_diff(0, 1)));

  cases.emplace_back(inequality(
      "cor-r3-geomean", "psi(sqrt(rs)) >= sqrt(psi(r) psi(s)), r, s in (c, inf)", CaseStatus::Asserted,
      Relation::NonStrict, DomainSpec{{open("r", c, kInf, 1e6), open("s", c, kInf, 1e6)}, {}},
      [](PointView p) -> std::optional<double> {
        return digamma(std::sqrt(p[0] * p[1])) - std::sqrt(digamma(p[0]) * digamma(p[1]));
      },
      abs_diff(0, 1)));
  const auto frontier_k = [](PointView p) { return std::fabs(p[1] - 1.0); };
  cases.emplace_back(inequality(
      "cor-r3-power-k-lt1", "psi(r^k) < psi(r)^k, k in (0,1), r > c, r^k > c", CaseStatus::Asserted,
      Relation::Strict,
      DomainSpec{{open("r", c, kInf, 1e6), open("k", 0.0, 1.0)},
                 {{"r^k > c", [c](PointView p) { return std::pow(p[0], p[1]) > c; }}}},
      [](PointView p) -> std::optional<double> {
        return p[1] * log_psi(p[0]) - log_psi(std::pow(p[0], p[1]));
      },
      frontier_k));
  cases.emplace_back(inequality(
      "cor-r3-power-k-gt1", "psi(r)^k < psi(r^k), k > 1, r > c", CaseStatus::Asserted, Relation::Strict,
      DomainSpec{{open("r", c, kInf, 1e6), left_open("k", 1.0, 10.0)}, {}},
      [](PointView p) -> std::optional<double> {
        return log_psi(std::pow(p[0], p[1])) - p[1] * log_psi(p[0]);
      },
      frontier_k));

  cases.emplace_back(inequality(
      "thm-ball-1", "sqrt(Omega_{2n} Omega_{2n-2}) <= Omega_{2n-1}, n >= 1", CaseStatus::Asserted,
      Relation::NonStrict, DomainSpec{{integer("n", 1, 1000)}, {}},
      [](PointView p) -> std::optional<double> { return ball_ineq_1(static_cast<int>(p[0])); }));
  cases.emplace_back(inequality(
      "thm-ball-2", "(Omega_{n-1}/Omega_n)^k <= Omega_{k(n-1)}/Omega_{kn}, n, k >= 1", CaseStatus::Asserted,
      Relation::NonStrict, DomainSpec{{integer("n", 1, 50), integer("k", 1, 50)}, {}},
      [](PointView p) -> std::optional<double> {
        return ball_ineq_2(static_cast<int>(p[0]), static_cast<int>(p[1]));
      },
      [](PointView p) { return p[1] - 1.0; }));
  cases.emplace_back(inequality(
      "ball-logconvex", "ln(1/Omega_n) is midpoint convex in n: -ln Omega_n <= (-ln Omega_{n-1} - ln Omega_{n+1})/2",
      CaseStatus::Asserted, Relation::NonStrict, DomainSpec{{integer("n", 1, 1000)}, {}},
      [](PointView p) -> std::optional<double> { return ball_log_convexity(static_cast<int>(p[0])); }));
  cases.emplace_back(inequality(
      "cor-grunbaum-ball", "(1 + Omega_{r+s})/Omega_{r+s} >= (Omega_r + Omega_s)/(Omega_r Omega_s), r, s >= 2",
      CaseStatus::Asserted, Relation::NonStrict, DomainSpec{{integer("r", 2, 200), integer("s", 2, 200)}, {}},
      [](PointView p) -> std::optional<double> {
        return grunbaum_ball(static_cast<int>(p[0]), static_cast<int>(p[1]));
      }));
  cases.emplace_back(inequality(
      "cor-grunbaum-ball-real",
      "(1 + Omega_{r+s})/Omega_{r+s} >= (Omega_r + Omega_s)/(Omega_r Omega_s), real r, s >= 2",
      CaseStatus::Empirical, Relation::NonStrict, DomainSpec{{closed("r", 2.0, 200.0), closed("s", 2.0, 200.0)}, {}},
      [](PointView p) -> std::optional<double> { return grunbaum_ball_real(p[0], p[1]); }));

  cases.emplace_back(inequality(
      "cor-grunbaum-psi", "(r + s + psi(r+s)) / (r psi(s) + s psi(r)) >= (r+s)/(rs), r, s in (c, inf)",
      CaseStatus::Asserted, Relation::NonStrict, DomainSpec{{open("r", c, kInf, 1e6), open("s", c, kInf, 1e6)}, {}},
      [](PointView p) -> std::optional<double> {
        const double r = p[0], s = p[1];
        return (r + s + digamma(r + s)) / (r * digamma(s) + s * digamma(r)) - (r + s) / (r * s);
      }));

  cases.emplace_back(claim(
      "proof-fact-logpsi-exp-concave", "ln psi(e^x) is concave for x > t, psi(e^t) = 1", ClaimKind::Concave,
      DomainSpec{{open("x", k.t, kInf, 50.0)}, {}}, [](PointView p) { return log_psi(std::exp(p[0])); },
      [c](PointView) { return std::pair{std::log(c), 700.0}; }));
  cases.emplace_back(claim(
      "proof-fact-log-inv-psi-convex", "ln(1/psi(x)) is convex on (c, inf)", ClaimKind::Convex,
      DomainSpec{{open("x", c, kInf, 1e6)}, {}}, [](PointView p) { return -log_psi(p[0]); },
      [c](PointView) { return std::pair{c, kInf}; }));
  cases.emplace_back(claim(
      "proof-fact-ball-log-convex", "ln(x Gamma(x) / pi^x) is convex for x > 1/2", ClaimKind::Convex,
      DomainSpec{{open("x", 0.5, kInf, 1e6)}, {}},
      [](PointView p) { return std::log(p[0]) + log_gamma(p[0]) - p[0] * std::log(kPi); },
      [](PointView) { return std::pair{0.0, kInf}; }));

  return cases;
}

}  // namespace detail

/// Noise allowance for finite differences: a difference quotient counts as
/// having the wrong sign only below -kFdNoise * max(1, |f(x)|) / h^order.
inline constexpr double kFdNoise = 1e-9;

struct ClaimSample {
  double margin = 0.0;     // claimed-sign difference quotient
  double tolerance = 0.0;  // violation threshold is -tolerance
};

/// Finite-difference sample of a claim at point p (x = p[0]).
/// First differences use h = fd_step max(1, |x|); second differences use
/// sqrt(fd_step) max(1, |x|). The stencil is shrunk to stay inside the
/// claim's definition interval.
inline ClaimSample claim_sample(const ClaimCheck& claim, PointView p, double fd_step) {
  const bool second_order = claim.kind == ClaimKind::Convex || claim.kind == ClaimKind::Concave;
  const double x = p[0];
  const auto [def_lo, def_hi] = claim.definition(p);
  double h = (second_order ? std::sqrt(fd_step) : fd_step) * std::max(1.0, std::fabs(x));
  h = std::min({h, 0.5 * (x - def_lo), 0.5 * (def_hi - x)});
  if (!(h > 0.0)) {
    throw EvalError(ErrorKind::OutOfDomain, claim.id + ": point outside the definition interval");
  }
  Point q(p.begin(), p.end());
  const double f0 = claim.target(q);
  q[0] = x + h;
  h = q[0] - x;  // representable step
  const double fp = claim.target(q);
  q[0] = x - h;
  const double fm = claim.target(q);

  ClaimSample out;
  const double scale = kFdNoise * std::max(1.0, std::fabs(f0));
  double d = 0.0;
  if (second_order) {
    d = (fp - 2.0 * f0 + fm) / (h * h);
    out.tolerance = scale / (h * h);
  } else {
    d = (fp - fm) / (2.0 * h);
    out.tolerance = scale / (2.0 * h);
  }
  const bool positive_sign = claim.kind == ClaimKind::Increasing || claim.kind == ClaimKind::Convex;
  out.margin = positive_sign ? d : -d;
  return out;
}

class Catalog {
 public:
  Catalog() : entries_(detail::build_catalog()) {}

  [[nodiscard]] const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

  [[nodiscard]] std::vector<std::string> list_cases() const {
    std::vector<std::string> ids;
    ids.reserve(entries_.size());
    for (const auto& e : entries_) ids.push_back(id_of(e));
    return ids;
  }

  [[nodiscard]] const CatalogEntry* find(std::string_view id) const {
    const auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) { return id_of(e) == id; });
    return it == entries_.end() ? nullptr : &*it;
  }

  [[nodiscard]] const CatalogEntry& at(std::string_view id) const {
    const CatalogEntry* e = find(id);
    if (e == nullptr) throw UnknownCase(std::string(id));
    return *e;
  }

  /// Margin of case `id` at `point`. Boundary points of open intervals are
  /// accepted so equality frontiers can be probed directly.
  [[nodiscard]] double margin(std::string_view id, PointView point, double fd_step = 1e-5) const {
    const CatalogEntry& e = at(id);
    if (!domain_of(e).contains(point, /*closure=*/true)) {
      throw EvalError(ErrorKind::OutOfDomain, std::string(id) + ": point outside the case domain");
    }
    if (const auto* ineq = std::get_if<InequalityCase>(&e)) {
      const auto m = ineq->margin(point);
      if (!m) throw EvalError(ErrorKind::OutOfDomain, std::string(id) + ": outside the derivation domain");
      return *m;
    }
    return claim_sample(std::get<ClaimCheck>(e), point, fd_step).margin;
  }

 private:
  std::vector<CatalogEntry> entries_;
};

inline const Catalog& catalog() {
  static const Catalog instance;
  return instance;
}

inline std::vector<std::string> list_cases() { return catalog().list_cases(); }

inline double margin(std::string_view id, PointView point) { return catalog().margin(id, point); }

}  // namespace psicert
