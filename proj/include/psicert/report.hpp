#pragma once

// JSON reports and the constants table.
//
// Numbers are written in shortest round-trip form; non-finite values become
// null. The thread count is deliberately absent from the report.

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "psicert/catalog.hpp"
#include "psicert/specfun.hpp"
#include "psicert/verifier.hpp"

namespace psicert {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t empirical_pass = 0;
  std::size_t empirical_fail = 0;
  std::size_t undetermined = 0;

  bool operator==(const Summary&) const = default;
};

inline Summary summarize(const std::vector<CheckResult>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::Pass: ++s.pass; break;
      case CheckStatus::Fail: ++s.fail; break;
      case CheckStatus::EmpiricalPass: ++s.empirical_pass; break;
      case CheckStatus::EmpiricalFail: ++s.empirical_fail; break;
      case CheckStatus::Undetermined: ++s.undetermined; break;
    }
  }
  return s;
}

struct Report {
  std::string version{kToolVersion};
  std::string catalog_version{kCatalogVersion};
  SampleConfig config;
  std::vector<CheckResult> cases;
  Summary summary;
};

inline Report make_report(const SampleConfig& config, std::vector<CheckResult> results) {
  Report r;
  r.config = config;
  r.summary = summarize(results);
  r.cases = std::move(results);
  return r;
}

namespace detail {

inline nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

inline double read_number(const nlohmann::json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

inline nlohmann::json point_json(const Point& p) {
  auto arr = nlohmann::json::array();
  for (double v : p) arr.push_back(number(v));
  return arr;
}

inline Point read_point(const nlohmann::json& j) {
  Point p;
  for (const auto& v : j) p.push_back(v.is_null() ? std::nan("") : v.get<double>());
  return p;
}

}  // namespace detail

inline nlohmann::json to_json(const CheckResult& r) {
  auto violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"point", detail::point_json(v.point)}, {"margin", detail::number(v.margin)}});
  }
  return {
      {"id", r.id},
      {"status", std::string(to_string(r.status))},
      {"n_samples", r.n_samples},
      {"n_evaluated", r.n_evaluated},
      {"n_skipped", r.n_skipped},
      {"n_errors", r.n_errors},
      {"n_violations", r.n_violations},
      {"min_margin", detail::number(r.min_margin)},
      {"argmin", detail::point_json(r.argmin)},
      {"violations", std::move(violations)},
  };
}

inline CheckResult check_result_from_json(const nlohmann::json& j) {
  CheckResult r;
  r.id = j.at("id").get<std::string>();
  const auto status = parse_check_status(j.at("status").get<std::string>());
  if (!status) throw std::invalid_argument("unknown status in report: " + j.at("status").get<std::string>());
  r.status = *status;
  r.n_samples = j.at("n_samples").get<std::size_t>();
  r.n_evaluated = j.at("n_evaluated").get<std::size_t>();
  r.n_skipped = j.at("n_skipped").get<std::size_t>();
  r.n_errors = j.at("n_errors").get<std::size_t>();
  r.n_violations = j.at("n_violations").get<std::size_t>();
  r.min_margin = detail::read_number(j.at("min_margin"));
  r.argmin = detail::read_point(j.at("argmin"));
  for (const auto& v : j.at("violations")) {
    r.violations.push_back({detail::read_point(v.at("point")), detail::read_number(v.at("margin"))});
  }
  return r;
}

inline nlohmann::json to_json(const Summary& s) {
  return {{"pass", s.pass},
          {"fail", s.fail},
          {"empirical_pass", s.empirical_pass},
          {"empirical_fail", s.empirical_fail},
          {"undetermined", s.undetermined}};
}

inline nlohmann::json to_json(const Report& r) {
  auto cases = nlohmann::json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  return {
      {"version", r.version},
      {"catalog_version", r.catalog_version},
      {"config",
       {{"seed", r.config.seed},
        {"samples", r.config.n_samples},
        {"strategy", std::string(to_string(r.config.strategy))},
        {"boundary_fraction", r.config.boundary_fraction},
        {"fd_step", r.config.fd_step}}},
      {"cases", std::move(cases)},
      {"summary", to_json(r.summary)},
  };
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.version = j.at("version").get<std::string>();
  r.catalog_version = j.at("catalog_version").get<std::string>();
  const auto& cfg = j.at("config");
  r.config.seed = cfg.at("seed").get<std::uint64_t>();
  r.config.n_samples = cfg.at("samples").get<std::size_t>();
  const auto strategy = parse_strategy(cfg.at("strategy").get<std::string>());
  if (!strategy) throw std::invalid_argument("unknown strategy in report");
  r.config.strategy = *strategy;
  r.config.boundary_fraction = cfg.at("boundary_fraction").get<double>();
  r.config.fd_step = cfg.at("fd_step").get<double>();
  for (const auto& c : j.at("cases")) r.cases.push_back(check_result_from_json(c));
  const auto& s = j.at("summary");
  r.summary = {s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(),
               s.at("empirical_pass").get<std::size_t>(), s.at("empirical_fail").get<std::size_t>(),
               s.at("undetermined").get<std::size_t>()};
  return r;
}

inline std::string serialize(const Report& r) { return to_json(r).dump(2) + "\n"; }

// ---------------------------------------------------------------------------

struct ConstantRow {
  std::string name;
  std::string description;
  double computed = 0.0;
  std::optional<double> printed;  // digits as published, when any were
  std::string printed_text;
  double tolerance = 0.0;

  [[nodiscard]] std::optional<double> diff() const {
    if (!printed) return std::nullopt;
    return std::fabs(computed - *printed);
  }
  [[nodiscard]] bool erratum() const {
    const auto d = diff();
    return d && *d > tolerance;
  }
};

inline std::vector<ConstantRow> constants_table() {
  const DerivedConstants& k = derived_constants();
  return {
      {"gamma", "Euler-Mascheroni constant, -psi(1)", -digamma(1.0), std::nullopt, "-", 0.0},
      {"c", "positive root of psi", k.c, 1.4616, "1.4616...", 1e-4},
      {"C", "psi(3/2)^2 / psi(2)", k.C, 0.0031, "0.0031...", 2e-4},
      {"f(1)", "1 / psi(cosh 1)", k.inv_psi_cosh1, 13.1559, "13.1559...", 1e-2},
      {"l", "artanh(psi(tanh c))", k.l, -0.9934, "-0.9934...", 1e-3},
      {"m", "-artanh(gamma)", k.m, -0.6582, "-0.6582...", 1e-3},
      {"a", "d/dx artanh(psi(tanh x)) at x = c", k.a, 0.8807, "0.8807...", 1e-3},
  };
}

inline std::string format_constants(const std::vector<ConstantRow>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-22s %-12s %-10s %s\n", "name", "computed", "published", "abs diff",
                "note");
  out += line;
  for (const auto& r : rows) {
    char diff[32] = "-";
    if (const auto d = r.diff()) std::snprintf(diff, sizeof diff, "%.2e", *d);
    const char* note = !r.printed ? "" : (r.erratum() ? "ERRATUM: published digits outside tolerance" : "ok");
    std::snprintf(line, sizeof line, "%-6s %-22.17g %-12s %-10s %s\n", r.name.c_str(), r.computed,
                  r.printed_text.c_str(), diff, note);
    out += line;
  }
  return out;
}

}  // namespace psicert
