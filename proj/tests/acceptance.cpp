// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polygamma_oracle.hpp"
#include "psicert/ballvol.hpp"
#include "psicert/catalog.hpp"
#include "psicert/combinators.hpp"
#include "psicert/report.hpp"
#include "psicert/specfun.hpp"
#include "psicert/verifier.hpp"

namespace {

using namespace psicert;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SampleConfig standard_config() {
  SampleConfig c;
  c.seed = 42;
  c.n_samples = 100000;
  return c;
}

Outcome kernel_accuracy() {
  constexpr int n = 10000;
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = 1e-3 * std::pow(1e7, static_cast<double>(i) / (n - 1));

  std::vector<double> p0(n), p1(n), p2(n);
  const auto t0 = Clock::now();
  for (int i = 0; i < n; ++i) {
    p0[i] = digamma(xs[i]);
    p1[i] = trigamma(xs[i]);
    p2[i] = tetragamma(xs[i]);
  }
  const double elapsed = seconds_since(t0);

  double e0 = 0.0, e1 = 0.0, e2 = 0.0;
  const auto err = [](double got, double want) { return std::fabs(got - want) / std::max(1.0, std::fabs(want)); };
  for (int i = 0; i < n; ++i) {
    e0 = std::max(e0, err(p0[i], oracle::digamma(xs[i])));
    e1 = std::max(e1, err(p1[i], oracle::trigamma(xs[i])));
    e2 = std::max(e2, err(p2[i], oracle::tetragamma(xs[i])));
  }
  const bool ok = e0 <= 1e-13 && e1 <= 1e-12 && e2 <= 1e-11 && elapsed < 1.0;
  return {ok, fmt("max err psi %.2e (<=1e-13), psi1 %.2e (<=1e-12), psi2 %.2e (<=1e-11); %.3f s (<1 s)", e0, e1,
                  e2, elapsed)};
}

Outcome constants_match() {
  bool ok = true;
  std::string detail;
  for (const auto& row : constants_table()) {
    if (!row.printed) continue;
    const double d = *row.diff();
    ok = ok && !row.erratum();
    detail += fmt("%s diff %.1e (tol %.0e)%s; ", row.name.c_str(), d, row.tolerance, row.erratum() ? " ERRATUM" : "");
  }
  return {ok, detail};
}

Outcome lemma_suite() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (const char* id : {"lem21-1", "lem21-2", "lem21-3", "lem21-4", "lem21-5"}) {
    const auto r = run_case(id, standard_config());
    ok = ok && r.status == CheckStatus::Pass;
    detail += fmt("%s %zu violations (min %.3g); ", id, r.n_violations, r.min_margin);
  }
  const double elapsed = seconds_since(t0);
  ok = ok && elapsed < 2.0;
  return {ok, detail + fmt("%.2f s (<2 s)", elapsed)};
}

Outcome theorem_suite() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string failing;
  std::size_t n_cases = 0;
  for (const auto& e : catalog().entries()) {
    const std::string& id = id_of(e);
    if (!is_asserted(status_of(e)) || id.rfind("lem21-", 0) == 0) continue;
    ++n_cases;
    const auto r = run_case(e, standard_config());
    if (r.status != CheckStatus::Pass || !(r.min_margin >= -1e-12)) {
      ok = false;
      failing += fmt("%s (%zu violations, min %.3g) ", id.c_str(), r.n_violations, r.min_margin);
    }
  }
  const double elapsed = seconds_since(t0);
  ok = ok && elapsed < 60.0;
  return {ok, fmt("%zu asserted cases, %.1f s (<60 s)", n_cases, elapsed) +
                  (failing.empty() ? std::string() : "; failing: " + failing)};
}

Outcome ball_suite() {
  double wallis = 0.0;
  for (int n = 0; n <= 60; ++n) wallis = std::max(wallis, std::fabs(log_omega(n) - omega_product_oracle(n)));
  bool ineq1 = true;
  for (int n = 1; n <= 30; ++n) ineq1 = ineq1 && ball_ineq_1(n) >= 0.0;
  bool ineq2 = true;
  double k1_row = 0.0;
  for (int n = 1; n <= 10; ++n) {
    k1_row = std::max(k1_row, std::fabs(ball_ineq_2(n, 1)));
    for (int k = 1; k <= 10; ++k) ineq2 = ineq2 && ball_ineq_2(n, k) >= -1e-12;
  }
  bool grunbaum = true;
  for (int r = 2; r <= 30; ++r) {
    for (int s = r; s <= 30; ++s) grunbaum = grunbaum && grunbaum_ball(r, s) >= 0.0;
  }
  bool convex = true;
  for (int n = 1; n <= 100; ++n) convex = convex && ball_log_convexity(n) >= 0.0;
  const bool ok = wallis <= 1e-12 && ineq1 && ineq2 && k1_row <= 1e-12 && grunbaum && convex;
  return {ok, fmt("wallis gap %.1e; ineq1 %s; ineq2 %s (k=1 row %.1e); grunbaum %s; log-convexity %s", wallis,
                  ineq1 ? "ok" : "FAIL", ineq2 ? "ok" : "FAIL", k1_row, grunbaum ? "ok" : "FAIL",
                  convex ? "ok" : "FAIL")};
}

Outcome equality_frontiers() {
  const double lo = std::cosh(1.0);
  double worst_h = 0.0, worst_g = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = lo * std::pow(1e6 / lo, (i + 0.5) / 100.0);
    const Point p{r, r};
    worst_h = std::max(worst_h, std::fabs(margin("thm-r4-harmonic", p)));
    worst_g = std::max(worst_g, std::fabs(margin("cor-r3-geomean", p)));
  }
  return {worst_h <= 1e-12 && worst_g <= 1e-12,
          fmt("max |margin| harmonic %.1e, geomean %.1e (<=1e-12)", worst_h, worst_g)};
}

Outcome empirical_recorded() {
  std::vector<CheckResult> results;
  for (const char* id : {"cor-r5-ineq2", "thm-r4-harmonic-printed"}) results.push_back(run_case(id, standard_config()));
  const auto j = to_json(make_report(standard_config(), results));
  bool ok = exit_code(results) == 0;
  std::string detail;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    ok = ok && (r.status == CheckStatus::EmpiricalPass || r.status == CheckStatus::EmpiricalFail) &&
         r.n_evaluated > 0 && j.at("cases")[i].at("status") == std::string(to_string(r.status));
    detail += fmt("%s %s (%zu/%zu violate); ", r.id.c_str(), std::string(to_string(r.status)).c_str(),
                  r.n_violations, r.n_evaluated);
  }
  return {ok, detail + "exit code unaffected"};
}

Outcome determinism() {
  const SampleConfig c = standard_config();
  const std::string a = serialize(make_report(c, run_all(c, 1)));
  const std::string b = serialize(make_report(c, run_all(c, 1)));
  const std::string d = serialize(make_report(c, run_all(c, 8)));
  return {a == b && a == d, fmt("report %zu bytes; repeat %s; threads 1 vs 8 %s", a.size(),
                                a == b ? "identical" : "DIFFERENT", a == d ? "identical" : "DIFFERENT")};
}

Outcome combinator_double_entry() {
  const DerivedConstants& k = derived_constants();
  const auto inv_psi = [](double t) { return 1.0 / digamma(t); };
  SplitMix64 rng(9);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double x = k.c + 1e-6 + 1e3 * rng.uniform() * rng.uniform();
    double y = k.c + 1e-6 + 1e3 * rng.uniform() * rng.uniform();
    if (x > y) std::swap(x, y);
    const double kk = std::array{1.5, 2.0, 3.0, 10.0}[i % 4];
    const Point p{x, y, kk};
    worst = std::max(worst, std::fabs(margin("cor-r2-powerratio", p) - neuman_check(inv_psi, kk, x, y)));
  }
  const auto& r4 = std::get<ClaimCheck>(catalog().at("thm-r4-decreasing"));
  const double fd = cross_check_derivative(r4, 1.0 + 1e-9, 30.0, 1000);
  return {worst <= 1e-12 && fd <= 1e-6,
          fmt("cor-r2 vs neuman max gap %.1e (<=1e-12); r4 derivative vs differences %.1e rel (<=1e-6)", worst, fd)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"kernel accuracy", kernel_accuracy},
      {"constants table", constants_match},
      {"digamma bound suite", lemma_suite},
      {"theorem suite", theorem_suite},
      {"ball suite", ball_suite},
      {"equality frontiers", equality_frontiers},
      {"empirical cases", empirical_recorded},
      {"determinism", determinism},
      {"combinator double-entry", combinator_double_entry},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    failures += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
