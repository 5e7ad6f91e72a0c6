#pragma once

// Sampling engine over catalog entries.
//
// The sample range [0, n) is cut into contiguous chunks, one per thread, and
// the per-chunk tallies are merged in chunk order. Every reduction is either a
// sum, a minimum with ties broken by the lowest sample index, or a prefix of
// the index-ordered violation list, so results do not depend on the thread
// count.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "psicert/catalog.hpp"
#include "psicert/domain.hpp"
#include "psicert/error.hpp"

namespace psicert {

enum class CheckStatus { Pass, Fail, EmpiricalPass, EmpiricalFail, Undetermined };

constexpr std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::EmpiricalPass: return "empirical-pass";
    case CheckStatus::EmpiricalFail: return "empirical-fail";
    case CheckStatus::Undetermined: return "undetermined";
  }
  return "undetermined";
}

inline std::optional<CheckStatus> parse_check_status(std::string_view s) {
  for (auto st : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::EmpiricalPass, CheckStatus::EmpiricalFail,
                  CheckStatus::Undetermined}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

struct Violation {
  Point point;
  double margin = 0.0;

  bool operator==(const Violation&) const = default;
};

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Undetermined;
  std::size_t n_samples = 0;
  std::size_t n_evaluated = 0;
  std::size_t n_skipped = 0;  // no admissible point, or outside the derivation domain
  std::size_t n_errors = 0;   // evaluation raised an EvalError or produced NaN
  std::size_t n_violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  Point argmin;
  std::vector<Violation> violations;  // lowest-index violations, at most kMaxStoredViolations

  bool operator==(const CheckResult&) const = default;
};

inline constexpr std::size_t kMaxStoredViolations = 32;
inline constexpr double kNearEqualitySlack = 1e-12;
inline constexpr double kFrontierBand = 1e-6;

namespace detail {

enum class Outcome { Evaluated, Skipped, Error };

struct SampleOutcome {
  Outcome outcome = Outcome::Skipped;
  double margin = 0.0;
  bool violated = false;
};

inline SampleOutcome evaluate(const InequalityCase& c, PointView p, const SampleConfig&) {
  std::optional<double> m;
  try {
    m = c.margin(p);
  } catch (const EvalError&) {
    return {Outcome::Error, 0.0, false};
  }
  if (!m) return {Outcome::Skipped, 0.0, false};
  if (std::isnan(*m)) return {Outcome::Error, 0.0, false};
  bool violated = *m < -kNearEqualitySlack;
  if (c.relation == Relation::Strict) {
    const bool near_frontier = c.frontier_distance && c.frontier_distance(p) <= kFrontierBand;
    if (!near_frontier) violated = !(*m > 0.0);
  }
  return {Outcome::Evaluated, *m, violated};
}

inline SampleOutcome evaluate(const ClaimCheck& c, PointView p, const SampleConfig& config) {
  try {
    const ClaimSample s = claim_sample(c, p, config.fd_step);
    if (std::isnan(s.margin)) return {Outcome::Error, 0.0, false};
    return {Outcome::Evaluated, s.margin, s.margin < -s.tolerance};
  } catch (const EvalError&) {
    return {Outcome::Error, 0.0, false};
  }
}

struct Tally {
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::size_t errors = 0;
  std::size_t violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  Point argmin;
  bool has_min = false;
  std::vector<Violation> stored;
};

template <class Case>
Tally run_chunk(const Case& c, const SampleConfig& config, std::uint64_t stream, std::size_t begin,
                std::size_t end) {
  Tally t;
  for (std::size_t i = begin; i < end; ++i) {
    const std::optional<Point> p = sample_point(c.domain, config, stream, i, config.n_samples);
    if (!p) {
      ++t.skipped;
      continue;
    }
    const SampleOutcome o = evaluate(c, *p, config);
    switch (o.outcome) {
      case Outcome::Skipped: ++t.skipped; continue;
      case Outcome::Error: ++t.errors; continue;
      case Outcome::Evaluated: break;
    }
    ++t.evaluated;
    if (!t.has_min || o.margin < t.min_margin) {
      t.min_margin = o.margin;
      t.argmin = *p;
      t.has_min = true;
    }
    if (o.violated) {
      ++t.violations;
      if (t.stored.size() < kMaxStoredViolations) t.stored.push_back({*p, o.margin});
    }
  }
  return t;
}

inline void merge_into(Tally& acc, Tally&& next) {
  acc.evaluated += next.evaluated;
  acc.skipped += next.skipped;
  acc.errors += next.errors;
  acc.violations += next.violations;
  if (next.has_min && (!acc.has_min || next.min_margin < acc.min_margin)) {
    acc.min_margin = next.min_margin;
    acc.argmin = std::move(next.argmin);
    acc.has_min = true;
  }
  for (auto& v : next.stored) {
    if (acc.stored.size() >= kMaxStoredViolations) break;
    acc.stored.push_back(std::move(v));
  }
}

template <class Case>
CheckResult run_entry(const Case& c, const SampleConfig& config, unsigned threads) {
  const std::uint64_t stream = case_stream(config.seed, c.id);
  const std::size_t n = config.n_samples;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));

  std::vector<Tally> tallies(workers);
  if (workers == 1) {
    tallies[0] = run_chunk(c, config, stream, 0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = n * w / workers;
      const std::size_t end = n * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { tallies[w] = run_chunk(c, config, stream, begin, end); });
    }
    for (auto& th : pool) th.join();
  }
  Tally total;
  for (auto& t : tallies) merge_into(total, std::move(t));

  CheckResult r;
  r.id = c.id;
  r.n_samples = n;
  r.n_evaluated = total.evaluated;
  r.n_skipped = total.skipped + total.errors;
  r.n_errors = total.errors;
  r.n_violations = total.violations;
  r.min_margin = total.min_margin;
  r.argmin = std::move(total.argmin);
  r.violations = std::move(total.stored);

  const bool clean = total.violations == 0 && total.errors == 0;
  if (total.evaluated == 0) {
    r.status = CheckStatus::Undetermined;
  } else if (is_asserted(c.status)) {
    r.status = clean ? CheckStatus::Pass : CheckStatus::Fail;
  } else {
    r.status = clean ? CheckStatus::EmpiricalPass : CheckStatus::EmpiricalFail;
  }
  return r;
}

}  // namespace detail

inline CheckResult run_case(const CatalogEntry& entry, const SampleConfig& config, unsigned threads = 1) {
  return std::visit([&](const auto& c) { return detail::run_entry(c, config, threads); }, entry);
}

inline CheckResult run_case(std::string_view id, const SampleConfig& config, unsigned threads = 1) {
  return run_case(catalog().at(id), config, threads);
}

inline CheckResult check_monotone(const ClaimCheck& claim, const SampleConfig& config, unsigned threads = 1) {
  return detail::run_entry(claim, config, threads);
}

inline std::vector<CheckResult> run_all(const SampleConfig& config, unsigned threads = 1) {
  std::vector<CheckResult> out;
  out.reserve(catalog().entries().size());
  for (const auto& e : catalog().entries()) out.push_back(run_case(e, config, threads));
  return out;
}

/// 0 when no asserted case failed, 1 otherwise.
inline int exit_code(const std::vector<CheckResult>& results) {
  const bool failed = std::any_of(results.begin(), results.end(),
                                  [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
  return failed ? 1 : 0;
}

/// Largest relative gap between a claim's explicit derivative and a central
/// difference, over n evenly spaced x in [lo, hi] (other coordinates from `params`).
inline double cross_check_derivative(const ClaimCheck& claim, double lo, double hi, std::size_t n,
                                     Point params = {}, double fd_step = 1e-5) {
  if (!claim.derivative) {
    throw EvalError(ErrorKind::OutOfDomain, claim.id + ": no explicit derivative");
  }
  Point p(1 + params.size());
  std::copy(params.begin(), params.end(), p.begin() + 1);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    p[0] = x;
    const auto [def_lo, def_hi] = claim.definition(p);
    double h = std::min({fd_step * std::max(1.0, std::fabs(x)), 0.5 * (x - def_lo), 0.5 * (def_hi - x)});
    p[0] = x + h;
    h = p[0] - x;
    const double fp = claim.target(p);
    p[0] = x - h;
    const double fm = claim.target(p);
    p[0] = x;
    const double fd = (fp - fm) / (2.0 * h);
    const double exact = claim.derivative(p);
    const double rel = std::fabs(fd - exact) / std::max(std::fabs(exact), std::numeric_limits<double>::min());
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace psicert
