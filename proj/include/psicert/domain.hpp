#pragma once

// Parameter regions and deterministic sampling over them.
//
// Every sample index owns an independent SplitMix64 stream derived from
// (seed, case id, index), so the point drawn for a given index never depends
// on how the index range is split across threads or on which other cases
// exist.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psicert/error.hpp"

namespace psicert {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, Weyl increment
/// 0x9e3779b97f4a7c15, variant-13 finalizer.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a over the bytes of s.
constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Base of the per-case substream.
constexpr std::uint64_t case_stream(std::uint64_t seed, std::string_view case_id) noexcept {
  return SplitMix64::mix(SplitMix64::mix(seed) ^ fnv1a(case_id));
}

constexpr SplitMix64 sample_rng(std::uint64_t stream, std::uint64_t index) noexcept {
  return SplitMix64(SplitMix64::mix(stream + SplitMix64::mix(index + 1)));
}

enum class VarKind { Continuous, Integer, Choice };
enum class Scale { Linear, Log };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  double lo = 0.0;
  double hi = 0.0;  // +inf for unbounded
  bool lo_open = false;
  bool hi_open = false;
  Scale scale = Scale::Linear;
  double cap = std::numeric_limits<double>::infinity();  // sampling horizon when hi is +inf
  std::vector<double> choices;

  [[nodiscard]] bool unbounded() const noexcept { return std::isinf(hi); }

  [[nodiscard]] bool contains(double v, bool closure) const {
    switch (kind) {
      case VarKind::Choice:
        return std::find(choices.begin(), choices.end(), v) != choices.end();
      case VarKind::Integer:
        if (v != std::nearbyint(v)) return false;
        break;
      case VarKind::Continuous:
        if (!std::isfinite(v)) return false;
        break;
    }
    const bool above = (lo_open && !closure) ? v > lo : v >= lo;
    const bool below = (hi_open && !closure) ? v < hi : v <= hi;
    return above && below;
  }
};

/// Interval constructors. `open(x, 0.5, inf, 1e4)`: x in (0.5, inf), sampled below 1e4.
inline Variable open(std::string name, double lo, double hi, double cap = std::numeric_limits<double>::infinity()) {
  return Variable{std::move(name), VarKind::Continuous, lo, hi, true, true, Scale::Linear, cap, {}};
}
inline Variable closed(std::string name, double lo, double hi, Scale scale = Scale::Linear) {
  return Variable{std::move(name), VarKind::Continuous, lo, hi, false, false, scale,
                  std::numeric_limits<double>::infinity(), {}};
}
inline Variable left_closed(std::string name, double lo, double hi) {
  return Variable{std::move(name), VarKind::Continuous, lo, hi, false, true, Scale::Linear,
                  std::numeric_limits<double>::infinity(), {}};
}
inline Variable left_open(std::string name, double lo, double hi) {
  return Variable{std::move(name), VarKind::Continuous, lo, hi, true, false, Scale::Linear,
                  std::numeric_limits<double>::infinity(), {}};
}
inline Variable integer(std::string name, int lo, int hi) {
  return Variable{std::move(name), VarKind::Integer, static_cast<double>(lo), static_cast<double>(hi),
                  false, false, Scale::Linear, std::numeric_limits<double>::infinity(), {}};
}
inline Variable choice(std::string name, std::vector<double> values) {
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double lo = *mn;
  const double hi = *mx;
  return Variable{std::move(name), VarKind::Choice, lo, hi, false, false, Scale::Linear,
                  std::numeric_limits<double>::infinity(), std::move(values)};
}

using Point = std::vector<double>;
using PointView = std::span<const double>;

struct Constraint {
  std::string text;
  std::function<bool(PointView)> holds;
};

struct DomainSpec {
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;

  [[nodiscard]] std::size_t arity() const noexcept { return variables.size(); }

  /// closure = true accepts the boundary of open intervals (used when
  /// probing equality frontiers); sampling never produces such points.
  [[nodiscard]] bool contains(PointView p, bool closure = false) const {
    if (p.size() != variables.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!variables[i].contains(p[i], closure)) return false;
    }
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const Constraint& c) { return c.holds(p); });
  }

  [[nodiscard]] std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (variables[i].name == name) return i;
    }
    throw std::invalid_argument("no variable named " + std::string(name));
  }
};

enum class Strategy { Grid, Random, BoundaryBiased };

constexpr std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Grid: return "grid";
    case Strategy::Random: return "random";
    case Strategy::BoundaryBiased: return "boundary-biased";
  }
  return "random";
}

inline std::optional<Strategy> parse_strategy(std::string_view s) {
  if (s == "grid") return Strategy::Grid;
  if (s == "random") return Strategy::Random;
  if (s == "boundary-biased") return Strategy::BoundaryBiased;
  return std::nullopt;
}

struct SampleConfig {
  std::uint64_t seed = 42;
  std::size_t n_samples = 100000;
  Strategy strategy = Strategy::BoundaryBiased;
  double boundary_fraction = 0.1;
  double fd_step = 1e-5;
};

namespace detail {

inline constexpr int kRejectionBudget = 200;

// Width of the linear head of an unbounded interval; the rest of the mass
// goes to a tan-compactified tail ending at the variable's cap.
inline constexpr double kHeadWidth = 10.0;

inline double nudge_inside(const Variable& v, double x) {
  if (v.lo_open && x <= v.lo) x = std::nextafter(v.lo, std::numeric_limits<double>::infinity());
  if (v.hi_open && x >= v.hi) x = std::nextafter(v.hi, -std::numeric_limits<double>::infinity());
  return std::clamp(x, v.lo, v.hi);
}

// Maps u in [0, 1) onto the variable.
inline double map_unit(const Variable& v, double u) {
  switch (v.kind) {
    case VarKind::Choice: {
      const auto m = v.choices.size();
      return v.choices[std::min(m - 1, static_cast<std::size_t>(u * static_cast<double>(m)))];
    }
    case VarKind::Integer: {
      const double count = v.hi - v.lo + 1.0;
      return std::min(v.hi, v.lo + std::floor(u * count));
    }
    case VarKind::Continuous:
      break;
  }
  if (v.unbounded()) {
    const double span = v.cap - v.lo;
    if (!(span > kHeadWidth)) {
      return nudge_inside(v, v.lo + u * (std::isfinite(span) ? span : kHeadWidth));
    }
    if (u < 0.5) return nudge_inside(v, v.lo + kHeadWidth * (2.0 * u));
    const double t = (2.0 * u - 1.0) * std::atan((span - kHeadWidth) / kHeadWidth);
    return nudge_inside(v, v.lo + kHeadWidth + kHeadWidth * std::tan(t));
  }
  if (v.scale == Scale::Log) {
    const double a = std::log(v.lo);
    const double b = std::log(v.hi);
    return nudge_inside(v, std::exp(a + u * (b - a)));
  }
  return nudge_inside(v, v.lo + u * (v.hi - v.lo));
}

// A point within 10^-10 .. 1 (times a width) of one endpoint.
inline double near_boundary(const Variable& v, SplitMix64& rng) {
  if (v.kind != VarKind::Continuous) {
    return rng.uniform() < 0.5 || v.unbounded() ? map_unit(v, 0.0) : v.hi;
  }
  const double upper = v.unbounded() ? v.cap : v.hi;
  const double width = std::min(1.0, 0.5 * (upper - v.lo));
  const double offset = width * std::pow(10.0, -10.0 * rng.uniform());
  const bool from_top = !v.unbounded() && rng.uniform() < 0.5;
  return nudge_inside(v, from_top ? v.hi - offset : v.lo + offset);
}

}  // namespace detail

/// The point for sample `index` of `n_total`, or nullopt when no admissible
/// point was found (grid point violating a constraint, or the rejection
/// budget ran out).
inline std::optional<Point> sample_point(const DomainSpec& domain, const SampleConfig& config,
                                         std::uint64_t stream, std::size_t index, std::size_t n_total) {
  const std::size_t d = domain.arity();
  Point p(d);
  if (config.strategy == Strategy::Grid) {
    const auto per_axis = static_cast<std::size_t>(
        std::max(1.0, std::ceil(std::pow(static_cast<double>(std::max<std::size_t>(n_total, 1)),
                                         1.0 / static_cast<double>(std::max<std::size_t>(d, 1))) -
                                1e-9)));
    std::size_t rest = index;
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t digit = rest % per_axis;
      rest /= per_axis;
      const double u = (static_cast<double>(digit) + 0.5) / static_cast<double>(per_axis);
      p[j] = detail::map_unit(domain.variables[j], u);
    }
    if (domain.contains(p)) return p;
    return std::nullopt;
  }

  SplitMix64 rng = sample_rng(stream, index);
  for (int attempt = 0; attempt < detail::kRejectionBudget; ++attempt) {
    for (std::size_t j = 0; j < d; ++j) {
      p[j] = detail::map_unit(domain.variables[j], rng.uniform());
    }
    if (config.strategy == Strategy::BoundaryBiased && d > 0 && rng.uniform() < config.boundary_fraction) {
      const auto j = std::min(d - 1, static_cast<std::size_t>(rng.uniform() * static_cast<double>(d)));
      p[j] = detail::near_boundary(domain.variables[j], rng);
    }
    if (domain.contains(p)) return p;
  }
  return std::nullopt;
}

}  // namespace psicert
