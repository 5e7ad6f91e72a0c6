#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psicert {

enum class ErrorKind { PoleOrNonpositive, OutOfDomain, Overflow, NotConverged };

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::PoleOrNonpositive: return "PoleOrNonpositive";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotConverged: return "NotConverged";
  }
  return "Unknown";
}

/// Raised by every evaluation routine whose precondition does not hold.
/// what() starts with the kind name so callers can print it unchanged.
class EvalError : public std::domain_error {
 public:
  EvalError(ErrorKind kind, const std::string& detail)
      : std::domain_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Lookup of a case id that is not in the catalog.
class UnknownCase : public std::invalid_argument {
 public:
  explicit UnknownCase(const std::string& id) : std::invalid_argument("UnknownCase: " + id) {}
};

}  // namespace psicert
