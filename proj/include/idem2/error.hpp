#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace idem2 {

/// Library error with a machine-readable kind ("InvalidSpec",
/// "NotIdempotent", "ShapeViolation", "BudgetExceeded", "ParseError", ...)
/// and a human-readable detail string.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string detail)
      : std::runtime_error(kind + ": " + detail),
        kind_(std::move(kind)),
        detail_(std::move(detail)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

[[noreturn]] inline void raise(std::string kind, std::string detail) {
  throw Error(std::move(kind), std::move(detail));
}

}  // namespace idem2
