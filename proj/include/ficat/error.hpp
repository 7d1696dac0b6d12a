#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ficat {

// Base of every error raised by the library. The code is stable and is what the
// command-line tool reports in its {"error": code, ...} records.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// A caller-side precondition was not met (bad spec, wrong dimensions, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& detail) : Error("precondition", detail) {}
  PreconditionError(std::string code, const std::string& detail) : Error(std::move(code), detail) {}
};

// An enumeration would exceed the configured cardinality budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget, const std::string& what)
      : Error("budget", what + ": requires " + std::to_string(required) + " items, budget is " +
                            std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// An internal invariant failed. Always a bug.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& detail) : Error("invariant", detail) {}
};

}  // namespace ficat
