#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eagv {

// Raised when a parameter tuple or input file violates a stated constraint.
// The message names the constraint, e.g. "c > l/2".
class InvalidParameters : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// An exhaustive enumeration would exceed its configured size.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

} // namespace eagv
