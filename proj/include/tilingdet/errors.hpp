#pragma once

#include <stdexcept>
#include <string>

namespace tilingdet {

/// Raised when an operation is called outside its documented domain
/// (bad shape parameters, malformed dent lists, wrong matrix shape, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pipeline that must yield an integer produced a proper fraction.
class NonIntegralResult : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force oracle ran past its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tilingdet
