#pragma once

#include <stdexcept>
#include <string>

namespace splitbound {

// Caller supplied a value outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iteration cap (oracle limit, Karpenko loop budget) was hit.
class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

// A closed form disagreed with its oracle or an internal identity failed.
// Seeing one of these means the implementation is wrong, not the input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace splitbound
