#pragma once

#include <stdexcept>
#include <string>

namespace eqs {

// Bad input at an API boundary (arity mismatch, malformed partition, box
// violation). The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// exact_div found a nonzero remainder.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A t-polynomial is not expressible in the differences t_i - t_{i+1}.
class NotShiftInvariant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two computation paths disagreed, or an input that should have been rejected
// slipped through. Always an implementation bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A size guard refused the request. The CLI maps this to exit code 3.
class ResourceGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eqs
