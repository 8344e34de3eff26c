#pragma once

#include <stdexcept>
#include <string>

namespace osc {

// Bad arguments or mismatched inputs. The CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition failed, e.g. dividing by zero.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Problem size exceeds a configured cap. The CLI maps this to exit code 3.
struct SizeError : std::length_error {
  using std::length_error::length_error;
};

// An internal consistency check failed.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace osc
