#pragma once

#include <stdexcept>
#include <string>

namespace strattr {

/// Requested word order is outside the supported range (negative, below a
/// lemma's threshold, or above the configured cap).
class order_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Exhaustive search would exceed the configured candidate budget.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (bad positions, bad symbols).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace strattr
