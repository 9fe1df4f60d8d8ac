#pragma once

#include <stdexcept>
#include <string>

namespace metric_lines {

/// Malformed arguments or input data: out-of-range vertices, self-loops,
/// violated preconditions, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The graph metric is undefined because the graph is disconnected.
class DisconnectedError : public InputError {
 public:
  using InputError::InputError;
};

/// An exact integer computation would overflow its machine type.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace metric_lines
