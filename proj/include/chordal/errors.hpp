#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

// Caller supplied something outside an operation's domain (bad argument,
// malformed input file, violated precondition). The CLI maps this to exit 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to reach its accuracy target. CLI exit 1.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chordal
