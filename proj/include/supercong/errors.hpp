#pragma once

#include <stdexcept>

namespace supercong {

// Every failure mode of the library is one of these. Each derives from the
// closest standard exception so callers can catch coarsely.

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class PrecisionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when an oracle is asked to run above its prime guard.
class GuardExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NonRationalResult : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NonIntegerResult : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvenNUnsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace supercong
