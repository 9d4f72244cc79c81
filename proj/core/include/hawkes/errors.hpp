#pragma once

#include <stdexcept>

namespace hawkes {

// Argument outside the mathematical domain of a function or sampler.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// The first grid weight k_0 is >= 1, so the implicit step has no solution.
class WellPosednessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid experiment or scheme configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation not available for this kernel family (e.g. no closed-form resolvent).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hawkes
