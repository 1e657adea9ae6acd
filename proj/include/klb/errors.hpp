#pragma once

#include <stdexcept>

namespace klb {

/// Argument outside its mathematical domain (H outside (0,1), t outside [0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structurally invalid sizes: grid too small, truncation exceeding the data, ...
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A kernel with K(1,1) = 0 used where the bridge / rank-one normalization
/// divides by K(1,1).
class DegenerateKernelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation requested at (or numerically on top of) a pole.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bisection bracket that does not enclose a sign change.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative scheme (eigensolver, adaptive quadrature, series
/// acceleration) failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace klb
