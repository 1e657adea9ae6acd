#pragma once

#include <functional>
#include <vector>

#include "klb/errors.hpp"

namespace klb {

/// Tolerances and depth limits shared by the adaptive quadrature routines.
struct QuadratureControls {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  int max_depth = 48;       ///< recursive bisection depth
  int max_panels = 512;     ///< oscillatory panel budget
};

/// Adaptive Gauss-Kronrod 15(7) integration on a finite interval.
/// Throws ConvergenceError if the local error estimate cannot be pushed
/// below tolerance within the depth limit.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureControls& ctl = {});

/// Single non-adaptive 15-point Gauss-Legendre panel on [a,b].
double gauss15_panel(const std::function<double(double)>& f, double a, double b);

/// Limit of the sequence of partial sums of a (quasi-)alternating series,
/// accelerated by iterated averaging (Euler transformation).  `partial`
/// holds partial sums S_0, S_1, ...; `tol` is the absolute stabilization
/// target.  Throws ConvergenceError if the triangle does not stabilize.
double accelerate_alternating(const std::vector<double>& partial, double tol);

}  // namespace klb
