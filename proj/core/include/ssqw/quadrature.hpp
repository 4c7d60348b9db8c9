#pragma once

#include <functional>

namespace ssqw {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

/// Adaptive Simpson on [a, b] with an absolute error target. Reports the
/// achieved estimate instead of silently returning a bad value.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_depth = 40);

}  // namespace ssqw
