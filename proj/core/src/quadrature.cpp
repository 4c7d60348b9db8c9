#include "ssqw/quadrature.hpp"

#include <cmath>

namespace ssqw {

namespace {

struct Panel {
  double value;
  double error;
  bool converged;
};

Panel simpson_recurse(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double h = b - a;
  const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
  const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return {left + right + delta / 15.0, std::abs(delta) / 15.0, depth > 0};
  }
  const Panel l = simpson_recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1);
  const Panel r = simpson_recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
  return {l.value + r.value, l.error + r.error, l.converged && r.converged};
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_depth) {
  if (a == b) return {0.0, 0.0, true};
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  const Panel p = simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
  return {p.value, p.error, p.converged};
}

}  // namespace ssqw
