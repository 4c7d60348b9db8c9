#pragma once

#include <span>
#include <vector>

#include "ssqw/spectral.hpp"

namespace ssqw {

/// Konno's density sqrt(1-r^2) / (pi (1-v^2) sqrt(r^2-v^2)) on (-r, r).
/// Returns 0 outside the closed interval and +infinity exactly at |v| = r
/// (quadrature never evaluates there; the edge factor is cancelled
/// analytically by the sin substitution).
double konno_f(double v, double r);

enum class Sign { plus, minus };

/// (p a v^2 +- sqrt((q^2-v^2)(b^2-v^2))) / (q b (1-v^2)) for |v| < min(q, b).
/// Values drifting past +-1 by at most 1e-9 are clamped (floating point
/// guard); larger excursions throw DomainError.
double g_pm(double v, Sign sign, const A2Params& par);

/// |f_K(v; q) -+ f_K(v; b)| / 2 on (-q, q) cap (-b, b), else 0.
double f_pm(double v, Sign sign, const A2Params& par);

/// Weight factor of the continuous part:
///   v >= 0: w1(2pi - arccos g_+-(v)) + w2(arccos g_+-(v))
///   v <  0: w1(arccos g_+-(v)) + w2(2pi - arccos g_+-(v)).
double w_pm(double v, Sign sign, const A2Params& par, const WeightTable& weights);

/// Max over the grid of |d/dv arccos g_+-(v) - (+-2pi sgn(v) f_+-(v))| with
/// central differences at step h. The grid must avoid v = 0 and the support
/// edges.
double jacobian_identity_max_residual(const A2Params& par, std::span<const double> v_grid,
                                      Sign sign, double h = 1e-6);

struct DensitySummary {
  double w0 = 0.0;
  double mass = 0.0;  // w0 + continuous mass
  double m1 = 0.0, m2 = 0.0, m4 = 0.0;
};

/// The limit distribution w0 delta_0 + (w_+ f_+ + w_- f_-) dv, evaluable as a
/// density, a CDF (right-continuous, jump w0 at 0) and through moments.
/// Integrals substitute v = r sin(theta), which removes the inverse square
/// root edge singularity, and use adaptive quadrature.
class LimitDensity {
 public:
  LimitDensity(const A2Params& par, WeightTable weights, double w0);
  static LimitDensity with_uniform_weights(const A2Params& par, double w0 = 0.0);

  const A2Params& params() const { return par_; }
  const WeightTable& weights() const { return weights_; }
  double atom() const { return w0_; }
  double support_radius() const { return par_.support_radius(); }

  /// Continuous-part density w_+ f_+ + w_- f_-; 0 outside the open support.
  double density(double v) const;

  double continuous_mass(double abs_tol = 1e-8) const;
  double total_mass(double abs_tol = 1e-8) const;

  /// Int v^m dmu. The atom contributes only to m = 0.
  double moment(int m, double abs_tol = 1e-8) const;

  double cdf(double v, double abs_tol = 1e-8) const;

  DensitySummary summary(double abs_tol = 1e-8) const;

  /// Precomputed cumulative table for cheap repeated CDF evaluation.
  class CdfTable {
   public:
    double operator()(double v) const;

   private:
    friend class LimitDensity;
    double w0_ = 0.0, radius_ = 0.0;
    std::vector<double> theta_, cum_;
  };

  CdfTable cdf_table(int panels = 1 << 15) const;

 private:
  double theta_integrand(double theta, int moment_order) const;
  double integrate_theta(double lo, double hi, int moment_order, double abs_tol) const;

  A2Params par_;
  WeightTable weights_;
  double w0_;
};

}  // namespace ssqw
