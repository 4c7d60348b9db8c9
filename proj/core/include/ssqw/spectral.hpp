#pragma once

#include <vector>

#include "ssqw/coin.hpp"
#include "ssqw/types.hpp"

namespace ssqw {

/// Shift and coin parameters in the normal form p, a, b > 0 (p >= 0), q > 0,
/// C0 = [[a, b], [b, -a]], with p^2+q^2 = a^2+b^2 = 1.
struct A2Params {
  double p, q, a, b;
  double tau(double k) const;       // p a + q b cos k
  double dtau(double k) const;      // -q b sin k
  double support_radius() const;    // min(q, b)
};

/// Extracts and validates the normal form; throws DomainError otherwise.
A2Params a2_params(const ShiftParams& shift, const Mat2& c0);

/// Momentum-space evolution matrix [[p, q e^{ik}], [conj(q) e^{-ik}, -p]] C0.
Mat2 u0_hat(const ShiftParams& shift, const Mat2& c0, double k);

struct EigenSystem {
  Complex lambda1, lambda2;  // e^{+i arccos tau}, e^{-i arccos tau}
  Vec2 u1, u2;               // normalized, largest component made real positive
};

/// Closed-form eigenpairs of u0_hat. At a band degeneracy (tau = +-1) the
/// matrix is +-identity; returns the standard basis deterministically.
EigenSystem eigensystem(const A2Params& par, double k);

struct GroupVelocity {
  double v1, v2;  // v2 = -v1
};

/// v_j(k) = (-1)^{j+1} tau'(k)/sqrt(1-tau^2), the ballistic velocity of band j.
/// Equal to minus the derivative of arg lambda_j. Throws DomainError when
/// 1 - tau^2 < 1e-14 (band touching).
GroupVelocity group_velocity(const A2Params& par, double k);

/// Closed-form dv1/dk = a p (tau - a/p)(tau - p/a) / (1 - tau^2)^{3/2}.
/// Valid for all parameter orderings including p == a.
double dvdk_closed_form(const A2Params& par, double k);

/// Uniform quasi-momentum grid over [0, 2pi), offset half a cell so band
/// degeneracies at k = 0 are never sampled.
struct KGrid {
  int size = 0;
  double node(int i) const;
  /// Periodic linear interpolation of tabulated values at arbitrary k.
  double interpolate(const std::vector<double>& values, double k) const;
};

/// Per-grid-point spectral package of the homogeneous evolution.
struct DispersionData {
  A2Params params;
  KGrid grid;
  std::vector<double> tau;
  std::vector<Complex> lambda1, lambda2;
  std::vector<Vec2> u1, u2;
  std::vector<double> v1, v2;
};

DispersionData build_dispersion(const A2Params& par, int grid_size, int threads = 0);

struct DvdkCheck {
  double max_residual = 0.0;    // |finite difference - closed form|, max over grid
  bool sign_pattern_ok = true;  // sign layout of dv/dk against the crossing angle
  double crossing_angle = 0.0;  // arccos(aq/(bp)) for p > a, arccos(pb/(qa)) for p < a
};

/// Compares the closed-form dv1/dk against central finite differences of v1
/// and verifies where the derivative changes sign.
DvdkCheck dvdk_factorization_check(const A2Params& par, int grid_size);

/// Arcs {e^{+-i arccos tau(k)}} swept by the continuous spectrum, with the
/// endpoint angles taken from tau sampled on a k-grid.
struct BandArcs {
  double theta_lo = 0.0, theta_hi = 0.0;  // arccos of sampled tau range, in [0, pi]
  /// Arc-length distance from lambda (assumed near the unit circle) to the bands.
  double gap_distance(Complex lambda) const;
};

BandArcs band_arcs(const A2Params& par, int grid_size = 4096);

/// Momentum weight functions w1, w2 tabulated on a k-grid, evaluated in
/// between by periodic linear interpolation.
struct WeightTable {
  KGrid grid;
  std::vector<double> w1, w2;

  static WeightTable uniform(int grid_size = 2);
  double w1_at(double k) const { return grid.interpolate(w1, k); }
  double w2_at(double k) const { return grid.interpolate(w2, k); }
  /// (1/2pi) Int (w1 + w2) dk by the exact-for-bandlimited rectangle rule.
  double total_mass() const;
};

}  // namespace ssqw
