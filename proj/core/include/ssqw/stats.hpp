#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ssqw/evolution.hpp"
#include "ssqw/limit_law.hpp"

namespace ssqw {

/// Right-continuous step CDF of X_t/t from an exact probability table.
struct EmpiricalCdf {
  std::vector<double> v;    // jump locations, ascending
  std::vector<double> cum;  // value at and right of v[i]

  double operator()(double x) const;
};

EmpiricalCdf empirical_cdf(const ProbTable& dist, long t);

struct KsOptions {
  int grid_size = 512;             // extra uniform evaluation points on [-1, 1]
  double exclude_halfwidth = 0.0;  // skip |v| <= this (atom neighborhood)
};

/// sup |F_emp - F_theory| over the jump points (both one-sided limits) plus a
/// uniform grid. Zero iff the CDFs agree on the evaluation set.
double ks_distance(const EmpiricalCdf& emp, const std::function<double(double)>& theory,
                   const KsOptions& opts = {});

struct ConvergencePoint {
  long t = 0;
  double ks = 0.0;
  double gap_m1 = 0.0, gap_m2 = 0.0, gap_m4 = 0.0;
  double wall_ms = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergencePoint> points;  // in increasing t order
};

/// Evolves psi0 once up to max(t_list), snapshotting at each horizon, and
/// compares the empirical law of X_t/t against mu. When mu carries an atom the
/// KS evaluation excludes a +-1/t neighborhood of 0 (the CDF is compared at
/// continuity points only).
ConvergenceReport convergence_sweep(const WalkerState& psi0, const LocalTransfer& transfer,
                                    std::span<const long> t_list, const LimitDensity& mu);

}  // namespace ssqw
