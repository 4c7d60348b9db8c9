#pragma once

#include <span>
#include <vector>

#include "ssqw/coin.hpp"
#include "ssqw/types.hpp"

namespace ssqw {

/// Inclusive lattice window [x_min, x_max].
struct Window {
  long x_min = 0;
  long x_max = 0;
  long size() const { return x_max - x_min + 1; }
  bool contains(long x) const { return x >= x_min && x <= x_max; }
};

/// Window holding an initial support [lo, hi] padded by t+2 sites per side, so
/// amplitudes never reach the edge during t steps.
Window window_for(long support_lo, long support_hi, long t);

/// Spinor field over a finite window. Amplitudes outside the tracked support
/// are exactly zero; the support may grow by at most one site per step.
class WalkerState {
 public:
  WalkerState(Window w);

  static WalkerState delta(long site, const Vec2& spinor, Window w);

  Window window() const { return window_; }
  long support_lo() const { return lo_; }
  long support_hi() const { return hi_; }
  bool empty_support() const { return lo_ > hi_; }

  const Vec2& at(long x) const { return amp_[static_cast<size_t>(x - window_.x_min)]; }
  void set(long x, const Vec2& v);

  double squared_norm() const;
  double norm() const;

  std::span<const Vec2> amplitudes() const { return amp_; }

  /// In-place a*this + b*other (windows must agree).
  void axpy(const Complex& b, const WalkerState& other);
  void scale(const Complex& a);

  /// <this, other> with the physics convention (conjugate-linear first slot),
  /// over the window intersection.
  Complex inner(const WalkerState& other) const;

  friend WalkerState step(const WalkerState&, const struct LocalTransfer&);
  friend class Evolver;

 private:
  Window window_;
  std::vector<Vec2> amp_;
  long lo_, hi_;  // support bounds; lo_ > hi_ means zero state
  void recompute_support();
};

/// Per-site matrices of the three-term update
///   out(x) = P(x+1) psi(x+1) + Q(x-1) psi(x-1) + R(x) psi(x).
struct LocalTransfer {
  Window window;
  std::vector<Mat2> P, Q, R;

  const Mat2& p_at(long x) const { return P[static_cast<size_t>(x - window.x_min)]; }
  const Mat2& q_at(long x) const { return Q[static_cast<size_t>(x - window.x_min)]; }
  const Mat2& r_at(long x) const { return R[static_cast<size_t>(x - window.x_min)]; }

  /// Transfer of the adjoint walk U*: out(x) = P(x)* psi(x-1) + Q(x)* psi(x+1)
  /// + R(x)* psi(x), re-indexed into the same three-term shape.
  LocalTransfer adjoint() const;
};

/// Expands U = S C into the three-term form. P(y) carries q times the second
/// row of C(y) in its first row, Q(y) carries conj(q) times the first row of
/// C(y) in its second row, and R(y) = [p * first row; -p * second row].
LocalTransfer build_local_transfer(const ShiftParams& shift, const CoinField& coins, Window w);

/// One application of U. Throws BoundaryTouchError if the support would get
/// closer than one site to the window edge.
WalkerState step(const WalkerState& state, const LocalTransfer& transfer);

enum class Direction { forward, inverse };

/// t applications of U (forward) or U* (inverse).
WalkerState evolve(const WalkerState& state, const LocalTransfer& transfer, long t,
                   Direction dir = Direction::forward);

/// Reusable double-buffered stepper for long evolutions with snapshots.
class Evolver {
 public:
  Evolver(const LocalTransfer& transfer, Direction dir = Direction::forward);
  void run(WalkerState& state, long steps) const;

 private:
  LocalTransfer transfer_;
};

struct ProbTable {
  long x_min = 0;
  std::vector<double> prob;
  double total = 0.0;
  long x_of(size_t i) const { return x_min + static_cast<long>(i); }
};

/// P(X = x) = ||psi(x)||^2 over the support.
ProbTable position_distribution(const WalkerState& state);

/// E[(X/t)^m] for each requested order m. Requires t >= 1.
std::vector<double> rescaled_moments(const ProbTable& dist, long t, std::span<const int> orders);

}  // namespace ssqw
