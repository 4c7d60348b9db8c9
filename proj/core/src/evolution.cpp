#include "ssqw/evolution.hpp"

#include <cmath>
#include <sstream>

#include "ssqw/errors.hpp"

namespace ssqw {

Window window_for(long support_lo, long support_hi, long t) {
  return {support_lo - (t + 2), support_hi + (t + 2)};
}

WalkerState::WalkerState(Window w)
    : window_(w), amp_(static_cast<size_t>(w.size()), Vec2::Zero()), lo_(1), hi_(0) {
  if (w.size() < 3) throw DomainError("WalkerState: window needs at least 3 sites");
  lo_ = w.x_max + 1;
  hi_ = w.x_min - 1;
}

WalkerState WalkerState::delta(long site, const Vec2& spinor, Window w) {
  WalkerState s(w);
  s.set(site, spinor);
  return s;
}

void WalkerState::set(long x, const Vec2& v) {
  if (!window_.contains(x)) throw DomainError("WalkerState::set: site outside window");
  amp_[static_cast<size_t>(x - window_.x_min)] = v;
  if (v[0] != Complex(0) || v[1] != Complex(0)) {
    lo_ = std::min(lo_, x);
    hi_ = std::max(hi_, x);
  }
}

double WalkerState::squared_norm() const {
  double s = 0.0;
  for (const auto& v : amp_) s += v.squaredNorm();
  return s;
}

double WalkerState::norm() const { return std::sqrt(squared_norm()); }

void WalkerState::axpy(const Complex& b, const WalkerState& other) {
  if (other.window_.x_min != window_.x_min || other.window_.x_max != window_.x_max)
    throw DomainError("WalkerState::axpy: windows differ");
  for (size_t i = 0; i < amp_.size(); ++i) amp_[i] += b * other.amp_[i];
  lo_ = std::min(lo_, other.lo_);
  hi_ = std::max(hi_, other.hi_);
}

void WalkerState::scale(const Complex& a) {
  for (auto& v : amp_) v *= a;
}

Complex WalkerState::inner(const WalkerState& other) const {
  const long lo = std::max(window_.x_min, other.window_.x_min);
  const long hi = std::min(window_.x_max, other.window_.x_max);
  Complex s(0.0, 0.0);
  for (long x = lo; x <= hi; ++x) s += at(x).dot(other.at(x));
  return s;
}

void WalkerState::recompute_support() {
  lo_ = window_.x_max + 1;
  hi_ = window_.x_min - 1;
  for (long x = window_.x_min; x <= window_.x_max; ++x) {
    const Vec2& v = at(x);
    if (v[0] != Complex(0) || v[1] != Complex(0)) {
      if (lo_ > window_.x_max) lo_ = x;
      hi_ = x;
    }
  }
}

LocalTransfer LocalTransfer::adjoint() const {
  LocalTransfer adj;
  adj.window = window;
  const auto n = static_cast<size_t>(window.size());
  adj.P.assign(n, Mat2::Zero());
  adj.Q.assign(n, Mat2::Zero());
  adj.R.assign(n, Mat2::Zero());
  // (U* psi)(x) = P(x)* psi(x-1) + Q(x)* psi(x+1) + R(x)* psi(x)
  //  => P'(y) = Q(y-1)*, Q'(y) = P(y+1)*, R'(y) = R(y)*
  for (long y = window.x_min; y <= window.x_max; ++y) {
    const auto i = static_cast<size_t>(y - window.x_min);
    if (y - 1 >= window.x_min) adj.P[i] = q_at(y - 1).adjoint();
    if (y + 1 <= window.x_max) adj.Q[i] = p_at(y + 1).adjoint();
    adj.R[i] = r_at(y).adjoint();
  }
  return adj;
}

LocalTransfer build_local_transfer(const ShiftParams& shift, const CoinField& coins,
                                   Window w) {
  LocalTransfer t;
  t.window = w;
  const auto n = static_cast<size_t>(w.size());
  t.P.resize(n);
  t.Q.resize(n);
  t.R.resize(n);
  const double p = shift.p;
  const Complex q = shift.q, qc = std::conj(shift.q);
  for (long y = w.x_min; y <= w.x_max; ++y) {
    const Mat2 c = coins(y);
    const auto i = static_cast<size_t>(y - w.x_min);
    Mat2 P = Mat2::Zero(), Q = Mat2::Zero(), R;
    P(0, 0) = q * c(1, 0);
    P(0, 1) = q * c(1, 1);
    Q(1, 0) = qc * c(0, 0);
    Q(1, 1) = qc * c(0, 1);
    R(0, 0) = p * c(0, 0);
    R(0, 1) = p * c(0, 1);
    R(1, 0) = -p * c(1, 0);
    R(1, 1) = -p * c(1, 1);
    t.P[i] = P;
    t.Q[i] = Q;
    t.R[i] = R;
  }
  return t;
}

namespace {

void step_into(const WalkerState& in, const LocalTransfer& tr, WalkerState& out) {
  const Window w = in.window();
  if (tr.window.x_min != w.x_min || tr.window.x_max != w.x_max)
    throw DomainError("step: transfer window does not match state window");
  if (in.empty_support()) {
    out = in;
    return;
  }
  long lo = in.support_lo() - 1, hi = in.support_hi() + 1;
  if (lo <= w.x_min || hi >= w.x_max) {
    std::ostringstream msg;
    msg << "step: wavefront would reach window edge (support [" << in.support_lo() << ", "
        << in.support_hi() << "] in [" << w.x_min << ", " << w.x_max << "])";
    throw BoundaryTouchError(msg.str());
  }
  for (long x = lo; x <= hi; ++x) {
    Vec2 v = tr.r_at(x) * in.at(x);
    if (x + 1 <= in.support_hi() + 0) v += tr.p_at(x + 1) * in.at(x + 1);
    if (x - 1 >= in.support_lo() - 0) v += tr.q_at(x - 1) * in.at(x - 1);
    out.set(x, v);
  }
  // strict locality keeps everything else zero; trim exact zeros at the edges
  while (lo <= hi && out.at(lo)[0] == Complex(0) && out.at(lo)[1] == Complex(0)) ++lo;
  while (hi >= lo && out.at(hi)[0] == Complex(0) && out.at(hi)[1] == Complex(0)) --hi;
  out.lo_ = lo;
  out.hi_ = hi;
  if (lo > hi) {
    out.lo_ = w.x_max + 1;
    out.hi_ = w.x_min - 1;
  }
}

}  // namespace

WalkerState step(const WalkerState& state, const LocalTransfer& transfer) {
  WalkerState out(state.window());
  step_into(state, transfer, out);
  return out;
}

WalkerState evolve(const WalkerState& state, const LocalTransfer& transfer, long t,
                   Direction dir) {
  if (t < 0) throw DomainError("evolve: t must be >= 0");
  if (t == 0) return state;
  const LocalTransfer* tr = &transfer;
  LocalTransfer adj;
  if (dir == Direction::inverse) {
    adj = transfer.adjoint();
    tr = &adj;
  }
  WalkerState cur = state;
  WalkerState buf(state.window());
  for (long i = 0; i < t; ++i) {
    for (long x = std::max(cur.support_lo() - 1, cur.window().x_min);
         x <= std::min(cur.support_hi() + 1, cur.window().x_max); ++x)
      buf.set(x, Vec2::Zero());
    buf.lo_ = buf.window().x_max + 1;
    buf.hi_ = buf.window().x_min - 1;
    step_into(cur, *tr, buf);
    std::swap(cur, buf);
  }
  return cur;
}

Evolver::Evolver(const LocalTransfer& transfer, Direction dir)
    : transfer_(dir == Direction::forward ? transfer : transfer.adjoint()) {}

void Evolver::run(WalkerState& state, long steps) const {
  if (steps > 0) state = evolve(state, transfer_, steps, Direction::forward);
}

ProbTable position_distribution(const WalkerState& state) {
  ProbTable t;
  if (state.empty_support()) {
    t.x_min = state.window().x_min;
    t.prob.assign(1, 0.0);
    return t;
  }
  t.x_min = state.support_lo();
  const long n = state.support_hi() - state.support_lo() + 1;
  t.prob.resize(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    t.prob[static_cast<size_t>(i)] = state.at(t.x_min + i).squaredNorm();
    t.total += t.prob[static_cast<size_t>(i)];
  }
  return t;
}

std::vector<double> rescaled_moments(const ProbTable& dist, long t, std::span<const int> orders) {
  if (t < 1) throw DomainError("rescaled_moments: t must be >= 1");
  std::vector<double> out;
  out.reserve(orders.size());
  for (int m : orders) {
    double s = 0.0;
    for (size_t i = 0; i < dist.prob.size(); ++i) {
      const double v = static_cast<double>(dist.x_of(i)) / static_cast<double>(t);
      s += dist.prob[i] * std::pow(v, m);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace ssqw
