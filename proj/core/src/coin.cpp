#include "ssqw/coin.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "ssqw/errors.hpp"
#include "ssqw/evolution.hpp"

namespace ssqw {

bool ShiftParams::assumption_form() const {
  return p >= 0.0 && q.imag() == 0.0 && q.real() > 0.0;
}

ShiftParams make_shift(double p, Complex q) {
  const double s = p * p + std::norm(q);
  if (std::abs(s - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "make_shift: p^2 + |q|^2 = " << s << " is not 1 within 1e-9";
    throw ConfigError(msg.str());
  }
  if (std::abs(p) > 1.0) throw ConfigError("make_shift: |p| > 1");
  // keep p, rescale q so the constraint holds exactly
  const double target = std::sqrt(std::max(0.0, 1.0 - p * p));
  const double qabs = std::abs(q);
  if (qabs == 0.0) {
    if (target > 1e-9) throw ConfigError("make_shift: q = 0 requires |p| = 1");
    return {p, Complex(0.0, 0.0)};
  }
  return {p, q * (target / qabs)};
}

const char* to_string(CoinModel m) {
  switch (m) {
    case CoinModel::homogeneous: return "homogeneous";
    case CoinModel::one_defect: return "one_defect";
    case CoinModel::two_phase: return "two_phase";
    case CoinModel::short_range: return "short_range";
    case CoinModel::anisotropic: return "anisotropic";
    case CoinModel::custom: return "custom";
  }
  return "?";
}

CoinField make_coin_field(CoinModel model, std::function<Mat2(long)> eval, const Mat2& c0,
                          const Mat2& c_plus, const Mat2& c_minus, double kappa, double eps,
                          bool homogeneous, bool short_range) {
  CoinField f;
  f.model_ = model;
  f.eval_ = std::move(eval);
  f.c0_ = c0;
  f.c_plus_ = c_plus;
  f.c_minus_ = c_minus;
  f.kappa_ = kappa;
  f.eps_ = eps;
  f.homogeneous_ = homogeneous;
  f.short_range_ = short_range;
  return f;
}

namespace {

bool same_matrix(const Mat2& a, const Mat2& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::function<Mat2(long)> constant_eval(const Mat2& c0) {
  return [c0](long) { return c0; };
}

}  // namespace

CoinField coin_field_homogeneous(const Mat2& c0) {
  require_unitary(c0, "coin_field_homogeneous");
  return make_coin_field(CoinModel::homogeneous, constant_eval(c0), c0, c0, c0, 0.0, 1.0,
                         true, true);
}

CoinField coin_field_one_defect(const Mat2& bulk, const Mat2& origin) {
  require_unitary(bulk, "coin_field_one_defect: bulk");
  require_unitary(origin, "coin_field_one_defect: origin");
  if (same_matrix(bulk, origin)) {
    // zero perturbation collapses to the homogeneous evaluator
    auto f = coin_field_homogeneous(bulk);
    return make_coin_field(CoinModel::one_defect, constant_eval(bulk), bulk, bulk, bulk, 0.0,
                           1.0, true, true);
  }
  auto eval = [bulk, origin](long x) { return x == 0 ? origin : bulk; };
  // finitely many deviations satisfy the bound with any kappa
  const double kappa = op_norm(origin - bulk);
  return make_coin_field(CoinModel::one_defect, eval, bulk, bulk, bulk, kappa, 1.0, false,
                         true);
}

CoinField coin_field_two_phase(const Mat2& minus, const Mat2& plus) {
  require_unitary(minus, "coin_field_two_phase: minus");
  require_unitary(plus, "coin_field_two_phase: plus");
  if (same_matrix(minus, plus)) {
    return make_coin_field(CoinModel::two_phase, constant_eval(plus), plus, plus, minus, 0.0,
                           1.0, true, true);
  }
  auto eval = [minus, plus](long x) { return x < 0 ? minus : plus; };
  // two genuine phases have no common spatial limit; C0 reports the right one
  return make_coin_field(CoinModel::two_phase, eval, plus, plus, minus, 0.0, 1.0, false,
                         false);
}

CoinField coin_field_short_range(const Mat2& c0, double kappa, double eps,
                                 std::function<Mat2(long)> field, long validate_halfwidth) {
  require_unitary(c0, "coin_field_short_range: c0");
  if (kappa <= 0.0 || eps <= 0.0)
    throw ConfigError("coin_field_short_range: kappa and eps must be positive");
  auto f = make_coin_field(CoinModel::short_range, std::move(field), c0, c0, c0, kappa, eps,
                           false, true);
  const double excess = short_range_violation(f, validate_halfwidth);
  if (excess > 0.0) {
    std::ostringstream msg;
    msg << "coin_field_short_range: decay bound violated by " << excess
        << " on the validation window";
    throw ConfigError(msg.str());
  }
  return f;
}

CoinField coin_field_short_range_rotation(const Mat2& c0, double theta0, double eps) {
  require_unitary(c0, "coin_field_short_range_rotation: c0");
  if (eps <= 0.0) throw ConfigError("coin_field_short_range_rotation: eps must be positive");
  if (theta0 == 0.0) {
    return make_coin_field(CoinModel::short_range, constant_eval(c0), c0, c0, c0, 0.0, eps,
                           true, true);
  }
  const double rate = 1.0 + eps;
  auto eval = [c0, theta0, rate](long x) {
    const double theta = theta0 * std::pow(1.0 + std::abs(static_cast<double>(x)), -rate);
    return Mat2(rotation(theta) * c0);
  };
  // ||R(t) C0 - C0|| = 2|sin(t/2)| <= |t| <= |theta0| |x|^(-1-eps)
  return make_coin_field(CoinModel::short_range, eval, c0, c0, c0, std::abs(theta0), eps,
                         false, true);
}

CoinField coin_field_anisotropic(const Mat2& c0, double theta_plus, double theta_minus,
                                 double eps) {
  require_unitary(c0, "coin_field_anisotropic: c0");
  if (eps <= 0.0) throw ConfigError("coin_field_anisotropic: eps must be positive");
  const double rate = 1.0 + eps;
  auto eval = [c0, theta_plus, theta_minus, rate](long x) {
    const double theta_inf = x >= 0 ? theta_plus : theta_minus;
    const double phi =
        theta_inf * (1.0 - std::pow(1.0 + std::abs(static_cast<double>(x)), -rate));
    return Mat2(rotation(phi) * c0);
  };
  const Mat2 c_plus = rotation(theta_plus) * c0;
  const Mat2 c_minus = rotation(theta_minus) * c0;
  const bool homog = theta_plus == 0.0 && theta_minus == 0.0;
  const bool sr = theta_plus == theta_minus;  // single limit only when angles agree
  return make_coin_field(CoinModel::anisotropic, homog ? constant_eval(c0) : eval, c0, c_plus,
                         c_minus, std::max(std::abs(theta_plus), std::abs(theta_minus)), eps,
                         homog, sr && homog);
}

CoinField coin_field_custom(std::function<Mat2(long)> field, const Mat2& c0, double kappa,
                            double eps) {
  require_unitary(c0, "coin_field_custom: c0");
  return make_coin_field(CoinModel::custom, std::move(field), c0, c0, c0, kappa, eps, false,
                         kappa > 0.0 && eps > 0.0);
}

double short_range_violation(const CoinField& field, long halfwidth) {
  const double kappa = field.kappa(), eps = field.eps();
  double worst = -1.0;
  for (long x = -halfwidth; x <= halfwidth; ++x) {
    if (x == 0) continue;
    const double bound = kappa * std::pow(std::abs(static_cast<double>(x)), -1.0 - eps);
    const double dev = op_norm(field(x) - field.limit());
    worst = std::max(worst, dev - bound);
  }
  return worst;
}

bool validate_short_range(const CoinField& field, long halfwidth) {
  return short_range_violation(field, halfwidth) <= 0.0;
}

double kitagawa_equivalence_check(double theta, double theta_prime, long steps) {
  if (steps < 0) throw DomainError("kitagawa_equivalence_check: steps must be >= 0");
  const double p = std::sin(theta / 2.0), q = std::cos(theta / 2.0);
  const ShiftParams shift{p, Complex(q, 0.0)};
  const Mat2 coin = rotation(theta_prime / 2.0) * sigma1();
  const Mat2 r_shift = rotation(theta / 2.0);
  const Mat2 r_coin = rotation(theta_prime / 2.0);
  const Mat2 s1 = sigma1();

  const Window w{-(steps + 5), steps + 5};
  const LocalTransfer transfer =
      build_local_transfer(shift, coin_field_homogeneous(coin), w);
  const auto n = static_cast<size_t>(w.size());

  // U_ss = S_- R(theta/2) S_+ R(theta'/2) with S_+ = L* (+) 1, S_- = 1 (+) L
  auto uss_step = [&](const std::vector<Vec2>& in) {
    std::vector<Vec2> tmp(n), out(n, Vec2::Zero());
    for (size_t i = 0; i < n; ++i) tmp[i] = r_coin * in[i];
    for (size_t i = 0; i < n; ++i) {
      out[i][0] = i > 0 ? tmp[i - 1][0] : Complex(0);
      out[i][1] = tmp[i][1];
    }
    for (size_t i = 0; i < n; ++i) tmp[i] = r_shift * out[i];
    for (size_t i = 0; i < n; ++i) {
      out[i][0] = tmp[i][0];
      out[i][1] = i + 1 < n ? tmp[i + 1][1] : Complex(0);
    }
    return out;
  };

  double worst = 0.0;
  for (long site = -3; site <= 3; ++site) {
    for (int comp = 0; comp < 2; ++comp) {
      Vec2 spinor = Vec2::Zero();
      spinor[comp] = 1.0;
      WalkerState lhs = WalkerState::delta(site, spinor, w);
      for (long t = 0; t < steps; ++t) lhs = step(lhs, transfer);

      std::vector<Vec2> rhs(n, Vec2::Zero());
      rhs[static_cast<size_t>(site - w.x_min)] = s1 * spinor;
      for (long t = 0; t < steps; ++t) rhs = uss_step(rhs);

      double err2 = 0.0;
      for (size_t i = 0; i < n; ++i) {
        const Vec2 d = lhs.at(w.x_min + static_cast<long>(i)) - Vec2(s1 * rhs[i]);
        err2 += d.squaredNorm();
      }
      worst = std::max(worst, std::sqrt(err2));
    }
  }
  return worst;
}

}  // namespace ssqw
