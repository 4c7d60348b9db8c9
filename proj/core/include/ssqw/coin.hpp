#pragma once

#include <functional>
#include <string>

#include "ssqw/types.hpp"

namespace ssqw {

/// Split-step shift parameters, p real and q complex with p^2 + |q|^2 = 1.
struct ShiftParams {
  double p = 0.0;
  Complex q{1.0, 0.0};

  /// True when p >= 0 and q is real positive, the normal form the momentum
  /// space analysis and the limit law assume. p == 0 is admitted because the
  /// closed forms stay valid there (classical two-way walk reduction).
  bool assumption_form() const;
};

/// Validates p^2 + |q|^2 = 1 within 1e-9 and renormalizes q so the identity
/// holds to machine precision. Throws ConfigError otherwise.
ShiftParams make_shift(double p, Complex q);

enum class CoinModel { homogeneous, one_defect, two_phase, short_range, anisotropic, custom };

const char* to_string(CoinModel m);

/// Position dependent coin field x -> C(x) in U(2) together with its spatial
/// limit matrix C0 and decay metadata (kappa, eps) for the short-range bound
///   ||C(x) - C0|| <= kappa |x|^(-1-eps),  x != 0.
/// Fields are immutable after construction and safe for shared reads.
class CoinField {
 public:
  Mat2 operator()(long x) const { return eval_(x); }

  CoinModel model() const { return model_; }
  const Mat2& limit() const { return c0_; }
  const Mat2& limit_plus() const { return c_plus_; }
  const Mat2& limit_minus() const { return c_minus_; }
  double kappa() const { return kappa_; }
  double eps() const { return eps_; }

  /// True when the evaluator returns exactly C0 at every site (the
  /// constructors detect zero-perturbation inputs and collapse to this).
  bool homogeneous() const { return homogeneous_; }

  /// True when the field has a single spatial limit obeying the decay bound.
  /// Two-phase and anisotropic fields with distinct limits report false.
  bool short_range() const { return short_range_; }

  friend CoinField make_coin_field(CoinModel, std::function<Mat2(long)>, const Mat2&,
                                   const Mat2&, const Mat2&, double, double, bool, bool);

 private:
  CoinField() = default;
  CoinModel model_ = CoinModel::custom;
  std::function<Mat2(long)> eval_;
  Mat2 c0_, c_plus_, c_minus_;
  double kappa_ = 0.0, eps_ = 0.0;
  bool homogeneous_ = false;
  bool short_range_ = false;
};

CoinField coin_field_homogeneous(const Mat2& c0);

/// C(0) = origin, C(x) = bulk elsewhere. The decay bound holds vacuously.
CoinField coin_field_one_defect(const Mat2& bulk, const Mat2& origin);

/// C(x) = plus for x >= 0 and minus for x < 0. The reported limit C0 is the
/// right limit. Distinct phases have no common spatial limit, so the field is
/// flagged as not short-range.
CoinField coin_field_two_phase(const Mat2& minus, const Mat2& plus);

/// Wraps an arbitrary evaluator claiming limit c0 and constants (kappa, eps).
/// The bound is validated by sampling every site of [-validate_halfwidth,
/// validate_halfwidth]; a violation throws ConfigError.
CoinField coin_field_short_range(const Mat2& c0, double kappa, double eps,
                                 std::function<Mat2(long)> field,
                                 long validate_halfwidth = 10000);

/// Built-in decaying family C(x) = R(theta(x)) C0 with
/// theta(x) = theta0 * (1+|x|)^(-1-eps). Since ||R(t) - I|| = 2|sin(t/2)| <= |t|,
/// the bound holds with kappa = |theta0|. theta0 == 0 collapses to the
/// homogeneous field.
CoinField coin_field_short_range_rotation(const Mat2& c0, double theta0, double eps);

/// C(x) = R(phi(x)) C0 with phi(x) -> theta_plus (x -> +inf) and theta_minus
/// (x -> -inf) at rate (1+|x|)^(-1-eps). Limits C+- = R(theta_+-) C0.
CoinField coin_field_anisotropic(const Mat2& c0, double theta_plus, double theta_minus,
                                 double eps);

CoinField coin_field_custom(std::function<Mat2(long)> field, const Mat2& c0, double kappa,
                            double eps);

/// Largest violation of the decay bound over sampled x in
/// [-halfwidth, halfwidth] \ {0}; <= 0 means the bound holds on the window.
double short_range_violation(const CoinField& field, long halfwidth);

bool validate_short_range(const CoinField& field, long halfwidth);

/// Numerical check of the unitary equivalence with the split-step walk in the
/// coin-rotation formulation: U built from p = sin(theta/2), q = cos(theta/2)
/// and C(x) = R(theta'/2) sigma1 agrees with sigma1 U_ss^T sigma1 where
/// U_ss = S_- R(theta/2) S_+ R(theta'/2). Rotations enter through the half
/// angle; with full-angle rotations the identity reads
/// U(sin a, cos a; R(b) sigma1) = sigma1 S_- R(a) S_+ R(b) sigma1.
/// Returns the max discrepancy over a basis of localized states after `steps`
/// applications. Should be <= 1e-10.
double kitagawa_equivalence_check(double theta, double theta_prime, long steps);

}  // namespace ssqw
