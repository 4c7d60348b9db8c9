#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ssqw {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;

inline constexpr double kUnitaryTol = 1e-12;

/// Coin matrix [[a, b], [b, -a]] with a, b real. Unitary when a^2 + b^2 = 1.
Mat2 coin_ab(double a, double b);

/// Rotation by the full angle theta: [[cos t, -sin t], [sin t, cos t]].
Mat2 rotation(double theta);

Mat2 sigma1();

/// Operator (spectral) 2-norm of a 2x2 complex matrix.
double op_norm(const Mat2& m);

bool is_unitary(const Mat2& c, double tol = kUnitaryTol);

/// Throws DomainError if ||C*C - I|| exceeds tol.
void require_unitary(const Mat2& c, const char* what, double tol = kUnitaryTol);

}  // namespace ssqw
