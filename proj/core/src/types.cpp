#include "ssqw/types.hpp"

#include <cmath>
#include <string>

#include "ssqw/errors.hpp"

namespace ssqw {

Mat2 coin_ab(double a, double b) {
  Mat2 c;
  c << a, b, b, -a;
  return c;
}

Mat2 rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

Mat2 sigma1() {
  Mat2 s;
  s << 0, 1, 1, 0;
  return s;
}

double op_norm(const Mat2& m) {
  // singular values of a 2x2 from the Gram matrix invariants
  const Mat2 g = m.adjoint() * m;
  const double tr = g.trace().real();
  const double det = std::abs(m.determinant());
  const double disc = std::max(0.0, tr * tr - 4.0 * det * det);
  return std::sqrt(0.5 * (tr + std::sqrt(disc)));
}

bool is_unitary(const Mat2& c, double tol) {
  return op_norm(c.adjoint() * c - Mat2::Identity()) <= tol;
}

void require_unitary(const Mat2& c, const char* what, double tol) {
  if (!is_unitary(c, tol)) {
    throw DomainError(std::string(what) + ": matrix is not unitary within " +
                      std::to_string(tol));
  }
}

}  // namespace ssqw
