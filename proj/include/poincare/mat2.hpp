#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace poincare {

using cplx = std::complex<double>;

// 2x2 integer matrix, row-major.
struct Mat2i {
  std::int64_t a11 = 0, a12 = 0, a21 = 0, a22 = 0;

  friend bool operator==(const Mat2i&, const Mat2i&) = default;
  friend auto operator<=>(const Mat2i&, const Mat2i&) = default;
};

constexpr Mat2i mat2i_identity() { return {1, 0, 0, 1}; }
constexpr Mat2i mat2i_zero() { return {0, 0, 0, 0}; }

constexpr Mat2i operator*(const Mat2i& x, const Mat2i& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}
constexpr Mat2i operator-(const Mat2i& x) { return {-x.a11, -x.a12, -x.a21, -x.a22}; }
constexpr Mat2i operator+(const Mat2i& x, const Mat2i& y) {
  return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}
constexpr std::int64_t det(const Mat2i& x) { return x.a11 * x.a22 - x.a12 * x.a21; }
constexpr Mat2i transpose(const Mat2i& x) { return {x.a11, x.a21, x.a12, x.a22}; }
constexpr Mat2i adjugate(const Mat2i& x) { return {x.a22, -x.a12, -x.a21, x.a11}; }
constexpr bool is_zero(const Mat2i& x) { return x.a11 == 0 && x.a12 == 0 && x.a21 == 0 && x.a22 == 0; }
int rank2(const Mat2i& x);  // 0, 1, or 2

// Symmetric 2x2 real matrix.
struct Sym2d {
  double m11 = 0, m12 = 0, m22 = 0;

  friend bool operator==(const Sym2d&, const Sym2d&) = default;
};

constexpr double det(const Sym2d& y) { return y.m11 * y.m22 - y.m12 * y.m12; }
constexpr bool positive_definite(const Sym2d& y) { return y.m11 > 0 && det(y) > 0; }

// 2x2 complex matrix, row-major.
struct Mat2c {
  cplx a11, a12, a21, a22;
};

inline Mat2c operator*(const Mat2c& x, const Mat2c& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}
inline Mat2c operator+(const Mat2c& x, const Mat2c& y) {
  return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}
inline cplx det(const Mat2c& x) { return x.a11 * x.a22 - x.a12 * x.a21; }
inline cplx trace(const Mat2c& x) { return x.a11 + x.a22; }
inline Mat2c adjugate(const Mat2c& x) { return {x.a22, -x.a12, -x.a21, x.a11}; }

Mat2c to_complex(const Mat2i& m);

// Point z = x + i*y of the genus-2 upper half-space: x, y real symmetric,
// y positive definite.
struct SiegelPoint {
  Sym2d x, y;
};

Mat2c to_matrix(const SiegelPoint& z);

// z^n for integer n (n may be negative) by repeated squaring; deterministic
// operation order, no log/exp branch cuts involved.
cplx cpow_int(cplx z, int n);

}  // namespace poincare
