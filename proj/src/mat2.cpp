#include "poincare/mat2.hpp"

namespace poincare {

int rank2(const Mat2i& x) {
  if (det(x) != 0) return 2;
  if (is_zero(x)) return 0;
  return 1;
}

Mat2c to_complex(const Mat2i& m) {
  return {cplx(static_cast<double>(m.a11), 0.0), cplx(static_cast<double>(m.a12), 0.0),
          cplx(static_cast<double>(m.a21), 0.0), cplx(static_cast<double>(m.a22), 0.0)};
}

Mat2c to_matrix(const SiegelPoint& z) {
  return {cplx(z.x.m11, z.y.m11), cplx(z.x.m12, z.y.m12),
          cplx(z.x.m12, z.y.m12), cplx(z.x.m22, z.y.m22)};
}

cplx cpow_int(cplx z, int n) {
  if (n < 0) return cpow_int(cplx(1.0, 0.0) / z, -n);
  cplx result(1.0, 0.0);
  cplx base = z;
  unsigned e = static_cast<unsigned>(n);
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace poincare
