#include "poincare/quadform.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace poincare::quadform {

bool is_positive_definite(const HalfIntegralForm& s) {
  return s.s11 > 0 && disc4(s) > 0;
}

std::int64_t disc4(const HalfIntegralForm& s) { return 4 * s.s11 * s.s22 - s.b * s.b; }

double trace_pair(const HalfIntegralForm& s, const Sym2d& y) {
  return static_cast<double>(s.s11) * y.m11 + static_cast<double>(s.b) * y.m12 +
         static_cast<double>(s.s22) * y.m22;
}

cplx trace_pair(const HalfIntegralForm& s, const Mat2c& z) {
  return static_cast<double>(s.s11) * z.a11 +
         static_cast<double>(s.b) * (0.5 * (z.a12 + z.a21)) +
         static_cast<double>(s.s22) * z.a22;
}

std::int64_t eval2(const HalfIntegralForm& s, std::int64_t v1, std::int64_t v2) {
  return 2 * s.s11 * v1 * v1 + 2 * s.b * v1 * v2 + 2 * s.s22 * v2 * v2;
}

namespace {

// 2 * u^T s w, exact.
std::int64_t cross2(const HalfIntegralForm& s, std::int64_t u1, std::int64_t u2,
                    std::int64_t w1, std::int64_t w2) {
  return 2 * s.s11 * u1 * w1 + s.b * (u1 * w2 + u2 * w1) + 2 * s.s22 * u2 * w2;
}

}  // namespace

HalfIntegralForm act(const Mat2i& a, const HalfIntegralForm& s) {
  HalfIntegralForm t;
  t.s11 = eval2(s, a.a11, a.a21) / 2;
  t.s22 = eval2(s, a.a12, a.a22) / 2;
  t.b = cross2(s, a.a11, a.a21, a.a12, a.a22);
  return t;
}

bool is_reduced(const HalfIntegralForm& s) {
  return 0 <= s.b && s.b <= s.s11 && s.s11 <= s.s22;
}

Reduction reduce(const HalfIntegralForm& s) {
  if (!is_positive_definite(s)) throw std::invalid_argument("reduce: form not positive definite");
  HalfIntegralForm f = s;
  Mat2i u = mat2i_identity();
  const auto apply = [&](const Mat2i& a) {
    f = act(a, f);
    u = u * a;
  };
  for (int iter = 0; iter < 256; ++iter) {
    if (f.s11 > f.s22) {
      apply({0, 1, 1, 0});  // swap diagonal
      continue;
    }
    if (std::llabs(f.b) > f.s11) {
      // Shift b into (-s11, s11] by b -> b + 2*t*s11; strictly shrinks s22.
      std::int64_t num = f.b + f.s11;
      std::int64_t den = 2 * f.s11;
      std::int64_t q = num / den;
      if (num % den != 0 && num < 0) --q;
      apply({1, -q, 0, 1});
      continue;
    }
    if (f.b < 0) {
      apply({1, 0, 0, -1});
      continue;
    }
    if (is_reduced(f)) return {f, u};
  }
  throw std::logic_error("reduce: did not converge");
}

bool is_equivalent(const HalfIntegralForm& s, const HalfIntegralForm& t) {
  return reduce(s).reduced == reduce(t).reduced;
}

std::vector<Mat2i> transporter(const HalfIntegralForm& s, const HalfIntegralForm& t) {
  if (!is_positive_definite(s) || !is_positive_definite(t))
    throw std::invalid_argument("transporter: forms must be positive definite");
  std::vector<Mat2i> out;
  // Columns u, w of a solution satisfy u^T s u = t11, w^T s w = t22,
  // 2 u^T s w = t_b; both lie in the ellipse v^T s v <= max(t11, t22), whose
  // bounding box is |v1|^2 <= 4*M*s22/disc4(s), |v2|^2 <= 4*M*s11/disc4(s).
  const double m = static_cast<double>(std::max(t.s11, t.s22));
  const double d4 = static_cast<double>(disc4(s));
  const std::int64_t b1 = static_cast<std::int64_t>(std::sqrt(4.0 * m * static_cast<double>(s.s22) / d4)) + 1;
  const std::int64_t b2 = static_cast<std::int64_t>(std::sqrt(4.0 * m * static_cast<double>(s.s11) / d4)) + 1;

  std::vector<std::pair<std::int64_t, std::int64_t>> cols1, cols2;
  for (std::int64_t v1 = -b1; v1 <= b1; ++v1)
    for (std::int64_t v2 = -b2; v2 <= b2; ++v2) {
      const std::int64_t q2 = eval2(s, v1, v2);
      if (q2 == 2 * t.s11) cols1.emplace_back(v1, v2);
      if (q2 == 2 * t.s22) cols2.emplace_back(v1, v2);
    }
  for (const auto& [u1, u2] : cols1)
    for (const auto& [w1, w2] : cols2) {
      if (cross2(s, u1, u2, w1, w2) != t.b) continue;
      const Mat2i a{u1, w1, u2, w2};
      if (std::llabs(det(a)) != 1) continue;
      out.push_back(a);
    }
  return out;
}

std::vector<Mat2i> aut_group(const HalfIntegralForm& s) { return transporter(s, s); }

int orbit_count(const HalfIntegralForm& s, const HalfIntegralForm& t) {
  return static_cast<int>(transporter(s, t).size() / 2);
}

}  // namespace poincare::quadform
