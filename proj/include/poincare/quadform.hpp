#pragma once

#include <cstdint>
#include <vector>

#include "poincare/mat2.hpp"

namespace poincare::quadform {

// Positive-definite binary quadratic form with integral diagonal and
// half-integral off-diagonal entry, stored exactly as the integer triple
// (s11, b, s22) with b = 2*s12. As a matrix: [[s11, b/2], [b/2, s22]].
struct HalfIntegralForm {
  std::int64_t s11 = 1, b = 0, s22 = 1;

  friend bool operator==(const HalfIntegralForm&, const HalfIntegralForm&) = default;
  friend auto operator<=>(const HalfIntegralForm&, const HalfIntegralForm&) = default;
};

bool is_positive_definite(const HalfIntegralForm& s);

// 4*det(s) = 4*s11*s22 - b^2, an equivalence-class invariant.
std::int64_t disc4(const HalfIntegralForm& s);

// Tr(s*y) for symmetric real y: s11*y11 + b*y12 + s22*y22.
double trace_pair(const HalfIntegralForm& s, const Sym2d& y);
cplx trace_pair(const HalfIntegralForm& s, const Mat2c& z);

// Value 2*(v^T s v) of the doubled form at an integer vector (exact).
std::int64_t eval2(const HalfIntegralForm& s, std::int64_t v1, std::int64_t v2);

// a^T s a for a in GL(2,Z) (exact integer arithmetic on the triple).
HalfIntegralForm act(const Mat2i& a, const HalfIntegralForm& s);

// 0 <= b <= s11 <= s22.
bool is_reduced(const HalfIntegralForm& s);

struct Reduction {
  HalfIntegralForm reduced;
  Mat2i transform;  // act(transform, input) == reduced, |det| = 1
};

// Gauss reduction; the reduced triple is the unique representative of the
// GL(2,Z)-class satisfying 0 <= b <= s11 <= s22.
Reduction reduce(const HalfIntegralForm& s);

bool is_equivalent(const HalfIntegralForm& s, const HalfIntegralForm& t);

// All a in GL(2,Z) with a^T s a = s, by exhaustive search over the column
// ellipse v^T s v <= max(s11, s22). Always contains +-I; order is even.
std::vector<Mat2i> aut_group(const HalfIntegralForm& s);

// All a in GL(2,Z) with a^T s a = t (empty iff inequivalent).
std::vector<Mat2i> transporter(const HalfIntegralForm& s, const HalfIntegralForm& t);

// |{a in GL(2,Z)/{+-1} : a^T s a = t}| = |aut_group(s)|/2 if equivalent, else 0.
int orbit_count(const HalfIntegralForm& s, const HalfIntegralForm& t);

}  // namespace poincare::quadform
