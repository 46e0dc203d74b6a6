#pragma once

#include <cstdint>
#include <vector>

#include "poincare/mat2.hpp"

namespace poincare::modgroup {

// ---------------------------------------------------------------------------
// Genus 1: cosets of the translation stabilizer in SL(2,Z) are parametrized
// by coprime bottom rows (c,d) up to sign; normalization picks c > 0, or
// c == 0 with d == 1.
// ---------------------------------------------------------------------------

struct CosetRepG1 {
  std::int64_t c = 0, d = 1;

  friend bool operator==(const CosetRepG1&, const CosetRepG1&) = default;
  friend auto operator<=>(const CosetRepG1&, const CosetRepG1&) = default;
};

bool is_normalized(const CosetRepG1& r);

struct G1Completion {
  std::int64_t a, b;  // a*d - b*c = 1
};

G1Completion complete_g1(const CosetRepG1& r);

// All normalized representatives with max(|c|,|d|) <= B, ordered by (c,d).
std::vector<CosetRepG1> enumerate_g1_cosets(int B);

// Indicator of the congruence subgroup: 1 iff q divides c.
int gamma0_indicator(const CosetRepG1& r, std::int64_t q);

// ---------------------------------------------------------------------------
// Genus 2: cosets are parametrized by symmetric coprime pairs (c,d) of 2x2
// integer blocks up to sign: c*d^T symmetric and the six 2x2 minors of the
// 2x4 block [c d] have gcd 1. Sign normalization: the first nonzero entry of
// [c d] in row-major order is positive.
// ---------------------------------------------------------------------------

struct CosetRepG2 {
  Mat2i c, d;

  friend bool operator==(const CosetRepG2&, const CosetRepG2&) = default;
  friend auto operator<=>(const CosetRepG2&, const CosetRepG2&) = default;
};

bool is_symmetric_pair(const Mat2i& c, const Mat2i& d);
bool is_primitive_pair(const Mat2i& c, const Mat2i& d);  // gcd of 2x2 minors of [c d] is 1
bool is_sign_normalized(const Mat2i& c, const Mat2i& d);
CosetRepG2 sign_normalize(CosetRepG2 r);

struct Sp4 {
  Mat2i a, b, c, d;
};

// gamma^T J gamma == J, checked in exact integer arithmetic.
bool is_symplectic(const Sp4& g);

// Completes a symmetric coprime pair to a symplectic matrix (Smith normal
// form construction, then size reduction of the free symmetric part).
// Throws std::invalid_argument if (c,d) is not completable.
Sp4 complete_g2(const CosetRepG2& r);

// All normalized symmetric coprime pairs with entries of [c d] bounded by B
// in absolute value, in lexicographic enumeration order.
std::vector<CosetRepG2> enumerate_g2_cosets(int B);

// Moebius action (a z + b)(c z + d)^{-1} on the genus-2 upper half-space.
// Result is symmetrized; throws poincare::numerical_error if cz+d has
// condition estimate above 1e12 or the image's imaginary part fails to be
// positive definite.
SiegelPoint symplectic_action(const Sp4& g, const SiegelPoint& z);

// Same action, returning the raw complex matrix (already symmetrized).
Mat2c symplectic_action_matrix(const Sp4& g, const Mat2c& z);

}  // namespace poincare::modgroup
