#include "poincare/modgroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "poincare/errors.hpp"

namespace poincare::modgroup {

namespace {

std::int64_t gcd_list(std::initializer_list<std::int64_t> xs) {
  std::int64_t g = 0;
  for (std::int64_t x : xs) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Genus 1
// ---------------------------------------------------------------------------

bool is_normalized(const CosetRepG1& r) {
  if (std::gcd(r.c, r.d) != 1) return false;
  return r.c > 0 || (r.c == 0 && r.d == 1);
}

G1Completion complete_g1(const CosetRepG1& r) {
  if (std::gcd(r.c, r.d) != 1) throw std::invalid_argument("complete_g1: gcd(c,d) != 1");
  // Extended Euclid on (d, c): x*d + y*c = 1, then a = x, b = -y.
  std::int64_t r0 = r.d, r1 = r.c;
  std::int64_t x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1; r1 = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
  // r0 == 1 here; a*d - b*c = x0*d + y0*c = 1.
  return {x0, -y0};
}

std::vector<CosetRepG1> enumerate_g1_cosets(int B) {
  if (B < 1) throw std::invalid_argument("enumerate_g1_cosets: B >= 1 required");
  if (B > 4096) throw envelope_error("enumerate_g1_cosets: B > 4096 unsupported");
  std::vector<CosetRepG1> out;
  out.push_back({0, 1});
  for (std::int64_t c = 1; c <= B; ++c)
    for (std::int64_t d = -B; d <= B; ++d)
      if (std::gcd(c, d) == 1) out.push_back({c, d});
  return out;
}

int gamma0_indicator(const CosetRepG1& r, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("gamma0_indicator: q >= 1 required");
  return r.c % q == 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Genus 2
// ---------------------------------------------------------------------------

bool is_symmetric_pair(const Mat2i& c, const Mat2i& d) {
  // (c d^T)_{12} == (c d^T)_{21}
  return c.a11 * d.a21 + c.a12 * d.a22 == c.a21 * d.a11 + c.a22 * d.a12;
}

bool is_primitive_pair(const Mat2i& c, const Mat2i& d) {
  const std::int64_t g = gcd_list({det(c), det(d),
                                   c.a11 * d.a21 - c.a21 * d.a11,
                                   c.a11 * d.a22 - c.a21 * d.a12,
                                   c.a12 * d.a21 - c.a22 * d.a11,
                                   c.a12 * d.a22 - c.a22 * d.a12});
  return g == 1;
}

namespace {

// Entries of [c d] in row-major order.
std::array<std::int64_t, 8> row_major(const Mat2i& c, const Mat2i& d) {
  return {c.a11, c.a12, d.a11, d.a12, c.a21, c.a22, d.a21, d.a22};
}

}  // namespace

bool is_sign_normalized(const Mat2i& c, const Mat2i& d) {
  for (std::int64_t v : row_major(c, d)) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;  // zero pair is never a valid representative
}

CosetRepG2 sign_normalize(CosetRepG2 r) {
  if (!is_sign_normalized(r.c, r.d)) {
    r.c = -r.c;
    r.d = -r.d;
  }
  return r;
}

bool is_symplectic(const Sp4& g) {
  // gamma^T J gamma = J: a^T c and b^T d symmetric, a^T d - c^T b = I.
  const Mat2i atc = transpose(g.a) * g.c;
  const Mat2i btd = transpose(g.b) * g.d;
  const Mat2i atd_ctb = transpose(g.a) * g.d + (-(transpose(g.c) * g.b));
  return atc == transpose(atc) && btd == transpose(btd) && atd_ctb == mat2i_identity();
}

namespace {

// Smith normal form for a 4x2 integer matrix: U * K * V = diag(s1, s2) with
// U in GL(4,Z), V in GL(2,Z), s1 | s2, s_i >= 0. Small sizes, exact int64.
struct Snf42 {
  std::array<std::array<std::int64_t, 2>, 4> s;
  std::array<std::array<std::int64_t, 4>, 4> u;
  std::array<std::array<std::int64_t, 2>, 2> v;
};

Snf42 smith_4x2(std::array<std::array<std::int64_t, 2>, 4> m) {
  Snf42 r;
  r.s = m;
  r.u = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  r.v = {{{1, 0}, {0, 1}}};
  auto& s = r.s;
  auto& u = r.u;
  auto& v = r.v;

  auto swap_rows = [&](int i, int j) {
    std::swap(s[i], s[j]);
    std::swap(u[i], u[j]);
  };
  auto add_row = [&](int dst, int src, std::int64_t f) {  // row dst += f * row src
    for (int c = 0; c < 2; ++c) s[dst][c] += f * s[src][c];
    for (int c = 0; c < 4; ++c) u[dst][c] += f * u[src][c];
  };
  auto neg_row = [&](int i) {
    for (int c = 0; c < 2; ++c) s[i][c] = -s[i][c];
    for (int c = 0; c < 4; ++c) u[i][c] = -u[i][c];
  };
  auto swap_cols = [&](int i, int j) {
    for (int rr = 0; rr < 4; ++rr) std::swap(s[rr][i], s[rr][j]);
    std::swap(v[0][i], v[0][j]);
    std::swap(v[1][i], v[1][j]);
  };
  auto add_col = [&](int dst, int src, std::int64_t f) {  // col dst += f * col src
    for (int rr = 0; rr < 4; ++rr) s[rr][dst] += f * s[rr][src];
    v[0][dst] += f * v[0][src];
    v[1][dst] += f * v[1][src];
  };

  for (int k = 0; k < 2; ++k) {
    for (int round = 0; round < 256; ++round) {
      // Locate the entry of smallest nonzero magnitude in the working block.
      int pi = -1, pj = -1;
      std::int64_t best = 0;
      for (int i = k; i < 4; ++i)
        for (int j = k; j < 2; ++j)
          if (s[i][j] != 0 && (pi < 0 || std::llabs(s[i][j]) < best)) {
            best = std::llabs(s[i][j]);
            pi = i;
            pj = j;
          }
      if (pi < 0) break;  // block is zero
      if (pi != k) swap_rows(pi, k);
      if (pj != k) swap_cols(pj, k);
      if (s[k][k] < 0) neg_row(k);

      bool clean = true;
      for (int i = k + 1; i < 4; ++i)
        if (s[i][k] != 0) {
          add_row(i, k, -(s[i][k] / s[k][k]));
          if (s[i][k] != 0) clean = false;
        }
      for (int j = k + 1; j < 2; ++j)
        if (s[k][j] != 0) {
          add_col(j, k, -(s[k][j] / s[k][k]));
          if (s[k][j] != 0) clean = false;
        }
      if (!clean) continue;

      // Divisibility: fold in any entry the pivot does not divide.
      bool divides = true;
      for (int i = k + 1; i < 4 && divides; ++i)
        for (int j = k + 1; j < 2 && divides; ++j)
          if (s[i][j] % s[k][k] != 0) {
            add_row(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }
  return r;
}

std::int64_t frob2(const Mat2i& m) {
  return m.a11 * m.a11 + m.a12 * m.a12 + m.a21 * m.a21 + m.a22 * m.a22;
}

}  // namespace

Sp4 complete_g2(const CosetRepG2& r) {
  if (!is_symmetric_pair(r.c, r.d) || !is_primitive_pair(r.c, r.d))
    throw std::invalid_argument("complete_g2: (c,d) is not a symmetric coprime pair");

  const Mat2i& c = r.c;
  const Mat2i& d = r.d;
  // K = J [c d]^T = [d^T; -c^T], a 4x2 primitive matrix. We need T = [a b]
  // with T*K = I and T J T^T = 0; then (a b; c d) is symplectic.
  const std::array<std::array<std::int64_t, 2>, 4> k_mat = {{{d.a11, d.a21},
                                                             {d.a12, d.a22},
                                                             {-c.a11, -c.a21},
                                                             {-c.a12, -c.a22}}};
  const Snf42 snf = smith_4x2(k_mat);
  if (snf.s[0][0] != 1 || snf.s[1][1] != 1)
    throw std::invalid_argument("complete_g2: pair is not primitive");

  // Particular solution T0 = [V 0] U of T*K = I.
  std::array<std::array<std::int64_t, 4>, 2> t0{};
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 4; ++col)
      t0[row][col] = snf.v[row][0] * snf.u[0][col] + snf.v[row][1] * snf.u[1][col];

  // sigma = (T0 J T0^T)_{12}; subtracting [[0, sigma],[0,0]] * [c d] from T0
  // kills the antisymmetric defect, making T J T^T = 0.
  // T0 J T0^T = a0 b0^T - b0 a0^T where T0 = [a0 b0].
  const Mat2i a0{t0[0][0], t0[0][1], t0[1][0], t0[1][1]};
  const Mat2i b0{t0[0][2], t0[0][3], t0[1][2], t0[1][3]};
  const Mat2i ab = a0 * transpose(b0);
  const std::int64_t sigma = ab.a12 - ab.a21;

  Mat2i a{a0.a11 + sigma * c.a21, a0.a12 + sigma * c.a22,
          a0.a21, a0.a22};
  Mat2i b{b0.a11 + sigma * d.a21, b0.a12 + sigma * d.a22,
          b0.a21, b0.a22};

  // Remaining freedom is (a,b) -> (a + s c, b + s d) with s symmetric;
  // greedily shrink ||a||^2 + ||b||^2 over the three generators.
  const std::array<Mat2i, 3> gens = {Mat2i{1, 0, 0, 0}, Mat2i{0, 0, 0, 1}, Mat2i{0, 1, 1, 0}};
  for (int pass = 0; pass < 64; ++pass) {
    bool improved = false;
    for (const Mat2i& s : gens) {
      const Mat2i sc = s * c, sd = s * d;
      for (int sign = -1; sign <= 1; sign += 2) {
        for (;;) {
          Mat2i a2 = a, b2 = b;
          a2.a11 += sign * sc.a11; a2.a12 += sign * sc.a12;
          a2.a21 += sign * sc.a21; a2.a22 += sign * sc.a22;
          b2.a11 += sign * sd.a11; b2.a12 += sign * sd.a12;
          b2.a21 += sign * sd.a21; b2.a22 += sign * sd.a22;
          if (frob2(a2) + frob2(b2) < frob2(a) + frob2(b)) {
            a = a2;
            b = b2;
            improved = true;
          } else {
            break;
          }
        }
      }
    }
    if (!improved) break;
  }

  const Sp4 g{a, b, c, d};
  if (!is_symplectic(g)) throw std::logic_error("complete_g2: completion failed symplectic check");
  return g;
}

std::vector<CosetRepG2> enumerate_g2_cosets(int B) {
  if (B < 1) throw std::invalid_argument("enumerate_g2_cosets: B >= 1 required");
  if (B > 4) throw envelope_error("enumerate_g2_cosets: B > 4 unsupported");
  std::vector<CosetRepG2> out;
  const std::int64_t lo = -B, hi = B;
  Mat2i c, d;
  for (c.a11 = lo; c.a11 <= hi; ++c.a11)
    for (c.a12 = lo; c.a12 <= hi; ++c.a12)
      for (c.a21 = lo; c.a21 <= hi; ++c.a21)
        for (c.a22 = lo; c.a22 <= hi; ++c.a22)
          for (d.a11 = lo; d.a11 <= hi; ++d.a11)
            for (d.a12 = lo; d.a12 <= hi; ++d.a12)
              for (d.a21 = lo; d.a21 <= hi; ++d.a21)
                for (d.a22 = lo; d.a22 <= hi; ++d.a22) {
                  if (!is_sign_normalized(c, d)) continue;
                  if (!is_symmetric_pair(c, d)) continue;
                  if (!is_primitive_pair(c, d)) continue;
                  out.push_back({c, d});
                }
  return out;
}

Mat2c symplectic_action_matrix(const Sp4& g, const Mat2c& z) {
  const Mat2c num = to_complex(g.a) * z + to_complex(g.b);
  const Mat2c den = to_complex(g.c) * z + to_complex(g.d);
  const cplx dd = det(den);
  const auto mag = [](const Mat2c& m) {
    return std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
  };
  const Mat2c adj = adjugate(den);
  if (std::abs(dd) == 0.0 || mag(den) * mag(adj) / std::abs(dd) > 1e12)
    throw numerical_error("symplectic_action: cz+d ill-conditioned");
  Mat2c w = num * adj;
  const cplx inv = cplx(1.0, 0.0) / dd;
  w.a11 *= inv; w.a12 *= inv; w.a21 *= inv; w.a22 *= inv;
  const cplx off = 0.5 * (w.a12 + w.a21);
  w.a12 = off;
  w.a21 = off;
  return w;
}

SiegelPoint symplectic_action(const Sp4& g, const SiegelPoint& z) {
  const Mat2c w = symplectic_action_matrix(g, to_matrix(z));
  SiegelPoint res;
  res.x = {w.a11.real(), w.a12.real(), w.a22.real()};
  res.y = {w.a11.imag(), w.a12.imag(), w.a22.imag()};
  if (!positive_definite(res.y))
    throw numerical_error("symplectic_action: image imaginary part not positive definite");
  return res;
}

}  // namespace poincare::modgroup
