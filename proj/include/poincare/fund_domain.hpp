#pragma once

#include <array>
#include <string>
#include <vector>

#include "poincare/mat2.hpp"
#include "poincare/numerics.hpp"
#include "poincare/report.hpp"

namespace poincare::fund_domain {

// One of the 19 inequality pairs cutting out the genus-2 fundamental domain.
struct GottschlingPair {
  Mat2i c, d;
  int rank_c;  // 1 or 2
};

// The full set: 4 pairs with rank(c) = 1, then 15 with c = I.
const std::vector<GottschlingPair>& gottschling_set();

struct MinkowskiReduction {
  Sym2d reduced;  // 0 <= 2*|m12| <= m11 <= m22 and m12 >= 0
  Mat2i u;        // u^T y u == reduced, |det u| = 1
};

MinkowskiReduction minkowski_reduce(const Sym2d& y);
bool is_minkowski_reduced(const Sym2d& y, double tol = 0.0);

// Minimum of |det(c(x + i*y0*I) + d)| over the midpoint grid on
// |x11|,|x12|,|x22| <= 1/2, refined by one pattern-descent step at half
// spacing from the best node. If mod_continuity is non-null it receives the
// largest |f(node) - f(adjacent node)| seen, a modulus-of-continuity flavor
// for the grid resolution.
double min_det_over_box(const GottschlingPair& pair, double y0,
                        const numerics::QuadratureGrid& grid,
                        double* mod_continuity = nullptr);

struct DomainCertificate {
  double y0 = 0;
  int grid_n = 0;
  double margin_floor = 1e-3;
  std::vector<double> pair_minima;  // one per Gottschling pair
  double min_over_pairs = 0;
  double margin = 0;          // min_over_pairs - 1
  double mod_continuity = 0;  // max over pairs of the grid variation estimate
  bool pass = false;          // every minimum > 1 + margin_floor
};

DomainCertificate certify_y0(double y0, const numerics::QuadratureGrid& grid,
                             double margin_floor = 1e-3);
DomainCertificate certify_y0(double y0, int grid_n = 64, double margin_floor = 1e-3);

// Bisection on (1, 2] for the smallest y0 certified at the fixed grid;
// returns the bracket midpoint once the bracket is narrower than tol.
// Numerical evidence only -- certifies grid minima, proves nothing.
double search_y0(double tol, int grid_n = 64, double margin_floor = 1e-3);

enum class Membership { inside, boundary, outside };

struct MembershipResult {
  Membership status;
  std::string detail;  // failing or binding condition, empty when strictly inside
};

// Fundamental-domain test: |x entries| <= 1/2, Im z Minkowski-reduced, and
// |det(cz+d)| >= 1 for all 19 pairs. `boundary` is reported when an x-bound
// or a determinant inequality is tight within boundary_tol.
MembershipResult in_fundamental_domain(const SiegelPoint& z, double boundary_tol = 1e-9);

// Coefficients (p0, p1, p2) with |det(c(x + i*alpha*I) + d)|^2 =
// p0 + p1*alpha^2 + p2*alpha^4, recovered by evaluating at alpha = 1, 2, 3
// and solving the Vandermonde system in alpha^2. For symplectic bottom rows
// all coefficients are >= 0 and the top nonzero index equals rank(c).
std::array<double, 3> det_alpha_polynomial(const Mat2i& c, const Mat2i& d, const Sym2d& x);

// Rows (y, ratio, ...) with ratio = |det(c(x+iy*I)+d)| / (y^2*|det c|) -> 1.
report::ScanReport rank_asymptotic_check(const Mat2i& c, const Mat2i& d, const Sym2d& x,
                                         const std::vector<double>& y_list);

}  // namespace poincare::fund_domain
