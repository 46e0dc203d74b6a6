#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "poincare/errors.hpp"
#include "poincare/fund_domain.hpp"

using namespace poincare;
using fund_domain::Membership;

TEST_CASE("the inequality set has the expected shape") {
  const auto& pairs = fund_domain::gottschling_set();
  REQUIRE(pairs.size() == 19);
  std::set<std::pair<Mat2i, Mat2i>> distinct;
  int rank1 = 0;
  for (const auto& p : pairs) {
    CHECK(p.rank_c == rank2(p.c));
    CHECK((p.rank_c == 1 || p.rank_c == 2));
    if (p.rank_c == 1)
      ++rank1;
    else
      CHECK(p.c == mat2i_identity());
    CHECK(distinct.insert({p.c, p.d}).second);
  }
  CHECK(rank1 == 4);
}

TEST_CASE("minkowski reduction: worked example and properties") {
  const auto r = fund_domain::minkowski_reduce({2.0, 0.9, 1.0});
  CHECK(r.reduced.m11 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.reduced.m12 == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(r.reduced.m22 == doctest::Approx(1.2).epsilon(1e-13));
  CHECK(std::abs(det(r.u)) == 1);

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    // Random positive definite matrix g^T g + small ridge.
    const double g11 = coord(rng), g12 = coord(rng), g21 = coord(rng), g22 = coord(rng);
    const Sym2d y{g11 * g11 + g21 * g21 + 0.01, g11 * g12 + g21 * g22,
                  g12 * g12 + g22 * g22 + 0.01};
    const auto red = fund_domain::minkowski_reduce(y);
    CHECK(fund_domain::is_minkowski_reduced(red.reduced, 1e-12));
    CHECK(det(red.reduced) == doctest::Approx(det(y)).epsilon(1e-10));
    // u^T y u reproduces the reduced matrix.
    const auto& u = red.u;
    const double q11 = u.a11 * (y.m11 * u.a11 + y.m12 * u.a21) +
                       u.a21 * (y.m12 * u.a11 + y.m22 * u.a21);
    const double q12 = u.a11 * (y.m11 * u.a12 + y.m12 * u.a22) +
                       u.a21 * (y.m12 * u.a12 + y.m22 * u.a22);
    const double q22 = u.a12 * (y.m11 * u.a12 + y.m12 * u.a22) +
                       u.a22 * (y.m12 * u.a12 + y.m22 * u.a22);
    CHECK(q11 == doctest::Approx(red.reduced.m11).epsilon(1e-10));
    CHECK(q12 == doctest::Approx(red.reduced.m12).epsilon(1e-10));
    CHECK(q22 == doctest::Approx(red.reduced.m22).epsilon(1e-10));
    // m11 is the lattice minimum: no vector in a generous box does better.
    double best = 1e300;
    for (int v1 = -5; v1 <= 5; ++v1)
      for (int v2 = -5; v2 <= 5; ++v2) {
        if (v1 == 0 && v2 == 0) continue;
        best = std::min(best, y.m11 * v1 * v1 + 2 * y.m12 * v1 * v2 + y.m22 * v2 * v2);
      }
    CHECK(red.reduced.m11 == doctest::Approx(best).epsilon(1e-10));
  }

  CHECK(fund_domain::is_minkowski_reduced({1, 0, 1}));
  CHECK(fund_domain::is_minkowski_reduced({2, 1, 2}));
  CHECK_FALSE(fund_domain::is_minkowski_reduced({2, -0.1, 3}));  // m12 < 0
  CHECK_FALSE(fund_domain::is_minkowski_reduced({1, 0.6, 2}));   // 2*m12 > m11
  CHECK_FALSE(fund_domain::is_minkowski_reduced({3, 0.1, 2}));   // m11 > m22
  CHECK_THROWS_AS(fund_domain::minkowski_reduce({1.0, 2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("height certificates behave monotonically") {
  const auto cert = fund_domain::certify_y0(1.05, 32);
  CHECK(cert.pass);
  CHECK(cert.pair_minima.size() == 19);
  CHECK(cert.margin > 1e-3);
  CHECK(cert.margin == doctest::Approx(cert.min_over_pairs - 1.0));
  CHECK(cert.mod_continuity > 0.0);
  for (double m : cert.pair_minima) CHECK(m >= cert.min_over_pairs);

  const auto higher = fund_domain::certify_y0(1.2, 32);
  CHECK(higher.pass);
  CHECK(higher.margin > cert.margin);

  // The binding constraints pin the grid minimum to y0 itself, so just above
  // the floor the certificate must fail.
  const auto hairline = fund_domain::certify_y0(1.0005, 32);
  CHECK_FALSE(hairline.pass);
  CHECK(hairline.min_over_pairs == doctest::Approx(1.0005).epsilon(1e-6));

  CHECK_THROWS_AS(fund_domain::certify_y0(1.0, 32), std::invalid_argument);
  CHECK_THROWS_AS(fund_domain::certify_y0(0.8, 32), std::invalid_argument);
}

TEST_CASE("bisection finds the certification threshold just above 1") {
  const double y0 = fund_domain::search_y0(1e-3, 32);
  CHECK(y0 > 1.0);
  CHECK(y0 < 1.01);
  const auto at = fund_domain::certify_y0(y0 + 2e-3, 32);
  CHECK(at.pass);
}

TEST_CASE("membership classification") {
  const auto deep = fund_domain::in_fundamental_domain({{0, 0, 0}, {1.2, 0, 1.3}});
  CHECK(deep.status == Membership::inside);
  CHECK(deep.detail.empty());

  // |det(z)| = 1 at z = iI: boundary of the rank-2 inversion inequality.
  const auto corner = fund_domain::in_fundamental_domain({{0, 0, 0}, {1, 0, 1}});
  CHECK(corner.status == Membership::boundary);

  const auto xout = fund_domain::in_fundamental_domain({{0.6, 0, 0}, {2, 0, 2}});
  CHECK(xout.status == Membership::outside);
  CHECK(!xout.detail.empty());

  const auto xedge = fund_domain::in_fundamental_domain({{0.5, 0, 0}, {2, 0, 2}});
  CHECK(xedge.status == Membership::boundary);

  // Imaginary part not Minkowski-reduced.
  const auto ybad = fund_domain::in_fundamental_domain({{0, 0, 0}, {2, 0, 1}});
  CHECK(ybad.status == Membership::outside);

  // Small determinant: fails a rank-2 inequality strictly.
  const auto low = fund_domain::in_fundamental_domain({{0, 0, 0}, {0.5, 0, 0.5}});
  CHECK(low.status == Membership::outside);
}

TEST_CASE("determinant polynomial in the height parameter") {
  const Sym2d x0{0, 0, 0};
  const auto p_trans = fund_domain::det_alpha_polynomial(mat2i_zero(), mat2i_identity(), x0);
  CHECK(p_trans[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p_trans[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p_trans[2] == doctest::Approx(0.0).epsilon(1e-12));

  const auto p_inv = fund_domain::det_alpha_polynomial(mat2i_identity(), mat2i_zero(), x0);
  CHECK(p_inv[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p_inv[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p_inv[2] == doctest::Approx(1.0).epsilon(1e-12));

  // c = I, d = 0, general x: |det(x + i a I)|^2 = det(x)^2 + a^2((x11+x22)^2
  // - 2 det x) + a^4.
  const Sym2d x{0.3, -0.2, 0.4};
  const double dx = det(x);
  const auto p_gen = fund_domain::det_alpha_polynomial(mat2i_identity(), mat2i_zero(), x);
  CHECK(p_gen[0] == doctest::Approx(dx * dx).epsilon(1e-10));
  CHECK(p_gen[1] ==
        doctest::Approx((x.m11 + x.m22) * (x.m11 + x.m22) - 2 * dx).epsilon(1e-10));
  CHECK(p_gen[2] == doctest::Approx(1.0).epsilon(1e-10));

  // A rank-1 pair from the inequality set: quadratic in alpha, no quartic
  // term, and |det(c*iI + d)| >= 1 because iI lies in the domain closure.
  const auto& pairs = fund_domain::gottschling_set();
  REQUIRE(pairs[2].rank_c == 1);
  const auto p_r1 = fund_domain::det_alpha_polynomial(pairs[2].c, pairs[2].d, x0);
  CHECK(p_r1[2] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(p_r1[0] + p_r1[1] >= 1.0 - 1e-9);
}

TEST_CASE("large-height asymptotics of the determinant ratio") {
  const auto& pairs = fund_domain::gottschling_set();
  const Sym2d x{0.2, 0.1, -0.3};
  for (const auto& p : pairs) {
    if (p.rank_c != 2) continue;
    const auto rep = fund_domain::rank_asymptotic_check(p.c, p.d, x, {5.0, 10.0, 40.0});
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) CHECK(row.target == 1.0);
    CHECK(rep.rows[2].abs_err < rep.rows[0].abs_err);
    CHECK(rep.rows[2].abs_err < 0.01);
  }
}
