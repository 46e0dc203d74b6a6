#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "poincare/classical.hpp"
#include "poincare/errors.hpp"
#include "poincare/numerics.hpp"

using namespace poincare;
using classical::ClassicalParams;
using classical::cplx;

namespace {
// Normalized coefficient via the Bessel/Kloosterman expansion at a depth where
// the analytic tail is far below the comparison tolerance.
double oracle(int m, int n, int k, std::int64_t q = 1, std::int64_t c_max = 600) {
  ClassicalParams p;
  p.m = m;
  p.n = n;
  p.k = k;
  p.q = q;
  const auto [value, tail] = classical::coeff_kloosterman(p, c_max);
  REQUIRE(tail < 1e-12);
  return value;
}
}  // namespace

TEST_CASE("expansion oracle against fixed level-1 references") {
  // References computed independently in 35-digit arithmetic.
  CHECK(oracle(1, 1, 12) == doctest::Approx(2.8402873751675005).epsilon(1e-12));
  CHECK(oracle(1, 2, 12) == doctest::Approx(-1.5062898476246094).epsilon(1e-12));
  CHECK(oracle(1, 3, 12) == doctest::Approx(1.7005755206521428).epsilon(1e-12));
  CHECK(oracle(2, 2, 12) == doctest::Approx(0.79883082426585951).epsilon(1e-12));
  CHECK(oracle(2, 3, 12) == doctest::Approx(-0.90186636192973041).epsilon(1e-12));
  CHECK(oracle(3, 3, 12) == doctest::Approx(1.0181917247971287).epsilon(1e-12));
  CHECK(oracle(1, 1, 16) == doctest::Approx(1.3061364711370567).epsilon(1e-12));
  CHECK(oracle(2, 2, 16) == doctest::Approx(1.8597138426931921).epsilon(1e-12));
  CHECK(oracle(1, 1, 20) == doctest::Approx(1.0094441404708453).epsilon(1e-12));
  CHECK(oracle(1, 1, 24) == doctest::Approx(1.0001008527021203).epsilon(1e-12));
  CHECK(oracle(2, 1, 24) == doctest::Approx(0.04591670296230295).epsilon(1e-10));
}

TEST_CASE("normalized coefficient is symmetric in (m, n)") {
  for (const auto& [m, n, k] : {std::tuple{1, 2, 12}, {2, 3, 16}, {1, 3, 20}})
    CHECK(oracle(m, n, k) == doctest::Approx(oracle(n, m, k)).epsilon(1e-11));
}

TEST_CASE("weight 14 has no cusp forms: every coefficient vanishes") {
  // The delta term and the full c-sum cancel exactly; this exercises the
  // entire Kloosterman + Bessel stack end to end.
  CHECK(std::abs(oracle(1, 1, 14)) < 1e-10);
  CHECK(std::abs(oracle(1, 2, 14)) < 1e-10);
  CHECK(std::abs(oracle(2, 2, 14)) < 1e-10);
}

TEST_CASE("weight 12 coefficients reconstruct the discriminant form") {
  // One-dimensional space: normalized coefficients are proportional to the
  // arithmetically scaled coefficients of the generating cusp form.
  const double base = oracle(1, 1, 12);
  const auto tau = [&](int n) { return std::pow(n, 5.5) * oracle(1, n, 12) / base; };
  CHECK(tau(2) == doctest::Approx(-24.0).epsilon(1e-9));
  CHECK(tau(3) == doctest::Approx(252.0).epsilon(1e-9));
}

TEST_CASE("quadrature route agrees with the expansion oracle") {
  ClassicalParams p;
  p.m = 1;
  p.n = 2;
  p.k = 12;
  const auto [value, err] = classical::coeff_quadrature_adaptive(p, 1e-7);
  CHECK(err <= 1e-7);
  CHECK(value == doctest::Approx(-1.5062898476246094).epsilon(5e-7));

  p.m = 2;
  p.n = 2;
  p.k = 16;
  const auto r2 = classical::coeff_quadrature_adaptive(p, 1e-7);
  CHECK(r2.value == doctest::Approx(1.8597138426931921).epsilon(5e-7));
}

TEST_CASE("two routes agree at level 2") {
  ClassicalParams p;
  p.m = 1;
  p.n = 1;
  p.k = 12;
  p.q = 2;
  const auto [kv, tail] = classical::coeff_kloosterman(p, 600);
  const auto [qv, err] = classical::coeff_quadrature_adaptive(p, 1e-7);
  CHECK(qv == doctest::Approx(kv).epsilon(1e-5));
  CHECK(std::abs(kv - 1.0) < 0.5);  // already near delta at k = 12
}

TEST_CASE("grid kernel matches the pointwise reference and is mode-stable") {
  const std::vector<int> ks{12, 16, 20};
  const int N = 32, B = 24;
  const double y0 = 1.1;
  const auto grid = classical::eval_grid_g1(1, ks, 1, y0, B, N, parallel::ExecMode::serial);
  REQUIRE(grid.size() == ks.size() * static_cast<std::size_t>(N));
  const numerics::QuadratureGrid q(1, N);
  for (std::size_t ki = 0; ki < ks.size(); ++ki)
    for (int j = 0; j < N; j += 7) {
      ClassicalParams p;
      p.k = ks[ki];
      p.y0 = y0;
      p.B = B;
      p.N = N;
      const cplx ref = classical::eval_poincare_g1({q.node(static_cast<std::size_t>(j))[0], y0}, p);
      const cplx got = grid[ki * static_cast<std::size_t>(N) + static_cast<std::size_t>(j)];
      CHECK(std::abs(got - ref) < 1e-9 * (1.0 + std::abs(ref)));
    }
  const auto par = classical::eval_grid_g1(1, ks, 1, y0, B, N, parallel::ExecMode::openmp, 4);
  REQUIRE(par.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(grid[i].real() == par[i].real());
    CHECK(grid[i].imag() == par[i].imag());
  }
}

TEST_CASE("scan reports carry shrinking errors toward the delta target") {
  const auto rep = classical::weight_limit_scan(1, 1, 1, {12, 24, 48}, 128);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].target == 1.0);
  CHECK(rep.rows[2].abs_err < rep.rows[0].abs_err);
  CHECK(rep.rows[2].abs_err < 0.05);
  for (const auto& row : rep.rows) CHECK(row.err_estimate < 1e-6);

  const auto off = classical::weight_limit_scan(1, 2, 1, {12, 24, 48}, 128);
  CHECK(off.rows[0].target == 0.0);
  CHECK(off.rows[2].abs_err < 0.05);
}

TEST_CASE("parameter validation") {
  ClassicalParams p;
  classical::validate(p);  // defaults pass
  auto bad = p;
  bad.k = 13;
  CHECK_THROWS_AS(classical::validate(bad), std::invalid_argument);
  bad = p;
  bad.k = 200;
  CHECK_THROWS_AS(classical::validate(bad), envelope_error);
  bad = p;
  bad.m = 0;
  CHECK_THROWS_AS(classical::validate(bad), std::invalid_argument);
  bad = p;
  bad.y0 = 0.9;
  CHECK_THROWS_AS(classical::validate(bad), envelope_error);
  bad = p;
  bad.N = 48;
  CHECK_THROWS_AS(classical::validate(bad), envelope_error);
  bad = p;
  bad.B = 100000;
  CHECK_THROWS_AS(classical::validate(bad), envelope_error);
}
