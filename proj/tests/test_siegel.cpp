#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "poincare/errors.hpp"
#include "poincare/modgroup.hpp"
#include "poincare/numerics.hpp"
#include "poincare/quadform.hpp"
#include "poincare/siegel.hpp"

using namespace poincare;
using quadform::HalfIntegralForm;
using siegel::SiegelParams;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent realization of the zero-block partial sum: enumerate integer
// GL(2,Z) matrices in a box, one representative per {a, -a} pair (first
// nonzero entry positive), each contributing e(Tr((a^T s a) z)).
cplx brute_limit_partial(const SiegelPoint& z, const HalfIntegralForm& s, int B) {
  cplx total = 0;
  for (int a11 = -B; a11 <= B; ++a11)
    for (int a12 = -B; a12 <= B; ++a12)
      for (int a21 = -B; a21 <= B; ++a21)
        for (int a22 = -B; a22 <= B; ++a22) {
          const Mat2i a{a11, a12, a21, a22};
          if (std::abs(det(a)) != 1) continue;
          const std::int64_t lead =
              a.a11 != 0 ? a.a11 : (a.a12 != 0 ? a.a12 : (a.a21 != 0 ? a.a21 : a.a22));
          if (lead < 0) continue;
          const cplx tz = quadform::trace_pair(quadform::act(a, s), to_matrix(z));
          total += std::exp(cplx(0, 2 * kPi) * tz);
        }
  return total;
}
}  // namespace

TEST_CASE("series values stay under the termwise majorant") {
  const HalfIntegralForm s{1, 0, 1};
  for (const auto& z : {SiegelPoint{{0, 0, 0}, {1.2, 0, 1.2}},
                        SiegelPoint{{0.2, -0.1, 0.3}, {1.5, 0.1, 1.1}}}) {
    for (int k : {10, 20}) {
      const cplx v = siegel::eval_siegel_poincare(z, s, k, 2);
      const double maj = siegel::eval_majorant(z, s, k, 2);
      CHECK(std::abs(v) <= maj * (1 + 1e-12));
    }
  }
}

TEST_CASE("zero-block partial sum matches a brute-force enumeration") {
  const SiegelPoint z{{0.1, 0.05, -0.2}, {1.4, 0.1, 1.6}};
  for (const auto& s : {HalfIntegralForm{1, 0, 1}, HalfIntegralForm{1, 1, 2}})
    for (int B : {1, 2}) {
      const cplx lib = siegel::limit_function_partial(z, s, B);
      const cplx ref = brute_limit_partial(z, s, B);
      CHECK(std::abs(lib - ref) < 1e-12 * (1 + std::abs(ref)));
    }
}

TEST_CASE("grid kernel agrees with the reference series evaluation") {
  const HalfIntegralForm s{1, 0, 1};
  const std::vector<int> ks{8, 10};
  const double y0 = 1.3;
  const int B = 1, N = 4;
  const auto grid = siegel::eval_siegel_grid(s, ks, y0, B, N, parallel::ExecMode::serial);
  const numerics::QuadratureGrid q(3, N);
  REQUIRE(grid.size() == ks.size() * q.node_count());
  for (std::size_t ki = 0; ki < ks.size(); ++ki)
    for (std::size_t j = 0; j < q.node_count(); j += 9) {
      const auto& n = q.node(j);
      const SiegelPoint z{{n[0], n[1], n[2]}, {y0, 0, y0}};
      const cplx ref = siegel::eval_siegel_poincare(z, s, ks[ki], B);
      CHECK(std::abs(grid[ki * q.node_count() + j] - ref) < 1e-10 * (1 + std::abs(ref)));
    }
}

TEST_CASE("grid kernel is bit-identical across execution modes") {
  const HalfIntegralForm s{1, 0, 1};
  const std::vector<int> ks{10, 12};
  const auto a = siegel::eval_siegel_grid(s, ks, 1.2, 2, 8, parallel::ExecMode::serial);
  const auto b = siegel::eval_siegel_grid(s, ks, 1.2, 2, 8, parallel::ExecMode::openmp, 1);
  const auto c = siegel::eval_siegel_grid(s, ks, 1.2, 2, 8, parallel::ExecMode::openmp, 4);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].real() == b[i].real());
    CHECK(a[i].imag() == b[i].imag());
    CHECK(a[i].real() == c[i].real());
    CHECK(a[i].imag() == c[i].imag());
  }
}

TEST_CASE("coefficient extraction: deterministic and near the class count at high weight") {
  SiegelParams p;
  p.s = {1, 0, 1};
  p.t = {1, 0, 1};
  p.k = 36;
  p.y0 = 1.2;
  p.B = 2;
  p.N = 16;
  const auto r1 = siegel::siegel_coeff(p, parallel::ExecMode::serial);
  const auto r2 = siegel::siegel_coeff(p, parallel::ExecMode::openmp, 3);
  CHECK(r1.value == r2.value);  // identical term order regardless of mode
  CHECK(r1.err_estimate == r2.err_estimate);
  // Four classes map the square form to itself modulo sign.
  CHECK(std::abs(r1.value - 4.0) < 0.3);

  // Inequivalent target: coefficient tends to zero.
  p.t = {1, 0, 2};
  const auto off = siegel::siegel_coeff(p, parallel::ExecMode::serial);
  CHECK(std::abs(off.value) < 0.15);
}

TEST_CASE("weight scan rows approach the class-count target monotonically at the tail") {
  const HalfIntegralForm s{1, 0, 1};
  const auto rep =
      siegel::siegel_weight_scan(s, s, {20, 28, 36}, 1.2, 2, 16, parallel::ExecMode::serial);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) CHECK(row.target == 4.0);
  CHECK(rep.rows[2].abs_err < rep.rows[0].abs_err);
  CHECK(rep.rows[2].abs_err < 0.3);
  // Rendering with the seconds column blanked is reproducible.
  const auto again =
      siegel::siegel_weight_scan(s, s, {20, 28, 36}, 1.2, 2, 16, parallel::ExecMode::serial);
  CHECK(report::stable_csv(rep) == report::stable_csv(again));
}

TEST_CASE("parameter validation") {
  SiegelParams p;
  siegel::validate(p);  // defaults pass
  auto bad = p;
  bad.k = 15;
  CHECK_THROWS_AS(siegel::validate(bad), std::invalid_argument);
  bad = p;
  bad.k = 64;
  CHECK_THROWS_AS(siegel::validate(bad), envelope_error);
  bad = p;
  bad.y0 = 0.9;
  CHECK_THROWS_AS(siegel::validate(bad), envelope_error);
  bad = p;
  bad.N = 64;
  CHECK_THROWS_AS(siegel::validate(bad), envelope_error);
  bad = p;
  bad.N = 12;
  CHECK_THROWS_AS(siegel::validate(bad), envelope_error);
  bad = p;
  bad.B = 4;  // above the grid bound
  CHECK_THROWS_AS(siegel::validate(bad), envelope_error);
  bad = p;
  bad.s = {1, 5, 1};  // indefinite index form
  CHECK_THROWS_AS(siegel::validate(bad), std::invalid_argument);
  CHECK_THROWS_AS(siegel::eval_siegel_poincare({{0, 0, 0}, {1, 0, 1}}, {1, 0, 1}, 10, 9),
                  envelope_error);
}
