#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "poincare/errors.hpp"
#include "poincare/hecke.hpp"
#include "poincare/qexp.hpp"

using namespace poincare;
using qexp::QExpansion;

TEST_CASE("discriminant form from the eta product") {
  // q prod (1 - q^n)^24, multiplied out exactly with integer polynomials.
  const int N = 24;
  std::vector<mpq_class> eta(static_cast<std::size_t>(N) + 1, 0);
  eta[0] = 1;
  for (int n = 1; n <= N; ++n)
    for (int e = 0; e < 24; ++e) {
      std::vector<mpq_class> next(eta.size(), 0);
      for (std::size_t i = 0; i < eta.size(); ++i) {
        next[i] += eta[i];
        if (i + static_cast<std::size_t>(n) < next.size())
          next[i + static_cast<std::size_t>(n)] -= eta[i];
      }
      eta.swap(next);
    }
  const QExpansion d = qexp::delta(N);
  CHECK(d.weight == 12);
  CHECK(d.coeff(0) == 0);
  for (int n = 1; n <= N; ++n) CHECK(d.coeff(n) == eta[static_cast<std::size_t>(n) - 1]);
  CHECK(d.coeff(1) == 1);
  CHECK(d.coeff(2) == -24);
  CHECK(d.coeff(3) == 252);
  CHECK(d.coeff(11) == 534612);
}

TEST_CASE("expansion arithmetic and Eisenstein normalization") {
  const QExpansion e4 = qexp::eisenstein(4, 6);
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);  // 240 * sigma_3(2)
  const QExpansion e6 = qexp::eisenstein(6, 6);
  CHECK(e6.coeff(1) == -504);
  CHECK(e6.coeff(2) == -16632);  // -504 * sigma_5(2)
  const QExpansion p = qexp::mul(e4, e4);
  CHECK(p.weight == 8);
  CHECK(p.coeff(1) == 480);  // E4^2 = E8 has coefficient 480 sigma_7
  CHECK(p.coeff(2) == 61920);
  CHECK(qexp::pow(e4, 2).coeff(2) == p.coeff(2));
  CHECK(qexp::sub(p, p).coeff(2) == 0);
  CHECK(qexp::scale(p, mpq_class(1, 2)).coeff(1) == 240);
  CHECK_THROWS_AS(qexp::add(e4, e6), std::invalid_argument);
}

TEST_CASE("cusp space dimensions") {
  const std::map<int, int> table{{4, 0},  {6, 0},  {8, 0},  {10, 0}, {12, 1}, {14, 0},
                                 {16, 1}, {18, 1}, {20, 1}, {22, 1}, {24, 2}, {26, 1},
                                 {28, 2}, {60, 5}};
  for (const auto& [k, d] : table) CHECK(qexp::dim_cusp_space(k) == d);
  CHECK_THROWS_AS(qexp::dim_cusp_space(7), std::invalid_argument);
  CHECK_THROWS_AS(qexp::dim_cusp_space(2), std::invalid_argument);
}

TEST_CASE("echelon cusp basis") {
  const auto b12 = qexp::miller_basis(12, 8);
  REQUIRE(b12.size() == 1);
  CHECK(b12[0].coeff(1) == 1);
  CHECK(b12[0].coeff(2) == -24);
  const auto b24 = qexp::miller_basis(24, 10);
  REQUIRE(b24.size() == 2);
  CHECK(b24[0].coeff(1) == 1);
  CHECK(b24[0].coeff(2) == 0);
  CHECK(b24[1].coeff(1) == 0);
  CHECK(b24[1].coeff(2) == 1);
  CHECK(qexp::miller_basis(14, 6).empty());
}

TEST_CASE("exact characteristic polynomials") {
  using Row = std::vector<mpq_class>;
  const std::vector<Row> diag{{2, 0}, {0, 3}};
  const auto cp = hecke::char_poly(diag);
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == 6);   // det
  CHECK(cp[1] == -5);  // -trace
  CHECK(cp[2] == 1);

  // Weight 24: T_2 on the echelon basis, characteristic polynomial
  // x^2 - 1080 x - 20468736.
  const auto basis = qexp::miller_basis(24, 12);
  const auto t2 = hecke::hecke_matrix(basis, 2);
  const auto cp24 = hecke::char_poly(t2);
  REQUIRE(cp24.size() == 3);
  CHECK(cp24[0] == mpq_class(-20468736));
  CHECK(cp24[1] == mpq_class(-1080));
  CHECK(cp24[2] == 1);
}

TEST_CASE("real root extraction") {
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6.
  const auto r = hecke::real_roots({-6, 11, -6, 1});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(3.0).epsilon(1e-12));
  const auto s = hecke::real_roots({-2, 0, 1});  // x^2 - 2
  CHECK(s[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(hecke::real_roots({1, -2, 1}), numerical_error);  // double root
  CHECK_THROWS_AS(hecke::real_roots({1, 0, 1}), numerical_error);   // complex pair
}

TEST_CASE("one-dimensional eigensystem reproduces the discriminant form") {
  const auto sys = hecke::hecke_eigensystem(12);
  REQUIRE(sys.dim == 1);
  const auto& f = sys.forms[0];
  CHECK(f.a[1] == 1.0);
  CHECK(f.a[2] == doctest::Approx(-24.0).epsilon(1e-12));
  CHECK(f.a[3] == doctest::Approx(252.0).epsilon(1e-12));
  CHECK(f.a[11] == doctest::Approx(534612.0).epsilon(1e-12));
  CHECK(f.eigenvalue_t2 == doctest::Approx(-24.0).epsilon(1e-12));
  CHECK(f.lambda(2) == doctest::Approx(-0.530330085889911).epsilon(1e-12));
}

TEST_CASE("two-dimensional eigensystem at weight 24") {
  const auto sys = hecke::hecke_eigensystem(24);
  REQUIRE(sys.dim == 2);
  REQUIRE(sys.forms.size() == 2);
  // Roots of x^2 - 1080x - 20468736 = 540 +- 12 sqrt(144169), ascending.
  CHECK(sys.forms[0].eigenvalue_t2 == doctest::Approx(-4016.3511717162451).epsilon(1e-12));
  CHECK(sys.forms[1].eigenvalue_t2 == doctest::Approx(5096.3511717162451).epsilon(1e-12));
  for (const auto& f : sys.forms) {
    CHECK(f.a[1] == 1.0);
    CHECK(f.a[2] == doctest::Approx(f.eigenvalue_t2).epsilon(1e-11));
  }
}

TEST_CASE("hecke multiplicativity holds across weights") {
  for (int k : {12, 16, 18, 20, 22, 24, 26}) {
    const auto sys = hecke::hecke_eigensystem(k);
    CHECK(sys.dim == qexp::dim_cusp_space(k));
    for (const auto& f : sys.forms)
      for (std::int64_t p : {2, 3, 5, 7}) {
        const double l1 = f.lambda(p);
        const double l2 = f.lambda(p * p);
        const double l3 = f.lambda(p * p * p);
        CHECK(l2 == doctest::Approx(l1 * l1 - 1.0).epsilon(1e-10));
        CHECK(l3 == doctest::Approx(l1 * l2 - l1).epsilon(1e-10));
        // Coefficient multiplicativity at a split product.
        CHECK(f.lambda(6) == doctest::Approx(f.lambda(2) * f.lambda(3)).epsilon(1e-10));
      }
  }
}

TEST_CASE("chebyshev recursion") {
  CHECK(hecke::chebyshev_u(0, 0.37) == 1.0);
  CHECK(hecke::chebyshev_u(1, 0.37) == 0.37);
  for (int n = 1; n < 6; ++n) {
    const double x = 1.234;
    CHECK(hecke::chebyshev_u(n + 1, x) ==
          doctest::Approx(x * hecke::chebyshev_u(n, x) - hecke::chebyshev_u(n - 1, x))
              .epsilon(1e-13));
  }
  // Trigonometric form on [-2, 2].
  const double th = 0.8;
  CHECK(hecke::chebyshev_u(4, 2 * std::cos(th)) ==
        doctest::Approx(std::sin(5 * th) / std::sin(th)).epsilon(1e-12));
}

TEST_CASE("spectral weights from the expansion oracle") {
  const auto sys = hecke::hecke_eigensystem(12);
  const auto w = hecke::estimate_weights(sys);
  REQUIRE(w.omega.size() == 1);
  CHECK(w.omega[0] == doctest::Approx(2.8402873751675005).epsilon(1e-8));
  CHECK(w.residual < 1e-8);

  // Weight 14: no cusp forms; the fit is empty and the oracle side vanishes.
  const auto sys14 = hecke::hecke_eigensystem(14);
  CHECK(sys14.dim == 0);
  const auto w14 = hecke::estimate_weights(sys14);
  CHECK(w14.omega.empty());
  CHECK(w14.residual < 1e-8);

  const auto sys24 = hecke::hecke_eigensystem(24);
  const auto w24 = hecke::estimate_weights(sys24);
  for (double om : w24.omega) CHECK(om > 0.0);
}

TEST_CASE("weyl sums against the expansion oracle") {
  const auto sys = hecke::hecke_eigensystem(12);
  const auto w = hecke::estimate_weights(sys);
  // Empty exponent map: the plain weight sum.
  CHECK(hecke::weyl_sum(sys, w, {}) == doctest::Approx(w.omega[0]).epsilon(1e-12));
  // U_1(lambda(2)) picks out the normalized coefficient at 2.
  const double s2 = hecke::weyl_sum(sys, w, {{2, 1}});
  CHECK(s2 == doctest::Approx(w.omega[0] * sys.forms[0].lambda(2)).epsilon(1e-12));
  // U_2(lambda(2)) equals lambda(4) by multiplicativity.
  const double s4 = hecke::weyl_sum(sys, w, {{2, 2}});
  CHECK(s4 == doctest::Approx(w.omega[0] * sys.forms[0].lambda(4)).epsilon(1e-10));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(hecke::hecke_eigensystem(13), std::invalid_argument);
  CHECK_THROWS_AS(hecke::hecke_eigensystem(12, 1), std::invalid_argument);
  CHECK_THROWS_AS(hecke::hecke_eigensystem(24, 53, 4), std::invalid_argument);
  CHECK_THROWS_AS(hecke::real_roots({2.0}), std::invalid_argument);
  CHECK(hecke::hecke_matrix({}, 2).empty());
  CHECK_THROWS_AS(hecke::chebyshev_u(-1, 0.5), std::invalid_argument);
}
