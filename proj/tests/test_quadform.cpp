#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "poincare/quadform.hpp"

using namespace poincare;
using quadform::HalfIntegralForm;

namespace {
// Brute-force GL(2,Z) transporters over a generous entry box; independent of
// the ellipse-bounded search in the library.
std::vector<Mat2i> brute_transporter(const HalfIntegralForm& s, const HalfIntegralForm& t,
                                     int box) {
  std::vector<Mat2i> out;
  for (int p = -box; p <= box; ++p)
    for (int q = -box; q <= box; ++q)
      for (int r = -box; r <= box; ++r)
        for (int w = -box; w <= box; ++w) {
          const Mat2i a{p, q, r, w};
          if (std::abs(det(a)) != 1) continue;
          if (quadform::act(a, s) == t) out.push_back(a);
        }
  return out;
}
}  // namespace

TEST_CASE("invariants and evaluation") {
  const HalfIntegralForm s{2, 1, 3};
  CHECK(quadform::disc4(s) == 23);
  CHECK(quadform::eval2(s, 1, 0) == 4);
  CHECK(quadform::eval2(s, 0, 1) == 6);
  CHECK(quadform::eval2(s, 1, -1) == 8);  // 2*(2 - 1 + 3)
  CHECK(quadform::is_positive_definite(s));
  CHECK_FALSE(quadform::is_positive_definite({1, 3, 1}));
  CHECK_FALSE(quadform::is_positive_definite({0, 0, 1}));
  CHECK(quadform::trace_pair(s, Sym2d{1.0, 0.5, 2.0}) == doctest::Approx(8.5));
}

TEST_CASE("group action composes contravariantly and preserves disc4") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  const HalfIntegralForm s{3, 2, 5};
  int tried = 0;
  while (tried < 20) {
    const Mat2i a{entry(rng), entry(rng), entry(rng), entry(rng)};
    const Mat2i b{entry(rng), entry(rng), entry(rng), entry(rng)};
    if (std::abs(det(a)) != 1 || std::abs(det(b)) != 1) continue;
    ++tried;
    CHECK(quadform::disc4(quadform::act(a, s)) == quadform::disc4(s));
    // act(b, act(a, s)) applies a first: (a b)^T s (a b).
    CHECK(quadform::act(b, quadform::act(a, s)) == quadform::act(a * b, s));
  }
  CHECK(quadform::act(mat2i_identity(), s) == s);
}

TEST_CASE("reduction reaches the canonical representative") {
  CHECK(quadform::is_reduced({1, 0, 1}));
  CHECK(quadform::is_reduced({2, 2, 3}));
  CHECK_FALSE(quadform::is_reduced({2, 3, 3}));   // b > s11
  CHECK_FALSE(quadform::is_reduced({3, 1, 2}));   // s11 > s22
  CHECK_FALSE(quadform::is_reduced({2, -1, 3}));  // b < 0

  const auto r1 = quadform::reduce({5, 4, 1});
  CHECK(r1.reduced == HalfIntegralForm{1, 0, 1});
  CHECK(quadform::act(r1.transform, {5, 4, 1}) == r1.reduced);

  const auto r2 = quadform::reduce({10, 7, 2});
  CHECK(r2.reduced == HalfIntegralForm{2, 1, 4});
  CHECK(quadform::act(r2.transform, {10, 7, 2}) == r2.reduced);
  CHECK(std::abs(det(r2.transform)) == 1);

  const auto r3 = quadform::reduce({1, 0, 1});
  CHECK(r3.reduced == HalfIntegralForm{1, 0, 1});
  CHECK(r3.transform == mat2i_identity());

  CHECK_THROWS_AS(quadform::reduce({1, 5, 1}), std::invalid_argument);
}

TEST_CASE("reduction is a class invariant under random unimodular twists") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2);
  const HalfIntegralForm s{2, 1, 3};
  const auto canon = quadform::reduce(s).reduced;
  int tried = 0;
  while (tried < 15) {
    const Mat2i a{entry(rng), entry(rng), entry(rng), entry(rng)};
    if (std::abs(det(a)) != 1) continue;
    ++tried;
    const auto r = quadform::reduce(quadform::act(a, s));
    CHECK(r.reduced == canon);
  }
}

TEST_CASE("automorphism groups of the classical reduced forms") {
  struct Row {
    HalfIntegralForm s;
    std::size_t order;
  };
  for (const auto& [s, order] : {Row{{1, 0, 1}, 8},    // square lattice
                                 Row{{1, 1, 1}, 12},   // hexagonal
                                 Row{{1, 0, 2}, 4},    // rectangular
                                 Row{{2, 1, 3}, 2}}) {  // generic
    const auto aut = quadform::aut_group(s);
    CHECK(aut.size() == order);
    for (const auto& a : aut) {
      CHECK(std::abs(det(a)) == 1);
      CHECK(quadform::act(a, s) == s);
    }
    CHECK(std::count(aut.begin(), aut.end(), mat2i_identity()) == 1);
    CHECK(std::count(aut.begin(), aut.end(), -mat2i_identity()) == 1);
    // Exhaustive box search finds nothing extra.
    CHECK(brute_transporter(s, s, 3).size() == order);
  }
}

TEST_CASE("transporter sets and orbit counts") {
  const HalfIntegralForm sq{1, 0, 1};
  const auto t = quadform::transporter({5, 4, 1}, sq);
  CHECK(t.size() == 8);
  for (const auto& a : t) CHECK(quadform::act(a, {5, 4, 1}) == sq);
  CHECK(t.size() == brute_transporter({5, 4, 1}, sq, 4).size());

  CHECK(quadform::orbit_count(sq, sq) == 4);
  CHECK(quadform::orbit_count({5, 4, 1}, sq) == 4);
  CHECK(quadform::orbit_count({1, 1, 1}, {1, 1, 1}) == 6);
  CHECK(quadform::orbit_count(sq, {1, 0, 2}) == 0);
  CHECK(quadform::orbit_count({1, 0, 2}, {1, 0, 2}) == 2);

  CHECK(quadform::is_equivalent({5, 4, 1}, sq));
  CHECK_FALSE(quadform::is_equivalent(sq, {1, 1, 1}));  // disc 4 vs 3
  CHECK_FALSE(quadform::is_equivalent({1, 0, 6}, {2, 2, 3}));  // same disc 24, distinct classes
}
