#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "poincare/parallel.hpp"

namespace poincare::numerics {

using cplx = std::complex<double>;

// Kloosterman sum S(m,n;c) = sum over x mod c, gcd(x,c)=1, of
// cos(2*pi*(m*x + n*xbar)/c) where xbar is the inverse of x mod c.
// Direct summation with exact modular inverses; real by the x <-> -x pairing.
double kloosterman(std::int64_t m, std::int64_t n, std::int64_t c);

std::int64_t euler_phi(std::int64_t c);
std::int64_t mod_inverse(std::int64_t x, std::int64_t c);

// Bessel function of the first kind J_order(x) for integer order >= 0. Uses
// the alternating power series wherever it is stable (terms generated by an
// overflow-free product recurrence, so x^order and order! are never formed);
// for moderate x with small order, where the series cancels catastrophically,
// it defers to std::cyl_bessel_j.
double bessel_j(int order, double x);

// The classical bound |J_order(x)| <= (x/2)^order / order!, computed by the
// same overflow-free product.
double bessel_j_bound(int order, double x);

// Midpoint-rule grid on the cube [-1/2, 1/2]^dim, n points per axis
// (power of two). Exact for trigonometric characters e(sum t_j x_j) with
// integer frequencies once n exceeds twice the largest |t_j|.
struct QuadratureGrid {
  int dim;  // 1 or 3
  int n;    // points per axis

  QuadratureGrid(int dim_, int n_);
  std::size_t node_count() const;
  // Coordinates of node `index` (lexicographic order); unused axes stay 0.
  std::array<double, 3> node(std::size_t index) const;
  double weight() const;  // n^-dim, identical for every node
};

// Integrates f over the cube: evaluates every node (parallel across nodes
// when requested), then reduces with the fixed-shape pairwise tree, so the
// result is bit-identical for every thread count.
cplx cube_quadrature(const QuadratureGrid& grid,
                     const std::function<cplx(const std::array<double, 3>&)>& f,
                     parallel::ExecMode mode = parallel::ExecMode::openmp,
                     int threads = 0);

}  // namespace poincare::numerics
