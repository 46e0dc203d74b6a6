#include "poincare/numerics.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "poincare/errors.hpp"

namespace poincare::numerics {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t c) {
  // Extended Euclid; requires gcd(x, c) = 1, c >= 1.
  std::int64_t r0 = c, r1 = ((x % c) + c) % c;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return ((t0 % c) + c) % c;
}

std::int64_t euler_phi(std::int64_t c) {
  if (c <= 0) throw std::invalid_argument("euler_phi: c must be positive");
  std::int64_t result = c, n = c;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

double kloosterman(std::int64_t m, std::int64_t n, std::int64_t c) {
  if (c <= 0) throw std::invalid_argument("kloosterman: c must be positive");
  if (c == 1) return 1.0;  // empty modulus: the single residue contributes cos(0)
  double sum = 0.0;
  for (std::int64_t x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    const std::int64_t xbar = mod_inverse(x, c);
    // Reduce the phase numerator exactly before going to floating point.
    const std::int64_t num = ((m % c) * x + (n % c) * xbar) % c;
    sum += std::cos(kTwoPi * static_cast<double>(num) / static_cast<double>(c));
  }
  return sum;
}

double bessel_j_bound(int order, double x) {
  if (order < 0) throw std::invalid_argument("bessel_j_bound: order must be >= 0");
  // (x/2)^order / order! as a product of small factors; partial products stay
  // below ~e^{x/2}, so no overflow for the supported range.
  const double h = std::abs(x) / 2.0;
  double t = 1.0;
  for (int i = 1; i <= order; ++i) t *= h / static_cast<double>(i);
  return t;
}

double bessel_j(int order, double x) {
  if (order < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
  if (order > 200 || std::abs(x) > 100.0)
    throw envelope_error("bessel_j: outside supported envelope (order <= 200, |x| <= 100)");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  const bool flip = (x < 0.0) && (order % 2 == 1);
  const double ax = std::abs(x);
  const double h = ax / 2.0;

  // The alternating series loses ~log10(largest term) digits to cancellation.
  // Terms decrease from the start iff h^2 <= order + 1 (then the sum is
  // unconditionally stable); for small x the peak term stays < ~1e4, which
  // keeps the absolute error below ~1e-12. Everything else goes to the
  // library routine (Steed's method in this range).
  if (h * h > static_cast<double>(order + 1) && ax > 16.0) {
    const double sum = std::cyl_bessel_j(static_cast<double>(order), ax);
    return flip ? -sum : sum;
  }

  double term = 1.0;
  for (int i = 1; i <= order; ++i) term *= h / static_cast<double>(i);
  double sum = term;
  const double h2 = h * h;
  for (int j = 1; j <= 400; ++j) {
    term *= -h2 / (static_cast<double>(j) * static_cast<double>(order + j));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
  }
  return flip ? -sum : sum;
}

QuadratureGrid::QuadratureGrid(int dim_, int n_) : dim(dim_), n(n_) {
  if (dim != 1 && dim != 3) throw std::invalid_argument("QuadratureGrid: dim must be 1 or 3");
  if (n < 1 || (n & (n - 1)) != 0) throw std::invalid_argument("QuadratureGrid: n must be a power of two");
  if (n > 1024) throw envelope_error("QuadratureGrid: n > 1024 unsupported");
}

std::size_t QuadratureGrid::node_count() const {
  std::size_t count = 1;
  for (int i = 0; i < dim; ++i) count *= static_cast<std::size_t>(n);
  return count;
}

std::array<double, 3> QuadratureGrid::node(std::size_t index) const {
  std::array<double, 3> x{0.0, 0.0, 0.0};
  const auto nn = static_cast<std::size_t>(n);
  // Lexicographic: the last axis varies fastest.
  for (int axis = dim - 1; axis >= 0; --axis) {
    const std::size_t i = index % nn;
    index /= nn;
    x[static_cast<std::size_t>(axis)] = (static_cast<double>(i) + 0.5) / static_cast<double>(n) - 0.5;
  }
  return x;
}

double QuadratureGrid::weight() const {
  double w = 1.0;
  for (int i = 0; i < dim; ++i) w /= static_cast<double>(n);
  return w;
}

cplx cube_quadrature(const QuadratureGrid& grid,
                     const std::function<cplx(const std::array<double, 3>&)>& f,
                     parallel::ExecMode mode, int threads) {
  const std::size_t count = grid.node_count();
  std::vector<cplx> values(count);
  parallel::for_each_index(count, mode, threads,
                           [&](std::size_t i) { values[i] = f(grid.node(i)); });
  return parallel::pairwise_sum(values) * grid.weight();
}

}  // namespace poincare::numerics
