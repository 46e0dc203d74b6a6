#include "poincare/classical.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "poincare/errors.hpp"
#include "poincare/mat2.hpp"
#include "poincare/modgroup.hpp"
#include "poincare/numerics.hpp"

namespace poincare::classical {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

cplx e_of(cplx z) {  // e(z) = exp(2*pi*i*z)
  const double r = std::exp(-kTwoPi * z.imag());
  return {r * std::cos(kTwoPi * z.real()), r * std::sin(kTwoPi * z.real())};
}

// Bottom row together with its completion, ready for evaluation.
struct PreparedCoset {
  double c, d, a, b;
};

std::vector<PreparedCoset> prepare_cosets(int B, std::int64_t q) {
  std::vector<PreparedCoset> out;
  for (const auto& r : modgroup::enumerate_g1_cosets(B)) {
    if (modgroup::gamma0_indicator(r, q) == 0) continue;
    const auto [a, b] = modgroup::complete_g1(r);
    out.push_back({static_cast<double>(r.c), static_cast<double>(r.d),
                   static_cast<double>(a), static_cast<double>(b)});
  }
  return out;
}

double pow_over_factorial(double x, int n) {  // x^n / n!, overflow-free
  double p = 1.0;
  for (int i = 1; i <= n; ++i) p *= x / static_cast<double>(i);
  return p;
}

}  // namespace

void validate(const ClassicalParams& p) {
  if (p.m < 1 || p.n < 1) throw std::invalid_argument("classical: m, n >= 1 required");
  if (p.k < 4 || p.k % 2 != 0) throw std::invalid_argument("classical: k must be even, >= 4");
  if (p.q < 1) throw std::invalid_argument("classical: q >= 1 required");
  if (p.k > 120) throw envelope_error("classical: k > 120 unsupported");
  if (static_cast<std::int64_t>(p.m) * p.n > 4000)
    throw envelope_error("classical: m*n > 4000 unsupported");
  if (!(p.y0 > 1.0 && p.y0 <= 8.0)) throw envelope_error("classical: y0 must lie in (1, 8]");
  if (p.B < 1 || p.B > 2048) throw envelope_error("classical: B must lie in [1, 2048]");
  if (p.N < 2 || p.N > 8192 || (p.N & (p.N - 1)) != 0)
    throw envelope_error("classical: N must be a power of two in [2, 8192]");
}

cplx eval_poincare_g1(cplx z, const ClassicalParams& p) {
  validate(p);
  if (!(z.imag() >= 0.01)) throw numerical_error("eval_poincare_g1: Im z >= 0.01 required");
  cplx sum = 0.0;
  for (const auto& r : modgroup::enumerate_g1_cosets(p.B)) {
    if (modgroup::gamma0_indicator(r, p.q) == 0) continue;
    const auto [a, b] = modgroup::complete_g1(r);
    const cplx den = static_cast<double>(r.c) * z + static_cast<double>(r.d);
    const cplx w = (static_cast<double>(a) * z + static_cast<double>(b)) / den;
    sum += cpow_int(1.0 / den, p.k) * e_of(static_cast<double>(p.m) * w);
  }
  return sum;
}

std::vector<cplx> eval_grid_g1(int m, const std::vector<int>& k_list, std::int64_t q,
                               double y0, int B, int N, ExecMode mode, int threads) {
  ClassicalParams chk;
  chk.m = m;
  chk.q = q;
  chk.y0 = y0;
  chk.B = B;
  chk.N = N;
  for (int k : k_list) {
    chk.k = k;
    validate(chk);
  }
  if (k_list.empty()) throw std::invalid_argument("eval_grid_g1: empty weight list");

  const auto cosets = prepare_cosets(B, q);
  const numerics::QuadratureGrid grid(1, N);
  const double md = static_cast<double>(m);
  std::vector<cplx> values(k_list.size() * static_cast<std::size_t>(N));

  parallel::for_each_index(
      static_cast<std::size_t>(N), mode, threads,
      [&](std::size_t node) {
        const cplx z(grid.node(node)[0], y0);
        // One pass over the cosets accumulates every weight at this node;
        // the coset order is fixed, so results do not depend on threading.
        std::vector<cplx> acc(k_list.size(), cplx(0.0, 0.0));
        for (const auto& cs : cosets) {
          const cplx den = cs.c * z + cs.d;
          const cplx w = (cs.a * z + cs.b) / den;
          const cplx phase = e_of(md * w);
          const cplx inv = 1.0 / den;
          for (std::size_t i = 0; i < k_list.size(); ++i)
            acc[i] += cpow_int(inv, k_list[i]) * phase;
        }
        for (std::size_t i = 0; i < k_list.size(); ++i)
          values[i * static_cast<std::size_t>(N) + node] = acc[i];
      });
  return values;
}

KloostermanCoeff coeff_kloosterman(const ClassicalParams& p, std::int64_t c_max) {
  validate(p);
  if (c_max < 1) throw std::invalid_argument("coeff_kloosterman: c_max >= 1 required");
  const double arg0 = 2.0 * kTwoPi * std::sqrt(static_cast<double>(p.m) * p.n);
  const double front = (p.k / 2) % 2 == 0 ? kTwoPi : -kTwoPi;  // 2*pi*i^{-k}
  double sum = 0.0;
  for (std::int64_t c = p.q; c <= c_max; c += p.q) {
    const double s = numerics::kloosterman(p.m, p.n, c);
    sum += s / static_cast<double>(c) * numerics::bessel_j(p.k - 1, arg0 / static_cast<double>(c));
  }
  KloostermanCoeff out;
  out.value = (p.m == p.n ? 1.0 : 0.0) + front * sum;
  // |S(m,n;c)| <= c and |J_{k-1}(x)| <= (x/2)^{k-1}/(k-1)!, so the tail past
  // c_max is at most 2*pi*(2*pi*sqrt(mn))^{k-1}/(k-1)! * sum_{c>c_max} c^{1-k}.
  out.tail_bound = kTwoPi * pow_over_factorial(arg0 / 2.0, p.k - 1) *
                   std::pow(static_cast<double>(c_max), 2 - p.k) / static_cast<double>(p.k - 2);
  return out;
}

double coeff_quadrature_g1(const ClassicalParams& p, ExecMode mode, int threads) {
  validate(p);
  const auto values = eval_grid_g1(p.m, {p.k}, p.q, p.y0, p.B, p.N, mode, threads);
  const numerics::QuadratureGrid grid(1, p.N);
  std::vector<cplx> terms(p.N);
  const double nd = static_cast<double>(p.n);
  for (int j = 0; j < p.N; ++j)
    terms[j] = values[j] * e_of(cplx(-nd * grid.node(j)[0], -nd * p.y0));
  const cplx integral = parallel::pairwise_sum(terms) * grid.weight();
  const double norm = std::pow(static_cast<double>(p.m) / nd, (p.k - 1) / 2.0);
  const cplx coeff = norm * integral;
  if (std::abs(coeff.imag()) >= 1e-9)
    throw numerical_error("coeff_quadrature_g1: imaginary part above 1e-9");
  return coeff.real();
}

CoeffWithError coeff_quadrature_adaptive(ClassicalParams p, double tol, ExecMode mode,
                                         int threads) {
  if (!(tol > 0)) throw std::invalid_argument("coeff_quadrature_adaptive: tol > 0 required");
  double prev = coeff_quadrature_g1(p, mode, threads);
  for (int step = 0; step < 8; ++step) {
    if (p.B > 1024 || p.N > 4096)
      throw envelope_error("coeff_quadrature_adaptive: refinement exceeded B/N envelope");
    p.B *= 2;
    p.N *= 2;
    const double next = coeff_quadrature_g1(p, mode, threads);
    const double move = std::abs(next - prev);
    if (move < tol / 2.0) return {next, move};
    prev = next;
  }
  throw numerical_error("coeff_quadrature_adaptive: did not converge");
}

report::ScanReport weight_limit_scan(int m, int n, std::int64_t q,
                                     const std::vector<int>& k_list, std::int64_t c_max) {
  report::ScanReport rep;
  rep.param_names = {"k"};
  ClassicalParams p;
  p.m = m;
  p.n = n;
  p.q = q;
  const double target = m == n ? 1.0 : 0.0;
  for (int k : k_list) {
    p.k = k;
    const double t0 = now_seconds();
    const KloostermanCoeff base = coeff_kloosterman(p, c_max);
    const KloostermanCoeff fine = coeff_kloosterman(p, 2 * c_max);
    report::ScanRow row;
    row.params = {static_cast<double>(k)};
    row.value = base.value;
    row.target = target;
    row.abs_err = std::abs(base.value - target);
    row.err_estimate = std::abs(base.value - fine.value) + fine.tail_bound;
    row.seconds = now_seconds() - t0;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

report::ScanReport level_limit_scan(int m, int n, int k,
                                    const std::vector<std::int64_t>& q_list) {
  report::ScanReport rep;
  rep.param_names = {"q"};
  ClassicalParams p;
  p.m = m;
  p.n = n;
  p.k = k;
  const double target = m == n ? 1.0 : 0.0;
  for (std::int64_t q : q_list) {
    p.q = q;
    const std::int64_t c_max = std::max<std::int64_t>(64, 8 * q);
    const double t0 = now_seconds();
    const KloostermanCoeff base = coeff_kloosterman(p, c_max);
    const KloostermanCoeff fine = coeff_kloosterman(p, 2 * c_max);
    report::ScanRow row;
    row.params = {static_cast<double>(q)};
    row.value = base.value;
    row.target = target;
    row.abs_err = std::abs(base.value - target);
    row.err_estimate = std::abs(base.value - fine.value) + fine.tail_bound;
    row.seconds = now_seconds() - t0;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace poincare::classical
