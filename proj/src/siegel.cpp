#include "poincare/siegel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "poincare/errors.hpp"
#include "poincare/modgroup.hpp"
#include "poincare/numerics.hpp"

namespace poincare::siegel {

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

void check_weight(int k) {
  if (k < 6 || k % 2 != 0) throw std::invalid_argument("siegel: k must be even, >= 6");
  if (k > kMaxWeight) throw envelope_error("siegel: k above weight envelope");
}

void check_form(const HalfIntegralForm& f, const char* what) {
  if (!quadform::is_positive_definite(f))
    throw std::invalid_argument(std::string("siegel: ") + what + " not positive definite");
  if (f.s11 + f.s22 > 20) throw envelope_error(std::string("siegel: trace of ") + what + " > 20");
}

}  // namespace

void validate(const SiegelParams& p) {
  check_form(p.s, "s");
  check_form(p.t, "t");
  check_weight(p.k);
  if (!(p.y0 > 1.0 && p.y0 <= 4.0)) throw envelope_error("siegel: y0 must lie in (1, 4]");
  if (p.B < 1 || p.B > kMaxGridB) throw envelope_error("siegel: B outside [1, 3]");
  if (p.N < 2 || p.N > kMaxN || (p.N & (p.N - 1)) != 0)
    throw envelope_error("siegel: N must be a power of two in [2, 32]");
}

cplx eval_siegel_poincare(const SiegelPoint& z, const HalfIntegralForm& s, int k, int B) {
  check_form(s, "s");
  check_weight(k);
  if (B < 1 || B > kMaxB) throw envelope_error("siegel: B outside [1, 4]");
  if (!positive_definite(z.y)) throw std::invalid_argument("siegel: Im z not positive definite");
  const Mat2c zm = to_matrix(z);
  cplx sum = 0.0;
  for (const auto& rep : modgroup::enumerate_g2_cosets(B)) {
    const modgroup::Sp4 g = modgroup::complete_g2(rep);
    const Mat2c w = modgroup::symplectic_action_matrix(g, zm);
    const cplx den = det(to_complex(g.c) * zm + to_complex(g.d));
    sum += cpow_int(1.0 / den, k) * e_of(quadform::trace_pair(s, w));
  }
  return sum;
}

double eval_majorant(const SiegelPoint& z, const HalfIntegralForm& s, int k, int B) {
  check_form(s, "s");
  check_weight(k);
  if (B < 1 || B > kMaxB) throw envelope_error("siegel: B outside [1, 4]");
  if (!positive_definite(z.y)) throw std::invalid_argument("siegel: Im z not positive definite");
  const Mat2c zm = to_matrix(z);
  double sum = 0.0;
  for (const auto& rep : modgroup::enumerate_g2_cosets(B)) {
    const modgroup::Sp4 g = modgroup::complete_g2(rep);
    const Mat2c w = modgroup::symplectic_action_matrix(g, zm);
    const Sym2d im{w.a11.imag(), 0.5 * (w.a12.imag() + w.a21.imag()), w.a22.imag()};
    const double den = std::abs(det(to_complex(g.c) * zm + to_complex(g.d)));
    sum += std::pow(den, -k) * std::exp(-kTwoPi * quadform::trace_pair(s, im));
  }
  return sum;
}

cplx limit_function_partial(const SiegelPoint& z, const HalfIntegralForm& s, int B) {
  check_form(s, "s");
  if (B < 1 || B > 16) throw envelope_error("limit_function_partial: B outside [1, 16]");
  if (!positive_definite(z.y)) throw std::invalid_argument("siegel: Im z not positive definite");
  const Mat2c zm = to_matrix(z);
  cplx sum = 0.0;
  Mat2i a;
  for (a.a11 = -B; a.a11 <= B; ++a.a11)
    for (a.a12 = -B; a.a12 <= B; ++a.a12)
      for (a.a21 = -B; a.a21 <= B; ++a.a21)
        for (a.a22 = -B; a.a22 <= B; ++a.a22) {
          const std::int64_t dt = det(a);
          if (dt != 1 && dt != -1) continue;
          // One representative per {a, -a}: first nonzero entry positive.
          const std::int64_t lead = a.a11 != 0 ? a.a11 : a.a12 != 0 ? a.a12
                                   : a.a21 != 0 ? a.a21 : a.a22;
          if (lead < 0) continue;
          sum += e_of(quadform::trace_pair(quadform::act(a, s), zm));
        }
  return sum;
}

namespace {

struct PackedCoset {
  double a[4], b[4], c[4], d[4];
};

std::vector<PackedCoset> pack_cosets(int B) {
  std::vector<PackedCoset> out;
  for (const auto& rep : modgroup::enumerate_g2_cosets(B)) {
    const modgroup::Sp4 g = modgroup::complete_g2(rep);
    PackedCoset p;
    const auto put = [](double* dst, const Mat2i& m) {
      dst[0] = static_cast<double>(m.a11);
      dst[1] = static_cast<double>(m.a12);
      dst[2] = static_cast<double>(m.a21);
      dst[3] = static_cast<double>(m.a22);
    };
    put(p.a, g.a);
    put(p.b, g.b);
    put(p.c, g.c);
    put(p.d, g.d);
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<cplx> eval_siegel_grid(const HalfIntegralForm& s, const std::vector<int>& k_list,
                                   double y0, int B, int N, ExecMode mode, int threads) {
  if (k_list.empty()) throw std::invalid_argument("eval_siegel_grid: empty weight list");
  SiegelParams chk;
  chk.s = s;
  chk.y0 = y0;
  chk.B = B;
  chk.N = N;
  for (int k : k_list) {
    chk.k = k;
    validate(chk);
  }

  // Ascending weight order for the power ladder; results land at the
  // caller's positions.
  std::vector<std::size_t> order(k_list.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return k_list[i] < k_list[j]; });
  const int k_min = k_list[order[0]];

  // Every term satisfies |det(cz+d)^{-k} e(Tr(s*gamma*z))| <= |det(cz+d)|^{-k},
  // so cosets with |det|^2 above this threshold contribute < 1e-22 at every
  // requested weight and are dropped. The test depends only on (node, coset),
  // never on threading, so results stay bit-identical across thread counts.
  const double skip_threshold = std::pow(1e22, 2.0 / static_cast<double>(k_min));

  const auto cosets = pack_cosets(B);
  const numerics::QuadratureGrid grid(3, N);
  const std::size_t nodes = grid.node_count();
  const std::size_t nk = k_list.size();
  const double s11 = static_cast<double>(s.s11);
  const double sb2 = 0.5 * static_cast<double>(s.b);
  const double s22 = static_cast<double>(s.s22);

  std::vector<cplx> values(nk * nodes);
  parallel::for_each_index(nodes, mode, threads, [&](std::size_t node) {
    const auto xn = grid.node(node);
    const double x11 = xn[0], x12 = xn[1], x22 = xn[2];
    std::vector<cplx> acc(nk, cplx(0.0, 0.0));
    for (const auto& cs : cosets) {
      // M = c*(x + i*y0*I) + d, entrywise.
      const double mr0 = cs.c[0] * x11 + cs.c[1] * x12 + cs.d[0];
      const double mr1 = cs.c[0] * x12 + cs.c[1] * x22 + cs.d[1];
      const double mr2 = cs.c[2] * x11 + cs.c[3] * x12 + cs.d[2];
      const double mr3 = cs.c[2] * x12 + cs.c[3] * x22 + cs.d[3];
      const cplx m0(mr0, y0 * cs.c[0]), m1(mr1, y0 * cs.c[1]);
      const cplx m2(mr2, y0 * cs.c[2]), m3(mr3, y0 * cs.c[3]);
      const cplx detm = m0 * m3 - m1 * m2;
      const double a2 = detm.real() * detm.real() + detm.imag() * detm.imag();
      if (a2 > skip_threshold) continue;

      // W = a*(x + i*y0*I) + b.
      const double wr0 = cs.a[0] * x11 + cs.a[1] * x12 + cs.b[0];
      const double wr1 = cs.a[0] * x12 + cs.a[1] * x22 + cs.b[1];
      const double wr2 = cs.a[2] * x11 + cs.a[3] * x12 + cs.b[2];
      const double wr3 = cs.a[2] * x12 + cs.a[3] * x22 + cs.b[3];
      const cplx w0(wr0, y0 * cs.a[0]), w1(wr1, y0 * cs.a[1]);
      const cplx w2(wr2, y0 * cs.a[2]), w3(wr3, y0 * cs.a[3]);

      // Tr(s * W * adj(M)); gamma*z = W*adj(M)/det(M).
      const cplx v11 = w0 * m3 - w1 * m2;
      const cplx v22 = w3 * m0 - w2 * m1;
      const cplx v12p21 = (w1 * m0 - w0 * m1) + (w2 * m3 - w3 * m2);
      const cplx tr_num = s11 * v11 + sb2 * v12p21 + s22 * v22;

      const cplx invdet = std::conj(detm) / a2;
      const cplx phi = tr_num * invdet;
      const cplx ephi = e_of(phi);

      const cplx u2 = invdet * invdet;
      cplx cur = cpow_int(invdet, k_min) * ephi;
      int k_cur = k_min;
      for (std::size_t oi : order) {
        for (; k_cur < k_list[oi]; k_cur += 2) cur *= u2;
        acc[oi] += cur;
      }
    }
    for (std::size_t i = 0; i < nk; ++i) values[i * nodes + node] = acc[i];
  });
  return values;
}

double coeff_from_grid(const std::vector<cplx>& values, std::size_t k_index,
                       const std::vector<int>& k_list, const HalfIntegralForm& t, double y0,
                       int N) {
  const numerics::QuadratureGrid grid(3, N);
  const std::size_t nodes = grid.node_count();
  if (k_index >= k_list.size() || values.size() != k_list.size() * nodes)
    throw std::invalid_argument("coeff_from_grid: shape mismatch");
  std::vector<cplx> terms(nodes);
  for (std::size_t node = 0; node < nodes; ++node) {
    const auto xn = grid.node(node);
    const Sym2d x{xn[0], xn[1], xn[2]};
    terms[node] = values[k_index * nodes + node] * e_of(cplx(-quadform::trace_pair(t, x), 0.0));
  }
  const double unfold = std::exp(kTwoPi * y0 * static_cast<double>(t.s11 + t.s22));
  const cplx coeff = parallel::pairwise_sum(terms) * grid.weight() * unfold;
  if (std::abs(coeff.imag()) >= 1e-6)
    throw numerical_error("coeff_from_grid: imaginary part above 1e-6");
  return coeff.real();
}

SiegelCoeffResult siegel_coeff(const SiegelParams& p, ExecMode mode, int threads) {
  validate(p);
  const std::vector<int> ks{p.k};
  const auto base = eval_siegel_grid(p.s, ks, p.y0, p.B, p.N, mode, threads);
  const double v = coeff_from_grid(base, 0, ks, p.t, p.y0, p.N);
  const int b2 = std::min(2 * p.B, kMaxGridB);
  const int n2 = std::min(2 * p.N, kMaxN);
  if (b2 == p.B && n2 == p.N) return {v, 0.0};
  const auto fine = eval_siegel_grid(p.s, ks, p.y0, b2, n2, mode, threads);
  const double v2 = coeff_from_grid(fine, 0, ks, p.t, p.y0, n2);
  return {v, std::abs(v - v2)};
}

report::ScanReport siegel_weight_scan(const HalfIntegralForm& s, const HalfIntegralForm& t,
                                      const std::vector<int>& k_list, double y0, int B, int N,
                                      ExecMode mode, int threads) {
  SiegelParams chk;
  chk.s = s;
  chk.t = t;
  chk.y0 = y0;
  chk.B = B;
  chk.N = N;
  for (int k : k_list) {
    chk.k = k;
    validate(chk);
  }
  const double target = quadform::orbit_count(s, t);

  const double t0 = now_seconds();
  const auto base = eval_siegel_grid(s, k_list, y0, B, N, mode, threads);
  const int b2 = std::min(2 * B, kMaxGridB);
  const int n2 = std::min(2 * N, kMaxN);
  const bool have_fine = !(b2 == B && n2 == N);
  const std::vector<cplx> fine =
      have_fine ? eval_siegel_grid(s, k_list, y0, b2, n2, mode, threads) : std::vector<cplx>{};
  const double shared = (now_seconds() - t0) / static_cast<double>(k_list.size());

  report::ScanReport rep;
  rep.param_names = {"k"};
  for (std::size_t i = 0; i < k_list.size(); ++i) {
    const double t1 = now_seconds();
    report::ScanRow row;
    row.params = {static_cast<double>(k_list[i])};
    row.value = coeff_from_grid(base, i, k_list, t, y0, N);
    const double v2 = have_fine ? coeff_from_grid(fine, i, k_list, t, y0, n2) : row.value;
    row.target = target;
    row.abs_err = std::abs(row.value - target);
    row.err_estimate = std::abs(row.value - v2);
    row.seconds = shared + (now_seconds() - t1);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace poincare::siegel
