// Timing harness: straightforward serial series evaluation vs. the grid
// kernels, plus serial/OpenMP agreement of the kernels themselves.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "poincare/classical.hpp"
#include "poincare/numerics.hpp"
#include "poincare/parallel.hpp"
#include "poincare/siegel.hpp"

using poincare::cplx;
using poincare::parallel::ExecMode;

namespace {

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool bitwise_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].real() != b[i].real() || a[i].imag() != b[i].imag()) return false;
  return true;
}

int bench_classical() {
  const std::vector<int> ks{12, 16, 20, 24};
  const int B = 128, N = 128;
  const double y0 = 1.1;
  std::printf("classical grid: m=1 q=1 y0=%.2f B=%d N=%d k={12,16,20,24}\n", y0, B, N);

  const double t0 = now();
  std::vector<cplx> ref(ks.size() * static_cast<std::size_t>(N));
  {
    poincare::classical::ClassicalParams p;
    p.q = 1;
    p.y0 = y0;
    p.B = B;
    p.N = N;
    const poincare::numerics::QuadratureGrid grid(1, N);
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      p.k = ks[ki];
      for (int j = 0; j < N; ++j) {
        const cplx z(grid.node(static_cast<std::size_t>(j))[0], y0);
        ref[ki * static_cast<std::size_t>(N) + static_cast<std::size_t>(j)] =
            poincare::classical::eval_poincare_g1(z, p);
      }
    }
  }
  const double t_ref = now() - t0;

  const double t1 = now();
  const auto kern_serial =
      poincare::classical::eval_grid_g1(1, ks, 1, y0, B, N, ExecMode::serial);
  const double t_serial = now() - t1;

  const double t2 = now();
  const auto kern_omp =
      poincare::classical::eval_grid_g1(1, ks, 1, y0, B, N, ExecMode::openmp);
  const double t_omp = now() - t2;

  const double dev = max_abs_diff(ref, kern_serial);
  const bool same = bitwise_equal(kern_serial, kern_omp);
  std::printf("  reference      %8.3fs\n", t_ref);
  std::printf("  kernel serial  %8.3fs  (%.1fx vs reference)\n", t_serial, t_ref / t_serial);
  std::printf("  kernel openmp  %8.3fs  (%.1fx vs kernel serial)\n", t_omp, t_serial / t_omp);
  std::printf("  max |kernel - reference| = %.3e, serial/openmp bitwise equal: %s\n", dev,
              same ? "yes" : "NO");
  return (dev < 1e-9 && same) ? 0 : 1;
}

int bench_siegel() {
  const std::vector<int> ks{20, 24};
  const poincare::quadform::HalfIntegralForm s{1, 0, 1};
  const int B = 2, N = 8;
  const double y0 = 1.2;
  std::printf("genus-2 grid: s=I y0=%.2f B=%d N=%d k={20,24}\n", y0, B, N);

  const poincare::numerics::QuadratureGrid grid(3, N);
  const std::size_t nodes = grid.node_count();
  const double t0 = now();
  std::vector<cplx> ref(ks.size() * nodes);
  for (std::size_t ki = 0; ki < ks.size(); ++ki)
    for (std::size_t j = 0; j < nodes; ++j) {
      const auto xyz = grid.node(j);
      const poincare::SiegelPoint z{{xyz[0], xyz[1], xyz[2]}, {y0, 0.0, y0}};
      ref[ki * nodes + j] = poincare::siegel::eval_siegel_poincare(z, s, ks[ki], B);
    }
  const double t_ref = now() - t0;

  const double t1 = now();
  const auto kern_serial = poincare::siegel::eval_siegel_grid(s, ks, y0, B, N, ExecMode::serial);
  const double t_serial = now() - t1;

  const double t2 = now();
  const auto kern_omp = poincare::siegel::eval_siegel_grid(s, ks, y0, B, N, ExecMode::openmp);
  const double t_omp = now() - t2;

  const double dev = max_abs_diff(ref, kern_serial);
  const bool same = bitwise_equal(kern_serial, kern_omp);
  std::printf("  reference      %8.3fs\n", t_ref);
  std::printf("  kernel serial  %8.3fs  (%.1fx vs reference)\n", t_serial, t_ref / t_serial);
  std::printf("  kernel openmp  %8.3fs  (%.1fx vs kernel serial)\n", t_omp, t_serial / t_omp);
  std::printf("  max |kernel - reference| = %.3e, serial/openmp bitwise equal: %s\n", dev,
              same ? "yes" : "NO");
  // The kernel drops terms individually below 1e-22; the reference keeps them.
  return (dev < 1e-9 && same) ? 0 : 1;
}

}  // namespace

int main() {
  int rc = bench_classical();
  rc |= bench_siegel();
  if (rc == 0) std::printf("agreement checks passed\n");
  return rc;
}
