#pragma once

#include <complex>
#include <vector>

#include "poincare/mat2.hpp"
#include "poincare/parallel.hpp"
#include "poincare/quadform.hpp"
#include "poincare/report.hpp"

namespace poincare::siegel {

using cplx = std::complex<double>;
using parallel::ExecMode;
using quadform::HalfIntegralForm;

// Supported envelope for the genus-2 series computations.
inline constexpr int kMaxB = 4;        // coset entry height
inline constexpr int kMaxGridB = 3;    // entry height for full-grid evaluation
inline constexpr int kMaxN = 32;       // grid points per axis
inline constexpr int kMaxWeight = 60;

struct SiegelParams {
  HalfIntegralForm s;  // series index
  HalfIntegralForm t;  // coefficient index
  int k = 20;          // weight, even
  double y0 = 1.05;    // > 1, certified via fund_domain
  int B = 2;           // truncation: entries of [c d] bounded by B
  int N = 16;          // grid points per axis (power of two)
};

void validate(const SiegelParams& p);

// Truncated series sum over symmetric coprime pairs of
// det(cz+d)^{-k} e(Tr(s * gamma z)). Serial reference evaluation built on
// complete_g2 + symplectic_action.
cplx eval_siegel_poincare(const SiegelPoint& z, const HalfIntegralForm& s, int k, int B);

// Termwise absolute-value majorant sum |det(cz+d)|^{-k} exp(-2 pi Tr(s Im gamma z)).
double eval_majorant(const SiegelPoint& z, const HalfIntegralForm& s, int k, int B);

// Partial limit object: sum over GL(2,Z)/{+-1} classes with entries <= B of
// e(Tr((a^T s a) z)). Equals the c = 0 part of the series for every weight.
cplx limit_function_partial(const SiegelPoint& z, const HalfIntegralForm& s, int B);

// Grid values of the series at z = x_node + i*y0*I for all weights in k_list
// at once: values[k_index * node_count + node]. Optimized kernel (per-coset
// precomputation, weight amortization); OpenMP across nodes with a fixed
// per-node term order, so results are bit-identical for any thread count.
std::vector<cplx> eval_siegel_grid(const HalfIntegralForm& s, const std::vector<int>& k_list,
                                   double y0, int B, int N,
                                   ExecMode mode = ExecMode::openmp, int threads = 0);

// Coefficient extraction from grid values: pairwise-reduced quadrature of
// values * e(-Tr(t z)). Throws numerical_error if |imag| >= 1e-6.
double coeff_from_grid(const std::vector<cplx>& values, std::size_t k_index,
                       const std::vector<int>& k_list, const HalfIntegralForm& t,
                       double y0, int N);

struct SiegelCoeffResult {
  double value;
  double err_estimate;  // |value - recomputation with doubled (B, N)|, knobs
                        // capped at the grid envelope (B<=3, N<=32)
};

SiegelCoeffResult siegel_coeff(const SiegelParams& p,
                               ExecMode mode = ExecMode::openmp, int threads = 0);

// Coefficient against k for fixed s, t: one grid pass at (B, N) and one at
// the capped doubling, shared by all rows. Target is orbit_count(s, t).
report::ScanReport siegel_weight_scan(const HalfIntegralForm& s, const HalfIntegralForm& t,
                                      const std::vector<int>& k_list, double y0, int B, int N,
                                      ExecMode mode = ExecMode::openmp, int threads = 0);

}  // namespace poincare::siegel
