#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "poincare/parallel.hpp"
#include "poincare/report.hpp"

namespace poincare::classical {

using cplx = std::complex<double>;
using parallel::ExecMode;

// Parameters of the weight-k index-m series for the level-q group, evaluated
// along the segment Im z = y0, with series truncation height B and N
// quadrature points.
struct ClassicalParams {
  int m = 1;          // series index, >= 1
  int n = 1;          // coefficient index, >= 1
  int k = 12;         // weight, even, >= 4
  std::int64_t q = 1; // level (1 = full group)
  double y0 = 1.1;    // > 1
  int B = 40;         // truncation: max(|c|,|d|) <= B
  int N = 64;         // quadrature points (power of two)
};

void validate(const ClassicalParams& p);  // throws envelope_error / invalid_argument

// Truncated series sum_{(c,d)} (cz+d)^{-k} e(m*gamma z) over normalized
// bottom rows with q | c. Straightforward serial reference evaluation.
cplx eval_poincare_g1(cplx z, const ClassicalParams& p);

struct KloostermanCoeff {
  double value;       // delta(m,n) + 2*pi*(-1)^{k/2} * sum_{c<=c_max, q|c} S(m,n;c)/c * J_{k-1}(4*pi*sqrt(mn)/c)
  double tail_bound;  // analytic bound on everything beyond c_max
};

// Exact-expansion oracle for the (normalized) n-th coefficient of the m-th
// series. The normalization is the spectral one: the value equals
// (m/n)^{(k-1)/2} times the raw Fourier coefficient, which is what the
// Bessel/Kloosterman expansion above produces.
KloostermanCoeff coeff_kloosterman(const ClassicalParams& p, std::int64_t c_max);

// Same coefficient by quadrature of the truncated series along Im z = y0:
// (m/n)^{(k-1)/2} * integral of eval_poincare_g1(x+i*y0) * e(-n(x+i*y0)) dx.
// Throws numerical_error if the imaginary part of the (normalized) result
// is >= 1e-9; the real part is returned.
double coeff_quadrature_g1(const ClassicalParams& p,
                           ExecMode mode = ExecMode::openmp, int threads = 0);

struct CoeffWithError {
  double value;
  double err_estimate;
};

// Doubles B and N until the coefficient moves by less than tol/2 (the last
// move is the reported error estimate), starting from p.B, p.N.
CoeffWithError coeff_quadrature_adaptive(ClassicalParams p, double tol,
                                         ExecMode mode = ExecMode::openmp,
                                         int threads = 0);

// Grid evaluation of the series at every node x_j + i*y0 for all weights of
// k_list at once; values[k_index * N + node]. The hot kernel behind the
// coefficient quadrature; a serial reference path is selected by `mode`.
std::vector<cplx> eval_grid_g1(int m, const std::vector<int>& k_list,
                               std::int64_t q, double y0, int B, int N,
                               ExecMode mode = ExecMode::openmp, int threads = 0);

// Kloosterman-oracle coefficient against k (target delta(m,n)); error
// estimate from recomputation at doubled c_max plus the analytic tail.
report::ScanReport weight_limit_scan(int m, int n, std::int64_t q,
                                     const std::vector<int>& k_list,
                                     std::int64_t c_max = 128);

// Kloosterman-oracle coefficient against level q at fixed k.
report::ScanReport level_limit_scan(int m, int n, int k,
                                    const std::vector<std::int64_t>& q_list);

}  // namespace poincare::classical
