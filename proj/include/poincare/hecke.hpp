#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "poincare/qexp.hpp"

namespace poincare::hecke {

// Matrix of T_p on the echelon cusp basis of weight k (exact):
// a(T_p f, n) = a(f, p n) + p^{k-1} a(f, n/p).
std::vector<std::vector<mpq_class>> hecke_matrix(const std::vector<qexp::QExpansion>& basis,
                                                 std::int64_t p);

// Characteristic polynomial coefficients (monic, degree d) of a rational
// matrix by the Faddeev-LeVerrier recurrence, exact.
std::vector<mpq_class> char_poly(const std::vector<std::vector<mpq_class>>& m);

// All real roots of a monic polynomial with distinct real roots, ascending.
// Bisection on sign changes + Newton polish; throws numerical_error if the
// expected count is not found or two roots collide within 1e-8 relative.
std::vector<double> real_roots(const std::vector<double>& monic_coeffs);

struct HeckeEigenform {
  int k = 0;
  int index = 0;            // position within the weight-k family, by a(2) ascending
  std::vector<double> a;    // a[n], a[1] = 1, up to the working precision
  double eigenvalue_t2 = 0; // a(2), as the T_2 root it came from

  double lambda(std::int64_t n) const;  // a[n] / n^{(k-1)/2}
};

struct HeckeSystem {
  int k = 0;
  int dim = 0;
  std::vector<HeckeEigenform> forms;
};

// Diagonalizes T_2 on the weight-k cusp space (dimension <= 5 for k <= 60):
// exact T_2 matrix and characteristic polynomial, real root refinement,
// eigenvectors by inverse iteration, each verified to be a T_3 eigenvector.
// Coefficients are produced up to index N (default covers p <= pmax and the
// p^2 recursion checks through p = 7).
HeckeSystem hecke_eigensystem(int k, std::int64_t pmax = 53, int N = 0);

// Second-kind Chebyshev polynomial U_n(x) normalized by
// U_0=1, U_1=x, U_{n+1} = x U_n - U_{n-1} (so U_n(2cos th)=sin((n+1)th)/sin th).
double chebyshev_u(int n, double x);

struct WeightEstimate {
  std::vector<double> omega;  // one per eigenform, matching HeckeSystem order
  double residual;            // max_m |sum_f omega_f lambda_f(m) - oracle(m)|
};

// Least-squares fit of the spectral weights from the linear system
// sum_f omega_f lambda_f(m) = coeff_kloosterman(m, 1, k), m = 1..M.
// Throws numerical_error if the residual exceeds 1e-5.
WeightEstimate estimate_weights(const HeckeSystem& sys, int M = 8, std::int64_t c_max = 300);

// Weighted Weyl sum sum_f omega_f prod_p U_{e_p}(lambda_f(p)) for the
// exponent map {p -> e_p}; empty map gives exactly the plain weight sum.
double weyl_sum(const HeckeSystem& sys, const WeightEstimate& w,
                const std::map<std::int64_t, int>& exponents);

}  // namespace poincare::hecke
