#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace poincare::qexp {

// q-expansion of a level-1 modular form with exact rational coefficients:
// a[0] + a[1] q + ... + a[N] q^N. All arithmetic truncates at the common
// precision of the operands.
struct QExpansion {
  int weight = 0;
  std::vector<mpq_class> a;  // size N+1

  int precision() const { return static_cast<int>(a.size()) - 1; }
  const mpq_class& coeff(int n) const { return a.at(static_cast<std::size_t>(n)); }
};

QExpansion zero(int weight, int N);
QExpansion add(const QExpansion& f, const QExpansion& g);
QExpansion sub(const QExpansion& f, const QExpansion& g);
QExpansion mul(const QExpansion& f, const QExpansion& g);
QExpansion scale(const QExpansion& f, const mpq_class& c);
QExpansion pow(const QExpansion& f, int e);

// Normalized Eisenstein series of weight 4 or 6:
// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n.
QExpansion eisenstein(int weight, int N);

// (E4^3 - E6^2)/1728 = q - 24 q^2 + 252 q^3 - ...
QExpansion delta(int N);

// Dimension of the level-1 weight-k cusp space (k even >= 4).
int dim_cusp_space(int k);

// Echelonized basis f_1, ..., f_d of the weight-k cusp space with
// a(f_i, j) = delta_{ij} for j <= d, built from monomials E4^al E6^be Delta^ga
// (ga >= 1) by exact Gauss elimination.
std::vector<QExpansion> miller_basis(int k, int N);

}  // namespace poincare::qexp
