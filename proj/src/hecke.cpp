#include "poincare/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poincare/classical.hpp"
#include "poincare/errors.hpp"

namespace poincare::hecke {

std::vector<std::vector<mpq_class>> hecke_matrix(const std::vector<qexp::QExpansion>& basis,
                                                 std::int64_t p) {
  if (basis.empty()) return {};
  if (p < 2) throw std::invalid_argument("hecke_matrix: p >= 2 required");
  const int d = static_cast<int>(basis.size());
  const int k = basis[0].weight;
  if (basis[0].precision() < p * d)
    throw std::invalid_argument("hecke_matrix: basis precision below p*dim");
  mpz_class pk1 = 1;
  for (int i = 0; i < k - 1; ++i) pk1 *= p;

  // Echelon basis: coordinates of T_p f_j are its coefficients a(., 1..d).
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d));
  for (int j = 0; j < d; ++j)
    for (int i = 1; i <= d; ++i) {
      mpq_class v = basis[j].coeff(static_cast<int>(p) * i);
      if (i % p == 0) v += mpq_class(pk1) * basis[j].coeff(i / static_cast<int>(p));
      m[i - 1][j] = v;
    }
  return m;
}

std::vector<mpq_class> char_poly(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t d = m.size();
  for (const auto& row : m)
    if (row.size() != d) throw std::invalid_argument("char_poly: matrix not square");
  // Faddeev-LeVerrier: N_1 = A, c_j = -tr(N_j)/j, N_{j+1} = A (N_j + c_j I).
  std::vector<mpq_class> c(d + 1);
  c[d] = 1;
  std::vector<std::vector<mpq_class>> n = m;
  for (std::size_t j = 1; j <= d; ++j) {
    mpq_class tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr += n[i][i];
    const mpq_class cj = -tr / static_cast<long>(j);
    c[d - j] = cj;
    if (j == d) break;
    for (std::size_t i = 0; i < d; ++i) n[i][i] += cj;
    std::vector<std::vector<mpq_class>> nn(d, std::vector<mpq_class>(d, mpq_class(0)));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t t = 0; t < d; ++t) {
        if (m[r][t] == 0) continue;
        for (std::size_t s = 0; s < d; ++s) nn[r][s] += m[r][t] * n[t][s];
      }
    n = std::move(nn);
  }
  return c;
}

namespace {

double poly_eval(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// Monic normalization of the derivative.
std::vector<double> poly_deriv_monic(const std::vector<double>& c) {
  const std::size_t d = c.size() - 1;
  std::vector<double> der(d);
  for (std::size_t i = 1; i <= d; ++i)
    der[i - 1] = c[i] * static_cast<double>(i) / static_cast<double>(d);
  return der;
}

double bisect_root(const std::vector<double>& c, double lo, double hi) {
  double flo = poly_eval(c, lo);
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo) + std::abs(hi));
       ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = poly_eval(c, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// All real roots, found between critical points of the polynomial (computed
// recursively); exact count is not enforced here.
std::vector<double> real_roots_unchecked(const std::vector<double>& c) {
  const std::size_t d = c.size() - 1;
  if (d == 0) return {};
  if (d == 1) return {-c[0]};
  std::vector<double> breaks = real_roots_unchecked(poly_deriv_monic(c));
  std::sort(breaks.begin(), breaks.end());
  double bound = 1.0;
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::abs(c[i]));
  bound += 1.0;  // Cauchy bound for a monic polynomial
  breaks.insert(breaks.begin(), -bound);
  breaks.push_back(bound);

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i], hi = breaks[i + 1];
    const double flo = poly_eval(c, lo), fhi = poly_eval(c, hi);
    if (flo == 0.0) {
      roots.push_back(lo);
      continue;
    }
    if ((flo < 0) != (fhi < 0)) roots.push_back(bisect_root(c, lo, hi));
  }
  if (poly_eval(c, breaks.back()) == 0.0) roots.push_back(breaks.back());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<double> real_roots(const std::vector<double>& monic_coeffs) {
  if (monic_coeffs.empty() || monic_coeffs.back() != 1.0)
    throw std::invalid_argument("real_roots: expect monic ascending coefficients");
  const std::size_t d = monic_coeffs.size() - 1;
  std::vector<double> roots = real_roots_unchecked(monic_coeffs);
  std::sort(roots.begin(), roots.end());
  if (roots.size() != d) throw numerical_error("real_roots: did not find all real roots");
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    if (std::abs(roots[i + 1] - roots[i]) <= 1e-8 * std::max(1.0, std::abs(roots[i])))
      throw numerical_error("real_roots: root collision");
  return roots;
}

double HeckeEigenform::lambda(std::int64_t n) const {
  return a.at(static_cast<std::size_t>(n)) /
         std::pow(static_cast<double>(n), (k - 1) / 2.0);
}

namespace {

// Solve m x = b by partial-pivot elimination; m is small (dim <= 5).
std::vector<double> solve_dense(std::vector<std::vector<double>> m, std::vector<double> b) {
  const std::size_t d = b.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < d; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    if (m[col][col] == 0.0) throw numerical_error("solve_dense: singular matrix");
    for (std::size_t r = col + 1; r < d; ++r) {
      const double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (std::size_t cc = col; cc < d; ++cc) m[r][cc] -= f * m[col][cc];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(d);
  for (std::size_t i = d; i-- > 0;) {
    double v = b[i];
    for (std::size_t j = i + 1; j < d; ++j) v -= m[i][j] * x[j];
    x[i] = v / m[i][i];
  }
  return x;
}

// Newton polish against the exact characteristic polynomial: residuals are
// evaluated in rational arithmetic, so the step is limited only by double
// rounding of the correction itself.
double polish_root(const std::vector<mpq_class>& c, double x) {
  for (int iter = 0; iter < 4; ++iter) {
    mpq_class xr(x);
    mpq_class p = 0, dp = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      dp = dp * xr + p;
      p = p * xr + c[i];
    }
    const double dpd = dp.get_d();
    if (dpd == 0.0) break;
    const double step = p.get_d() / dpd;
    x -= step;
    if (std::abs(step) <= 1e-18 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

}  // namespace

HeckeSystem hecke_eigensystem(int k, std::int64_t pmax, int N) {
  if (pmax < 2) throw std::invalid_argument("hecke_eigensystem: pmax >= 2 required");
  const int d = qexp::dim_cusp_space(k);
  if (N == 0)
    N = std::max({static_cast<int>(pmax), 343, 3 * std::max(d, 1)});
  if (N < 3 * d || N < pmax)
    throw std::invalid_argument("hecke_eigensystem: N too small for the checks");

  HeckeSystem sys;
  sys.k = k;
  sys.dim = d;
  if (d == 0) return sys;

  const auto basis = qexp::miller_basis(k, N);
  const auto t2 = hecke_matrix(basis, 2);
  const auto t3 = hecke_matrix(basis, 3);
  const auto cp = char_poly(t2);

  std::vector<double> cpd(cp.size());
  for (std::size_t i = 0; i < cp.size(); ++i) cpd[i] = cp[i].get_d();
  std::vector<double> roots = real_roots(cpd);
  for (double& r : roots) r = polish_root(cp, r);

  std::vector<std::vector<double>> t2d(d, std::vector<double>(d)), t3d(d, std::vector<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      t2d[i][j] = t2[i][j].get_d();
      t3d[i][j] = t3[i][j].get_d();
    }

  for (std::size_t ri = 0; ri < roots.size(); ++ri) {
    const double lam = roots[ri];
    std::vector<double> v(static_cast<std::size_t>(d), 1.0);
    if (d > 1) {
      // Inverse iteration on (T_2 - lam I). The root is polished well enough
      // that the unperturbed shift can be singular to the last bit, so back
      // off by a deterministic offset: it keeps the pivot nonzero while the
      // distance to the nearest other eigenvalue (>> offset) still gives a
      // contamination factor ~1e-12 per sweep. (For d = 1 the shift would be
      // exactly singular -- the root is the integer matrix entry -- and the
      // eigenvector is trivially (1).)
      const double offset = 1e-11 * (1.0 + std::abs(lam));
      std::vector<std::vector<double>> shifted = t2d;
      for (int i = 0; i < d; ++i) shifted[i][i] -= lam + offset;
      for (int iter = 0; iter < 3; ++iter) {
        v = solve_dense(shifted, v);
        double mx = 0.0;
        for (double x : v) mx = std::max(mx, std::abs(x));
        if (mx == 0.0) throw numerical_error("hecke_eigensystem: zero iterate");
        for (double& x : v) x /= mx;
      }
    }
    // Cross-check against T_3: v must be an eigenvector there too.
    std::size_t big = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (std::abs(v[i]) > std::abs(v[big])) big = i;
    std::vector<double> w(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) w[i] += t3d[i][j] * v[j];
    const double mu = w[big] / v[big];
    double resid = 0.0, scale = 0.0;
    for (int i = 0; i < d; ++i) {
      resid = std::max(resid, std::abs(w[i] - mu * v[i]));
      scale = std::max(scale, std::abs(w[i]));
    }
    if (resid > 1e-8 * std::max(1.0, scale))
      throw numerical_error("hecke_eigensystem: eigenvector fails T_3 check");

    if (v[0] == 0.0) throw numerical_error("hecke_eigensystem: vanishing first coefficient");
    const double v0 = v[0];  // read once: the loop rewrites v[0] first
    for (double& x : v) x /= v0;

    HeckeEigenform f;
    f.k = k;
    f.index = static_cast<int>(ri);
    f.eigenvalue_t2 = lam;
    f.a.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (int n = 1; n <= N; ++n) {
      double x = 0.0;
      for (int j = 0; j < d; ++j) x += v[j] * basis[j].coeff(n).get_d();
      f.a[static_cast<std::size_t>(n)] = x;
    }
    sys.forms.push_back(std::move(f));
  }
  return sys;
}

double chebyshev_u(int n, double x) {
  if (n < 0) throw std::invalid_argument("chebyshev_u: n >= 0 required");
  double prev = 1.0;  // U_0
  if (n == 0) return prev;
  double cur = x;  // U_1
  for (int i = 1; i < n; ++i) {
    const double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

WeightEstimate estimate_weights(const HeckeSystem& sys, int M, std::int64_t c_max) {
  const int d = sys.dim;
  if (M < std::max(d, 1)) throw std::invalid_argument("estimate_weights: M below dimension");

  classical::ClassicalParams p;
  p.n = 1;
  p.k = sys.k;
  std::vector<double> rhs(static_cast<std::size_t>(M));
  for (int m = 1; m <= M; ++m) {
    p.m = m;
    rhs[m - 1] = classical::coeff_kloosterman(p, c_max).value;
  }

  WeightEstimate est;
  if (d > 0) {
    std::vector<std::vector<double>> a(static_cast<std::size_t>(M),
                                       std::vector<double>(static_cast<std::size_t>(d)));
    for (int m = 1; m <= M; ++m)
      for (int j = 0; j < d; ++j) a[m - 1][j] = sys.forms[j].lambda(m);
    // Normal equations (A^T A) w = A^T rhs; d <= 5 keeps this benign.
    std::vector<std::vector<double>> ata(d, std::vector<double>(d, 0.0));
    std::vector<double> atb(static_cast<std::size_t>(d), 0.0);
    for (int m = 0; m < M; ++m)
      for (int i = 0; i < d; ++i) {
        atb[i] += a[m][i] * rhs[m];
        for (int j = 0; j < d; ++j) ata[i][j] += a[m][i] * a[m][j];
      }
    est.omega = solve_dense(ata, atb);
  }

  double resid = 0.0;
  for (int m = 1; m <= M; ++m) {
    double fit = 0.0;
    for (int j = 0; j < d; ++j) fit += est.omega[j] * sys.forms[j].lambda(m);
    resid = std::max(resid, std::abs(fit - rhs[m - 1]));
  }
  est.residual = resid;
  if (resid > 1e-5) throw numerical_error("estimate_weights: residual above 1e-5");
  return est;
}

double weyl_sum(const HeckeSystem& sys, const WeightEstimate& w,
                const std::map<std::int64_t, int>& exponents) {
  if (w.omega.size() != sys.forms.size())
    throw std::invalid_argument("weyl_sum: weight/form count mismatch");
  double sum = 0.0;
  for (std::size_t f = 0; f < sys.forms.size(); ++f) {
    double prod = 1.0;
    for (const auto& [prime, e] : exponents) {
      if (prime < 2) throw std::invalid_argument("weyl_sum: primes must be >= 2");
      prod *= chebyshev_u(e, sys.forms[f].lambda(prime));
    }
    sum += w.omega[f] * prod;
  }
  return sum;
}

}  // namespace poincare::hecke
