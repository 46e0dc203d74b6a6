#include "poincare/qexp.hpp"

#include <stdexcept>

namespace poincare::qexp {

namespace {

void check_same(const QExpansion& f, const QExpansion& g) {
  if (f.precision() != g.precision())
    throw std::invalid_argument("qexp: operand precision mismatch");
}

}  // namespace

QExpansion zero(int weight, int N) {
  if (N < 0) throw std::invalid_argument("qexp: N >= 0 required");
  QExpansion f;
  f.weight = weight;
  f.a.assign(static_cast<std::size_t>(N) + 1, mpq_class(0));
  return f;
}

QExpansion add(const QExpansion& f, const QExpansion& g) {
  check_same(f, g);
  if (f.weight != g.weight) throw std::invalid_argument("qexp: weight mismatch in add");
  QExpansion h = f;
  for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] += g.a[i];
  return h;
}

QExpansion sub(const QExpansion& f, const QExpansion& g) {
  check_same(f, g);
  if (f.weight != g.weight) throw std::invalid_argument("qexp: weight mismatch in sub");
  QExpansion h = f;
  for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] -= g.a[i];
  return h;
}

QExpansion mul(const QExpansion& f, const QExpansion& g) {
  check_same(f, g);
  QExpansion h = zero(f.weight + g.weight, f.precision());
  for (std::size_t i = 0; i < f.a.size(); ++i) {
    if (f.a[i] == 0) continue;
    for (std::size_t j = 0; i + j < h.a.size(); ++j) {
      if (g.a[j] == 0) continue;
      h.a[i + j] += f.a[i] * g.a[j];
    }
  }
  return h;
}

QExpansion scale(const QExpansion& f, const mpq_class& c) {
  QExpansion h = f;
  for (auto& x : h.a) x *= c;
  return h;
}

QExpansion pow(const QExpansion& f, int e) {
  if (e < 0) throw std::invalid_argument("qexp: negative power");
  QExpansion acc = zero(0, f.precision());
  acc.a[0] = 1;
  QExpansion base = f;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

QExpansion eisenstein(int weight, int N) {
  if (weight != 4 && weight != 6) throw std::invalid_argument("eisenstein: weight 4 or 6 only");
  QExpansion f = zero(weight, N);
  f.a[0] = 1;
  const int power = weight - 1;
  const mpz_class front = weight == 4 ? 240 : -504;
  for (int n = 1; n <= N; ++n) {
    mpz_class sigma = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      mpz_class dp = 1;
      for (int i = 0; i < power; ++i) dp *= d;
      sigma += dp;
    }
    f.a[static_cast<std::size_t>(n)] = mpq_class(front * sigma);
  }
  return f;
}

QExpansion delta(int N) {
  const QExpansion e4 = eisenstein(4, N);
  const QExpansion e6 = eisenstein(6, N);
  QExpansion d = sub(pow(e4, 3), pow(e6, 2));
  d.weight = 12;
  return scale(d, mpq_class(1, 1728));
}

int dim_cusp_space(int k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("dim_cusp_space: k even >= 4 required");
  // dim M_k - 1 with dim M_k = floor(k/12) + (1 unless k = 2 mod 12).
  return k / 12 + (k % 12 == 2 ? 0 : 1) - 1;
}

std::vector<QExpansion> miller_basis(int k, int N) {
  const int d = dim_cusp_space(k);
  if (d == 0) return {};
  if (N < d) throw std::invalid_argument("miller_basis: need N >= dim");

  // Monomial spanning set E4^al * E6^be * Delta^ga with 4al + 6be + 12ga = k,
  // ga >= 1; it spans the cusp space.
  const QExpansion e4 = eisenstein(4, N);
  const QExpansion e6 = eisenstein(6, N);
  const QExpansion dl = delta(N);
  std::vector<QExpansion> span;
  for (int ga = 1; 12 * ga <= k; ++ga)
    for (int be = 0; 12 * ga + 6 * be <= k; ++be) {
      const int rem = k - 12 * ga - 6 * be;
      if (rem % 4 != 0) continue;
      const int al = rem / 4;
      span.push_back(mul(mul(pow(e4, al), pow(e6, be)), pow(dl, ga)));
    }

  // Exact Gauss elimination to a(f_i, j) = delta_{ij} for j in 1..d.
  std::vector<QExpansion> basis;
  for (int pivot = 1; pivot <= d; ++pivot) {
    std::size_t src = span.size();
    for (std::size_t i = 0; i < span.size(); ++i)
      if (span[i].coeff(pivot) != 0) {
        src = i;
        break;
      }
    if (src == span.size()) throw std::logic_error("miller_basis: rank deficiency");
    QExpansion f = scale(span[src], mpq_class(1) / span[src].coeff(pivot));
    span.erase(span.begin() + static_cast<std::ptrdiff_t>(src));
    for (auto& g : span)
      if (g.coeff(pivot) != 0) g = sub(g, scale(f, g.coeff(pivot)));
    for (auto& g : basis)
      if (g.coeff(pivot) != 0) g = sub(g, scale(f, g.coeff(pivot)));
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace poincare::qexp
