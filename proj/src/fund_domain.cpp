#include "poincare/fund_domain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poincare/parallel.hpp"

namespace poincare::fund_domain {

namespace {

GottschlingPair make_pair(Mat2i c, Mat2i d) { return {c, d, rank2(c)}; }

std::vector<GottschlingPair> build_gottschling() {
  std::vector<GottschlingPair> v;
  // Rank-1 bottom rows; the third family's free entry takes both values.
  v.push_back(make_pair({1, 0, 0, 0}, {0, 0, 0, 1}));
  v.push_back(make_pair({0, 0, 0, 1}, {1, 0, 0, 0}));
  v.push_back(make_pair({1, -1, 0, 0}, {1, 0, -2, 1}));
  v.push_back(make_pair({1, -1, 0, 0}, {1, 1, -2, 1}));
  // c = I with d = 0 and seven sign-parametrized patterns.
  const Mat2i id = mat2i_identity();
  v.push_back(make_pair(id, {0, 0, 0, 0}));
  for (std::int64_t s : {std::int64_t{-1}, std::int64_t{1}}) {
    v.push_back(make_pair(id, {s, 0, 0, 0}));
    v.push_back(make_pair(id, {0, 0, 0, s}));
    v.push_back(make_pair(id, {s, 0, 0, s}));
    v.push_back(make_pair(id, {s, 0, 0, -s}));
    v.push_back(make_pair(id, {0, s, s, 0}));
    v.push_back(make_pair(id, {s, s, s, 0}));
    v.push_back(make_pair(id, {0, s, s, s}));
  }
  return v;
}

double abs_det_cz_d(const Mat2i& c, const Mat2i& d, double x11, double x12, double x22,
                    double y0) {
  const Mat2c z{{x11, y0}, {x12, 0.0}, {x12, 0.0}, {x22, y0}};
  return std::abs(det(to_complex(c) * z + to_complex(d)));
}

}  // namespace

const std::vector<GottschlingPair>& gottschling_set() {
  static const std::vector<GottschlingPair> set = build_gottschling();
  return set;
}

MinkowskiReduction minkowski_reduce(const Sym2d& y) {
  if (!positive_definite(y)) throw std::invalid_argument("minkowski_reduce: not positive definite");
  Sym2d f = y;
  Mat2i u = mat2i_identity();
  const auto apply = [&](const Mat2i& a) {
    const double ad = static_cast<double>(a.a11), bd = static_cast<double>(a.a12);
    const double cd = static_cast<double>(a.a21), dd = static_cast<double>(a.a22);
    const Sym2d g{ad * ad * f.m11 + 2 * ad * cd * f.m12 + cd * cd * f.m22,
                  ad * bd * f.m11 + (ad * dd + bd * cd) * f.m12 + cd * dd * f.m22,
                  bd * bd * f.m11 + 2 * bd * dd * f.m12 + dd * dd * f.m22};
    f = g;
    u = u * a;
  };
  for (int iter = 0; iter < 256; ++iter) {
    if (f.m11 > f.m22) {
      apply({0, 1, 1, 0});
      continue;
    }
    const double t = std::nearbyint(f.m12 / f.m11);
    if (t != 0.0) {
      apply({1, -static_cast<std::int64_t>(t), 0, 1});
      continue;
    }
    if (f.m12 < 0) {
      apply({1, 0, 0, -1});
      continue;
    }
    if (is_minkowski_reduced(f)) return {f, u};
  }
  throw std::logic_error("minkowski_reduce: did not converge");
}

bool is_minkowski_reduced(const Sym2d& y, double tol) {
  return y.m12 >= -tol && 2.0 * y.m12 <= y.m11 + tol && y.m11 <= y.m22 + tol;
}

double min_det_over_box(const GottschlingPair& pair, double y0,
                        const numerics::QuadratureGrid& grid, double* mod_continuity) {
  if (!(y0 > 0)) throw std::invalid_argument("min_det_over_box: y0 > 0 required");
  if (grid.dim != 3) throw std::invalid_argument("min_det_over_box: 3-d grid required");
  const int n = grid.n;
  const std::size_t total = grid.node_count();
  std::vector<double> vals(total);
  std::size_t best = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto x = grid.node(idx);
    vals[idx] = abs_det_cz_d(pair.c, pair.d, x[0], x[1], x[2], y0);
    if (vals[idx] < vals[best]) best = idx;
  }
  if (mod_continuity) {
    const std::size_t strides[3] = {static_cast<std::size_t>(n) * n,
                                    static_cast<std::size_t>(n), 1};
    double mc = 0.0;
    for (std::size_t idx = 0; idx < total; ++idx) {
      const std::size_t i3 = idx % n, i2 = (idx / n) % n, i1 = idx / (static_cast<std::size_t>(n) * n);
      const std::size_t pos[3] = {i1, i2, i3};
      for (int axis = 0; axis < 3; ++axis)
        if (pos[axis] + 1 < static_cast<std::size_t>(n))
          mc = std::max(mc, std::abs(vals[idx + strides[axis]] - vals[idx]));
    }
    *mod_continuity = mc;
  }

  // One pattern-descent step at half spacing, clamped to the box.
  const auto bx = grid.node(best);
  const double h = 0.5 / static_cast<double>(n);
  double m = vals[best];
  for (int d1 = -1; d1 <= 1; ++d1)
    for (int d2 = -1; d2 <= 1; ++d2)
      for (int d3 = -1; d3 <= 1; ++d3) {
        const double x11 = std::clamp(bx[0] + d1 * h, -0.5, 0.5);
        const double x12 = std::clamp(bx[1] + d2 * h, -0.5, 0.5);
        const double x22 = std::clamp(bx[2] + d3 * h, -0.5, 0.5);
        m = std::min(m, abs_det_cz_d(pair.c, pair.d, x11, x12, x22, y0));
      }
  return m;
}

DomainCertificate certify_y0(double y0, const numerics::QuadratureGrid& grid,
                             double margin_floor) {
  if (!(y0 > 1.0)) throw std::invalid_argument("certify_y0: y0 > 1 required");
  const auto& pairs = gottschling_set();
  DomainCertificate cert;
  cert.y0 = y0;
  cert.grid_n = grid.n;
  cert.margin_floor = margin_floor;
  cert.pair_minima.assign(pairs.size(), 0.0);
  std::vector<double> mods(pairs.size(), 0.0);
  parallel::for_each_index(pairs.size(), parallel::ExecMode::openmp, 0, [&](std::size_t i) {
    cert.pair_minima[i] = min_det_over_box(pairs[i], y0, grid, &mods[i]);
  });
  cert.min_over_pairs = *std::min_element(cert.pair_minima.begin(), cert.pair_minima.end());
  cert.mod_continuity = *std::max_element(mods.begin(), mods.end());
  cert.margin = cert.min_over_pairs - 1.0;
  cert.pass = cert.margin > margin_floor;
  return cert;
}

DomainCertificate certify_y0(double y0, int grid_n, double margin_floor) {
  return certify_y0(y0, numerics::QuadratureGrid(3, grid_n), margin_floor);
}

double search_y0(double tol, int grid_n, double margin_floor) {
  if (!(tol >= 1e-3)) throw std::invalid_argument("search_y0: tol >= 1e-3 required");
  const numerics::QuadratureGrid grid(3, grid_n);
  double lo = 1.0, hi = 2.0;
  if (!certify_y0(hi, grid, margin_floor).pass)
    throw std::logic_error("search_y0: y0 = 2 fails to certify");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (certify_y0(mid, grid, margin_floor).pass)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

MembershipResult in_fundamental_domain(const SiegelPoint& z, double boundary_tol) {
  if (!positive_definite(z.y)) return {Membership::outside, "Im z not positive definite"};

  std::string boundary_detail;
  const auto note_boundary = [&](const std::string& s) {
    if (boundary_detail.empty()) boundary_detail = s;
  };

  const std::pair<double, const char*> xs[] = {
      {z.x.m11, "|x11|"}, {z.x.m12, "|x12|"}, {z.x.m22, "|x22|"}};
  for (const auto& [v, name] : xs) {
    if (std::abs(v) > 0.5 + boundary_tol)
      return {Membership::outside, std::string(name) + " > 1/2"};
    if (std::abs(std::abs(v) - 0.5) <= boundary_tol)
      note_boundary(std::string(name) + " = 1/2");
  }

  if (!is_minkowski_reduced(z.y, boundary_tol))
    return {Membership::outside, "Im z not Minkowski-reduced"};

  const auto& pairs = gottschling_set();
  const Mat2c zm = to_matrix(z);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double v = std::abs(det(to_complex(pairs[i].c) * zm + to_complex(pairs[i].d)));
    if (v < 1.0 - boundary_tol)
      return {Membership::outside, "|det(cz+d)| < 1 at pair " + std::to_string(i)};
    if (v <= 1.0 + boundary_tol) note_boundary("|det(cz+d)| = 1 at pair " + std::to_string(i));
  }

  if (!boundary_detail.empty()) return {Membership::boundary, boundary_detail};
  return {Membership::inside, ""};
}

std::array<double, 3> det_alpha_polynomial(const Mat2i& c, const Mat2i& d, const Sym2d& x) {
  const auto g = [&](double alpha) {
    const double v = abs_det_cz_d(c, d, x.m11, x.m12, x.m22, alpha);
    return v * v;
  };
  const double g1 = g(1.0), g2 = g(2.0), g3 = g(3.0);
  // p0 + p1*t + p2*t^2 through (t, g) at t = 1, 4, 9.
  const double p2 = ((g3 - g2) / 5.0 - (g2 - g1) / 3.0) / 8.0;
  const double p1 = ((g2 - g1) - 15.0 * p2) / 3.0;
  const double p0 = g1 - p1 - p2;
  return {p0, p1, p2};
}

report::ScanReport rank_asymptotic_check(const Mat2i& c, const Mat2i& d, const Sym2d& x,
                                         const std::vector<double>& y_list) {
  if (det(c) == 0) throw std::invalid_argument("rank_asymptotic_check: det(c) = 0");
  report::ScanReport rep;
  rep.param_names = {"y"};
  const double dc = std::abs(static_cast<double>(det(c)));
  const auto ratio = [&](double y) {
    return abs_det_cz_d(c, d, x.m11, x.m12, x.m22, y) / (y * y * dc);
  };
  for (double y : y_list) {
    if (!(y > 0)) throw std::invalid_argument("rank_asymptotic_check: y > 0 required");
    report::ScanRow row;
    row.params = {y};
    row.value = ratio(y);
    row.target = 1.0;
    row.abs_err = std::abs(row.value - 1.0);
    row.err_estimate = std::abs(ratio(2.0 * y) - row.value);
    row.seconds = 0.0;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace poincare::fund_domain
