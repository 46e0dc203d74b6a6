#include "poincare/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <utility>

#include "poincare/classical.hpp"
#include "poincare/cli.hpp"
#include "poincare/errors.hpp"
#include "poincare/fund_domain.hpp"
#include "poincare/hecke.hpp"
#include "poincare/modgroup.hpp"
#include "poincare/quadform.hpp"
#include "poincare/siegel.hpp"

namespace poincare::acceptance {

namespace {

using quadform::HalfIntegralForm;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  template <typename T>
  Check& operator<<(const T& v) {
    msg_ << v;
    return *this;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (!fail_.empty()) fail_ += "; ";
      fail_ += what;
    }
  }
  Outcome done() {
    Outcome o;
    o.pass = pass_;
    o.detail = pass_ ? msg_.str() : "FAILED: " + fail_ + (msg_.str().empty() ? "" : " | " + msg_.str());
    return o;
  }

 private:
  std::ostringstream msg_;
  bool pass_ = true;
  std::string fail_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

// --- 1: quadrature route vs. exact-expansion oracle ------------------------
Outcome criterion1() {
  Check c;
  double worst = 0.0;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int k : {12, 16, 20}) {
        classical::ClassicalParams p;
        p.m = m;
        p.n = n;
        p.k = k;
        const auto quad = classical::coeff_quadrature_adaptive(p, 1e-6);
        std::int64_t c_max = 128;
        classical::KloostermanCoeff oracle = classical::coeff_kloosterman(p, c_max);
        while (oracle.tail_bound > 1e-8 && c_max < 4096) {
          c_max *= 2;
          oracle = classical::coeff_kloosterman(p, c_max);
        }
        const double diff = std::abs(quad.value - oracle.value);
        worst = std::max(worst, diff);
        c.require(diff < 1e-6 + oracle.tail_bound,
                  "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                      " k=" + std::to_string(k) + " diff=" + fmt(diff));
      }
  c << "27 cases (m,n in {1,2,3}^2, k in {12,16,20}); max |quadrature - oracle| = "
    << fmt(worst) << " < 1e-6 + tail";
  return c.done();
}

// --- 2: coefficient -> delta(m,n) as the weight grows -----------------------
Outcome criterion2() {
  Check c;
  for (const auto& [m, n] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
    const auto rep = classical::weight_limit_scan(m, n, 1, {12, 60}, 128);
    const double e12 = rep.rows[0].abs_err, e60 = rep.rows[1].abs_err;
    c.require(e60 < 0.02, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                              " |err(60)|=" + fmt(e60) + " >= 0.02");
    c.require(e60 < e12, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                             " err(60)=" + fmt(e60) + " !< err(12)=" + fmt(e12));
    c << "(" << m << "," << n << "): |p-delta| " << fmt(e12) << " -> " << fmt(e60) << "  ";
  }
  return c.done();
}

// --- 3: coefficient -> delta(m,n) as the level grows ------------------------
Outcome criterion3() {
  Check c;
  const std::vector<std::int64_t> qs{20, 21, 24, 32, 50, 64, 100, 128};
  for (const auto& [m, n] : {std::pair{1, 1}, {1, 2}}) {
    const auto rep = classical::level_limit_scan(m, n, 12, qs);
    double worst = 0.0;
    for (const auto& row : rep.rows) worst = std::max(worst, row.abs_err);
    c.require(worst < 0.01, "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                " max|err|=" + fmt(worst) + " >= 0.01");
    c << "(" << m << "," << n << "): max over q>=20 " << fmt(worst) << "  ";
  }
  return c.done();
}

// --- 4: genus-2 coefficient -> orbit count as the weight grows --------------
Outcome criterion4() {
  Check c;
  // Any certified height works; 1.2 gives much better truncation decay than
  // the 1.05 default, which matters at B = 2.
  const double y0 = 1.2;
  const auto cert = fund_domain::certify_y0(y0, 64);
  c.require(cert.pass, "y0=1.2 failed certification");
  if (!cert.pass) return c.done();

  const HalfIntegralForm s{1, 0, 1}, t_eq{1, 0, 1}, t_ne{1, 0, 2};
  const std::vector<int> ks{20, 24, 28, 32, 36, 40};
  const auto base = siegel::eval_siegel_grid(s, ks, y0, 2, 16);
  const auto fine = siegel::eval_siegel_grid(s, ks, y0, 3, 32);

  std::vector<double> v_eq(ks.size()), err_eq(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    v_eq[i] = siegel::coeff_from_grid(base, i, ks, t_eq, y0, 16);
    err_eq[i] = std::abs(v_eq[i] - siegel::coeff_from_grid(fine, i, ks, t_eq, y0, 32));
  }
  const double v_ne = siegel::coeff_from_grid(base, ks.size() - 1, ks, t_ne, y0, 16);

  c.require(quadform::orbit_count(s, t_eq) == 4 && quadform::orbit_count(s, t_ne) == 0,
            "brute-force targets are not 4 and 0");
  c.require(std::abs(v_eq.back() - 4.0) < 0.1,
            "|p(I) - 4| = " + fmt(std::abs(v_eq.back() - 4.0)) + " >= 0.1 at k=40");
  for (std::size_t i = 0; i + 1 < ks.size(); ++i)
    c.require(err_eq[i + 1] < err_eq[i] || err_eq[i + 1] < 1e-9,
              "err(" + std::to_string(ks[i + 1]) + ")=" + fmt(err_eq[i + 1]) +
                  " !< err(" + std::to_string(ks[i]) + ")=" + fmt(err_eq[i]));
  c.require(std::abs(v_ne) < 0.05, "|p(diag(1,2))| = " + fmt(std::abs(v_ne)) + " >= 0.05");
  c << "p(I) at k=40: " << fmt(v_eq.back()) << " (target 4); p(diag(1,2)): " << fmt(v_ne)
    << " (target 0); err: " << fmt(err_eq.front()) << " -> " << fmt(err_eq.back());
  return c.done();
}

// --- 5: coset enumeration against brute force --------------------------------
Outcome criterion5() {
  Check c;
  const auto g1 = modgroup::enumerate_g1_cosets(1);
  std::set<std::pair<std::int64_t, std::int64_t>> g1set;
  for (const auto& r : g1) g1set.insert({r.c, r.d});
  const std::set<std::pair<std::int64_t, std::int64_t>> g1want{{0, 1}, {1, -1}, {1, 0}, {1, 1}};
  c.require(g1set == g1want, "genus-1 cosets at B=1 mismatch");

  // Brute force: all 4x4 symplectic matrices with entries in {-1,0,1},
  // reduced to normalized bottom rows.
  std::set<modgroup::CosetRepG2> brute;
  Mat2i a, b, cc, d;
  std::int64_t* const slots[16] = {&a.a11,  &a.a12,  &a.a21,  &a.a22, &b.a11, &b.a12,
                                   &b.a21,  &b.a22,  &cc.a11, &cc.a12, &cc.a21, &cc.a22,
                                   &d.a11,  &d.a12,  &d.a21,  &d.a22};
  const auto fill = [&](int idx, std::int64_t code) {
    for (int i = 0; i < 4; ++i) {
      *slots[idx * 4 + i] = code % 3 - 1;
      code /= 3;
    }
  };
  for (std::int64_t ia = 0; ia < 81; ++ia) {
    fill(0, ia);
    for (std::int64_t ic = 0; ic < 81; ++ic) {
      fill(2, ic);
      const Mat2i atc = transpose(a) * cc;
      if (atc != transpose(atc)) continue;
      for (std::int64_t ib = 0; ib < 81; ++ib) {
        fill(1, ib);
        for (std::int64_t id = 0; id < 81; ++id) {
          fill(3, id);
          if (!modgroup::is_symplectic({a, b, cc, d})) continue;
          brute.insert(modgroup::sign_normalize({cc, d}));
        }
      }
    }
  }
  const auto mine = modgroup::enumerate_g2_cosets(1);
  const std::set<modgroup::CosetRepG2> mineset(mine.begin(), mine.end());
  c.require(mineset.size() == mine.size(), "duplicate genus-2 coset representatives");
  c.require(mineset == brute, "genus-2 cosets at B=1 differ from 3^16 brute force");
  c << "genus-2 cosets at B=1: " << mine.size() << " pairs, equal to the brute-force set ("
    << brute.size() << ")";
  return c.done();
}

// --- 6: the 19 inequality pairs and the certified height ---------------------
Outcome criterion6() {
  Check c;
  const auto& pairs = fund_domain::gottschling_set();
  int rank1 = 0, rank2c = 0;
  for (const auto& p : pairs) (p.rank_c == 1 ? rank1 : rank2c)++;
  c.require(pairs.size() == 19, "pair count " + std::to_string(pairs.size()) + " != 19");
  c.require(rank1 == 4 && rank2c == 15,
            "rank split " + std::to_string(rank1) + "/" + std::to_string(rank2c) + " != 4/15");
  const auto cert = fund_domain::certify_y0(1.05, 64);
  c.require(cert.pass && cert.margin > 1e-3,
            "certificate at 1.05: margin " + fmt(cert.margin));
  const double y0 = fund_domain::search_y0(1e-3, 64);
  c.require(y0 > 1.0 && y0 < 1.1, "search_y0 = " + fmt(y0) + " outside (1, 1.1)");
  c << "19 pairs (4/15); margin(1.05) = " << fmt(cert.margin) << "; search_y0 = " << fmt(y0);
  return c.done();
}

// --- 7: determinant-polynomial and trace positivity properties ---------------
Outcome criterion7() {
  Check c;
  std::mt19937 rng(42);
  const auto cosets = modgroup::enumerate_g2_cosets(2);
  std::uniform_int_distribution<std::size_t> pick(0, cosets.size() - 1);
  std::uniform_real_distribution<double> ux(-0.5, 0.5);

  int top_ok = 0;
  double min_coeff = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& rep = cosets[pick(rng)];
    const Sym2d x{ux(rng), ux(rng), ux(rng)};
    const auto poly = fund_domain::det_alpha_polynomial(rep.c, rep.d, x);
    double mx = 1.0;
    for (double v : poly) mx = std::max(mx, std::abs(v));
    int top = 0;
    for (int i = 0; i < 3; ++i)
      if (std::abs(poly[static_cast<std::size_t>(i)]) > 1e-9 * mx) top = i;
    for (double v : poly) min_coeff = std::min(min_coeff, v);
    if (top == rank2(rep.c)) ++top_ok;
  }
  c.require(min_coeff >= -1e-9, "polynomial coefficient " + fmt(min_coeff) + " < -1e-9");
  c.require(top_ok == 100, "top-degree index matched rank(c) in only " +
                               std::to_string(top_ok) + "/100 trials");

  int asym_checked = 0;
  double worst_ratio = 0.0;
  for (const auto& p : fund_domain::gottschling_set()) {
    if (det(p.c) == 0) continue;
    ++asym_checked;
    for (int trial = 0; trial < 4; ++trial) {
      const Sym2d x = trial == 0 ? Sym2d{0, 0, 0} : Sym2d{ux(rng), ux(rng), ux(rng)};
      const auto rep = fund_domain::rank_asymptotic_check(p.c, p.d, x, {50.0});
      worst_ratio = std::max(worst_ratio, rep.rows[0].abs_err);
    }
  }
  c.require(worst_ratio < 0.1,
            "asymptotic ratio off by " + fmt(worst_ratio) + " at y=50 (>= 10%)");

  std::uniform_int_distribution<std::int64_t> us(1, 6), ub(-5, 5);
  std::uniform_real_distribution<double> ug(-2.0, 2.0);
  double min_trace = 1e300;
  int trace_trials = 0;
  while (trace_trials < 1000) {
    const HalfIntegralForm s{us(rng), ub(rng), us(rng)};
    if (!quadform::is_positive_definite(s)) continue;
    const double g11 = ug(rng), g12 = ug(rng), g21 = ug(rng), g22 = ug(rng);
    const Sym2d y{g11 * g11 + g21 * g21 + 1e-3, g11 * g12 + g21 * g22,
                  g12 * g12 + g22 * g22 + 1e-3};
    min_trace = std::min(min_trace, quadform::trace_pair(s, y));
    ++trace_trials;
  }
  c.require(min_trace > 0.0, "Tr(s y) = " + fmt(min_trace) + " not positive");
  c << "100 polynomial draws ok (min coeff " << fmt(min_coeff) << "); ratio dev at y=50 <= "
    << fmt(worst_ratio) << " over " << asym_checked << " pairs; min Tr(s y) = "
    << fmt(min_trace);
  return c.done();
}

// --- 8: automorphism groups, orbit counts, reduction -------------------------
Outcome criterion8() {
  Check c;
  const HalfIntegralForm diag12{1, 0, 2}, ident{1, 0, 1}, hex{1, 1, 1};
  const auto check_form = [&](const HalfIntegralForm& f, std::size_t order, int orbits,
                              const char* name) {
    const auto aut = quadform::aut_group(f);
    c.require(aut.size() == order, std::string(name) + ": |Aut| = " +
                                       std::to_string(aut.size()) + " != " +
                                       std::to_string(order));
    for (const auto& a : aut)
      c.require(quadform::act(a, f) == f, std::string(name) + ": non-automorphism listed");
    c.require(quadform::orbit_count(f, f) == orbits,
              std::string(name) + ": orbit count != " + std::to_string(orbits));
  };
  check_form(diag12, 4, 2, "diag(1,2)");
  check_form(ident, 8, 4, "identity");
  check_form(hex, 12, 6, "hexagonal");

  const auto red = quadform::reduce({5, 4, 1});
  c.require(red.reduced == ident, "reduce(5,4,1) did not land on the identity form");
  c.require(quadform::act(red.transform, {5, 4, 1}) == red.reduced,
            "reduction transform does not map the input to the output");
  c << "|Aut| = 4/8/12, orbits = 2/4/6, reduce(5,4,1) -> (1,0,1)";
  return c.done();
}

// --- 9: eigenforms, spectral weights, Weyl sums ------------------------------
Outcome criterion9() {
  Check c;
  const auto basis12 = qexp::miller_basis(12, 4);
  c.require(basis12.size() == 1 && basis12[0].coeff(2) == mpq_class(-24),
            "tau(2) != -24 in the weight-12 echelon basis");

  for (int k : {12, 16, 18, 20, 22, 24}) {
    const auto sys = hecke::hecke_eigensystem(k);
    for (const auto& f : sys.forms)
      for (std::int64_t p : {2, 3, 5, 7}) {
        const double l1 = f.lambda(p), l2 = f.lambda(p * p), l3 = f.lambda(p * p * p);
        c.require(std::abs(l2 - (l1 * l1 - 1.0)) < 1e-10,
                  "recursion p^2 fails at k=" + std::to_string(k) + " p=" + std::to_string(p));
        c.require(std::abs(l3 - (l1 * l2 - l1)) < 1e-10,
                  "recursion p^3 fails at k=" + std::to_string(k) + " p=" + std::to_string(p));
      }
    const auto w = hecke::estimate_weights(sys);
    c.require(w.residual < 1e-5,
              "weight-fit residual " + fmt(w.residual) + " at k=" + std::to_string(k));
    for (double om : w.omega)
      c.require(om > 0.0, "nonpositive spectral weight at k=" + std::to_string(k));
  }

  double w2_12 = 0.0, w2_60 = 0.0;
  for (int k : {12, 60}) {
    const auto sys = hecke::hecke_eigensystem(k);
    const auto w = hecke::estimate_weights(sys);
    const double ws = hecke::weyl_sum(sys, w, {{2, 1}});
    classical::ClassicalParams p;
    p.m = 2;
    p.n = 1;
    p.k = k;
    const double oracle = classical::coeff_kloosterman(p, 300).value;
    c.require(std::abs(ws - oracle) < 1e-6,
              "weyl_sum vs oracle differ by " + fmt(std::abs(ws - oracle)) +
                  " at k=" + std::to_string(k));
    (k == 12 ? w2_12 : w2_60) = ws;
    if (k == 60) {
      const double plain = hecke::weyl_sum(sys, w, {});
      c.require(std::abs(plain - 1.0) < 0.02,
                "plain weight sum " + fmt(plain) + " not within 0.02 of 1");
    }
  }
  c.require(std::abs(w2_60) < std::abs(w2_12), "lambda-weighted sum did not shrink 12 -> 60");
  c << "tau(2) = -24 exact; recursions to 1e-10; weyl(2): " << fmt(w2_12) << " -> "
    << fmt(w2_60);
  return c.done();
}

// --- 10: byte-identical CLI data rows across thread counts -------------------
std::string strip_last_field(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.rfind(',');
    out += pos == std::string::npos ? line : line.substr(0, pos);
    out += '\n';
  }
  return out;
}

Outcome criterion10() {
  Check c;
  struct Case {
    std::string name;
    std::vector<std::string> args;
    bool csv_report;  // true: strip the trailing seconds column before comparing
  };
  const std::vector<Case> cases = {
      {"weight-scan", {"weight-scan", "--m", "1", "--n", "2", "--k", "12:24:4", "--c-max", "64"},
       true},
      {"level-scan", {"level-scan", "--m", "1", "--n", "1", "--k", "12", "--q", "1,2,4"}, true},
      {"classical-coeff", {"classical-coeff", "--m", "2", "--n", "3", "--k", "12"}, true},
      {"siegel-scan",
       {"siegel-scan", "--s", "1,0,1", "--t", "1,0,1", "--k", "8,10", "--B", "1", "--N", "4"},
       true},
      {"siegel-coeff", {"siegel-coeff", "--k", "8", "--B", "1", "--N", "4"}, true},
      {"weyl-scan", {"weyl-scan", "--m", "2", "--k", "12,16"}, true},
      {"reduce-form", {"reduce-form", "--form", "5,4,1"}, false},
      {"aut", {"aut", "--form", "1,1,1"}, false},
      {"fd-membership", {"fd-membership", "--x", "0,0,0", "--y", "1.05,0,1.05"}, false},
      {"gottschling", {"gottschling"}, false},
      {"y0-search", {"y0-search", "--tol", "1e-3", "--grid-n", "16"}, false},
      {"alpha-poly-check", {"alpha-poly-check", "--c", "1,0,0,1", "--d", "0,0,0,0"}, false},
      {"hecke-eigen", {"hecke-eigen", "--k", "24"}, false},
      {"weights", {"weights", "--k", "12"}, false},
  };
  for (const auto& cs : cases) {
    std::string reference;
    bool first = true;
    for (const char* t : {"1", "2", "8"}) {
      std::vector<std::string> argv = cs.args;
      argv.push_back("--threads");
      argv.push_back(t);
      std::ostringstream out, err;
      const int rc = cli::run(argv, out, err);
      c.require(rc == cli::kExitOk, cs.name + ": exit code " + std::to_string(rc) +
                                        " with --threads " + t + " " + err.str());
      const std::string rows = cs.csv_report ? strip_last_field(out.str()) : out.str();
      if (first) {
        reference = rows;
        first = false;
      } else {
        c.require(rows == reference, cs.name + ": output differs at --threads " + t);
      }
    }
  }
  c << cases.size() << " subcommands byte-identical at 1/2/8 threads (timing column excluded)";
  return c.done();
}

struct Entry {
  int id;
  const char* name;
  Outcome (*fn)();
  double time_limit;  // seconds; 0 = no limit
};

constexpr Entry kEntries[] = {
    {1, "classical quadrature vs. oracle", criterion1, 120},
    {2, "weight limit", criterion2, 10},
    {3, "level limit", criterion3, 10},
    {4, "genus-2 weight limit", criterion4, 1800},
    {5, "coset enumeration brute force", criterion5, 60},
    {6, "domain inequality set / certified height", criterion6, 120},
    {7, "determinant polynomial properties", criterion7, 60},
    {8, "automorphism counts and reduction", criterion8, 10},
    {9, "eigenform pipeline", criterion9, 300},
    {10, "CLI determinism", criterion10, 0},
};

}  // namespace

int run(std::ostream& os, const std::set<int>& which) {
  int failures = 0;
  int ran = 0;
  for (const auto& e : kEntries) {
    if (!which.empty() && which.count(e.id) == 0) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.time_limit > 0 && dt > e.time_limit) {
      o.pass = false;
      o.detail += " [exceeded " + fmt(e.time_limit) + "s budget]";
    }
    os << "criterion " << e.id << " (" << e.name << "): " << (o.pass ? "PASS" : "FAIL") << " ["
       << std::fixed << std::setprecision(1) << dt << "s] " << o.detail << "\n";
    os.unsetf(std::ios::fixed);
    if (!o.pass) ++failures;
  }
  os << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
     << " (" << ran << " run)\n";
  return failures;
}

}  // namespace poincare::acceptance
