#include "poincare/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "poincare/acceptance.hpp"
#include "poincare/classical.hpp"
#include "poincare/errors.hpp"
#include "poincare/fund_domain.hpp"
#include "poincare/hecke.hpp"
#include "poincare/modgroup.hpp"
#include "poincare/quadform.hpp"
#include "poincare/report.hpp"
#include "poincare/siegel.hpp"

namespace poincare::cli {

namespace {

using nlohmann::json;
using quadform::HalfIntegralForm;

std::vector<std::int64_t> parse_int_list(const std::string& text, char sep) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, sep)) {
    std::size_t used = 0;
    out.push_back(std::stoll(piece, &used));
    if (used != piece.size()) throw std::invalid_argument("bad integer: " + piece);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// "a:b:step" (inclusive arithmetic range), "x,y,z", or a single value.
std::vector<std::int64_t> parse_range(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = parse_int_list(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must be a:b:step");
    const auto [a, b, step] = std::tuple{parts[0], parts[1], parts[2]};
    if (step <= 0 || b < a) throw std::invalid_argument("range must have step > 0, b >= a");
    std::vector<std::int64_t> out;
    for (std::int64_t v = a; v <= b; v += step) out.push_back(v);
    return out;
  }
  return parse_int_list(text, ',');
}

std::vector<int> to_int_vec(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

HalfIntegralForm parse_form(const std::string& text) {
  const auto v = parse_int_list(text, ',');
  if (v.size() != 3) throw std::invalid_argument("form must be s11,b,s22");
  return {v[0], v[1], v[2]};
}

Mat2i parse_mat(const std::string& text) {
  const auto v = parse_int_list(text, ',');
  if (v.size() != 4) throw std::invalid_argument("matrix must be a11,a12,a21,a22");
  return {v[0], v[1], v[2], v[3]};
}

json mat_json(const Mat2i& m) {
  return json::array({json::array({m.a11, m.a12}), json::array({m.a21, m.a22})});
}

json form_json(const HalfIntegralForm& f) { return json::array({f.s11, f.b, f.s22}); }

// Exponent map of n by trial division.
std::map<std::int64_t, int> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n >= 1 required");
  std::map<std::int64_t, int> e;
  for (std::int64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++e[p];
      n /= p;
    }
  if (n > 1) ++e[n];
  return e;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier coefficients of classical and genus-2 Poincare series"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string out_path;
  int threads = 0;
  app.add_option("--format", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  const auto with_sink = [&](const std::function<void(std::ostream&)>& fn) {
    if (out_path.empty()) {
      fn(out);
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output path: " + out_path);
    fn(f);
  };

  const auto emit_report = [&](const report::ScanReport& rep) {
    with_sink([&](std::ostream& os) {
      if (format == "csv")
        os << report::to_csv(rep);
      else
        os << report::to_json(rep).dump(2) << "\n";
    });
  };
  const auto emit_json = [&](const json& j) {
    with_sink([&](std::ostream& os) { os << j.dump(2) << "\n"; });
  };

  int exit_code = kExitOk;

  // --- classical-coeff ------------------------------------------------
  {
    auto* sc = app.add_subcommand("classical-coeff",
                                  "one coefficient, quadrature vs. exact-expansion oracle");
    auto p = std::make_shared<classical::ClassicalParams>();
    auto tol = std::make_shared<double>(1e-6);
    auto c_max = std::make_shared<std::int64_t>(256);
    sc->add_option("--m", p->m, "series index (default 1)");
    sc->add_option("--n", p->n, "coefficient index (default 1)");
    sc->add_option("--k", p->k, "weight (default 12)");
    sc->add_option("--q", p->q, "level (default 1)");
    sc->add_option("--y0", p->y0, "segment height (default 1.1)");
    sc->add_option("--B", p->B, "series truncation (default 40)");
    sc->add_option("--N", p->N, "quadrature points (default 64)");
    sc->add_option("--tol", *tol, "adaptive quadrature tolerance (default 1e-6)");
    sc->add_option("--c-max", *c_max, "oracle truncation (default 256)");
    sc->callback([&, p, tol, c_max]() {
      const auto quad = classical::coeff_quadrature_adaptive(
          *p, *tol, parallel::ExecMode::openmp, threads);
      const auto oracle = classical::coeff_kloosterman(*p, *c_max);
      report::ScanReport rep;
      rep.param_names = {"m", "n", "k", "q"};
      report::ScanRow row;
      row.params = {double(p->m), double(p->n), double(p->k), double(p->q)};
      row.value = quad.value;
      row.target = oracle.value;
      row.abs_err = std::abs(quad.value - oracle.value);
      row.err_estimate = quad.err_estimate + oracle.tail_bound;
      rep.rows.push_back(row);
      emit_report(rep);
    });
  }

  // --- weight-scan / level-scan ----------------------------------------
  {
    auto* sc = app.add_subcommand("weight-scan", "classical coefficient against the weight");
    auto m = std::make_shared<int>(1);
    auto n = std::make_shared<int>(1);
    auto q = std::make_shared<std::int64_t>(1);
    auto ks = std::make_shared<std::string>("12:60:4");
    auto c_max = std::make_shared<std::int64_t>(128);
    sc->add_option("--m", *m, "series index");
    sc->add_option("--n", *n, "coefficient index");
    sc->add_option("--q", *q, "level");
    sc->add_option("--k", *ks, "weights, a:b:step or comma list (default 12:60:4)");
    sc->add_option("--c-max", *c_max, "oracle truncation (default 128)");
    sc->callback([&, m, n, q, ks, c_max]() {
      emit_report(classical::weight_limit_scan(*m, *n, *q, to_int_vec(parse_range(*ks)), *c_max));
    });
  }
  {
    auto* sc = app.add_subcommand("level-scan", "classical coefficient against the level");
    auto m = std::make_shared<int>(1);
    auto n = std::make_shared<int>(1);
    auto k = std::make_shared<int>(12);
    auto qs = std::make_shared<std::string>("1,2,4,8,16,32,64,128");
    sc->add_option("--m", *m, "series index");
    sc->add_option("--n", *n, "coefficient index");
    sc->add_option("--k", *k, "weight");
    sc->add_option("--q", *qs, "levels, a:b:step or comma list");
    sc->callback([&, m, n, k, qs]() {
      emit_report(classical::level_limit_scan(*m, *n, *k, parse_range(*qs)));
    });
  }

  // --- siegel-coeff / siegel-scan ---------------------------------------
  {
    auto* sc = app.add_subcommand("siegel-coeff", "one genus-2 coefficient with error estimate");
    auto p = std::make_shared<siegel::SiegelParams>();
    auto s = std::make_shared<std::string>("1,0,1");
    auto t = std::make_shared<std::string>("1,0,1");
    sc->add_option("--s", *s, "series index form s11,b,s22 (default 1,0,1)");
    sc->add_option("--t", *t, "coefficient index form (default 1,0,1)");
    sc->add_option("--k", p->k, "weight (default 20)");
    sc->add_option("--y0", p->y0, "grid height (default 1.05)");
    sc->add_option("--B", p->B, "coset entry bound (default 2)");
    sc->add_option("--N", p->N, "grid points per axis (default 16)");
    sc->callback([&, p, s, t]() {
      p->s = parse_form(*s);
      p->t = parse_form(*t);
      const auto res = siegel::siegel_coeff(*p, parallel::ExecMode::openmp, threads);
      const double target = quadform::orbit_count(p->s, p->t);
      report::ScanReport rep;
      rep.param_names = {"k"};
      report::ScanRow row;
      row.params = {double(p->k)};
      row.value = res.value;
      row.target = target;
      row.abs_err = std::abs(res.value - target);
      row.err_estimate = res.err_estimate;
      rep.rows.push_back(row);
      emit_report(rep);
    });
  }
  {
    auto* sc = app.add_subcommand("siegel-scan", "genus-2 coefficient against the weight");
    auto s = std::make_shared<std::string>("1,0,1");
    auto t = std::make_shared<std::string>("1,0,1");
    auto ks = std::make_shared<std::string>("20:40:4");
    auto y0 = std::make_shared<double>(1.05);
    auto B = std::make_shared<int>(2);
    auto N = std::make_shared<int>(16);
    sc->add_option("--s", *s, "series index form s11,b,s22");
    sc->add_option("--t", *t, "coefficient index form");
    sc->add_option("--k", *ks, "weights, a:b:step or comma list (default 20:40:4)");
    sc->add_option("--y0", *y0, "grid height (default 1.05)");
    sc->add_option("--B", *B, "coset entry bound (default 2)");
    sc->add_option("--N", *N, "grid points per axis (default 16)");
    sc->callback([&, s, t, ks, y0, B, N]() {
      emit_report(siegel::siegel_weight_scan(parse_form(*s), parse_form(*t),
                                             to_int_vec(parse_range(*ks)), *y0, *B, *N,
                                             parallel::ExecMode::openmp, threads));
    });
  }

  // --- quadratic form utilities -----------------------------------------
  {
    auto* sc = app.add_subcommand("reduce-form", "reduced representative of a form class");
    auto f = std::make_shared<std::string>();
    sc->add_option("--form", *f, "form s11,b,s22")->required();
    sc->callback([&, f]() {
      const HalfIntegralForm in = parse_form(*f);
      const auto red = quadform::reduce(in);
      emit_json({{"input", form_json(in)},
                 {"reduced", form_json(red.reduced)},
                 {"transform", mat_json(red.transform)},
                 {"disc4", quadform::disc4(in)}});
    });
  }
  {
    auto* sc = app.add_subcommand("aut", "integral automorphism group of a form");
    auto f = std::make_shared<std::string>();
    sc->add_option("--form", *f, "form s11,b,s22")->required();
    sc->callback([&, f]() {
      const HalfIntegralForm in = parse_form(*f);
      const auto aut = quadform::aut_group(in);
      json gens = json::array();
      for (const auto& a : aut) gens.push_back(mat_json(a));
      emit_json({{"form", form_json(in)},
                 {"order", aut.size()},
                 {"generators", gens}});
    });
  }

  // --- fundamental domain ------------------------------------------------
  {
    auto* sc = app.add_subcommand("fd-membership", "genus-2 fundamental domain test");
    auto x = std::make_shared<std::string>("0,0,0");
    auto y = std::make_shared<std::string>("1.05,0,1.05");
    auto tol = std::make_shared<double>(1e-9);
    sc->add_option("--x", *x, "Re z as x11,x12,x22 (default 0,0,0)");
    sc->add_option("--y", *y, "Im z as y11,y12,y22 (default 1.05,0,1.05)");
    sc->add_option("--boundary-tol", *tol, "tightness tolerance (default 1e-9)");
    sc->callback([&, x, y, tol]() {
      const auto px = [&](const std::string& text) {
        std::stringstream ss(text);
        std::string piece;
        std::vector<double> vals;
        while (std::getline(ss, piece, ',')) vals.push_back(std::stod(piece));
        if (vals.size() != 3) throw std::invalid_argument("expected v11,v12,v22");
        return Sym2d{vals[0], vals[1], vals[2]};
      };
      const SiegelPoint z{px(*x), px(*y)};
      const auto res = fund_domain::in_fundamental_domain(z, *tol);
      const char* status = res.status == fund_domain::Membership::inside     ? "inside"
                           : res.status == fund_domain::Membership::boundary ? "boundary"
                                                                             : "outside";
      emit_json({{"status", status}, {"detail", res.detail}});
    });
  }
  {
    auto* sc = app.add_subcommand("gottschling", "the 19 determinant-inequality pairs");
    sc->callback([&]() {
      const auto& pairs = fund_domain::gottschling_set();
      json list = json::array();
      for (const auto& p : pairs)
        list.push_back({{"c", mat_json(p.c)}, {"d", mat_json(p.d)}, {"rank_c", p.rank_c}});
      emit_json({{"count", pairs.size()}, {"pairs", list}});
    });
  }
  {
    auto* sc = app.add_subcommand("y0-search", "smallest grid-certified grid height");
    auto tol = std::make_shared<double>(1e-3);
    auto grid_n = std::make_shared<int>(64);
    auto floor = std::make_shared<double>(1e-3);
    sc->add_option("--tol", *tol, "bisection bracket width (default 1e-3)");
    sc->add_option("--grid-n", *grid_n, "grid points per axis (default 64)");
    sc->add_option("--margin-floor", *floor, "required margin (default 1e-3)");
    sc->callback([&, tol, grid_n, floor]() {
      const double y0 = fund_domain::search_y0(*tol, *grid_n, *floor);
      const auto cert = fund_domain::certify_y0(y0 + *tol, *grid_n, *floor);
      emit_json({{"y0", y0},
                 {"tol", *tol},
                 {"grid_n", *grid_n},
                 {"certificate",
                  {{"y0", cert.y0},
                   {"grid_n", cert.grid_n},
                   {"pair_minima", cert.pair_minima},
                   {"min_over_pairs", cert.min_over_pairs},
                   {"margin", cert.margin},
                   {"pass", cert.pass}}}});
    });
  }
  {
    auto* sc = app.add_subcommand("alpha-poly-check",
                                  "|det(c(x+i a)+d)|^2 as a polynomial in a^2");
    auto c = std::make_shared<std::string>();
    auto d = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>("0,0,0");
    sc->add_option("--c", *c, "matrix a11,a12,a21,a22")->required();
    sc->add_option("--d", *d, "matrix a11,a12,a21,a22")->required();
    sc->add_option("--x", *x, "Re z as x11,x12,x22 (default 0,0,0)");
    sc->callback([&, c, d, x]() {
      std::stringstream ss(*x);
      std::string piece;
      std::vector<double> vals;
      while (std::getline(ss, piece, ',')) vals.push_back(std::stod(piece));
      if (vals.size() != 3) throw std::invalid_argument("expected x11,x12,x22");
      const Mat2i cm = parse_mat(*c), dm = parse_mat(*d);
      const auto poly =
          fund_domain::det_alpha_polynomial(cm, dm, {vals[0], vals[1], vals[2]});
      int top = -1;
      for (int i = 0; i < 3; ++i)
        if (std::abs(poly[static_cast<std::size_t>(i)]) > 1e-9) top = i;
      emit_json({{"p", poly}, {"rank_c", rank2(cm)}, {"top_nonzero_index", top}});
    });
  }

  // --- Hecke pipeline ------------------------------------------------------
  {
    auto* sc = app.add_subcommand("hecke-eigen", "weight-k eigenforms and eigenvalues");
    auto k = std::make_shared<int>(12);
    auto pmax = std::make_shared<std::int64_t>(7);
    sc->add_option("--k", *k, "weight (default 12)");
    sc->add_option("--pmax", *pmax, "report lambda(p) for primes up to this (default 7)");
    sc->callback([&, k, pmax]() {
      const auto sys = hecke::hecke_eigensystem(*k, std::max<std::int64_t>(*pmax, 7));
      json forms = json::array();
      for (const auto& f : sys.forms) {
        json lam = json::object();
        for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
          if (p > *pmax) break;
          lam[std::to_string(p)] = f.lambda(p);
        }
        forms.push_back({{"index", f.index}, {"a2", f.eigenvalue_t2}, {"lambda", lam}});
      }
      emit_json({{"k", sys.k}, {"dim", sys.dim}, {"forms", forms}});
    });
  }
  {
    auto* sc = app.add_subcommand("weights", "spectral weights fitted from the oracle");
    auto k = std::make_shared<int>(12);
    auto M = std::make_shared<int>(8);
    auto c_max = std::make_shared<std::int64_t>(300);
    sc->add_option("--k", *k, "weight (default 12)");
    sc->add_option("--M", *M, "fit rows (default 8)");
    sc->add_option("--c-max", *c_max, "oracle truncation (default 300)");
    sc->callback([&, k, M, c_max]() {
      const auto sys = hecke::hecke_eigensystem(*k);
      const auto w = hecke::estimate_weights(sys, *M, *c_max);
      emit_json({{"k", *k}, {"omega", w.omega}, {"residual", w.residual}});
    });
  }
  {
    auto* sc = app.add_subcommand("weyl-scan", "weighted Weyl sums against the weight");
    auto m = std::make_shared<std::int64_t>(2);
    auto ks = std::make_shared<std::string>("12:60:4");
    auto c_max = std::make_shared<std::int64_t>(300);
    sc->add_option("--m", *m, "index whose factorization sets the exponents (default 2)");
    sc->add_option("--k", *ks, "weights, a:b:step or comma list (default 12:60:4)");
    sc->add_option("--c-max", *c_max, "oracle truncation (default 300)");
    sc->callback([&, m, ks, c_max]() {
      const auto exps = factorize(*m);
      report::ScanReport rep;
      rep.param_names = {"k"};
      for (int k : to_int_vec(parse_range(*ks))) {
        const auto sys = hecke::hecke_eigensystem(k);
        const auto w = hecke::estimate_weights(sys, 8, *c_max);
        classical::ClassicalParams p;
        p.m = static_cast<int>(*m);
        p.n = 1;
        p.k = k;
        report::ScanRow row;
        row.params = {double(k)};
        row.value = hecke::weyl_sum(sys, w, exps);
        row.target = *m == 1 ? 1.0 : 0.0;
        row.abs_err = std::abs(row.value - row.target);
        row.err_estimate =
            std::abs(row.value - classical::coeff_kloosterman(p, *c_max).value);
        rep.rows.push_back(row);
      }
      emit_report(rep);
    });
  }

  // --- selftest -------------------------------------------------------------
  {
    auto* sc = app.add_subcommand("selftest", "run the acceptance suite");
    auto only = std::make_shared<std::string>();
    sc->add_option("--only", *only, "comma list of criterion numbers (default: all)");
    sc->callback([&, only]() {
      std::set<int> which;
      if (!only->empty())
        for (std::int64_t v : parse_int_list(*only, ',')) which.insert(static_cast<int>(v));
      with_sink([&](std::ostream& os) {
        if (acceptance::run(os, which) != 0) exit_code = 1;
      });
    });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("poincare");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const envelope_error& e) {
    err << "envelope violation: " << e.what() << "\n";
    return kExitEnvelope;
  } catch (const numerical_error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitEnvelope;
  } catch (const std::invalid_argument& e) {
    err << "argument error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitEnvelope;
  }
  return exit_code;
}

}  // namespace poincare::cli
