// Command-line front end: exact EFP evaluation, verification suites, and
// asymptotic comparison tables with machine-readable output.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "efp/constants.hpp"
#include "efp/critical.hpp"
#include "efp/disordered.hpp"
#include "efp/efp_exact.hpp"
#include "efp/fredholm.hpp"
#include "efp/hyp2f1.hpp"
#include "efp/ordered.hpp"
#include "efp/parallel.hpp"
#include "efp/saddle.hpp"
#include "efp/sigma.hpp"
#include "report.hpp"

using namespace efp;
using cli::Report;

namespace {

struct GlobalOpts {
  long precision_bits = kDefaultPrec;
  std::string format = "json";
  std::string out;
  long digits = 30;
};

std::string key_rsq(long r, long s, long q) {
  return "r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",q=" + std::to_string(q);
}

Rational parse_alpha(const std::string& text, bool open_interval) {
  Rational a;
  try {
    a = Rational::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("alpha", e.what());
  }
  if (open_interval && (a <= Rational(0) || a >= Rational(1)))
    throw CLI::ValidationError("alpha", "alpha must lie strictly between 0 and 1");
  if (!open_interval && (a < Rational(0) || a > Rational(1)))
    throw CLI::ValidationError("alpha", "alpha must lie in [0,1]");
  return a;
}

std::string fstr(const BigFloat& x, long digits) { return x.str(digits); }

int cmd_eval(const GlobalOpts& g, long r, long s, long q, const std::string& alpha_text) {
  Rational alpha = parse_alpha(alpha_text, false);
  EfpParams p(r, s, q);
  Report rep;
  rep.command = "eval";
  rep.precision_bits = g.precision_bits;
  Rational f = efp_value(p, alpha);
  rep.scalar("r", std::to_string(r));
  rep.scalar("s", std::to_string(s));
  rep.scalar("q", std::to_string(q));
  rep.scalar("alpha", alpha.str());
  rep.scalar("F", f.str());
  rep.scalar("F_decimal", fstr(BigFloat(f, g.precision_bits), g.digits));
  if (s > r) rep.scalar("note", "s > r: the frozen rectangle cannot occur, F is identically 0");
  if (s == 0) rep.scalar("note", "s = 0: empty frozen region, F is identically 1");
  rep.emit(g.format, g.out);
  return 0;
}

int cmd_poly(const GlobalOpts& g, long r, long s, long q) {
  EfpParams p(r, s, q);
  Poly f = efp_polynomial(p);
  Report rep;
  rep.command = "poly";
  rep.scalar("r", std::to_string(r));
  rep.scalar("s", std::to_string(s));
  rep.scalar("q", std::to_string(q));
  rep.scalar("degree", std::to_string(f.degree()));
  rep.columns = {"coefficient"};
  for (long k = 0; k <= std::max(f.degree(), 0L); ++k)
    rep.row("alpha^" + std::to_string(k), {f[static_cast<size_t>(k)].str()});
  rep.emit(g.format, g.out);
  return 0;
}

int cmd_verify_sigma(const GlobalOpts& g, long max_n) {
  std::vector<EfpParams> cases;
  for (long r = 1; r <= max_n; ++r)
    for (long s = 1; s <= r; ++s)
      for (long q = 0; r + s + q <= max_n; ++q) cases.emplace_back(r, s, q);
  std::vector<int> ok(cases.size(), 0);
  parallel_for(static_cast<long>(cases.size()), [&](long i) {
    SigmaData sd = sigma_from_efp(efp_polynomial(cases[i]), cases[i]);
    ok[i] = sigma_form_residual(sd).is_zero() ? 1 : 0;
  });
  Report rep;
  rep.command = "verify sigma-form";
  rep.columns = {"status", "residual"};
  bool all = true;
  for (size_t i = 0; i < cases.size(); ++i) {
    all = all && ok[i];
    rep.row(key_rsq(cases[i].r, cases[i].s, cases[i].q),
            {ok[i] ? "pass" : "fail", ok[i] ? "0" : "nonzero"});
  }
  rep.scalar("all_pass", all ? "true" : "false");
  rep.emit(g.format, g.out);
  return all ? 0 : 1;
}

int cmd_verify_oracles(const GlobalOpts& g, long max_n) {
  if (max_n > 6) throw CLI::ValidationError("--max-n", "enumeration refuses N > 6");
  Report rep;
  rep.command = "verify oracles";
  rep.columns = {"status", "detail"};
  bool all = true;
  for (long r = 1; r <= max_n; ++r)
    for (long s = 0; s <= r; ++s)
      for (long q = 0; r + s + q <= max_n; ++q) {
        EfpParams p(r, s, q);
        Poly hankel = efp_polynomial(p);
        std::string status = "pass", detail = "enumeration == hankel == multiple-integral";
        if (s <= 3 && efp_multi_integral(p) != hankel) {
          status = "fail";
          detail = "multiple integral differs";
        } else {
          for (const Rational& alpha : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            EnumValue ev = efp_enumerate(p, alpha);
            if (!ev.exact || ev.value != hankel.eval(alpha)) {
              status = "fail";
              detail = "enumeration differs at alpha=" + alpha.str();
              break;
            }
          }
        }
        all = all && status == "pass";
        rep.row(key_rsq(r, s, q), {status, detail});
      }
  rep.scalar("all_pass", all ? "true" : "false");
  rep.emit(g.format, g.out);
  return all ? 0 : 1;
}

int cmd_verify_alpha0(const GlobalOpts& g, long max_r, long max_q) {
  Report rep;
  rep.command = "verify alpha0";
  rep.columns = {"status", "exponent", "coefficient"};
  bool all = true;
  for (long r = 1; r <= max_r; ++r)
    for (long s = 1; s <= r; ++s)
      for (long q = 0; q <= max_q; ++q) {
        std::string status = "pass", expo, coeff;
        try {
          auto lead = efp_alpha0_leading(EfpParams(r, s, q));
          expo = std::to_string(lead.exponent);
          coeff = lead.coefficient.str();
        } catch (const std::exception& e) {
          status = "fail";
          expo = coeff = "-";
        }
        all = all && status == "pass";
        rep.row(key_rsq(r, s, q), {status, expo, coeff});
      }
  rep.scalar("all_pass", all ? "true" : "false");
  rep.emit(g.format, g.out);
  return all ? 0 : 1;
}

int cmd_verify_alpha1(const GlobalOpts& g, long max_r) {
  Report rep;
  rep.command = "verify alpha1";
  rep.columns = {"status", "c1", "series1", "series2"};
  bool all = true;
  for (long r = 1; r <= max_r; ++r)
    for (long s = 1; s <= r; ++s) {
      std::string status = "pass", c1, s1, s2;
      try {
        auto c = hankel_alpha1_coeffs(r, s);
        auto ser = efp_alpha1_series(r, s);
        c1 = c.c1.str();
        s1 = ser[1].str();
        s2 = ser[2].str();
      } catch (const std::exception& e) {
        status = "fail";
        c1 = s1 = s2 = "-";
      }
      all = all && status == "pass";
      rep.row("r=" + std::to_string(r) + ",s=" + std::to_string(s), {status, c1, s1, s2});
    }
  rep.scalar("all_pass", all ? "true" : "false");
  rep.emit(g.format, g.out);
  return all ? 0 : 1;
}

// fitted decay exponent between consecutive errors: log2(e1/e2)/log2(s2/s1)
std::string fitted_exponent(const BigFloat& e1, const BigFloat& e2, long s1, long s2) {
  if (e1.is_zero() || e2.is_zero()) return "-";
  double num = std::log2((e1 / e2).to_double());
  double den = std::log2(static_cast<double>(s2) / static_cast<double>(s1));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", num / den);
  return buf;
}

int cmd_asym_disordered(const GlobalOpts& g, const std::string& v_text,
                        const std::string& alpha_text, std::vector<long> ss, int order) {
  Rational v = Rational::parse(v_text);
  Rational alpha = parse_alpha(alpha_text, true);
  const mpfr_prec_t prec = g.precision_bits;
  Geometry geo(alpha, v, prec);
  if (geo.regime() != Regime::disordered)
    throw CLI::ValidationError("--alpha", "(alpha, v) is not in the disordered regime");

  std::vector<BigFloat> exact(ss.size(), BigFloat(prec)), pred(ss.size(), BigFloat(prec));
  parallel_for(static_cast<long>(ss.size()), [&](long i) {
    long s = ss[i];
    Rational r_over = Rational(s) / v;
    if (!r_over.is_integer()) throw std::domain_error("s/v must be an integer");
    EfpParams p(r_over.num().to_long(), s, 0);
    exact[i] = BigFloat(efp_value(p, alpha), prec).log();
    pred[i] = log_efp_disordered(s, v, alpha, order, prec);
  });

  Report rep;
  rep.command = "asym disordered";
  rep.precision_bits = g.precision_bits;
  rep.scalar("v", v.str());
  rep.scalar("alpha", alpha.str());
  rep.scalar("order", std::to_string(order));
  rep.columns = {"s", "log_F_exact", "log_F_expansion", "abs_err", "rel_err",
                 "fitted_exponent", "precision_bits"};
  for (size_t i = 0; i < ss.size(); ++i) {
    BigFloat err = (pred[i] - exact[i]).abs();
    std::string fit = i > 0 ? fitted_exponent((pred[i - 1] - exact[i - 1]).abs(), err,
                                              ss[i - 1], ss[i])
                            : "-";
    rep.row("s=" + std::to_string(ss[i]),
            {std::to_string(ss[i]), fstr(exact[i], g.digits), fstr(pred[i], g.digits),
             fstr(err, 6), fstr(err / exact[i].abs(), 6), fit,
             std::to_string(g.precision_bits)});
  }
  rep.emit(g.format, g.out);
  return 0;
}

int cmd_asym_ordered(const GlobalOpts& g, const std::string& v_text,
                     const std::string& alpha_text, std::vector<long> ss, int order) {
  Rational v = Rational::parse(v_text);
  Rational alpha = parse_alpha(alpha_text, true);
  const mpfr_prec_t prec = g.precision_bits;
  Geometry geo(alpha, v, prec);
  if (geo.regime() != Regime::ordered)
    throw CLI::ValidationError("--alpha", "(alpha, v) is not in the ordered regime");

  std::vector<BigFloat> exact(ss.size(), BigFloat(prec)), pred(ss.size(), BigFloat(prec));
  parallel_for(static_cast<long>(ss.size()), [&](long i) {
    long s = ss[i];
    Rational r_over = Rational(s) / v;
    if (!r_over.is_integer()) throw std::domain_error("s/v must be an integer");
    EfpParams p(r_over.num().to_long(), s, 0);
    Rational one_minus_f = Rational(1) - efp_value(p, alpha);  // exact before the log
    exact[i] = BigFloat(one_minus_f, prec).log();
    pred[i] = log_one_minus_efp_ordered(s, v, alpha, order, prec);
  });

  Report rep;
  rep.command = "asym ordered";
  rep.precision_bits = g.precision_bits;
  rep.scalar("v", v.str());
  rep.scalar("alpha", alpha.str());
  rep.scalar("order", std::to_string(order));
  rep.columns = {"s", "log_1mF_exact", "log_1mF_expansion", "abs_err", "rel_err",
                 "fitted_exponent", "precision_bits"};
  for (size_t i = 0; i < ss.size(); ++i) {
    BigFloat err = (pred[i] - exact[i]).abs();
    std::string fit = i > 0 ? fitted_exponent((pred[i - 1] - exact[i - 1]).abs(), err,
                                              ss[i - 1], ss[i])
                            : "-";
    rep.row("s=" + std::to_string(ss[i]),
            {std::to_string(ss[i]), fstr(exact[i], g.digits), fstr(pred[i], g.digits),
             fstr(err, 6), fstr(err / exact[i].abs(), 6), fit,
             std::to_string(g.precision_bits)});
  }
  rep.emit(g.format, g.out);
  return 0;
}

int cmd_asym_fredholm(const GlobalOpts& g, long r, long s, long q,
                      const std::string& alpha_text, std::vector<long> nodes,
                      const std::string& radius_text) {
  Rational alpha = parse_alpha(alpha_text, true);
  EfpParams p(r, s, q);
  Rational radius = radius_text.empty() ? alpha / Rational(2) : Rational::parse(radius_text);
  const mpfr_prec_t prec = g.precision_bits;
  KernelData kd(p, alpha);
  BigFloat exact(efp_value(p, alpha), prec);

  std::vector<BComplex> dets(nodes.size(), BComplex(prec));
  parallel_for(static_cast<long>(nodes.size()), [&](long i) {
    dets[i] = fredholm_det_nystrom(kd, ContourGrid(radius, nodes[i], prec));
  });

  Report rep;
  rep.command = "asym fredholm";
  rep.precision_bits = g.precision_bits;
  rep.scalar("r", std::to_string(r));
  rep.scalar("s", std::to_string(s));
  rep.scalar("q", std::to_string(q));
  rep.scalar("alpha", alpha.str());
  rep.scalar("radius", radius.str());
  rep.scalar("F_exact", efp_value(p, alpha).str());
  rep.columns = {"m", "det_re", "abs_err", "abs_imag", "ratio_to_prev", "precision_bits"};
  BigFloat prev_err(0, prec);
  for (size_t i = 0; i < nodes.size(); ++i) {
    BigFloat err = (dets[i].re - exact).abs();
    std::string ratio = "-";
    if (i > 0 && !prev_err.is_zero()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3g", (err / prev_err).to_double());
      ratio = buf;
    }
    rep.row("m=" + std::to_string(nodes[i]),
            {std::to_string(nodes[i]), fstr(dets[i].re, g.digits), fstr(err, 6),
             fstr(dets[i].im.abs(), 6), ratio, std::to_string(g.precision_bits)});
    prev_err = err;
  }
  rep.emit(g.format, g.out);
  return 0;
}

int cmd_asym_saddle(const GlobalOpts& g, const std::string& v_text,
                    const std::string& alpha_text, std::vector<long> ss, int order) {
  Rational v = Rational::parse(v_text);
  Rational alpha = parse_alpha(alpha_text, true);
  const mpfr_prec_t prec = g.precision_bits;

  Report rep;
  rep.command = "asym saddle";
  rep.precision_bits = g.precision_bits;
  rep.scalar("v", v.str());
  rep.scalar("alpha", alpha.str());
  rep.scalar("order", std::to_string(order));
  rep.columns = {"s", "trace_exact", "trace_saddle", "rel_err", "rel_err_times_s3",
                 "precision_bits"};
  for (long s : ss) {
    Rational r_over = Rational(s) / v;
    if (!r_over.is_integer()) throw CLI::ValidationError("--s-list", "s/v must be integer");
    EfpParams p(r_over.num().to_long(), s, 0);
    Rational exact = trace_k_value(p, alpha);
    BigFloat pred = trace_k_saddle(s, v, alpha, order, prec);
    BigFloat rel = (pred / BigFloat(exact, prec) - BigFloat(1, prec)).abs();
    rep.row("s=" + std::to_string(s),
            {std::to_string(s), fstr(BigFloat(exact, prec), g.digits), fstr(pred, g.digits),
             fstr(rel, 6), fstr(rel * BigFloat(s, prec).pow_si(3), 6),
             std::to_string(g.precision_bits)});
  }
  rep.emit(g.format, g.out);
  return 0;
}

int cmd_asym_hyp(const GlobalOpts& g, long r, long s, const std::string& alpha_text) {
  Rational alpha = parse_alpha(alpha_text, true);
  EfpParams p(r, s, 0);
  const mpfr_prec_t prec = g.precision_bits;
  BigFloat pred = log_efp_ordered_integral(p, alpha, prec);
  BigFloat exact = BigFloat(efp_value(p, alpha), prec).log();
  Rational trk = trace_k_value(p, alpha);

  Report rep;
  rep.command = "asym hyp";
  rep.precision_bits = g.precision_bits;
  rep.scalar("r", std::to_string(r));
  rep.scalar("s", std::to_string(s));
  rep.scalar("alpha", alpha.str());
  rep.scalar("log_F_exact", fstr(exact, g.digits));
  rep.scalar("log_F_integral", fstr(pred, g.digits));
  rep.scalar("abs_diff", fstr((pred - exact).abs(), 6));
  rep.scalar("trace_K", trk.str());
  rep.scalar("trace_K_squared", fstr(BigFloat(trk * trk, prec), 6));
  rep.emit(g.format, g.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"emptiness formation probability of the six-vertex model at its "
               "free-fermion point: exact evaluation, identity verification, and "
               "asymptotic comparison tables"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--precision-bits", g.precision_bits, "working precision in bits")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_option("--digits", g.digits, "decimal digits in rendered floats")
      ->capture_default_str();

  long r = 1, s = 0, q = 0, max_n = 10, max_r = 10, max_q = 2;
  int order = 2;
  std::string alpha_text, v_text, radius_text;
  std::vector<long> s_list, nodes;

  auto* eval = app.add_subcommand("eval", "exact F_{r,s,q}(alpha)");
  eval->add_option("--r", r)->required();
  eval->add_option("--s", s)->required();
  eval->add_option("--q", q)->capture_default_str();
  eval->add_option("--alpha", alpha_text, "exact rational, e.g. 1/2")->required();

  auto* poly = app.add_subcommand("poly", "exact polynomial coefficients of F_{r,s,q}");
  poly->add_option("--r", r)->required();
  poly->add_option("--s", s)->required();
  poly->add_option("--q", q)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "identity verification suites");
  verify->require_subcommand(1);
  auto* vsigma = verify->add_subcommand("sigma-form",
                                        "second-order ODE residual is exactly zero");
  vsigma->add_option("--max-n", max_n, "verify all r+s+q <= max-n")->capture_default_str();
  auto* voracle = verify->add_subcommand("oracles",
                                         "enumeration == determinant == multiple integral");
  voracle->add_option("--max-n", max_n, "verify all r+s+q <= max-n (<= 6)")
      ->default_val(6);
  auto* valpha0 = verify->add_subcommand("alpha0", "leading correction at alpha -> 0");
  valpha0->add_option("--max-r", max_r)->capture_default_str();
  valpha0->add_option("--max-q", max_q)->capture_default_str();
  auto* valpha1 = verify->add_subcommand("alpha1", "expansion coefficients at alpha -> 1");
  valpha1->add_option("--max-r", max_r)->capture_default_str();

  auto* asym = app.add_subcommand("asym", "asymptotic comparison tables");
  asym->require_subcommand(1);
  auto* adis = asym->add_subcommand("disordered", "lower-tail expansion vs exact log F");
  adis->add_option("--v", v_text)->required();
  adis->add_option("--alpha", alpha_text)->required();
  adis->add_option("--s-list", s_list)->required()->delimiter(',');
  adis->add_option("--order", order)->capture_default_str();
  auto* aord = asym->add_subcommand("ordered", "upper-tail expansion vs exact log(1-F)");
  aord->add_option("--v", v_text)->required();
  aord->add_option("--alpha", alpha_text)->required();
  aord->add_option("--s-list", s_list)->required()->delimiter(',');
  aord->add_option("--order", order)->capture_default_str();
  auto* afred = asym->add_subcommand("fredholm", "Nystrom determinant convergence table");
  afred->add_option("--r", r)->required();
  afred->add_option("--s", s)->required();
  afred->add_option("--q", q)->capture_default_str();
  afred->add_option("--alpha", alpha_text)->required();
  afred->add_option("--nodes", nodes)->required()->delimiter(',');
  afred->add_option("--radius", radius_text, "contour radius (default alpha/2)");
  auto* asad = asym->add_subcommand("saddle", "trace expansion vs exact trace");
  asad->add_option("--v", v_text)->required();
  asad->add_option("--alpha", alpha_text)->required();
  asad->add_option("--s-list", s_list)->required()->delimiter(',');
  asad->add_option("--order", order)->capture_default_str();
  auto* ahyp = asym->add_subcommand("hyp", "closed-form correction integral vs exact");
  ahyp->add_option("--r", r)->required();
  ahyp->add_option("--s", s)->required();
  ahyp->add_option("--alpha", alpha_text)->required();

  // allow the global options to appear after a subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return cmd_eval(g, r, s, q, alpha_text);
    if (*poly) return cmd_poly(g, r, s, q);
    if (*vsigma) return cmd_verify_sigma(g, max_n);
    if (*voracle) return cmd_verify_oracles(g, max_n);
    if (*valpha0) return cmd_verify_alpha0(g, max_r, max_q);
    if (*valpha1) return cmd_verify_alpha1(g, max_r);
    if (*adis) return cmd_asym_disordered(g, v_text, alpha_text, s_list, order);
    if (*aord) return cmd_asym_ordered(g, v_text, alpha_text, s_list, order);
    if (*afred) return cmd_asym_fredholm(g, r, s, q, alpha_text, nodes, radius_text);
    if (*asad) return cmd_asym_saddle(g, v_text, alpha_text, s_list, order);
    if (*ahyp) return cmd_asym_hyp(g, r, s, alpha_text);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return 2;
  }
  return 0;
}
