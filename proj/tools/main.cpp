// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: evaluate the series and its expansions, dump
// expansion coefficients, regenerate the reference tables, and run
// self-verification suites.
//
// Exit codes: 0 success, 2 invalid input, 3 verification failure,
// 4 term budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "ejasym/ejasym.hpp"

using nlohmann::json;
using namespace ejasym;

namespace {

std::string regime_name(RegimeKind k) {
  switch (k) {
    case RegimeKind::Convergent: return "convergent";
    case RegimeKind::BoundaryP1: return "boundary_p1";
    case RegimeKind::AlgebraicOnly: return "algebraic_only";
    case RegimeKind::EvenEven: return "even_even";
  }
  return "?";
}

json complex_json(const BigComplex& z, int digits) {
  return {{"re", z.real().to_string(digits)}, {"im", z.imag().to_string(digits)}};
}

long auto_digits(long user, const BigReal& expected_err, long pad) {
  if (expected_err.is_zero()) return std::max(user, 30L);
  long mag = expected_err.exp10_estimate();
  long need = static_cast<long>(std::ceil(1.3 * std::abs(static_cast<double>(mag)))) + pad;
  return std::max(user, need);
}

int cmd_eval(const std::string& ps, const std::string& ws,
             const std::string& as, long digits, long M, bool no_expo) {
  mpq_class p = parse_rational(ps);
  mpq_class w = parse_rational(ws);
  EvalOptions opts;
  opts.M = M;
  opts.include_exponentials = !no_expo;

  // pass 1 estimates the achievable error, pass 2 sizes precision to it
  PrecisionCtx ctx = PrecisionCtx::make(std::max(digits, 30L));
  BigComplex a = parse_complex(as, ctx.bits());
  EvalResult res = evaluate(p, w, a, ctx, opts);
  long D = auto_digits(digits, res.remainder_estimate, 20);
  if (D > ctx.working_digits) {
    ctx = PrecisionCtx::make(D);
    a = parse_complex(as, ctx.bits());
    res = evaluate(p, w, a, ctx, opts);
  }
  BigReal tol = pow10(-(ctx.total_digits() - 2), ctx.bits());
  OracleValue orc = direct_sum(p, w, a, ctx, tol);

  const int out_digits = static_cast<int>(ctx.working_digits);
  json blocks = json::array();
  for (const auto& b : res.exponential) {
    blocks.push_back({{"r", b.r},
                      {"hat", b.hat},
                      {"j0", b.j0},
                      {"dropped", b.dropped},
                      {"total", complex_json(b.total, out_digits)},
                      {"remainder_estimate", b.remainder_estimate.to_string(6)}});
  }
  Regime reg = res.regime;
  json out = {
      {"p", p.get_str()},
      {"w", w.get_str()},
      {"a", complex_json(a, out_digits)},
      {"digits", ctx.working_digits},
      {"regime", regime_name(reg.kind)},
      {"double_pole_M",
       reg.has_double_pole ? json(reg.double_pole_M) : json(nullptr)},
      {"algebraic_total", complex_json(res.algebraic.total, out_digits)},
      {"algebraic_terms", res.algebraic.terms.size()},
      {"exponential", blocks},
      {"exponential_total", complex_json(res.exponential_total, out_digits)},
      {"total", complex_json(res.total, out_digits)},
      {"remainder_estimate", res.remainder_estimate.to_string(6)},
      {"oracle",
       {{"value", complex_json(orc.value, out_digits)},
        {"tail_bound", orc.tail_bound.to_string(6)},
        {"terms_used", orc.terms_used}}},
      {"S_diff_abs", abs(orc.value - res.algebraic.total).to_string(out_digits)},
      {"total_diff_abs", abs(orc.value - res.total).to_string(out_digits)},
  };
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_coeffs(const std::string& ps, const std::string& ws, long count,
               const std::string& format) {
  mpq_class p = parse_rational(ps);
  mpq_class w = parse_rational(ws);
  if (count < 1) throw InvalidInput("--count must be >= 1");
  auto cs = cached_coefficients(p, w, static_cast<std::size_t>(count));
  const mpfr_prec_t prec = PrecisionCtx::make(40).bits();
  if (format == "json") {
    json rows = json::array();
    for (std::size_t j = 0; j < cs.size(); ++j)
      rows.push_back({{"j", j},
                      {"c", format_xy(BigReal(cs[j], prec), 7)},
                      {"exact", cs[j].get_str()}});
    json out = {{"p", p.get_str()}, {"w", w.get_str()}, {"coefficients", rows}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  bool md = format == "markdown";
  if (md) {
    std::cout << "| p | w | j | c_j |\n|---|---|---|---|\n";
    for (std::size_t j = 0; j < cs.size(); ++j)
      std::cout << "| " << p.get_str() << " | " << w.get_str() << " | " << j
                << " | " << format_xy(BigReal(cs[j], prec), 7) << " |\n";
  } else {
    std::cout << "p,w,j,c_j\n";
    for (std::size_t j = 0; j < cs.size(); ++j)
      std::cout << join_csv({p.get_str(), w.get_str(), std::to_string(j),
                             format_xy(BigReal(cs[j], prec), 7)})
                << "\n";
  }
  return 0;
}

struct AsymRow {
  std::string abs_S, abs_S_minus_E0, j0;
  std::string abs_S_minus_E01, min_E0, E1_j0;  // extended columns
};

AsymRow asym_row(const mpq_class& p, const mpq_class& w, const mpq_class& av,
                 long user_digits, bool extended) {
  // pass 1: size the working precision from the optimal-truncation error
  PrecisionCtx ctx0 = PrecisionCtx::make(40);
  BigComplex a0(BigReal(av, ctx0.bits()), BigReal(ctx0.bits()));
  EvalResult probe = evaluate(p, w, a0, ctx0);
  long D = auto_digits(user_digits, probe.remainder_estimate, 25);
  PrecisionCtx ctx = PrecisionCtx::make(D);

  BigComplex a(BigReal(av, ctx.bits()), BigReal(ctx.bits()));
  EvalResult ev = evaluate(p, w, a, ctx);
  BigReal tol = pow10(-(ctx.total_digits() - 2), ctx.bits());
  OracleValue orc = direct_sum(p, w, a, ctx, tol);

  BigComplex S = orc.value - ev.algebraic.total;
  BigComplex R0 = S - ev.exponential[0].total;
  AsymRow row;
  row.abs_S = format_xy(abs(S), 4);
  row.abs_S_minus_E0 = format_xy(abs(R0), 4);
  row.j0 = std::to_string(ev.exponential[0].j0);
  if (extended) {
    BigComplex R01 = R0;
    if (ev.exponential.size() > 1) R01 = R01 - ev.exponential[1].total;
    row.abs_S_minus_E01 = format_xy(abs(R01), 4);
    long j_cut = ev.exponential[0].j0 + 1;
    DerivedParams d = derive(p, w, a, ctx);
    auto cs = cached_coefficients(p, w, static_cast<std::size_t>(j_cut) + 2);
    row.min_E0 = format_xy(
        min_branch_magnitude(d, cs, 0, d.N == 0, j_cut + 2, ctx), 4);
    if (ev.exponential.size() > 1)
      row.E1_j0 = format_xy(abs(ev.exponential[1].terms[0].value), 4);
    else
      row.E1_j0 = "0(0)";
  }
  return row;
}

void emit_rows(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows,
               const std::string& format) {
  if (format == "markdown") {
    std::cout << "|";
    for (const auto& h : header) std::cout << " " << h << " |";
    std::cout << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << "---|";
    std::cout << "\n";
    for (const auto& r : rows) {
      std::cout << "|";
      for (const auto& f : r) std::cout << " " << f << " |";
      std::cout << "\n";
    }
  } else {
    std::cout << join_csv(header) << "\n";
    for (const auto& r : rows) std::cout << join_csv(r) << "\n";
  }
}

int cmd_table(int id, long digits, const std::string& format) {
  if (id == 1) {
    const mpfr_prec_t prec = PrecisionCtx::make(40).bits();
    std::vector<std::vector<std::string>> rows;
    for (auto [pp, ww] : {std::pair{4, 2}, {4, 4}, {6, 2}, {6, 4}}) {
      auto cs = cached_coefficients(pp, ww, 9);
      for (long j = 1; j <= 8; ++j)
        rows.push_back({std::to_string(pp), std::to_string(ww),
                        std::to_string(j),
                        format_xy(BigReal(cs[j], prec), 7)});
    }
    emit_rows({"p", "w", "j", "c_j"}, rows, format);
    return 0;
  }
  if (id == 2) {
    struct Row { int p, w; const char* a; };
    std::vector<Row> specs;
    for (const char* av : {"1.00", "0.75", "0.50", "0.20", "0.10"})
      specs.push_back({2, 2, av});
    for (const char* av : {"1.00", "0.75", "0.50", "0.20", "0.10"})
      specs.push_back({2, 4, av});
    for (const char* av : {"0.200", "0.100", "0.050", "0.010", "0.001"})
      specs.push_back({4, 2, av});
    for (const char* av : {"0.200", "0.100", "0.050", "0.010", "0.001"})
      specs.push_back({4, 4, av});
    std::vector<std::future<AsymRow>> futs;
    for (const auto& s : specs)
      futs.push_back(std::async(std::launch::async, [s, digits] {
        return asym_row(s.p, s.w, parse_rational(s.a), digits, false);
      }));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      AsymRow r = futs[i].get();
      rows.push_back({std::to_string(specs[i].p), std::to_string(specs[i].w),
                      specs[i].a, r.abs_S, r.abs_S_minus_E0, r.j0});
    }
    emit_rows({"p", "w", "a", "abs_S", "abs_S_minus_E0", "j0"}, rows, format);
    return 0;
  }
  if (id == 3) {
    std::vector<const char*> avs = {"1e-1", "5e-2", "1e-2", "5e-3",
                                    "1e-3", "1e-4", "1e-5"};
    std::vector<std::future<AsymRow>> futs;
    for (const char* av : avs)
      futs.push_back(std::async(std::launch::async, [av, digits] {
        return asym_row(6, 2, parse_rational(av), digits, true);
      }));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < avs.size(); ++i) {
      AsymRow r = futs[i].get();
      rows.push_back({avs[i], r.abs_S, r.abs_S_minus_E0, r.j0,
                      r.abs_S_minus_E01, r.min_E0, r.E1_j0});
    }
    emit_rows({"a", "abs_S", "abs_S_minus_E0", "j0", "abs_S_minus_E01",
               "min_E0", "E1_j0"},
              rows, format);
    return 0;
  }
  throw InvalidInput("--id must be 1, 2 or 3");
}

struct Check {
  std::string name;
  BigReal residual;
  BigReal threshold;
  bool pass;
};

void run_check(std::vector<Check>& out, const std::string& name,
               const BigReal& residual, const BigReal& threshold) {
  out.push_back({name, residual, threshold, residual <= threshold});
}

void suite_pj(std::vector<Check>& out, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal thr = pow10(-(ctx.working_digits - 5), prec);
  std::vector<std::pair<std::string, BigComplex>> as;
  for (const char* s : {"0.3", "1", "3", "1+0.8i", "2-1i"})
    as.push_back({s, parse_complex(s, prec)});
  as.push_back({"pi", BigComplex(const_pi(prec), BigReal(prec))});
  for (auto& [nm, a] : as)
    run_check(out, "theta_identity a=" + nm, poisson_jacobi_residual(a, ctx),
              thr);
}

void suite_alt(std::vector<Check>& out, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal thr = pow10(-(ctx.working_digits - 5), prec);
  struct T { const char* p; const char* w; const char* a; };
  for (auto [ps, ws, as] : {T{"3/2", "1/2", "0.7"}, {"2", "2", "1"},
                            {"5/2", "0", "1/3"}, {"1", "1", "0.4"}}) {
    BigComplex a = parse_complex(as, prec);
    run_check(out,
              std::string("alternating p=") + ps + " w=" + ws + " a=" + as,
              alternating_residual(parse_rational(ps), parse_rational(ws), a,
                                   ctx),
              thr);
  }
}

void suite_zeta(std::vector<Check>& out, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal thr = pow10(-(ctx.working_digits - 2), prec);
  for (const char* ss : {"3/2", "1/3", "-5/2", "7/2", "-12/5", "2", "30"}) {
    mpq_class s = parse_rational(ss);
    BigReal mine = riemann_zeta(s, ctx);
    BigReal ref(prec);
    BigReal sr(s, prec);
    mpfr_zeta(ref.mp(), sr.mp(), MPFR_RNDN);
    run_check(out, std::string("zeta(") + ss + ") vs mpfr",
              abs(mine - ref) / max(BigReal(1L, prec), abs(ref)), thr);
  }
  for (long k = 1; k <= 5; ++k) {
    BigReal triv = riemann_zeta(mpq_class(-2 * k), ctx);
    run_check(out, "zeta(-" + std::to_string(2 * k) + ") exact zero",
              abs(triv), BigReal(prec));
    mpq_class ref = bernoulli(2 * k) / mpq_class(2 * k);
    BigReal odd = riemann_zeta(mpq_class(1 - 2 * k), ctx);
    run_check(out, "zeta(" + std::to_string(1 - 2 * k) + ") rational",
              abs(odd + BigReal(ref, prec)), BigReal(prec));
  }
}

void suite_gamma(std::vector<Check>& out, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal thr = pow10(-(ctx.working_digits - 2), prec);
  for (const char* xs : {"1/2", "5/3", "-7/2", "41/7", "13"}) {
    mpq_class x = parse_rational(xs);
    BigReal mine = gamma_fn(x, ctx);
    BigReal ref(prec);
    BigReal xr(x, prec);
    mpfr_gamma(ref.mp(), xr.mp(), MPFR_RNDN);
    run_check(out, std::string("gamma(") + xs + ") vs mpfr",
              abs(mine - ref) / abs(ref), thr);
    BigReal dmine = digamma(x, ctx);
    mpfr_digamma(ref.mp(), xr.mp(), MPFR_RNDN);
    run_check(out, std::string("digamma(") + xs + ") vs mpfr",
              abs(dmine - ref) / max(BigReal(1L, prec), abs(ref)), thr);
  }
}

void suite_forms(std::vector<Check>& out, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal thr = pow10(-(ctx.working_digits - 5), prec);
  struct T { int p, w; const char* a; long M; };
  for (auto [pp, ww, as, M] :
       {T{2, 2, "0.5", 12}, {4, 2, "0.1", 10}, {6, 2, "0.01", 12}}) {
    mpq_class av = parse_rational(as);
    BigReal ar(av, prec);
    BigComplex a(ar, BigReal(prec));
    auto t1 = rotated_exponential(pp, ww, a, M, ctx);
    auto t2 = folded_exponential(pp, ww, ar, M, -1, ctx);
    BigReal worst(prec);
    for (std::size_t i = 0; i < t1.size(); ++i)
      worst = max(worst, abs(t1[i].total - t2[i].total));
    run_check(out,
              std::string("rotated/real forms p=") + std::to_string(pp) +
                  " w=" + std::to_string(ww) + " a=" + as,
              worst, thr);
  }
}

int cmd_verify(const std::string& suite, long digits) {
  PrecisionCtx ctx = PrecisionCtx::make(digits);
  std::vector<Check> checks;
  bool all = suite == "all";
  if (all || suite == "pj") suite_pj(checks, ctx);
  if (all || suite == "alt") suite_alt(checks, ctx);
  if (all || suite == "zeta") suite_zeta(checks, ctx);
  if (all || suite == "gamma") suite_gamma(checks, ctx);
  if (all || suite == "forms") suite_forms(checks, ctx);
  if (checks.empty())
    throw InvalidInput("unknown suite '" + suite +
                       "' (pj, alt, zeta, gamma, forms, all)");
  json arr = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    ok = ok && c.pass;
    arr.push_back({{"check", c.name},
                   {"residual", c.residual.to_string(4)},
                   {"threshold", c.threshold.to_string(4)},
                   {"pass", c.pass}});
  }
  json out = {{"suite", suite}, {"digits", digits}, {"checks", arr},
              {"pass", ok}};
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision evaluation of sum_{n>=1} e^{-a n^p} / n^w and "
               "its small-a expansions"};
  app.require_subcommand(1);

  std::string ps = "2", ws = "2", as = "1", format = "csv", suite = "all";
  long digits = 50, M = -1, count = 8;
  int table_id = 1;
  bool no_expo = false;

  auto* eval = app.add_subcommand("eval", "evaluate against the direct sum");
  eval->add_option("--p", ps, "exponent p (rational or decimal)")->required();
  eval->add_option("--w", ws, "order w")->required();
  eval->add_option("--a", as, "argument a, complex as re+imi")->required();
  eval->add_option("--digits", digits, "working decimal digits");
  eval->add_option("--M", M, "expansion truncation (-1 = optimal)");
  eval->add_flag("--no-exponentials", no_expo, "algebraic part only");

  auto* coeffs = app.add_subcommand("coeffs", "expansion coefficients c_j");
  coeffs->add_option("--p", ps)->required();
  coeffs->add_option("--w", ws)->required();
  coeffs->add_option("--count,-M", count, "number of coefficients");
  coeffs->add_option("--format", format, "csv|markdown|json");

  auto* table = app.add_subcommand("table", "regenerate a reference table");
  table->add_option("--id", table_id, "1, 2 or 3")->required();
  table->add_option("--digits", digits, "minimum working digits");
  table->add_option("--format", format, "csv|markdown");

  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  verify->add_option("--suite", suite, "pj|alt|zeta|gamma|forms|all");
  verify->add_option("--digits", digits, "working decimal digits");

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return cmd_eval(ps, ws, as, digits, M, no_expo);
    if (coeffs->parsed()) return cmd_coeffs(ps, ws, count, format);
    if (table->parsed()) return cmd_table(table_id, digits, format);
    if (verify->parsed()) return cmd_verify(suite, digits);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const EjasymError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
