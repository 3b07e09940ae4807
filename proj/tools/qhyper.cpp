// qhyper: command-line front end to the kernel.
//
// Exit codes: 0 success, 1 kernel or configuration error, 2 parse error,
// 3 failed check suite.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qhyper/checks.hpp"
#include "qhyper/errors.hpp"
#include "qhyper/expression.hpp"
#include "qhyper/json_io.hpp"
#include "qhyper/quantum_double.hpp"
#include "qhyper/session.hpp"
#include "qhyper/slq2.hpp"
#include "qhyper/weierstrass.hpp"

using namespace qhyper;

namespace {

constexpr int kOk = 0;
constexpr int kKernelError = 1;
constexpr int kParseError = 2;
constexpr int kCheckFailed = 3;

struct SkewOptions {
  std::string base = "Uh";
  long radius = 0;
  long twist = 2;
};

/// Collected result of one command: a text rendering and a JSON value.
struct Output {
  std::string text;
  Json json;
};

Variant variant_for(Dialect d) { return d == Dialect::breve ? Variant::breve : Variant::standard; }

SkewAlgebra<LaurentAlgebra> laurent_skew(const QParams& qp, const SkewOptions& o) {
  LaurentAlgebra L(qp, 0);
  return SkewAlgebra<LaurentAlgebra>(L, laurent_twist_ore(L, qp.q_pow(o.twist)), o.radius, "z");
}

SkewAlgebra<ScalarField> scalar_skew(const QParams& qp, const SkewOptions& o) {
  return SkewAlgebra<ScalarField>(ScalarField(qp), trivial_scalar_ore(), o.radius, "z");
}

void check_base(const SkewOptions& o) {
  if (o.base != "L" && o.base != "Uh") throw ConfigError("--base must be L or Uh");
}

Output with_norm(const PNorm& n, long p) { return {n.str(p), to_json(n, p)}; }

Output with_scalar(const PadicScalar& x) { return {x.str(), to_json(x)}; }

Output cmd_normalize(const SessionConfig& cfg, Dialect d, const std::string& expr, const SkewOptions& so) {
  QParams qp = cfg.params();
  switch (d) {
    case Dialect::uq:
    case Dialect::breve: {
      QAlgebra alg(qp, variant_for(d));
      PBWElement x = parse_pbw(expr, alg);
      return {alg.str(x), to_json(x)};
    }
    case Dialect::double_: {
      QuantumDouble D(qp);
      DoubleElement x = parse_double(expr, D);
      return {D.str(x), to_json(x)};
    }
    case Dialect::slq2: {
      SLq2 sl(qp);
      CoordElement x = parse_coord(expr, sl);
      return {sl.str(x), to_json(x)};
    }
    case Dialect::skew: {
      check_base(so);
      if (so.base == "L") {
        auto alg = scalar_skew(qp, so);
        auto f = parse_skew(expr, alg);
        return {alg.str(f), to_json(f)};
      }
      auto alg = laurent_skew(qp, so);
      auto f = parse_skew(expr, alg);
      return {alg.str(f), to_json(f)};
    }
  }
  throw DomainError("unsupported dialect");
}

Output cmd_norm(const SessionConfig& cfg, Dialect d, const std::string& expr, const std::string& kind,
                const SkewOptions& so) {
  QParams qp = cfg.params();
  RadiusSpec rs = cfg.radii();
  switch (d) {
    case Dialect::uq:
    case Dialect::breve: {
      if (kind == "gauss") throw DomainError("--gauss applies to the skew dialect");
      QAlgebra alg(qp, variant_for(d));
      PBWElement x = parse_pbw(expr, alg);
      return with_norm(kind == "nuprime" ? nu_prime_norm(x, rs, qp) : nu_norm(x, rs, qp), qp.p());
    }
    case Dialect::double_: {
      if (kind != "nu") throw DomainError("the double carries only nu");
      QuantumDouble D(qp);
      return with_norm(double_nu_norm(parse_double(expr, D), rs, qp), qp.p());
    }
    case Dialect::slq2: throw DomainError("coordinate elements carry the dual norm; use dualnorm");
    case Dialect::skew: {
      check_base(so);
      if (so.base == "L") {
        auto alg = scalar_skew(qp, so);
        return with_norm(alg.gauss_norm(parse_skew(expr, alg)), qp.p());
      }
      auto alg = laurent_skew(qp, so);
      return with_norm(alg.gauss_norm(parse_skew(expr, alg)), qp.p());
    }
  }
  throw DomainError("unsupported dialect");
}

Output cmd_hopf(const SessionConfig& cfg, Dialect d, const std::string& expr, const std::string& op) {
  cfg.require_hopf();
  QParams qp = cfg.params();
  switch (d) {
    case Dialect::uq:
    case Dialect::breve: {
      QAlgebra alg(qp, variant_for(d));
      PBWElement x = parse_pbw(expr, alg);
      if (op == "delta") {
        auto t = alg.coproduct(x);
        return {tensor_str(t), to_json(t)};
      }
      if (op == "epsilon") return with_scalar(alg.counit(x));
      PBWElement s = alg.antipode(x);
      return {alg.str(s), to_json(s)};
    }
    case Dialect::double_: {
      QuantumDouble D(qp);
      DoubleElement x = parse_double(expr, D);
      if (op == "delta") {
        auto t = D.coproduct(x);
        return {double_tensor_str(t), to_json(t)};
      }
      if (op == "epsilon") return with_scalar(D.counit(x));
      DoubleElement s = D.antipode(x);
      return {D.str(s), to_json(s)};
    }
    case Dialect::slq2: {
      SLq2 sl(qp);
      CoordElement x = parse_coord(expr, sl);
      if (op == "delta") {
        auto t = sl.coproduct(x);
        return {coord_tensor_str(t), to_json(t)};
      }
      if (op == "epsilon") return with_scalar(sl.counit(x));
      CoordElement s = sl.antipode(x);
      return {sl.str(s), to_json(s)};
    }
    case Dialect::skew: throw DomainError("skew series carry no Hopf structure");
  }
  throw DomainError("unsupported dialect");
}

template <class Alg>
Output wdiv_in(const Alg& alg, const std::string& gs, const std::string& fs, const PNorm& floor, long p) {
  auto g = parse_skew(gs, alg);
  auto f = parse_skew(fs, alg);
  auto res = wdivide(alg, g, f, floor);
  std::ostringstream os;
  os << "q = " << alg.str(res.quotient) << "\n"
     << "r = " << alg.str(res.remainder) << "\n"
     << "residual = " << res.residual.str(p) << "\n"
     << "iterations = " << res.iterations;
  Json j = {{"iterations", res.iterations},
            {"quotient", to_json(res.quotient)},
            {"remainder", to_json(res.remainder)},
            {"residual", to_json(res.residual, p)}};
  return {os.str(), j};
}

template <class Alg>
Output wprep_in(const Alg& alg, const std::string& fs, const PNorm& floor, long p) {
  auto f = parse_skew(fs, alg);
  auto res = wprepare(alg, f, floor);
  std::ostringstream os;
  os << "degree = " << res.degree << "\n"
     << "w = " << alg.str(res.w) << "\n"
     << "e' = " << alg.str(res.e_prime) << "\n"
     << "e = " << alg.str(res.e) << "\n"
     << "residual = " << res.residual.str(p);
  Json j = {{"degree", res.degree},
            {"e", to_json(res.e)},
            {"e_prime", to_json(res.e_prime)},
            {"residual", to_json(res.residual, p)},
            {"w", to_json(res.w)}};
  return {os.str(), j};
}

/// Splits a command line on whitespace, honouring double quotes.
std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, have = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && std::isspace(static_cast<unsigned char>(ch))) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += ch;
      have = true;
    }
  }
  if (quoted) throw ParseError("unterminated quote", 1, static_cast<long>(line.size()) + 1);
  if (have) out.push_back(cur);
  return out;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, bool allow_repl);

int repl(const SessionConfig& base_args_cfg, const std::vector<std::string>& global, std::istream& in,
         std::ostream& out, std::ostream& err) {
  (void)base_args_cfg;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> words;
    try {
      words = split_line(line);
    } catch (const ParseError& e) {
      err << e.what() << "\n";
      continue;
    }
    if (words.empty() || words[0].starts_with("#")) continue;
    if (words[0] == "quit" || words[0] == "exit") break;
    std::vector<std::string> full = global;
    full.insert(full.end(), words.begin(), words.end());
    run(full, out, err, false);
  }
  return kOk;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, bool allow_repl) {
  CLI::App app{"Exact p-adic quantum algebra kernel"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<long> opt_p, opt_eE, opt_eF, opt_eK, opt_floor;
  std::optional<std::string> opt_u, opt_output;
  app.add_option("--config", config_path, "Config file (key=value lines or JSON)");
  app.add_option("--p", opt_p, "Odd prime p");
  app.add_option("--u", opt_u, "Square root u of q, as a rational");
  app.add_option("--eE", opt_eE, "R_E = p^eE");
  app.add_option("--eF", opt_eF, "R_F = p^eF");
  app.add_option("--eK", opt_eK, "R_K = p^eK");
  app.add_option("--floor", opt_floor, "Precision floor exponent");
  app.add_option("--output", opt_output, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string dialect_s = "uq", expr, expr2, suite, norm_kind = "nu", engine = "relations";
  SkewOptions so;
  long sweep = -1;
  std::uint64_t seed = 20240611;
  auto add_dialect = [&](CLI::App* c) {
    c->add_option("--dialect", dialect_s, "uq, breve, double, slq2 or skew")
        ->check(CLI::IsMember({"uq", "breve", "double", "slq2", "skew"}));
  };
  auto add_skew = [&](CLI::App* c) {
    c->add_option("--base", so.base, "Coefficient algebra of skew series: L or Uh")
        ->check(CLI::IsMember({"L", "Uh"}));
    c->add_option("--radius", so.radius, "Radius exponent of the skew variable");
    c->add_option("--twist", so.twist, "alpha(K) = q^twist K over Uh");
  };

  auto* normalize = app.add_subcommand("normalize", "Normal form of an expression");
  add_dialect(normalize);
  add_skew(normalize);
  normalize->add_option("expr", expr)->required();

  auto* norm = app.add_subcommand("norm", "nu, nu' or Gauss norm");
  add_dialect(norm);
  add_skew(norm);
  auto* g_nu = norm->add_flag("--nu", "nu_R (default)");
  auto* g_nuprime = norm->add_flag("--nuprime", "nu'_R");
  auto* g_gauss = norm->add_flag("--gauss", "Gauss norm of a skew series");
  g_nu->excludes(g_nuprime)->excludes(g_gauss);
  g_nuprime->excludes(g_gauss);
  norm->add_option("expr", expr)->required();

  auto* nu = app.add_subcommand("nu", "nu_R");
  add_dialect(nu);
  nu->add_option("expr", expr)->required();
  auto* nuprime = app.add_subcommand("nuprime", "nu'_R");
  add_dialect(nuprime);
  nuprime->add_option("expr", expr)->required();

  auto* dualnorm = app.add_subcommand("dualnorm", "Dual norm of an SL_q(2) element");
  dualnorm->add_option("--sweep", sweep, "Also report the truncated supremum up to this bound");
  dualnorm->add_option("expr", expr)->required();

  auto* pair = app.add_subcommand("pair", "<x, y> for x in U_q(sl2), y in SL_q(2)");
  bool borel = false;
  pair->add_flag("--borel", borel, "Pair x in U_q(b+) with y in U_q(b-) instead");
  pair->add_option("x", expr)->required();
  pair->add_option("y", expr2)->required();

  auto* brevepair = app.add_subcommand("brevepair", "<x, y> for x in the breve algebra, y in SL_q(2)");
  brevepair->add_option("x", expr)->required();
  brevepair->add_option("y", expr2)->required();

  auto* delta = app.add_subcommand("delta", "Coproduct");
  auto* epsilon = app.add_subcommand("epsilon", "Counit");
  auto* antipode = app.add_subcommand("antipode", "Antipode");
  for (auto* c : {delta, epsilon, antipode}) {
    add_dialect(c);
    c->add_option("expr", expr)->required();
  }

  auto* wdiv = app.add_subcommand("wdiv", "Weierstrass division g = q f + r");
  add_skew(wdiv);
  wdiv->add_option("g", expr)->required();
  wdiv->add_option("f", expr2)->required();
  auto* wprep = app.add_subcommand("wprep", "Weierstrass preparation");
  add_skew(wprep);
  wprep->add_option("f", expr)->required();

  auto* doublemul = app.add_subcommand("doublemul", "Product in the quantum double");
  doublemul->add_option("--engine", engine, "relations or formula")
      ->check(CLI::IsMember({"relations", "formula"}));
  doublemul->add_option("x", expr)->required();
  doublemul->add_option("y", expr2)->required();

  auto* quotient = app.add_subcommand("quotient", "Image of a double element in U_q(sl2)");
  quotient->add_option("expr", expr)->required();

  auto* check = app.add_subcommand("check", "Run an invariant suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  check->add_option("--seed", seed, "Seed of the random sweeps");

  CLI::App* repl_cmd = nullptr;
  if (allow_repl) repl_cmd = app.add_subcommand("repl", "Read commands from stdin, one per line");

  std::vector<std::string> global;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kParseError;
  }

  SessionConfig cfg;
  try {
    if (!config_path.empty()) load_config_file(cfg, config_path);
    apply_env(cfg, process_env());
    if (opt_p) cfg.p = *opt_p;
    if (opt_u) cfg.u = *opt_u;
    if (opt_eE) cfg.eE = *opt_eE;
    if (opt_eF) cfg.eF = *opt_eF;
    if (opt_eK) cfg.eK = *opt_eK;
    if (opt_floor) cfg.precision_floor_exp = *opt_floor;
    if (opt_output) cfg.output = *opt_output;
    cfg.validate();
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kKernelError;
  }
  bool json = cfg.output == "json";

  if (repl_cmd && repl_cmd->parsed()) {
    // Global options given on the command line apply to every line.
    for (const auto& a : args) {
      if (a == "repl") break;
      global.push_back(a);
    }
    return repl(cfg, global, std::cin, out, err);
  }

  std::string command;
  try {
    Dialect d = parse_dialect(dialect_s);
    QParams qp = cfg.params();
    PNorm floor = PNorm::power(cfg.precision_floor_exp);
    Output res;
    if (normalize->parsed()) {
      command = "normalize";
      res = cmd_normalize(cfg, d, expr, so);
    } else if (norm->parsed()) {
      command = "norm";
      std::string kind = g_nuprime->count() ? "nuprime" : g_gauss->count() ? "gauss" : "nu";
      if (d == Dialect::skew && kind == "nu") kind = "gauss";
      res = cmd_norm(cfg, d, expr, kind, so);
    } else if (nu->parsed()) {
      command = "nu";
      res = cmd_norm(cfg, d, expr, "nu", so);
    } else if (nuprime->parsed()) {
      command = "nuprime";
      res = cmd_norm(cfg, d, expr, "nuprime", so);
    } else if (dualnorm->parsed()) {
      command = "dualnorm";
      SLq2 sl(qp);
      CoordElement y = parse_coord(expr, sl);
      PNorm n = dual_norm(y, cfg.radii(), qp);
      res = with_norm(n, qp.p());
      if (sweep >= 0) {
        PNorm s = dual_norm_sweep(y, cfg.radii(), qp, sweep);
        res.text += "\nsweep(" + std::to_string(sweep) + ") = " + s.str(qp.p());
        res.json = {{"dual_norm", to_json(n, qp.p())}, {"sweep", to_json(s, qp.p())}, {"sweep_bound", sweep}};
      }
    } else if (pair->parsed()) {
      command = "pair";
      if (borel) {
        BorelPairing bp(qp);
        PBWElement x = parse_pbw(expr, bp.A());
        PBWElement y = parse_pbw(expr2, bp.B());
        res = with_scalar(bp.pair(x, y));
      } else {
        QAlgebra U(qp, Variant::standard);
        SLq2 sl(qp);
        res = with_scalar(uq_pairing(parse_pbw(expr, U), parse_coord(expr2, sl), qp));
      }
    } else if (brevepair->parsed()) {
      command = "brevepair";
      QAlgebra B(qp, Variant::breve);
      SLq2 sl(qp);
      res = with_scalar(breve_pairing(parse_pbw(expr, B), parse_coord(expr2, sl), qp));
    } else if (delta->parsed() || epsilon->parsed() || antipode->parsed()) {
      command = delta->parsed() ? "delta" : epsilon->parsed() ? "epsilon" : "antipode";
      res = cmd_hopf(cfg, d, expr, command);
    } else if (wdiv->parsed() || wprep->parsed()) {
      command = wdiv->parsed() ? "wdiv" : "wprep";
      check_base(so);
      if (so.base == "L") {
        auto alg = scalar_skew(qp, so);
        res = wdiv->parsed() ? wdiv_in(alg, expr, expr2, floor, qp.p()) : wprep_in(alg, expr, floor, qp.p());
      } else {
        auto alg = laurent_skew(qp, so);
        res = wdiv->parsed() ? wdiv_in(alg, expr, expr2, floor, qp.p()) : wprep_in(alg, expr, floor, qp.p());
      }
    } else if (doublemul->parsed()) {
      command = "doublemul";
      QuantumDouble D(qp);
      DoubleElement x = parse_double(expr, D), y = parse_double(expr2, D);
      DoubleElement z = engine == "formula" ? D.mul_formula(x, y) : D.mul_relations(x, y);
      res = {D.str(z), to_json(z)};
    } else if (quotient->parsed()) {
      command = "quotient";
      QuantumDouble D(qp);
      PBWElement z = D.quotient(parse_double(expr, D));
      QAlgebra U(qp, Variant::standard);
      res = {U.str(z), to_json(z)};
    } else if (check->parsed()) {
      cfg.require_hopf();
      auto reports = run_suite(suite, qp, cfg.radii(), seed);
      bool ok = true;
      Json jr = Json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed();
        if (!json) out << format_report(r);
        Json checks = Json::array();
        for (const auto& c : r.checks) {
          checks.push_back({{"cases", c.cases},
                            {"detail", c.detail},
                            {"failures", c.failures},
                            {"name", c.name},
                            {"passed", c.passed()}});
        }
        jr.push_back({{"checks", checks}, {"passed", r.passed()}, {"suite", r.suite}});
      }
      if (json) {
        out << Json{{"command", "check"}, {"passed", ok}, {"suites", jr}}.dump(2) << "\n";
      } else {
        out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
      }
      return ok ? kOk : kCheckFailed;
    }
    if (json) {
      out << Json{{"command", command}, {"dialect", dialect_name(d)}, {"result", res.json}}.dump(2) << "\n";
    } else {
      out << res.text << "\n";
    }
    return kOk;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << (command.empty() ? "error" : command) << ": " << e.what() << "\n";
    return kKernelError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr, true);
}
