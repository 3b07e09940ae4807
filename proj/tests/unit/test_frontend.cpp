#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "qhyper/errors.hpp"
#include "qhyper/expression.hpp"
#include "qhyper/json_io.hpp"
#include "qhyper/session.hpp"

using namespace qhyper;

namespace {

const QParams kQp = QParams::defaults();

PadicScalar random_coeff(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 401) - 200;
  if (num == 0) num = 1;
  return PadicScalar(num, 1 + static_cast<long>(rng() % 30));
}

long small(std::mt19937_64& rng, long lo, long hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); }

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const char* path = std::getenv("QHYPER_CLI_PATH");
  Run r;
  if (!path) return r;
  std::string cmd = std::string(path) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("expression examples") {
  QAlgebra U(kQp, Variant::standard);
  CHECK(parse_pbw("K*E - q^2*E*K", U).is_zero());
  SLq2 sl(kQp);
  CHECK(parse_coord("a*d - q*b*c", sl) == sl.one());
  try {
    parse_expression("(");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_pbw("E^-1", U), ParseError);
  CHECK_THROWS_AS(parse_pbw("E + a", U), ParseError);
  CHECK(parse_pbw("K^(-2)*K^2", U) == U.one());
  CHECK(parse_pbw("(E + F)^2", U) == U.mul(U.E() + U.F(), U.E() + U.F()));
  CHECK(parse_pbw("3/4*E\n - 1/4*E*2", U) == PadicScalar(1, 4) * U.E());
}

TEST_CASE("parse(print(x)) round trip in every dialect") {
  std::mt19937_64 rng(97);
  for (Variant v : {Variant::standard, Variant::breve}) {
    QAlgebra U(kQp, v);
    for (int i = 0; i < 50; ++i) {
      PBWElement x = U.zero();
      for (int k = 0; k < 3; ++k) {
        x = x + U.monomial({small(rng, 0, 3), small(rng, -3, 3), small(rng, 0, 3)}, random_coeff(rng));
      }
      CHECK(parse_pbw(U.str(x), U) == x);
    }
  }
  QuantumDouble D(kQp);
  for (int i = 0; i < 50; ++i) {
    DoubleElement x;
    for (int k = 0; k < 3; ++k) {
      x += D.monomial({small(rng, 0, 3), small(rng, -3, 3), small(rng, -3, 3), small(rng, 0, 3)}, random_coeff(rng));
    }
    CHECK(parse_double(D.str(x), D) == x);
  }
  SLq2 sl(kQp);
  for (int i = 0; i < 50; ++i) {
    CoordElement x;
    for (int k = 0; k < 3; ++k) {
      bool d = rng() % 2;
      x += sl.monomial({d, small(rng, d ? 1 : 0, 3), small(rng, 0, 3), small(rng, 0, 3)}, random_coeff(rng));
    }
    CHECK(parse_coord(sl.str(x), sl) == x);
  }
  SkewAlgebra<ScalarField> lalg(ScalarField(kQp), trivial_scalar_ore(), 0, "z");
  LaurentAlgebra L(kQp, 0);
  SkewAlgebra<LaurentAlgebra> ualg(L, laurent_twist_ore(L, kQp.q_pow(2)), 0, "z");
  for (int i = 0; i < 50; ++i) {
    auto f = lalg.zero();
    auto g = ualg.zero();
    for (int k = 0; k < 3; ++k) {
      long n = small(rng, 0, 4);
      f = lalg.add(f, lalg.monomial(random_coeff(rng), n));
      LaurentPoly c;
      c.add(small(rng, -2, 2), random_coeff(rng));
      c.add(small(rng, -2, 2), random_coeff(rng));
      g = ualg.add(g, ualg.monomial(c, n));
    }
    CHECK(parse_skew(lalg.str(f), lalg) == f);
    CHECK(parse_skew(ualg.str(g), ualg) == g);
  }
}

TEST_CASE("JSON forms are stable and invertible") {
  QAlgebra U(kQp, Variant::standard);
  PBWElement x = parse_pbw("3/5*E^2*K^-1*F - 7*K + 1", U);
  CHECK(to_json(x).dump() == to_json(parse_pbw(U.str(x), U)).dump());
  CHECK(pbw_from_json(to_json(x)) == x);
  QuantumDouble D(kQp);
  DoubleElement y = parse_double("E*K_-^2*F - 2/3*K", D);
  CHECK(double_from_json(to_json(y)) == y);
  SLq2 sl(kQp);
  CoordElement z = parse_coord("a^2*c - 4*d*b", sl);
  CHECK(coord_from_json(to_json(z)) == z);
  CHECK(scalar_from_json(to_json(PadicScalar(-7, 9))) == PadicScalar(-7, 9));
  CHECK(to_json(PNorm::power(3), 5).dump() == R"({"exp":3,"text":"5^3"})");
  CHECK(to_json(Valuation::infinity()).dump() == R"("inf")");
}

TEST_CASE("session configuration precedence") {
  SessionConfig cfg;
  CHECK(cfg.params() == QParams::defaults());
  load_config_text(cfg, "# radii\neE = 4\neF=3\nu = 11\n");
  CHECK(cfg.eE == 4);
  CHECK(cfg.eF == 3);
  CHECK(cfg.params().q() == PadicScalar(121));
  apply_env(cfg, [](const std::string& k) -> std::optional<std::string> {
    if (k == "QHYPER_EE") return "5";
    return std::nullopt;
  });
  CHECK(cfg.eE == 5);
  CHECK(cfg.eF == 3);
  load_config_text(cfg, R"({"p": 7, "u": "8", "output": "json"})");
  CHECK(cfg.params().p() == 7);
  CHECK(cfg.output == "json");
  CHECK_THROWS_AS(load_config_text(cfg, "nonsense = 1"), ConfigError);
  CHECK_THROWS_AS(load_config_text(cfg, "eE = two"), ConfigError);
  SessionConfig bad;
  bad.u = "5";
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  SessionConfig hopf;
  hopf.eK = 1;
  CHECK_THROWS_AS(hopf.require_hopf(), ConfigError);
}

TEST_CASE("command-line examples") {
  if (!std::getenv("QHYPER_CLI_PATH")) {
    MESSAGE("QHYPER_CLI_PATH not set; skipping");
    return;
  }
  auto r = run_cli("norm --nuprime \"E^3\"");
  CHECK(r.status == 0);
  CHECK(r.out == "5^6\n");
  r = run_cli("pair \"E\" \"c\"");
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
  r = run_cli("quotient \"K - K_-\"");
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");
  r = run_cli("normalize \"(\"");
  CHECK(r.status == 2);
  CHECK(r.out.find("1:1") != std::string::npos);
  r = run_cli("normalize \"a*d - q*b*c\" --dialect slq2");
  CHECK(r.out == "1\n");
  r = run_cli("--eK 1 delta E");
  CHECK(r.status == 1);
  r = run_cli("");
  CHECK(r.status == 2);
  auto a = run_cli("--output json delta \"E*F\"");
  auto b = run_cli("--output json delta \"E*F\"");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["command"] == "delta");
}
