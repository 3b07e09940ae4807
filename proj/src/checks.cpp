#include "qhyper/checks.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "qhyper/errors.hpp"
#include "qhyper/qcombinatorics.hpp"
#include "qhyper/quantum_double.hpp"
#include "qhyper/second_construction.hpp"
#include "qhyper/slq2.hpp"
#include "qhyper/weierstrass.hpp"

namespace qhyper {

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return !checks.empty();
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Nonzero scalar with valuation in [vlo, vhi].
PadicScalar random_scalar(Rng& rng, long p, long vlo, long vhi) {
  long num = 0, den = 0;
  do num = uniform(rng, 1, 60); while (num % p == 0);
  do den = uniform(rng, 1, 30); while (den % p == 0);
  if (uniform(rng, 0, 1)) num = -num;
  return PadicScalar(num, den) * PadicScalar(p).pow(uniform(rng, vlo, vhi));
}

PadicScalar random_unit(Rng& rng, long p) { return random_scalar(rng, p, 0, 0); }

/// Records a failure, keeping the first few descriptions.
struct Tally {
  CheckResult r;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::vector<std::string> notes;

  explicit Tally(std::string name) { r.name = std::move(name); }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++r.cases;
    if (ok) return;
    ++r.failures;
    if (notes.size() < 3) notes.push_back(what());
  }
  CheckResult done(std::string summary = "") {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string d = std::move(summary);
    for (const auto& n : notes) d += (d.empty() ? "" : "; ") + n;
    r.detail = d;
    return r;
  }
};

std::vector<PBWMonomial> pbw_monomials(Variant v, long max_deg) {
  std::vector<PBWMonomial> out;
  for (long e = 0; e <= max_deg; ++e) {
    for (long f = 0; e + f <= max_deg; ++f) {
      if (v == Variant::borel_plus && f > 0) continue;
      if (v == Variant::borel_minus && e > 0) continue;
      long rest = max_deg - e - f;
      for (long k = -rest; k <= rest; ++k) out.push_back({e, k, f});
    }
  }
  return out;
}

std::vector<DoubleMonomial> double_monomials(long max_deg) {
  std::vector<DoubleMonomial> out;
  for (long e = 0; e <= max_deg; ++e) {
    for (long f = 0; e + f <= max_deg; ++f) {
      long rest = max_deg - e - f;
      for (long k = -rest; k <= rest; ++k) {
        long rest2 = rest - std::abs(k);
        for (long j = -rest2; j <= rest2; ++j) out.push_back({e, k, j, f});
      }
    }
  }
  return out;
}

std::vector<CoordMonomial> coord_monomials(long max_deg) {
  std::vector<CoordMonomial> out;
  for (long s = 0; s <= max_deg; ++s) {
    for (long r = 0; s + r <= max_deg; ++r) {
      for (long t = 0; s + r + t <= max_deg; ++t) {
        out.push_back({false, s, r, t});
        if (s >= 1) out.push_back({true, s, r, t});
      }
    }
  }
  return out;
}

long double_degree(const DoubleMonomial& m) { return m.nE + std::abs(m.nK) + std::abs(m.nKm) + m.nF; }

using DoubleTensor3 = Linear<std::array<DoubleMonomial, 3>>;

DoubleTensor3 double_coproduct_leg(const QuantumDouble& D, const DoubleTensor& t, bool left) {
  DoubleTensor3 out;
  for (const auto& [k, c] : t) {
    const DoubleMonomial& split = left ? k[0] : k[1];
    for (const auto& [dk, dc] : D.coproduct(D.monomial(split))) {
      if (left) out.add({dk[0], dk[1], k[1]}, c * dc);
      else out.add({k[0], dk[0], dk[1]}, c * dc);
    }
  }
  return out;
}

}  // namespace

CheckResult check_hopf_pbw(const QParams& qp, Variant v, long max_deg) {
  Tally t("hopf " + variant_name(v) + " deg<=" + std::to_string(max_deg));
  QAlgebra alg(qp, v);
  for (const auto& m : pbw_monomials(v, max_deg)) {
    PBWElement x = alg.monomial(m);
    auto d = alg.coproduct(x);
    auto what = [&](const char* law) { return std::string(law) + " fails on " + m.str(); };
    t.expect(alg.coproduct_left(d) == alg.coproduct_right(d), [&] { return what("coassociativity"); });
    t.expect(alg.counit_left(d) == x && alg.counit_right(d) == x, [&] { return what("counit"); });
    PBWElement e = alg.scalar(alg.counit(x));
    t.expect(alg.antipode_left_contract(d) == e && alg.antipode_right_contract(d) == e,
             [&] { return what("antipode"); });
  }
  return t.done();
}

CheckResult check_hopf_double(const QParams& qp, long max_deg) {
  Tally t("hopf double deg<=" + std::to_string(max_deg));
  QuantumDouble D(qp);
  for (const auto& m : double_monomials(max_deg)) {
    DoubleElement x = D.monomial(m);
    DoubleTensor d = D.coproduct(x);
    auto what = [&](const char* law) { return std::string(law) + " fails on " + m.str(); };
    t.expect(double_coproduct_leg(D, d, true) == double_coproduct_leg(D, d, false),
             [&] { return what("coassociativity"); });
    DoubleElement cl, cr, sl, sr;
    for (const auto& [k, c] : d) {
      cl.add(D.monomial(k[1], c * D.counit(D.monomial(k[0]))));
      cr.add(D.monomial(k[0], c * D.counit(D.monomial(k[1]))));
      sl.add(D.mul(D.antipode(D.monomial(k[0])), D.monomial(k[1])), c);
      sr.add(D.mul(D.monomial(k[0]), D.antipode(D.monomial(k[1]))), c);
    }
    t.expect(cl == x && cr == x, [&] { return what("counit"); });
    DoubleElement e = D.scalar(D.counit(x));
    t.expect(sl == e && sr == e, [&] { return what("antipode"); });
  }
  return t.done();
}

CheckResult check_hopf_slq2(const QParams& qp, long max_deg) {
  Tally t("hopf slq2 deg<=" + std::to_string(max_deg));
  SLq2 sl(qp);
  for (const auto& m : coord_monomials(max_deg)) {
    CoordElement x = sl.monomial(m);
    auto d = sl.coproduct(x);
    auto what = [&](const char* law) { return std::string(law) + " fails on " + m.str(); };
    t.expect(sl.coproduct_left(d) == sl.coproduct_right(d), [&] { return what("coassociativity"); });
    t.expect(sl.counit_left(d) == x && sl.counit_right(d) == x, [&] { return what("counit"); });
    CoordElement e = sl.scalar(sl.counit(x));
    t.expect(sl.antipode_left_contract(d) == e && sl.antipode_right_contract(d) == e,
             [&] { return what("antipode"); });
  }
  return t.done();
}

CheckResult check_det_q(const QParams& qp, long max_deg) {
  Tally t("det_q central and group-like");
  Mq2 mq(qp);
  SLq2 sl(qp);
  MqElement det = mq.det_q();
  std::vector<std::string> words = {""};
  for (long len = 1; len <= max_deg; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words) {
      if (static_cast<long>(w.size()) != len - 1) continue;
      for (char g : std::string("abcd")) next.push_back(w + g);
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& w : words) {
    MqElement x = mq.normalize(w);
    t.expect(mq.mul(det, x) == mq.mul(x, det), [&] { return "det_q does not commute with " + w; });
  }
  t.expect(mq.to_slq2(det) == sl.one(), [] { return std::string("det_q != 1 in SL_q(2)"); });
  CoordElement sdet = sl.det_q();
  CoordTensor one2({CoordMonomial{}, CoordMonomial{}}, PadicScalar(1));
  t.expect(sl.coproduct(sdet) == one2, [] { return std::string("Delta(det_q) != 1 (x) 1"); });
  return t.done();
}

CheckResult check_double_engines(const QParams& qp, long max_total) {
  Tally t("double engines agree, deg x + deg y <= " + std::to_string(max_total));
  QuantumDouble D(qp);
  auto ms = double_monomials(max_total);
  for (const auto& x : ms) {
    for (const auto& y : ms) {
      if (double_degree(x) + double_degree(y) > max_total) continue;
      t.expect(D.mul_relations(x, y) == D.mul_formula(D.monomial(x), D.monomial(y)),
               [&] { return "engines differ on " + x.str() + " * " + y.str(); });
    }
  }
  return t.done();
}

CheckResult check_double_relations(const QParams& qp) {
  Tally t("double relations");
  QuantumDouble D(qp);
  auto both = [&](const DoubleElement& a, const DoubleElement& b) {
    return std::pair{D.mul_formula(a, b), D.mul_relations(a, b)};
  };
  auto [fef, ref] = both(D.E(), D.F());
  auto [ffe, rfe] = both(D.F(), D.E());
  DoubleElement rhs = (D.K() - D.Km(-1)).scaled(qp.inv_q_minus_qinv());
  t.expect(fef - ffe == rhs && ref - rfe == rhs, [] { return std::string("EF - FE"); });
  auto [fkk, rkk] = both(D.K(), D.Km());
  auto [fkk2, rkk2] = both(D.Km(), D.K());
  t.expect(fkk == fkk2 && rkk == rkk2, [] { return std::string("K K_- = K_- K"); });
  auto conj = [&](const DoubleElement& g, const DoubleElement& x, const DoubleElement& ginv, bool formula) {
    return formula ? D.mul_formula(D.mul_formula(g, x), ginv) : D.mul_relations(D.mul_relations(g, x), ginv);
  };
  for (bool formula : {true, false}) {
    t.expect(conj(D.Km(), D.E(), D.Km(-1), formula) == D.E().scaled(qp.q_pow(2)),
             [] { return std::string("K_- E K_-^-1 = q^2 E"); });
    t.expect(conj(D.K(), D.F(), D.K(-1), formula) == D.F().scaled(qp.q_pow(-2)),
             [] { return std::string("K F K^-1 = q^-2 F"); });
    t.expect(conj(D.K(), D.E(), D.K(-1), formula) == D.E().scaled(qp.q_pow(2)),
             [] { return std::string("K E K^-1 = q^2 E"); });
    t.expect(conj(D.Km(), D.F(), D.Km(-1), formula) == D.F().scaled(qp.q_pow(-2)),
             [] { return std::string("K_- F K_-^-1 = q^-2 F"); });
  }
  t.expect(D.antipode(D.Km()) == D.Km(-1), [] { return std::string("S(K_-) = K_-^-1"); });
  return t.done();
}

CheckResult check_double_convention(const QParams& qp) {
  Tally t("double convention selection");
  DoubleConvention c = select_convention(qp);
  t.expect(c == kDoubleConvention, [&] { return "search selects " + c.str(); });
  return t.done(kDoubleConvention.str());
}

CheckResult check_quotient(const QParams& qp, long max_deg) {
  Tally t("quotient onto U_q(sl2)");
  QuantumDouble D(qp);
  QAlgebra U(qp, Variant::standard);
  auto ms = double_monomials(max_deg);
  t.expect(D.quotient(D.K() - D.Km()).is_zero(), [] { return std::string("quotient(K - K_-) != 0"); });
  for (const auto& x : ms) {
    PBWElement qx = D.quotient(D.monomial(x));
    for (const auto& y : ms) {
      if (double_degree(x) + double_degree(y) > max_deg) continue;
      t.expect(D.quotient(D.mul(D.monomial(x), D.monomial(y))) == U.mul(qx, D.quotient(D.monomial(y))),
               [&] { return "not multiplicative on " + x.str() + " * " + y.str(); });
    }
    PBWTensor<2> img;
    for (const auto& [k, c] : D.coproduct(D.monomial(x))) {
      PBWElement a = D.quotient(D.monomial(k[0]));
      PBWElement b = D.quotient(D.monomial(k[1]));
      for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) img.terms.add({ma, mb}, c * ca * cb);
      }
    }
    t.expect(img == U.coproduct(qx), [&] { return "Delta not compatible on " + x.str(); });
    t.expect(D.counit(D.monomial(x)) == U.counit(qx), [&] { return "eps not compatible on " + x.str(); });
    t.expect(D.quotient(D.antipode(D.monomial(x))) == U.antipode(qx),
             [&] { return "S not compatible on " + x.str(); });
  }
  return t.done();
}

CheckResult check_second_construction(const QParams& qp, const RadiusSpec& rs, long pairs, std::uint64_t seed) {
  SecondConstruction sc(qp, rs);
  Tally t(std::string("second construction (") + (sc.f_inner() ? "F" : "E") + " inner), " +
          std::to_string(pairs) + " pairs");
  QAlgebra U(qp, Variant::standard);
  Rng rng(seed);
  auto rand_mono = [&] { return PBWMonomial{uniform(rng, 0, 3), uniform(rng, -2, 2), uniform(rng, 0, 3)}; };
  for (long i = 0; i < pairs; ++i) {
    PBWMonomial a = rand_mono(), b = rand_mono();
    PBWElement x = U.monomial(a), y = U.monomial(b);
    t.expect(sc.to_pbw(sc.mul(sc.from_pbw(x), sc.from_pbw(y))) == U.mul(x, y),
             [&] { return "tower product differs on " + a.str() + " * " + b.str(); });
  }
  return t.done();
}

namespace {

// f = unit z^d + lower terms (residue coefficients drawn by low(), of
// valuation >= 0) + a tail of positive valuation up to z^{d + tail}.
template <class Base, class CoeffGen, class LowGen, class UnitGen>
void run_weierstrass(Tally& t, const SkewAlgebra<Base>& alg, long count, long tail, const PNorm& floor, Rng& rng,
                     CoeffGen&& coeff, LowGen&& low, UnitGen&& unit) {
  using Element = typename SkewAlgebra<Base>::Element;
  for (long i = 0; i < count; ++i) {
    long d = uniform(rng, 1, 4);
    Element f = alg.monomial(unit(), d);
    for (long k = 0; k < d; ++k) {
      if (uniform(rng, 0, 2)) f = alg.add(f, alg.monomial(low(), k));
    }
    for (long k = d + 1; k <= d + tail; ++k) {
      if (uniform(rng, 0, 1)) f = alg.add(f, alg.monomial(coeff(1, 3), k));
    }
    Element g = alg.zero();
    for (long k = 0; k <= 7; ++k) {
      if (uniform(rng, 0, 1)) g = alg.add(g, alg.monomial(coeff(-2, 3), k));
    }
    std::string fs = alg.str(f), gs = alg.str(g);
    auto rep = check_regular(alg, f);
    t.expect(rep.is_regular && rep.degree == d, [&] { return "not regular: " + fs; });
    if (!rep.is_regular) continue;
    auto res = wdivide(alg, g, f, floor);
    t.expect(res.residual <= floor, [&] { return "residual above floor for " + gs + " / " + fs; });
    t.expect(res.remainder.degree() < d, [&] { return "remainder degree for " + gs + " / " + fs; });
    t.expect(alg.norm(g) == max(alg.norm(res.quotient), alg.norm(res.remainder)),
             [&] { return "norm equality for " + gs + " / " + fs; });
    auto alt = wdivide_batched(alg, g, f, floor, 2);
    t.expect(alg.norm(alg.sub(alt.quotient, res.quotient)) <= floor &&
                 alg.norm(alg.sub(alt.remainder, res.remainder)) <= floor,
             [&] { return "batchings disagree for " + gs + " / " + fs; });
    auto prep = wprepare(alg, f, floor);
    auto wrep = check_regular(alg, prep.w);
    t.expect(alg.norm(prep.w) == PNorm::one() && wrep.is_regular && wrep.degree == d &&
                 prep.w.degree() == d && prep.residual <= floor,
             [&] { return "preparation of " + fs; });
  }
}

}  // namespace

CheckResult check_weierstrass(const QParams& qp, const std::string& base, long count, long floor_exp,
                              std::uint64_t seed) {
  Tally t("weierstrass over " + base + ", " + std::to_string(count) + " divisors, floor p^" +
          std::to_string(floor_exp));
  Rng rng(seed);
  PNorm floor = PNorm::power(floor_exp);
  long p = qp.p();
  if (base == "L") {
    SkewAlgebra<ScalarField> alg(ScalarField(qp), trivial_scalar_ore(), 0, "z");
    auto coeff = [&](long lo, long hi) { return random_scalar(rng, p, lo, hi); };
    run_weierstrass(
        t, alg, count, 3, floor, rng, coeff, [&] { return coeff(0, 2); }, [&] { return random_unit(rng, p); });
  } else if (base == "Uh") {
    LaurentAlgebra L(qp, 0);
    SkewAlgebra<LaurentAlgebra> alg(L, laurent_twist_ore(L, qp.q_pow(2)), 0, "z");
    // Residue coefficients are Laurent monomials: with several K-powers
    // per coefficient the quotient at p^-40 spans hundreds of K-powers in
    // each of ~100 z-degrees, and a single division takes minutes.
    auto coeff = [&](long lo, long hi) {
      LaurentPoly c;
      long terms = uniform(rng, 1, 2);
      for (long i = 0; i < terms; ++i) c.add(uniform(rng, -2, 2), random_scalar(rng, p, lo, hi));
      if (c.is_zero()) c.add(0, random_scalar(rng, p, lo, hi));
      return c;
    };
    auto low = [&] { return L.monomial(uniform(rng, -2, 2), random_scalar(rng, p, 0, 2)); };
    run_weierstrass(
        t, alg, count, 2, floor, rng, coeff, low, [&] { return L.monomial(uniform(rng, -2, 2), random_unit(rng, p)); });
  } else {
    throw DomainError("unknown base '" + base + "' (expected L or Uh)");
  }
  return t.done();
}

CheckResult check_norm_laws(const QParams& qp, const RadiusSpec& rs, long pairs, std::uint64_t seed) {
  Tally t("norm laws, " + std::to_string(pairs) + " random pairs per algebra");
  Rng rng(seed);
  long p = qp.p();
  auto rand_pbw = [&](const QAlgebra& alg) {
    PBWElement x = alg.zero();
    long terms = uniform(rng, 1, 3);
    for (long i = 0; i < terms; ++i) {
      long e = alg.variant() == Variant::borel_minus ? 0 : uniform(rng, 0, 3);
      long f = alg.variant() == Variant::borel_plus ? 0 : uniform(rng, 0, 3);
      x = x + alg.monomial({e, uniform(rng, -2, 2), f}, random_scalar(rng, p, -2, 2));
    }
    return x;
  };
  for (Variant v : {Variant::borel_plus, Variant::borel_minus, Variant::standard, Variant::breve}) {
    QAlgebra alg(qp, v);
    bool exact = v == Variant::borel_plus || v == Variant::borel_minus;
    for (long i = 0; i < pairs; ++i) {
      PBWElement x = rand_pbw(alg), y = rand_pbw(alg);
      PNorm lhs = nu_norm(alg.mul(x, y), rs, qp), rhs = nu_norm(x, rs, qp) * nu_norm(y, rs, qp);
      t.expect(exact ? lhs == rhs : lhs <= rhs, [&] {
        return (exact ? "not multiplicative on " : "not submultiplicative on ") + variant_name(v) + " " +
               alg.str(x) + " | " + alg.str(y);
      });
    }
  }
  QuantumDouble D(qp);
  for (long i = 0; i < pairs; ++i) {
    auto rand_double = [&] {
      DoubleElement x;
      long terms = uniform(rng, 1, 3);
      for (long k = 0; k < terms; ++k) {
        x.add({uniform(rng, 0, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, 0, 2)},
              random_scalar(rng, p, -2, 2));
      }
      return x;
    };
    DoubleElement x = rand_double(), y = rand_double();
    t.expect(double_nu_norm(D.mul(x, y), rs, qp) == double_nu_norm(x, rs, qp) * double_nu_norm(y, rs, qp),
             [&] { return "double not multiplicative on " + D.str(x) + " | " + D.str(y); });
  }
  LaurentAlgebra L(qp, rs.eK);
  SkewAlgebra<LaurentAlgebra> borel(L, laurent_twist_ore(L, qp.q_pow(2)), rs.eF, "F");
  SkewAlgebra<ScalarField> tate(ScalarField(qp), trivial_scalar_ore(), 1, "x");
  SkewAlgebra<ScalarField> small(ScalarField(qp), trivial_scalar_ore(), -1, "x");
  SecondConstruction sc(qp, rs);
  QAlgebra U(qp, Variant::standard);
  for (long i = 0; i < pairs; ++i) {
    auto rand_skew = [&](const auto& alg, auto&& coeff) {
      auto f = alg.zero();
      long terms = uniform(rng, 1, 3);
      for (long k = 0; k < terms; ++k) f = alg.add(f, alg.monomial(coeff(), uniform(rng, 0, 4)));
      return f;
    };
    auto lcoeff = [&] { return L.monomial(uniform(rng, -2, 2), random_scalar(rng, p, -2, 2)); };
    auto scoeff = [&] { return random_scalar(rng, p, -2, 2); };
    auto f = rand_skew(borel, lcoeff), g = rand_skew(borel, lcoeff);
    t.expect(borel.norm(borel.mul(f, g)) == borel.norm(f) * borel.norm(g),
             [&] { return "Gauss norm not multiplicative over U_q(h): " + borel.str(f) + " | " + borel.str(g); });
    auto a = rand_skew(tate, scoeff), b = rand_skew(tate, scoeff);
    t.expect(tate.norm(tate.mul(a, b)) == tate.norm(a) * tate.norm(b),
             [&] { return "Gauss norm not multiplicative over L: " + tate.str(a) + " | " + tate.str(b); });
    auto c = rand_skew(small, scoeff), d = rand_skew(small, scoeff);
    t.expect(small.norm(small.mul(c, d)) == small.norm(c) * small.norm(d),
             [&] { return "Gauss norm not multiplicative at R < 1: " + small.str(c) + " | " + small.str(d); });
    PBWElement x = rand_pbw(U), y = rand_pbw(U);
    auto sx = sc.from_pbw(x), sy = sc.from_pbw(y);
    t.expect(sc.norm(sc.mul(sx, sy)) <= sc.norm(sx) * sc.norm(sy),
             [&] { return "tower norm not submultiplicative on " + U.str(x) + " | " + U.str(y); });
  }
  return t.done();
}

CheckResult check_hopf_bounds(const QParams& qp, long max_deg) {
  Tally t("Delta, eps, S bounded at R_K = 1, deg<=" + std::to_string(max_deg));
  QuantumDouble D(qp);
  for (long eE = 1; eE <= 3; ++eE) {
    for (long eF = 1; eF <= 3; ++eF) {
      RadiusSpec rs{eE, eF, 0};
      std::string tag = " at eE=" + std::to_string(eE) + " eF=" + std::to_string(eF);
      for (Variant v : {Variant::standard, Variant::breve, Variant::borel_plus, Variant::borel_minus}) {
        QAlgebra alg(qp, v);
        for (const auto& m : pbw_monomials(v, max_deg)) {
          PBWElement x = alg.monomial(m);
          PNorm nx = nu_norm(x, rs, qp);
          t.expect(tensor_nu_norm(alg.coproduct(x), rs, qp) <= nx, [&] { return "Delta " + m.str() + tag; });
          t.expect(qp.norm(alg.counit(x)) <= nx, [&] { return "eps " + m.str() + tag; });
          t.expect(nu_norm(alg.antipode(x), rs, qp) <= nx, [&] { return "S " + m.str() + tag; });
        }
      }
      for (const auto& m : double_monomials(max_deg)) {
        DoubleElement x = D.monomial(m);
        PNorm nx = double_nu_norm(x, rs, qp);
        t.expect(double_tensor_nu_norm(D.coproduct(x), rs, qp) <= nx,
                 [&] { return "double Delta " + m.str() + tag; });
        t.expect(qp.norm(D.counit(x)) <= nx, [&] { return "double eps " + m.str() + tag; });
        t.expect(double_nu_norm(D.antipode(x), rs, qp) <= nx, [&] { return "double S " + m.str() + tag; });
      }
    }
  }
  return t.done();
}

CheckResult check_pairing_bound(const QParams& qp, long max_deg) {
  Tally t("|<a,b>| <= nu(a) nu(b) for R > |1/(q^-1 - q)|");
  BorelPairing pairing(qp);
  long threshold = qp.norm(qp.inv_q_minus_qinv()).exponent();
  for (long e = threshold + 1; e <= threshold + 2; ++e) {
    RadiusSpec rs{e, e, 0};
    for (const auto& a : pbw_monomials(Variant::borel_plus, max_deg)) {
      PBWElement x = pairing.A().monomial(a);
      for (const auto& b : pbw_monomials(Variant::borel_minus, max_deg)) {
        PBWElement y = pairing.B().monomial(b);
        PNorm v = qp.norm(pairing.pair(a, b));
        t.expect(v <= nu_norm(x, rs, qp) * nu_norm(y, rs, qp), [&] {
          return "<" + a.str() + ", " + b.str() + "> at radius exponent " + std::to_string(e);
        });
      }
    }
  }
  return t.done();
}

CheckResult check_gamma_unit(const std::vector<long>& primes, long max_index) {
  Tally t("|gamma| = 1, indices in [0," + std::to_string(max_index) + "]");
  long first = -1;
  for (long p : primes) {
    QParams qp(p, PadicScalar(1 + p));
    for (long s = 0; s <= max_index; ++s)
      for (long r = 0; r <= max_index; ++r)
        for (long tt = 0; tt <= max_index; ++tt)
          for (long m = 0; m <= max_index; ++m)
            for (long n = 0; n <= max_index; ++n)
              for (long l = 0; l <= max_index; ++l) {
                bool ok = qp.norm(gamma_constant(s, r, tt, m, n, l, qp)) == PNorm::one();
                if (!ok && first < 0) first = p;
                t.expect(ok, [&] {
                  return "p=" + std::to_string(p) + " s,r,t,m,n,l=" + std::to_string(s) + "," + std::to_string(r) +
                         "," + std::to_string(tt) + "," + std::to_string(m) + "," + std::to_string(n) + "," +
                         std::to_string(l) + " gives |gamma| = " +
                         qp.norm(gamma_constant(s, r, tt, m, n, l, qp)).str(p);
                });
              }
  }
  return t.done();
}

CheckResult check_gamma_norm_identity(const std::vector<long>& primes, long max_index) {
  Tally t("|gamma| = |[n]!| |[l]!|, indices in [0," + std::to_string(max_index) + "]");
  for (long p : primes) {
    QParams qp(p, PadicScalar(1 + p));
    std::vector<PNorm> fact;
    for (long n = 0; n <= max_index; ++n) fact.push_back(qp.norm(q_factorial(n, qp)));
    for (long s = 0; s <= max_index; ++s)
      for (long r = 0; r <= max_index; ++r)
        for (long tt = 0; tt <= max_index; ++tt)
          for (long m = 0; m <= max_index; ++m)
            for (long n = 0; n <= max_index; ++n)
              for (long l = 0; l <= max_index; ++l) {
                t.expect(qp.norm(gamma_constant(s, r, tt, m, n, l, qp)) == fact[n] * fact[l], [&] {
                  return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " l=" + std::to_string(l);
                });
              }
  }
  return t.done();
}

CheckResult check_pairing_norms(const QParams& qp, long max_index) {
  Tally t("|<K^m E^n F^l, a^s c^r b^t>| = d_rn d_tl |[n]!||[l]!|, indices <= " + std::to_string(max_index));
  std::vector<PNorm> fact;
  for (long n = 0; n <= max_index; ++n) fact.push_back(qp.norm(q_factorial(n, qp)));
  for (long m = -max_index; m <= max_index; ++m)
    for (long n = 0; n <= max_index; ++n)
      for (long l = 0; l <= max_index; ++l)
        for (long s = 0; s <= max_index; ++s)
          for (long r = 0; r <= max_index; ++r)
            for (long tt = 0; tt <= max_index; ++tt) {
              PNorm got = qp.norm(uq_pairing_kef(m, n, l, {false, s, r, tt}, qp));
              PNorm want = (r == n && tt == l) ? fact[n] * fact[l] : PNorm::zero();
              t.expect(got == want, [&] {
                return "m,n,l=" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(l) +
                       " s,r,t=" + std::to_string(s) + "," + std::to_string(r) + "," + std::to_string(tt);
              });
            }
  return t.done();
}

CheckResult check_dual_norms(const QParams& qp, const RadiusSpec& rs, long max_rt, long sweep_bound) {
  Tally t("dual norms R_E^-r R_F^-t for r,t <= " + std::to_string(max_rt) + ", sweep bound " +
          std::to_string(sweep_bound));
  for (long s = 0; s <= 3; ++s) {
    for (long r = 0; r <= max_rt; ++r) {
      for (long tt = 0; tt <= max_rt; ++tt) {
        for (bool d : {false, true}) {
          if (d && s == 0) continue;
          CoordMonomial m{d, s, r, tt};
          CoordElement y(m, PadicScalar(1));
          PNorm closed = PNorm::power(-rs.eE * r - rs.eF * tt);
          t.expect(dual_norm(y, rs, qp) == closed, [&] { return "closed form on " + m.str(); });
          t.expect(dual_norm_sweep(y, rs, qp, sweep_bound) == closed, [&] { return "sweep on " + m.str(); });
        }
      }
    }
  }
  return t.done();
}

CheckResult check_duality_axioms(const QParams& qp, long max_deg) {
  Tally t("Hopf pairing laws, deg <= " + std::to_string(max_deg));
  SLq2 sl(qp);
  const std::string gens = "abcd";
  for (Variant v : {Variant::standard, Variant::breve}) {
    QAlgebra alg(qp, v);
    auto pair = [&](const PBWElement& x, const CoordElement& y) {
      return v == Variant::breve ? breve_pairing(x, y, qp) : uq_pairing(x, y, qp);
    };
    std::vector<PBWElement> xs;
    for (const auto& m : pbw_monomials(v, max_deg)) xs.push_back(alg.monomial(m));
    std::vector<PBWElement> simple = {alg.E(), alg.F(), alg.K(), alg.K(-1)};
    for (const auto& x : xs) {
      auto dx = alg.coproduct(x);
      for (char g1 : gens) {
        for (char g2 : gens) {
          CoordElement y1 = sl.gen(g1), y2 = sl.gen(g2);
          PadicScalar rhs;
          for (const auto& [k, c] : dx.terms) rhs += c * pair(alg.monomial(k[0]), y1) * pair(alg.monomial(k[1]), y2);
          t.expect(pair(x, sl.mul(y1, y2)) == rhs, [&] {
            return variant_name(v) + " <x, y y'> on " + alg.str(x) + ", " + g1 + g2;
          });
        }
      }
      t.expect(pair(x, sl.one()) == alg.counit(x), [&] { return variant_name(v) + " <x, 1> on " + alg.str(x); });
    }
    for (const auto& m : coord_monomials(max_deg)) {
      CoordElement y = sl.monomial(m);
      auto dy = sl.coproduct(y);
      for (const auto& x1 : simple) {
        for (const auto& x2 : simple) {
          PadicScalar rhs;
          for (const auto& [k, c] : dy) rhs += c * pair(x1, sl.monomial(k[0])) * pair(x2, sl.monomial(k[1]));
          t.expect(pair(alg.mul(x1, x2), y) == rhs, [&] {
            return variant_name(v) + " <x x', y> on " + alg.str(x1) + ", " + alg.str(x2) + ", " + m.str();
          });
        }
      }
      t.expect(pair(alg.one(), y) == sl.counit(y), [&] { return variant_name(v) + " <1, y> on " + m.str(); });
    }
  }
  return t.done();
}

CheckResult check_gram_rank(const QParams& qp, long deg) {
  Tally t("Gram matrix rank, degree <= " + std::to_string(deg));
  GramReport g = pairing_gram_rank(deg, qp);
  t.expect(g.rank == std::min(g.rows, g.cols), [&] {
    return "rank " + std::to_string(g.rank) + " of " + std::to_string(g.rows) + "x" + std::to_string(g.cols);
  });
  return t.done(std::to_string(g.rows) + "x" + std::to_string(g.cols) + " rank " + std::to_string(g.rank) +
                " mod " + std::to_string(g.modulus));
}

namespace {

long legendre(long n, long p) {
  long v = 0;
  for (long pk = p; pk <= n; pk *= p) v += n / pk;
  return v;
}

}  // namespace

CheckResult check_factorial(const std::vector<long>& primes, long max_n) {
  Tally t("v_p([n]_q!) = v_p(n!) for n <= " + std::to_string(max_n));
  for (long p : primes) {
    QParams qp(p, PadicScalar(1 + p));
    PadicScalar fact(1);
    for (long n = 0; n <= max_n; ++n) {
      if (n > 0) fact *= q_integer(n, qp);
      long v = qp.val(fact).value();
      t.expect(v == legendre(n, p), [&] {
        return "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": " + std::to_string(v) + " vs " +
               std::to_string(legendre(n, p));
      });
      t.expect(v * (p - 1) <= n, [&] { return "bound fails at p=" + std::to_string(p) + " n=" + std::to_string(n); });
    }
  }
  return t.done();
}

CheckResult check_pochhammer_identity(const QParams& qp, long max_m) {
  Tally t("(q^2;q^2)_m identity, m <= " + std::to_string(max_m));
  PadicScalar q2 = qp.q_pow(2);
  for (long m = 0; m <= max_m; ++m) {
    PadicScalar rhs = q_factorial(m, qp) * (PadicScalar(1) - q2).pow(m) * qp.half_pow(m * (m - 1));
    t.expect(q_pochhammer(q2, q2, m) == rhs, [&] { return "m=" + std::to_string(m); });
  }
  return t.done();
}

CheckResult check_graded(const QParams& qp, const RadiusSpec& rs, long max_deg) {
  Tally t("nu(xy - yx) < nu(x) nu(y) on double monomials of degree <= " + std::to_string(max_deg));
  QuantumDouble D(qp);
  auto ms = double_monomials(max_deg);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      auto g = graded_commutativity_defect(D, D.monomial(ms[i]), D.monomial(ms[j]), rs);
      t.expect(g.strict, [&] { return ms[i].str() + " , " + ms[j].str(); });
    }
  }
  return t.done();
}

CheckResult check_routes(const QParams& qp, long max_deg) {
  Tally t("uq pairing equals the phi/theta breve route, deg <= " + std::to_string(max_deg));
  QAlgebra U(qp, Variant::standard);
  SLq2 sl(qp);
  std::vector<PBWElement> xs = {U.one(), U.E(), U.F(), U.K(), U.K(-1)};
  for (const auto& m : pbw_monomials(Variant::standard, max_deg)) xs.push_back(U.monomial(m));
  std::vector<CoordElement> ys = {sl.one(), sl.gen('a'), sl.gen('b'), sl.gen('c'), sl.gen('d')};
  for (const auto& m : coord_monomials(max_deg)) ys.push_back(sl.monomial(m));
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      t.expect(uq_pairing(x, y, qp) == uq_pairing_via_breve(x, y, qp),
               [&] { return "<" + U.str(x) + ", " + sl.str(y) + ">"; });
    }
  }
  return t.done();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hopf",   "double",  "second",    "weierstrass", "norms",
                                                 "bounded", "duality", "factorial", "graded",      "routes"};
  return names;
}

namespace {

bool sc_f_inner(const QParams& qp, const RadiusSpec& rs) { return SecondConstruction(qp, rs).f_inner(); }

SuiteReport run_one(const std::string& name, const QParams& qp, const RadiusSpec& rs, std::uint64_t seed) {
  SuiteReport r{name, {}};
  auto& c = r.checks;
  const std::vector<long> primes = {3, 5, 7};
  if (name == "hopf") {
    for (Variant v : {Variant::standard, Variant::breve, Variant::borel_plus, Variant::borel_minus}) {
      c.push_back(check_hopf_pbw(qp, v, 4));
    }
    c.push_back(check_hopf_double(qp, 4));
    c.push_back(check_hopf_slq2(qp, 4));
    c.push_back(check_det_q(qp, 4));
  } else if (name == "double") {
    c.push_back(check_double_convention(qp));
    c.push_back(check_double_relations(qp));
    c.push_back(check_double_engines(qp, 5));
    c.push_back(check_quotient(qp, 3));
  } else if (name == "second") {
    c.push_back(check_second_construction(qp, rs, 200, seed));
    // The other tower needs |1/(q - q^{-1})| R_K > R_F and <= R_E.
    long i = qp.norm(qp.inv_q_minus_qinv()).exponent() + rs.eK;
    RadiusSpec other = sc_f_inner(qp, rs) ? RadiusSpec{std::max(rs.eE, i), i - 1, rs.eK}
                                          : RadiusSpec{rs.eE, std::max(rs.eF, i), rs.eK};
    c.push_back(check_second_construction(qp, other, 200, seed + 1));
  } else if (name == "weierstrass") {
    c.push_back(check_weierstrass(qp, "L", 100, -40, seed));
    c.push_back(check_weierstrass(qp, "Uh", 100, -40, seed + 1));
  } else if (name == "norms") {
    c.push_back(check_norm_laws(qp, rs, 500, seed));
  } else if (name == "bounded") {
    c.push_back(check_hopf_bounds(qp, 4));
    c.push_back(check_pairing_bound(qp, 4));
  } else if (name == "duality") {
    c.push_back(check_gamma_norm_identity(primes, 6));
    c.push_back(check_pairing_norms(qp, 8));
    c.push_back(check_dual_norms(qp, rs, 10, 12));
    c.push_back(check_duality_axioms(qp, 3));
    c.push_back(check_gram_rank(qp, 6));
  } else if (name == "factorial") {
    c.push_back(check_factorial(primes, 100));
    c.push_back(check_pochhammer_identity(qp, 10));
  } else if (name == "graded") {
    c.push_back(check_graded(qp, rs, 4));
  } else if (name == "routes") {
    c.push_back(check_routes(qp, 3));
  } else {
    throw DomainError("unknown check suite '" + name + "'");
  }
  return r;
}

}  // namespace

std::vector<SuiteReport> run_suite(const std::string& name, const QParams& qp, const RadiusSpec& rs,
                                   std::uint64_t seed) {
  if (name != "all") return {run_one(name, qp, rs, seed)};
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& n : suite_names()) {
    jobs.push_back(std::async(std::launch::async, [&, n] { return run_one(n, qp, rs, seed); }));
  }
  std::vector<SuiteReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.passed() ? "PASS" : "FAIL") << "  " << r.suite << ": " << c.name << "  [" << c.cases << " cases, "
       << c.failures << " failures, " << std::fixed;
    os.precision(2);
    os << c.seconds << "s]";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace qhyper
