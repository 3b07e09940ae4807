#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "qhyper/errors.hpp"
#include "qhyper/skew_series.hpp"
#include "qhyper/weierstrass.hpp"

using namespace qhyper;

namespace {

const QParams kQp = QParams::defaults();

using LSeries = SkewSeries<PadicScalar>;
using USeries = SkewSeries<LaurentPoly>;

SkewAlgebra<ScalarField> scalar_alg(long e = 0) {
  return SkewAlgebra<ScalarField>(ScalarField(kQp), trivial_scalar_ore(), e, "z");
}

SkewAlgebra<LaurentAlgebra> twisted_alg(long e = 0) {
  LaurentAlgebra L(kQp, 0);
  return SkewAlgebra<LaurentAlgebra>(L, laurent_twist_ore(L, kQp.q_pow(2)), e, "z");
}

// alpha(K) = q^2 K with the inner derivation delta(a) = a - alpha(a).
SkewAlgebra<LaurentAlgebra> derivation_alg() {
  LaurentAlgebra L(kQp, 0);
  auto ore = laurent_twist_ore(L, kQp.q_pow(2));
  auto alpha = ore.alpha;
  ore.delta = [alpha](const LaurentPoly& a) { return a - alpha(a); };
  return SkewAlgebra<LaurentAlgebra>(L, ore, 0, "z");
}

PadicScalar random_scalar(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> v(lo, hi), unit(1, 124);
  long u = unit(rng);
  if (u % 5 == 0) u += 1;
  return PadicScalar(u) * PadicScalar(5).pow(v(rng));
}

LSeries random_series(const SkewAlgebra<ScalarField>& alg, std::mt19937_64& rng, long deg, long lo) {
  LSeries f = alg.zero();
  for (long n = 0; n <= deg; ++n) {
    if (rng() % 3 == 0) continue;
    f = alg.add(f, alg.monomial(random_scalar(rng, lo, lo + 3), n));
  }
  return f;
}

USeries random_useries(const SkewAlgebra<LaurentAlgebra>& alg, std::mt19937_64& rng, long deg, long lo) {
  USeries f = alg.zero();
  for (long n = 0; n <= deg; ++n) {
    LaurentPoly c;
    for (long k = -2; k <= 2; ++k) {
      if (rng() % 2) c.add(k, random_scalar(rng, lo, lo + 3));
    }
    f = alg.add(f, alg.monomial(c, n));
  }
  return f;
}

}  // namespace

TEST_CASE("one-step commutation rule") {
  auto alg = derivation_alg();
  const auto& base = alg.base();
  LaurentPoly a = base.add(base.monomial(1, 3), base.monomial(-2, PadicScalar(1, 7)));
  auto x = alg.variable();
  auto xa = alg.mul(x, alg.constant(a));
  auto expect = alg.add(alg.monomial(alg.alpha(a), 1), alg.constant(alg.delta(a)));
  CHECK(xa == expect);

  auto x2a = alg.mul(alg.mul(x, x), alg.constant(a));
  CHECK(x2a.coeffs.at(2) == alg.alpha(alg.alpha(a)));
  CHECK(x2a.coeffs.at(1) == base.add(alg.alpha(alg.delta(a)), alg.delta(alg.alpha(a))));
  CHECK(x2a.coeffs.at(0) == alg.delta(alg.delta(a)));

  auto f = alg.add(alg.monomial(a, 2), alg.variable());
  CHECK(alg.mul(f, alg.one()) == f);
  CHECK(alg.mul(alg.one(), f) == f);
  CHECK(alg.check_ore_data({a, base.monomial(3, 2), base.one()}));
}

TEST_CASE("product is associative with a derivation") {
  auto alg = derivation_alg();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto f = random_useries(alg, rng, 2, 0), g = random_useries(alg, rng, 2, 0), h = random_useries(alg, rng, 1, 0);
    CHECK(alg.mul(alg.mul(f, g), h) == alg.mul(f, alg.mul(g, h)));
  }
}

TEST_CASE("Gauss norms") {
  auto alg = scalar_alg(1);
  CHECK(alg.gauss_norm(alg.variable()) == PNorm::power(1));
  CHECK(alg.gauss_norm(alg.monomial(PadicScalar(5), 2)) == PNorm::power(1));
  CHECK(alg.gauss_norm(alg.zero()).is_zero());
}

TEST_CASE("Gauss norm is multiplicative for isometric alpha") {
  std::mt19937_64 rng(5);
  auto alg = scalar_alg(2);
  for (int i = 0; i < 100; ++i) {
    auto f = random_series(alg, rng, 4, -2), g = random_series(alg, rng, 4, -2);
    CHECK(alg.norm(alg.mul(f, g)) == alg.norm(f) * alg.norm(g));
  }
  auto ualg = twisted_alg(1);
  for (int i = 0; i < 40; ++i) {
    auto f = random_useries(ualg, rng, 3, -1), g = random_useries(ualg, rng, 3, -1);
    CHECK(ualg.norm(ualg.mul(f, g)) == ualg.norm(f) * ualg.norm(g));
  }
  auto dalg = derivation_alg();
  for (int i = 0; i < 40; ++i) {
    auto f = random_useries(dalg, rng, 2, 0), g = random_useries(dalg, rng, 2, 0);
    CHECK(dalg.norm(dalg.mul(f, g)) <= dalg.norm(f) * dalg.norm(g));
  }
}

TEST_CASE("rescaling") {
  auto alg = scalar_alg(-1);
  PadicScalar p(5);
  auto x = alg.variable();
  auto z = alg.rescale(x, p);
  CHECK(z.radius_exp == 0);
  CHECK(z.coeffs.at(1) == p);
  CHECK(alg.substituted(p).norm(z) == alg.norm(x));
  CHECK(alg.rescale(alg.one(), p) == alg.substituted(p).one());
  CHECK_THROWS_AS(alg.rescale(x, PadicScalar(25)), DomainError);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    auto f = random_series(alg, rng, 4, 0);
    auto g = alg.rescale(f, p);
    CHECK(alg.substituted(p).norm(g) == alg.norm(f));
    CHECK(alg.substituted(p).substitute(g, PadicScalar(1) / p) == f);
  }
}

TEST_CASE("residue reduction") {
  auto alg = scalar_alg();
  auto f = alg.add(alg.variable(), alg.constant(PadicScalar(5)));
  CHECK(alg.residue_reduce(f) == alg.variable());
  CHECK(alg.residue_reduce(alg.one()) == alg.one());
  CHECK_THROWS_AS(alg.residue(alg.constant(PadicScalar(1, 5))), DomainError);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    auto g = alg.add(random_series(alg, rng, 3, 0), alg.one());
    auto h = alg.add(random_series(alg, rng, 3, 0), alg.variable());
    if (alg.norm(g) != PNorm::one() || alg.norm(h) != PNorm::one()) continue;
    auto lhs = alg.residue(alg.mul(g, h));
    auto rhs = alg.residue(alg.mul(alg.residue(g), alg.residue(h)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("regularity") {
  auto alg = scalar_alg();
  auto rep = check_regular(alg, alg.monomial(PadicScalar(1), 3));
  CHECK(rep.is_regular);
  CHECK(rep.degree == 3);
  CHECK(*rep.lambda == PadicScalar(1));
  CHECK(rep.D->is_zero());

  CHECK_FALSE(check_regular(alg, alg.monomial(PadicScalar(5), 1)).is_regular);

  PadicScalar c(10);
  auto f = alg.sub(alg.variable(), alg.constant(c));
  rep = check_regular(alg, f);
  CHECK(rep.is_regular);
  CHECK(rep.degree == 1);
  CHECK(*rep.D == alg.constant(c));
}

TEST_CASE("division by a monomial is a shift") {
  auto alg = scalar_alg();
  std::mt19937_64 rng(17);
  for (long d = 1; d <= 3; ++d) {
    auto g = random_series(alg, rng, 6, 0);
    auto res = wdivide(alg, g, alg.monomial(PadicScalar(1), d), PNorm::power(-40));
    LSeries q = alg.zero(), r = alg.zero();
    for (const auto& [n, c] : g.coeffs) {
      if (n >= d) q.coeffs.emplace(n - d, c);
      else r.coeffs.emplace(n, c);
    }
    CHECK(res.quotient == q);
    CHECK(res.remainder == r);
    CHECK(res.residual.is_zero());
  }
}

TEST_CASE("division by z - c") {
  auto alg = scalar_alg();
  PadicScalar c(15, 7);
  auto f = alg.sub(alg.variable(), alg.constant(c));
  PNorm floor = PNorm::power(-40);
  auto res = wdivide(alg, alg.monomial(PadicScalar(1), 2), f, floor);
  // c has no finite 5-adic expansion, so agreement is up to the floor.
  CHECK(alg.norm(alg.sub(res.quotient, alg.add(alg.variable(), alg.constant(c)))) <= floor);
  CHECK(alg.norm(alg.sub(res.remainder, alg.constant(c * c))) <= floor);
}

TEST_CASE("division agrees with Euclidean division for distinguished polynomials") {
  auto alg = scalar_alg();
  std::mt19937_64 rng(19);
  PNorm floor = PNorm::power(-40);
  for (int i = 0; i < 40; ++i) {
    long d = 1 + static_cast<long>(rng() % 4);
    oracle::Poly f, g;
    f[d] = random_scalar(rng, 0, 0);
    for (long k = 0; k < d; ++k) f[k] = random_scalar(rng, 1, 3);
    for (long k = 0; k <= 7; ++k) g[k] = random_scalar(rng, -1, 2);
    auto [q, r] = oracle::long_divide(g, f);

    auto to_series = [&](const oracle::Poly& p) {
      LSeries s = alg.zero();
      for (const auto& [k, v] : p) {
        if (!v.is_zero()) s.coeffs.emplace(k, v);
      }
      return s;
    };
    auto res = wdivide(alg, to_series(g), to_series(f), floor);
    CHECK(alg.norm(alg.sub(res.quotient, to_series(q))) <= floor);
    CHECK(alg.norm(alg.sub(res.remainder, to_series(r))) <= floor);
    CHECK(res.remainder.degree() < d);
  }
}

TEST_CASE("division over U_q(h)") {
  auto alg = twisted_alg();
  const auto& base = alg.base();
  auto f = alg.sub(alg.variable(), alg.constant(base.monomial(1, 5)));
  auto g = alg.monomial(base.one(), 2);
  PNorm floor = PNorm::power(-20);
  auto res = wdivide(alg, g, f, floor);
  CHECK(res.residual <= floor);
  CHECK(res.remainder.degree() < 1);
  CHECK(alg.norm(g) == max(alg.norm(res.quotient), alg.norm(res.remainder)));
  // Exact residual from an unrounded product.
  auto exact = alg.sub(alg.sub(g, alg.mul(res.quotient, f)), res.remainder);
  CHECK(alg.norm(exact) <= floor);
}

TEST_CASE("guarded residual against the exact residual") {
  std::mt19937_64 rng(23);
  auto alg = twisted_alg();
  for (int i = 0; i < 30; ++i) {
    auto f = alg.add(alg.monomial(alg.base().one(), 1 + static_cast<long>(rng() % 2)),
                     random_useries(alg, rng, 1, 1));
    auto g = random_useries(alg, rng, 3, 0);
    // A coarse division leaves residuals on both sides of the floor.
    PNorm coarse = PNorm::power(-2 - static_cast<long>(rng() % 4));
    auto res = wdivide(alg, g, f, coarse);
    for (long e : {-1L, -3L, -6L}) {
      PNorm floor = PNorm::power(e);
      PNorm exact = alg.norm(alg.sub(alg.sub(g, alg.mul(res.quotient, f)), res.remainder));
      PNorm guarded = residual_norm(alg, g, res.quotient, f, res.remainder, floor);
      CHECK((guarded <= floor) == (exact <= floor));
      if (guarded > floor) CHECK(guarded == exact);
    }
  }
}

TEST_CASE("division is unique") {
  std::mt19937_64 rng(29);
  auto alg = twisted_alg();
  PNorm floor = PNorm::power(-30);
  for (int i = 0; i < 10; ++i) {
    auto f = alg.add(alg.monomial(alg.base().monomial(static_cast<long>(rng() % 3) - 1), 2),
                     random_useries(alg, rng, 3, 1));
    auto g = random_useries(alg, rng, 4, 0);
    auto a = wdivide(alg, g, f, floor);
    auto b = wdivide_batched(alg, g, f, floor, 3);
    CHECK(alg.norm(alg.sub(a.quotient, b.quotient)) <= floor);
    CHECK(alg.norm(alg.sub(a.remainder, b.remainder)) <= floor);
    auto bumped = alg.add(a.remainder, alg.monomial(alg.base().monomial(0, PadicScalar(125)), 1));
    CHECK(residual_norm(alg, g, a.quotient, f, bumped, floor) > floor);
  }
}

TEST_CASE("division rejects non-regular divisors") {
  auto alg = scalar_alg();
  CHECK_THROWS_AS(wdivide(alg, alg.one(), alg.monomial(PadicScalar(5), 1), PNorm::power(-10)), DomainError);
}

TEST_CASE("preparation") {
  auto alg = scalar_alg();
  PNorm floor = PNorm::power(-40);
  auto z3 = alg.monomial(PadicScalar(1), 3);
  auto prep = wprepare(alg, z3, floor);
  CHECK(prep.w == z3);
  CHECK(prep.e == alg.one());

  PadicScalar u(7, 3);
  prep = wprepare(alg, alg.monomial(u, 1), floor);
  CHECK(prep.w == alg.variable());
  CHECK(alg.norm(alg.sub(prep.e, alg.constant(u))) <= floor);

  PadicScalar c(10, 3);
  auto f = alg.sub(alg.variable(), alg.constant(c));
  prep = wprepare(alg, f, floor);
  auto r1 = wdivide(alg, alg.variable(), f, floor).remainder;
  CHECK(prep.w == alg.sub(alg.variable(), r1));
  CHECK(alg.norm(prep.w) == PNorm::one());
  CHECK(check_regular(alg, prep.w).degree == 1);
  CHECK(alg.norm(alg.sub(prep.w, alg.mul(prep.e_prime, f))) <= floor);
  CHECK(prep.residual <= floor);
}

TEST_CASE("preparation over U_q(h)") {
  std::mt19937_64 rng(31);
  auto alg = twisted_alg();
  PNorm floor = PNorm::power(-25);
  for (int i = 0; i < 5; ++i) {
    auto f = alg.add(alg.monomial(alg.base().monomial(1), 2), random_useries(alg, rng, 3, 1));
    auto prep = wprepare(alg, f, floor);
    CHECK(prep.degree == 2);
    CHECK(prep.residual <= floor);
    CHECK(check_regular(alg, prep.w).degree == 2);
    CHECK(alg.unit_inverse(alg.residue(prep.e)).has_value());
  }
}
