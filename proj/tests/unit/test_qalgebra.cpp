#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "qhyper/errors.hpp"
#include "qhyper/pbw.hpp"
#include "qhyper/qcombinatorics.hpp"
#include "qhyper/second_construction.hpp"

using namespace qhyper;

namespace {

const QParams kQp = QParams::defaults();

PBWElement word(const QAlgebra& U, const std::string& w) {
  PBWElement x = U.one();
  for (char c : w) {
    PBWElement g = c == 'E' ? U.E() : c == 'F' ? U.F() : c == 'K' ? U.K() : U.K(-1);
    x = U.mul(x, g);
  }
  return x;
}

std::string random_word(std::mt19937_64& rng, long len) {
  static const char letters[] = "EFKk";
  std::string w;
  for (long i = 0; i < len; ++i) w += letters[rng() % 4];
  return w;
}

PBWElement random_element(const QAlgebra& U, std::mt19937_64& rng) {
  PBWElement x = U.zero();
  for (int i = 0; i < 3; ++i) {
    PBWMonomial m{static_cast<long>(rng() % 3), static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 3)};
    x = x + U.monomial(m, PadicScalar(static_cast<long>(rng() % 50) + 1, 1 + static_cast<long>(rng() % 3)));
  }
  return x;
}

}  // namespace

TEST_CASE("defining relations of U_q(sl2)") {
  QAlgebra U(kQp, Variant::standard);
  PBWElement fe = U.mul(U.F(), U.E());
  PBWElement cartan = kQp.inv_q_minus_qinv() * (U.K() - U.K(-1));
  CHECK(fe == U.mul(U.E(), U.F()) - cartan);
  CHECK(U.mul(U.K(), U.K(-1)) == U.one());
  CHECK(U.mul(U.K(), U.E()) == kQp.q_pow(2) * U.mul(U.E(), U.K()));
  CHECK(U.mul(U.K(), U.F()) == kQp.q_pow(-2) * U.mul(U.F(), U.K()));
}

TEST_CASE("normal forms agree with the naive rewriter") {
  for (bool breve : {false, true}) {
    QAlgebra U(kQp, breve ? Variant::breve : Variant::standard);
    CHECK(word(U, "FFEE").terms == oracle::uq_normalize("FFEE", kQp, breve));
    CHECK(word(U, "KKEEkk").terms == oracle::uq_normalize("KKEEkk", kQp, breve));
    std::mt19937_64 rng(breve ? 41 : 43);
    for (int i = 0; i < 150; ++i) {
      std::string w = random_word(rng, 1 + static_cast<long>(rng() % 6));
      CHECK_MESSAGE(word(U, w).terms == oracle::uq_normalize(w, kQp, breve), w);
    }
  }
}

TEST_CASE("breve relations") {
  QAlgebra B(kQp, Variant::breve);
  PBWElement cartan = kQp.inv_q_minus_qinv() * (B.K(2) - B.K(-2));
  CHECK(B.mul(B.F(), B.E()) == B.mul(B.E(), B.F()) - cartan);
  CHECK(B.mul(B.K(), B.E()) == kQp.q() * B.mul(B.E(), B.K()));
  CHECK(word(B, "KKEEkk") == kQp.q_pow(4) * B.monomial({2, 0, 0}));
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(47);
  for (Variant v : {Variant::standard, Variant::breve}) {
    QAlgebra U(kQp, v);
    for (int i = 0; i < 25; ++i) {
      auto x = random_element(U, rng), y = random_element(U, rng), z = random_element(U, rng);
      CHECK(U.mul(U.mul(x, y), z) == U.mul(x, U.mul(y, z)));
    }
  }
}

TEST_CASE("Hopf structure on generators") {
  QAlgebra U(kQp, Variant::standard);
  PBWTensor<2> kk{Variant::standard, {}};
  kk.terms.add({PBWMonomial{0, 1, 0}, PBWMonomial{0, 1, 0}}, PadicScalar(1));
  CHECK(U.coproduct(U.K()) == kk);
  CHECK(U.antipode(U.K()) == U.K(-1));
  CHECK(U.antipode(U.antipode(U.K())) == U.K());
  CHECK(U.antipode(U.F()) == -PadicScalar(1) * U.mul(U.K(), U.F()));
  CHECK(U.antipode(U.E()) == -PadicScalar(1) * U.mul(U.E(), U.K(-1)));
  CHECK(U.counit(U.K()) == PadicScalar(1));
  CHECK(U.counit(U.E()).is_zero());
  PBWElement ef = U.mul(U.E(), U.F());
  CHECK(U.antipode_left_contract(U.coproduct(ef)).is_zero());
  CHECK(U.counit(ef).is_zero());
}

TEST_CASE("coproduct and antipode are (anti)multiplicative") {
  std::mt19937_64 rng(53);
  for (Variant v : {Variant::standard, Variant::breve}) {
    QAlgebra U(kQp, v);
    for (int i = 0; i < 20; ++i) {
      auto x = random_element(U, rng), y = random_element(U, rng);
      CHECK(U.coproduct(U.mul(x, y)) == U.tensor_mul(U.coproduct(x), U.coproduct(y)));
      CHECK(U.antipode(U.mul(x, y)) == U.mul(U.antipode(y), U.antipode(x)));
      CHECK(U.counit(U.mul(x, y)) == U.counit(x) * U.counit(y));
    }
  }
}

TEST_CASE("norms nu and nu'") {
  QAlgebra U(kQp, Variant::standard);
  RadiusSpec rs{2, 3, 0};
  CHECK(nu_norm(U.E(), rs, kQp) == PNorm::power(2));
  CHECK(nu_norm(U.K(7), rs, kQp) == PNorm::one());
  for (long n = 0; n < 12; ++n) {
    PNorm expect = kQp.norm(q_factorial(n, kQp)) * PNorm::power(2 * n);
    CHECK(nu_prime_norm(U.monomial({n, 0, 0}), rs, kQp) == expect);
  }
  CHECK(nu_prime_norm(U.monomial({3, 0, 0}), rs, kQp) == PNorm::power(6));
  std::mt19937_64 rng(59);
  for (int i = 0; i < 40; ++i) {
    auto x = random_element(U, rng);
    CHECK(tensor_nu_norm(U.coproduct(x), rs, kQp) <= nu_norm(x, rs, kQp));
  }
}

TEST_CASE("phi and theta") {
  QAlgebra U(kQp, Variant::standard), B(kQp, Variant::breve);
  CHECK(phi(U.K(), kQp) == B.K(2));
  CHECK(phi(U.E(), kQp) == B.mul(B.E(), B.K()));
  CHECK(phi(U.F(), kQp) == B.mul(B.K(-1), B.F()));
  PBWElement ef = U.mul(U.E(), U.F());
  CHECK(theta_alpha(ef, PadicScalar(7, 3)) == ef);
  CHECK(theta_alpha(U.E(), PadicScalar(7)) == PadicScalar(7) * U.E());

  // The standard relation maps to zero in the breve algebra.
  PBWElement rel = ef - U.mul(U.F(), U.E()) - kQp.inv_q_minus_qinv() * (U.K() - U.K(-1));
  CHECK(rel.is_zero());
  PBWElement lhs = B.mul(phi(U.E(), kQp), phi(U.F(), kQp)) - B.mul(phi(U.F(), kQp), phi(U.E(), kQp));
  CHECK(lhs == phi(kQp.inv_q_minus_qinv() * (U.K() - U.K(-1)), kQp));

  std::mt19937_64 rng(61);
  for (int i = 0; i < 20; ++i) {
    auto x = random_element(U, rng), y = random_element(U, rng);
    CHECK(phi(U.mul(x, y), kQp) == B.mul(phi(x, kQp), phi(y, kQp)));
  }
}

TEST_CASE("second construction") {
  RadiusSpec rs{2, 2, 0};
  SecondConstruction sc(kQp, rs);
  QAlgebra U(kQp, Variant::standard);
  CHECK(sc.to_pbw(sc.mul(sc.E(), sc.F())) == U.mul(U.E(), U.F()));
  CHECK(sc.to_pbw(sc.mul(sc.F(), sc.E())) == U.mul(U.F(), U.E()));
  std::mt19937_64 rng(67);
  for (int i = 0; i < 20; ++i) {
    PBWMonomial a{static_cast<long>(rng() % 3), static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 3)};
    PBWMonomial b{static_cast<long>(rng() % 3), static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 3)};
    auto prod = sc.mul(sc.from_pbw(U.monomial(a)), sc.from_pbw(U.monomial(b)));
    CHECK(sc.to_pbw(prod) == U.mul(U.monomial(a), U.monomial(b)));
  }
  // Neither radius hypothesis holds.
  CHECK_THROWS_AS(SecondConstruction(kQp, RadiusSpec{0, 0, 0}), ConfigError);
}
