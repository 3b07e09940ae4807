#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "qhyper/qcombinatorics.hpp"
#include "qhyper/slq2.hpp"

using namespace qhyper;

namespace {

const QParams kQp = QParams::defaults();

std::string random_word(std::mt19937_64& rng, long len) {
  std::string w;
  for (long i = 0; i < len; ++i) w += static_cast<char>('a' + rng() % 4);
  return w;
}

}  // namespace

TEST_CASE("coordinate relations") {
  SLq2 sl(kQp);
  CoordElement bc = sl.monomial({false, 0, 1, 1});
  CHECK(sl.normalize("ba") == sl.monomial({false, 1, 0, 1}, kQp.q_inv()));
  CHECK(sl.normalize("ad") == sl.one() + bc.scaled(kQp.q()));
  CHECK(sl.normalize("da") == sl.one() + bc.scaled(kQp.q_inv()));
  CHECK(sl.det_q() == sl.one());
}

TEST_CASE("coordinate normal forms agree with the naive rewriter") {
  SLq2 sl(kQp);
  std::mt19937_64 rng(79);
  for (int i = 0; i < 200; ++i) {
    std::string w = random_word(rng, 1 + static_cast<long>(rng() % 6));
    CHECK_MESSAGE(sl.normalize(w) == oracle::coord_normalize(w, kQp), w);
  }
}

TEST_CASE("coordinate product is associative and normalize idempotent") {
  SLq2 sl(kQp);
  std::mt19937_64 rng(83);
  for (int i = 0; i < 40; ++i) {
    std::string u = random_word(rng, 2), v = random_word(rng, 2), w = random_word(rng, 2);
    auto x = sl.normalize(u), y = sl.normalize(v), z = sl.normalize(w);
    CHECK(sl.mul(sl.mul(x, y), z) == sl.mul(x, sl.mul(y, z)));
    CHECK(sl.mul(sl.mul(x, y), z) == sl.normalize(u + v + w));
    CHECK(sl.mul(sl.one(), x) == x);
  }
}

TEST_CASE("det_q is central before the quotient") {
  Mq2 m(kQp);
  for (char g : {'a', 'b', 'c', 'd'}) {
    CHECK(m.mul(m.det_q(), m.gen(g)) == m.mul(m.gen(g), m.det_q()));
  }
  CHECK(m.to_slq2(m.det_q()) == SLq2(kQp).one());
}

TEST_CASE("Hopf structure of SL_q(2)") {
  SLq2 sl(kQp);
  CoordTensor one_one({CoordMonomial{}, CoordMonomial{}}, PadicScalar(1));
  CHECK(sl.coproduct(sl.det_q()) == one_one);
  CHECK(sl.counit(sl.gen('b')).is_zero());
  CHECK(sl.counit(sl.gen('a')) == PadicScalar(1));
  CHECK(sl.antipode_left_contract(sl.coproduct(sl.gen('a'))) == sl.one());
  CHECK(sl.antipode(sl.gen('a')) == sl.gen('d'));
  CHECK(sl.antipode(sl.gen('b')) == sl.gen('b').scaled(-kQp.q_inv()));
  CHECK(sl.antipode(sl.gen('c')) == sl.gen('c').scaled(-kQp.q()));
}

TEST_CASE("transpose automorphism") {
  SLq2 sl(kQp);
  PadicScalar alpha(3, 7), beta(11, 2);
  CoordElement bc = sl.normalize("bc");
  CHECK(sl.transpose_auto(bc, PadicScalar(1), beta) == sl.normalize("cb"));
  CHECK(sl.transpose_auto(sl.det_q(), alpha, beta) == sl.one());
  for (char g : {'a', 'b', 'c', 'd'}) {
    auto once = sl.transpose_auto(sl.gen(g), alpha, beta);
    CHECK(sl.transpose_auto(once, PadicScalar(1) / alpha, beta) == sl.gen(g));
  }
  std::mt19937_64 rng(89);
  for (int i = 0; i < 20; ++i) {
    auto x = sl.normalize(random_word(rng, 3)), y = sl.normalize(random_word(rng, 2));
    CHECK(sl.transpose_auto(sl.mul(x, y), alpha, beta) ==
          sl.mul(sl.transpose_auto(x, alpha, beta), sl.transpose_auto(y, alpha, beta)));
  }
}

TEST_CASE("breve pairing") {
  CHECK(breve_pairing_kef(0, 0, 0, CoordMonomial{}, kQp) == PadicScalar(1));
  for (long n = 0; n <= 2; ++n) {
    for (long l = 0; l <= 2; ++l) {
      for (long r = 0; r <= 2; ++r) {
        for (long t = 0; t <= 2; ++t) {
          if (n - r == l - t) continue;
          CHECK(breve_pairing_kef(1, n, l, CoordMonomial{true, 2, r, t}, kQp).is_zero());
        }
      }
    }
  }
  CHECK(breve_pairing_kef(0, 1, 0, CoordMonomial{false, 0, 1, 0}, kQp) == gamma_constant(0, 1, 0, 0, 1, 0, kQp));
}

TEST_CASE("standard pairing") {
  SLq2 sl(kQp);
  QAlgebra U(kQp, Variant::standard);
  CHECK(uq_pairing(U.one(), sl.one(), kQp) == PadicScalar(1));
  CHECK(uq_pairing(U.E(), sl.gen('c'), kQp) == uq_pairing_via_breve(U.E(), sl.gen('c'), kQp));
  CHECK(uq_pairing(U.E(), sl.gen('c'), kQp) == PadicScalar(1));
  // Duality: <x, y y'> = sum <x_(1), y><x_(2), y'>.
  std::vector<PBWElement> xs = {U.E(), U.F(), U.K(), U.K(-1)};
  for (const auto& x : xs) {
    for (char g : {'a', 'b', 'c', 'd'}) {
      for (char h : {'a', 'b', 'c', 'd'}) {
        PadicScalar rhs;
        for (const auto& [k, c] : U.coproduct(x).terms) {
          rhs += c * uq_pairing(U.monomial(k[0]), sl.gen(g), kQp) * uq_pairing(U.monomial(k[1]), sl.gen(h), kQp);
        }
        CHECK(uq_pairing(x, sl.mul(sl.gen(g), sl.gen(h)), kQp) == rhs);
      }
    }
  }
}

TEST_CASE("dual norms") {
  SLq2 sl(kQp);
  RadiusSpec rs{2, 3, 0};
  CHECK(dual_norm(sl.gen('c'), rs, kQp) == PNorm::power(-2));
  CHECK(dual_norm(sl.pow(sl.gen('a'), 5), rs, kQp) == PNorm::one());
  CHECK(dual_norm(sl.gen('b'), rs, kQp) == PNorm::power(-3));
  CHECK(dual_norm_sweep(sl.gen('b'), rs, kQp, 12) == PNorm::power(-3));
}
