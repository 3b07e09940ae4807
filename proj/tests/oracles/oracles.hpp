#pragma once

// Independent reference implementations used to cross-check the kernel.
// They favour obviousness over speed.

#include <map>
#include <string>
#include <vector>

#include "qhyper/linear.hpp"
#include "qhyper/pbw.hpp"
#include "qhyper/scalar.hpp"
#include "qhyper/slq2.hpp"

namespace oracle {

using qhyper::CoordMonomial;
using qhyper::Linear;
using qhyper::PadicScalar;
using qhyper::PBWMonomial;
using qhyper::QParams;

using Words = std::map<std::string, PadicScalar>;

inline void add_word(Words& w, const std::string& s, const PadicScalar& c) {
  if (c.is_zero()) return;
  auto& slot = w[s];
  slot += c;
  if (slot.is_zero()) w.erase(s);
}

/// A rule rewrites a two-letter window into a combination of words, or
/// declines by returning false.
using Rule = bool (*)(char, char, const QParams&, long, Words&);

/// Applies the first applicable rule at the leftmost position, one step at a
/// time, until no word changes.
inline Words rewrite(Words w, const QParams& qp, long variant_tag, Rule rule) {
  for (;;) {
    bool changed = false;
    Words next;
    for (const auto& [word, c] : w) {
      bool done = false;
      for (std::size_t i = 0; i + 1 < word.size() && !done; ++i) {
        Words rep;
        if (!rule(word[i], word[i + 1], qp, variant_tag, rep)) continue;
        for (const auto& [mid, m] : rep) add_word(next, word.substr(0, i) + mid + word.substr(i + 2), c * m);
        done = true;
      }
      if (done) changed = true;
      else add_word(next, word, c);
    }
    w = std::move(next);
    if (!changed) return w;
  }
}

// Letters E, F, K and k = K^{-1}. variant_tag 1 is the breve algebra.
inline bool uq_rule(char x, char y, const QParams& qp, long breve, Words& out) {
  long w = breve ? 1 : 2;
  long kappa = breve ? 2 : 1;
  std::string pair{x, y};
  if (pair == "Kk" || pair == "kK") {
    add_word(out, "", PadicScalar(1));
  } else if (pair == "KE") {
    add_word(out, "EK", qp.q_pow(w));
  } else if (pair == "kE") {
    add_word(out, "Ek", qp.q_pow(-w));
  } else if (pair == "FK") {
    add_word(out, "KF", qp.q_pow(w));
  } else if (pair == "Fk") {
    add_word(out, "kF", qp.q_pow(-w));
  } else if (pair == "FE") {
    PadicScalar inv = PadicScalar(1) / (qp.q() - qp.q_inv());
    add_word(out, "EF", PadicScalar(1));
    add_word(out, std::string(kappa, 'K'), -inv);
    add_word(out, std::string(kappa, 'k'), inv);
  } else {
    return false;
  }
  return true;
}

inline Linear<PBWMonomial> uq_normalize(const std::string& word, const QParams& qp, bool breve) {
  Words w;
  w[word] = PadicScalar(1);
  Linear<PBWMonomial> out;
  for (const auto& [s, c] : rewrite(w, qp, breve ? 1 : 0, uq_rule)) {
    PBWMonomial m;
    for (char ch : s) {
      if (ch == 'E') ++m.nE;
      if (ch == 'F') ++m.nF;
      if (ch == 'K') ++m.nK;
      if (ch == 'k') --m.nK;
    }
    out.add(m, c);
  }
  return out;
}

// Letters a, b, c, d of SL_q(2), normal words a^s c^r b^t and d^s c^r b^t.
inline bool coord_rule(char x, char y, const QParams& qp, long, Words& out) {
  std::string pair{x, y};
  if (pair == "ba") {
    add_word(out, "ab", qp.q_inv());
  } else if (pair == "ca") {
    add_word(out, "ac", qp.q_inv());
  } else if (pair == "bd") {
    add_word(out, "db", qp.q());
  } else if (pair == "cd") {
    add_word(out, "dc", qp.q());
  } else if (pair == "bc") {
    add_word(out, "cb", PadicScalar(1));
  } else if (pair == "ad") {
    add_word(out, "", PadicScalar(1));
    add_word(out, "cb", qp.q());
  } else if (pair == "da") {
    add_word(out, "", PadicScalar(1));
    add_word(out, "cb", qp.q_inv());
  } else {
    return false;
  }
  return true;
}

inline Linear<CoordMonomial> coord_normalize(const std::string& word, const QParams& qp) {
  Words w;
  w[word] = PadicScalar(1);
  Linear<CoordMonomial> out;
  for (const auto& [s, c] : rewrite(w, qp, 0, coord_rule)) {
    CoordMonomial m;
    for (char ch : s) {
      if (ch == 'a') ++m.s;
      if (ch == 'd') {
        ++m.s;
        m.d_led = true;
      }
      if (ch == 'c') ++m.r;
      if (ch == 'b') ++m.t;
    }
    out.add(m, c);
  }
  return out;
}

/// v_p(n!) by Legendre's formula.
inline long legendre(long n, long p) {
  long v = 0;
  for (long pk = p; pk <= n; pk *= p) v += n / pk;
  return v;
}

using Poly = std::map<long, PadicScalar>;

/// Euclidean division g = q f + r over L, deg r < deg f.
inline std::pair<Poly, Poly> long_divide(Poly g, const Poly& f) {
  long d = f.rbegin()->first;
  PadicScalar lead = f.rbegin()->second;
  Poly q;
  while (!g.empty() && g.rbegin()->first >= d) {
    auto [n, c] = *g.rbegin();
    PadicScalar t = c / lead;
    q[n - d] = t;
    for (const auto& [k, fk] : f) {
      auto& slot = g[n - d + k];
      slot -= t * fk;
      if (slot.is_zero()) g.erase(n - d + k);
    }
  }
  return {q, g};
}

/// sigma(a, b) on the Borel halves by full iterated coproducts: b is split
/// into its generator letters, a is spread over that many legs, and each
/// leg is paired with one letter by spreading the letter over the leg's own
/// generators. Only generator-level values enter.
class BorelPairingOracle {
 public:
  BorelPairingOracle(const QParams& qp)
      : qp_(qp), A_(qp, qhyper::Variant::borel_plus), B_(qp, qhyper::Variant::borel_minus) {}

  PadicScalar pair(const PBWMonomial& a, const PBWMonomial& b) const {
    auto ys = letters_b(b);
    if (ys.empty()) return A_.counit(A_.monomial(a));
    PadicScalar s;
    for (const auto& [legs, c] : spread(A_, a, ys.size())) {
      PadicScalar t = c;
      // a_(1) pairs the last letter of b: the second slot is B^op.
      for (std::size_t j = 0; j < legs.size() && !t.is_zero(); ++j) t *= pair_letter(legs[j], ys[ys.size() - 1 - j]);
      s += t;
    }
    return s;
  }

 private:
  using Legs = std::vector<PBWMonomial>;

  static std::vector<PBWMonomial> letters_b(const PBWMonomial& b) {
    std::vector<PBWMonomial> out;
    long sg = b.nK > 0 ? 1 : -1;
    for (long i = 0; i < std::labs(b.nK); ++i) out.push_back({0, sg, 0});
    for (long i = 0; i < b.nF; ++i) out.push_back({0, 0, 1});
    return out;
  }
  static std::vector<PBWMonomial> letters_a(const PBWMonomial& a) {
    std::vector<PBWMonomial> out;
    for (long i = 0; i < a.nE; ++i) out.push_back({1, 0, 0});
    long sg = a.nK > 0 ? 1 : -1;
    for (long i = 0; i < std::labs(a.nK); ++i) out.push_back({0, sg, 0});
    return out;
  }

  /// Iterated coproduct into n legs.
  static std::vector<std::pair<Legs, PadicScalar>> spread(const qhyper::QAlgebra& alg, const PBWMonomial& m,
                                                         std::size_t n) {
    std::vector<std::pair<Legs, PadicScalar>> cur = {{{m}, PadicScalar(1)}};
    while (cur.front().first.size() < n) {
      std::vector<std::pair<Legs, PadicScalar>> next;
      for (const auto& [legs, c] : cur) {
        for (const auto& [k, v] : alg.coproduct(alg.monomial(legs.back())).terms) {
          Legs l = legs;
          l.back() = k[0];
          l.push_back(k[1]);
          next.push_back({l, c * v});
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  /// sigma(x, y) for a monomial x and one letter y of b.
  PadicScalar pair_letter(const PBWMonomial& x, const PBWMonomial& y) const {
    auto xs = letters_a(x);
    if (xs.empty()) return B_.counit(B_.monomial(y));
    PadicScalar s;
    for (const auto& [legs, c] : spread(B_, y, xs.size())) {
      PadicScalar t = c;
      for (std::size_t i = 0; i < xs.size() && !t.is_zero(); ++i) t *= generator_value(xs[i], legs[i]);
      s += t;
    }
    return s;
  }

  /// x in {E, K, K^{-1}}, y in {1, F, K_-^j}.
  PadicScalar generator_value(const PBWMonomial& x, const PBWMonomial& y) const {
    if (y == PBWMonomial{}) return x.nE ? PadicScalar(0) : PadicScalar(1);
    if (x.nE) return y.nF == 1 && y.nK == 0 ? PadicScalar(1) / (qp_.q_inv() - qp_.q()) : PadicScalar(0);
    if (y.nF) return PadicScalar(0);
    return qp_.q_pow(-2 * x.nK * y.nK);
  }

  QParams qp_;
  qhyper::QAlgebra A_;
  qhyper::QAlgebra B_;
};

}  // namespace oracle
