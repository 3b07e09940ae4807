#pragma once

// Exact scalars of the field L, realised as rationals with their p-adic
// valuation, and the deformation parameters q = u^2.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qhyper {

/// p-adic valuation: an integer, or +infinity for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long v) : v_(v) {}

  bool is_infinite() const { return !v_.has_value(); }
  long value() const;
  std::string str() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  Valuation() = default;
  std::optional<long> v_;
};

/// A value of a solid norm: either 0 or p^k for an integer k.
class PNorm {
 public:
  static PNorm zero() { return PNorm(); }
  static PNorm power(long k) { return PNorm(k); }
  static PNorm one() { return PNorm(0); }
  static PNorm from_valuation(const Valuation& v);

  bool is_zero() const { return !exp_.has_value(); }
  long exponent() const;

  PNorm operator*(const PNorm& o) const;
  /// Division by a nonzero norm.
  PNorm operator/(const PNorm& o) const;

  friend bool operator==(const PNorm&, const PNorm&) = default;
  friend std::strong_ordering operator<=>(const PNorm& a, const PNorm& b);

  /// "0" or "p^k" with p substituted.
  std::string str(long p) const;

 private:
  PNorm() = default;
  explicit PNorm(long k) : exp_(k) {}
  std::optional<long> exp_;
};

PNorm max(const PNorm& a, const PNorm& b);

/// Exact element of L: a reduced rational number.
class PadicScalar {
 public:
  PadicScalar() = default;
  PadicScalar(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  PadicScalar(long num, long den);
  explicit PadicScalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  /// Takes a rational the caller guarantees is in lowest terms.
  static PadicScalar from_reduced(mpq_class v) {
    PadicScalar r;
    r.v_ = std::move(v);
    return r;
  }

  /// Accepts "n", "-n", "n/d".
  static PadicScalar parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  PadicScalar operator-() const { return PadicScalar(mpq_class(-v_)); }
  PadicScalar& operator+=(const PadicScalar& o);
  PadicScalar& operator-=(const PadicScalar& o);
  PadicScalar& operator*=(const PadicScalar& o);
  PadicScalar& operator/=(const PadicScalar& o);
  /// *this += a b without a temporary.
  void add_product(const PadicScalar& a, const PadicScalar& b);

  friend PadicScalar operator+(PadicScalar a, const PadicScalar& b) { return a += b; }
  friend PadicScalar operator-(PadicScalar a, const PadicScalar& b) { return a -= b; }
  friend PadicScalar operator*(PadicScalar a, const PadicScalar& b) { return a *= b; }
  friend PadicScalar operator/(PadicScalar a, const PadicScalar& b) { return a /= b; }
  friend bool operator==(const PadicScalar& a, const PadicScalar& b) { return a.v_ == b.v_; }

  /// Integer power; negative exponents require a nonzero base.
  PadicScalar pow(long k) const;

  /// "num/den" (always with a denominator), the wire format.
  std::string wire() const;
  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

Valuation valuation(const PadicScalar& x, long p);
PNorm padic_norm(const PadicScalar& x, long p);

/// The p-adic approximation p^v m, 0 <= m < p^{min_val - v}, of x with
/// v(x - result) >= min_val; zero when v(x) >= min_val.
PadicScalar round_padic(const PadicScalar& x, long p, long min_val);

/// Image in F_p of an element of valuation >= 0, as a value in [0, p).
long residue_mod_p(const PadicScalar& x, long p);

bool is_prime(long n);

/// Deformation environment: odd prime p, a square root u of q, with
/// |q| = 1 and |1 - q| < 1.
class QParams {
 public:
  QParams(long p, PadicScalar u);
  static QParams defaults() { return QParams(5, PadicScalar(6)); }

  long p() const { return p_; }
  const PadicScalar& u() const { return u_; }
  const PadicScalar& q() const { return q_; }
  const PadicScalar& q_inv() const { return q_inv_; }

  /// q^k.
  PadicScalar q_pow(long k) const;
  /// q^{k/2} = u^k.
  PadicScalar half_pow(long k) const;
  /// 1 / (q - q^{-1}).
  const PadicScalar& inv_q_minus_qinv() const { return inv_qmq_; }

  Valuation val(const PadicScalar& x) const { return valuation(x, p_); }
  PNorm norm(const PadicScalar& x) const { return padic_norm(x, p_); }

  friend bool operator==(const QParams& a, const QParams& b) {
    return a.p_ == b.p_ && a.u_ == b.u_;
  }

 private:
  long p_;
  PadicScalar u_;
  PadicScalar u_inv_;
  PadicScalar q_;
  PadicScalar q_inv_;
  PadicScalar inv_qmq_;
};

}  // namespace qhyper
