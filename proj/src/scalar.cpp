#include "qhyper/scalar.hpp"

#include <charconv>
#include <map>
#include <vector>

#include "qhyper/errors.hpp"

namespace qhyper {

long Valuation::value() const {
  if (!v_) throw DomainError("valuation of zero is infinite");
  return *v_;
}

std::string Valuation::str() const { return v_ ? std::to_string(*v_) : "inf"; }

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return *a.v_ <=> *b.v_;
}

PNorm PNorm::from_valuation(const Valuation& v) {
  return v.is_infinite() ? zero() : power(-v.value());
}

long PNorm::exponent() const {
  if (!exp_) throw DomainError("zero norm has no exponent");
  return *exp_;
}

PNorm PNorm::operator*(const PNorm& o) const {
  if (is_zero() || o.is_zero()) return zero();
  return power(*exp_ + *o.exp_);
}

PNorm PNorm::operator/(const PNorm& o) const {
  if (o.is_zero()) throw DomainError("division by zero norm");
  if (is_zero()) return zero();
  return power(*exp_ - *o.exp_);
}

std::strong_ordering operator<=>(const PNorm& a, const PNorm& b) {
  if (a.is_zero() || b.is_zero()) {
    return static_cast<int>(!a.is_zero()) <=> static_cast<int>(!b.is_zero());
  }
  return *a.exp_ <=> *b.exp_;
}

std::string PNorm::str(long p) const {
  if (!exp_) return "0";
  return std::to_string(p) + "^" + std::to_string(*exp_);
}

PNorm max(const PNorm& a, const PNorm& b) { return a < b ? b : a; }

PadicScalar::PadicScalar(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

PadicScalar PadicScalar::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  if (!ns.empty() && ns[0] == '+') ns.erase(0, 1);
  if (!valid_int(ns)) throw DomainError("malformed rational: " + s);
  num.set_str(ns, 10);
  if (slash != std::string::npos) {
    std::string ds = s.substr(slash + 1);
    if (!valid_int(ds) || ds[0] == '-' || ds[0] == '+') {
      throw DomainError("malformed rational: " + s);
    }
    den.set_str(ds, 10);
    if (den == 0) throw DomainError("zero denominator: " + s);
  }
  return PadicScalar(mpq_class(num, den));
}

PadicScalar& PadicScalar::operator+=(const PadicScalar& o) {
  v_ += o.v_;
  return *this;
}
PadicScalar& PadicScalar::operator-=(const PadicScalar& o) {
  v_ -= o.v_;
  return *this;
}
PadicScalar& PadicScalar::operator*=(const PadicScalar& o) {
  v_ *= o.v_;
  return *this;
}
void PadicScalar::add_product(const PadicScalar& a, const PadicScalar& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

PadicScalar& PadicScalar::operator/=(const PadicScalar& o) {
  if (o.is_zero()) throw DomainError("division by zero scalar");
  v_ /= o.v_;
  return *this;
}

PadicScalar PadicScalar::pow(long k) const {
  if (k < 0 && is_zero()) throw DomainError("negative power of zero");
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
  mpq_class r = k < 0 ? mpq_class(d, n) : mpq_class(n, d);
  r.canonicalize();
  return PadicScalar::from_reduced(std::move(r));
}

std::string PadicScalar::wire() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string PadicScalar::str() const { return v_.get_str(); }

namespace {

// Exponent of p in z.
long remove_factor(const mpz_class& z, long p) {
  if (z == 0 || !mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(p))) return 0;
  thread_local mpz_class rest, pp;
  if (pp != p) pp = p;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t()));
}


/// p^k for k >= 0, cached per thread.
const mpz_class& prime_power(long p, long k) {
  thread_local std::map<long, std::vector<mpz_class>> cache;
  auto& row = cache[p];
  if (row.empty()) row.emplace_back(1);
  while (static_cast<long>(row.size()) <= k) row.push_back(row.back() * p);
  return row[static_cast<std::size_t>(k)];
}

// Exponent of p in a reduced fraction num/den. Rounded values have a pure
// power of p as denominator, which is recognised without dividing.
long fraction_exponent(const mpz_class& num, const mpz_class& den, long p) {
  if (den != 1) {
    if (p <= 62) {
      auto j = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), static_cast<int>(p)));
      if (den == prime_power(p, j)) return -j;
      if (den == prime_power(p, j - 1)) return -(j - 1);
    }
    long vd = remove_factor(den, p);
    if (vd > 0) return -vd;
  }
  return remove_factor(num, p);
}

}  // namespace

Valuation valuation(const PadicScalar& x, long p) {
  if (x.is_zero()) return Valuation::infinity();
  return Valuation(fraction_exponent(x.raw().get_num(), x.raw().get_den(), p));
}

PNorm padic_norm(const PadicScalar& x, long p) {
  return PNorm::from_valuation(valuation(x, p));
}

PadicScalar round_padic(const PadicScalar& x, long p, long min_val) {
  if (x.is_zero()) return {};
  long k = fraction_exponent(x.raw().get_num(), x.raw().get_den(), p);
  if (k >= min_val) return {};
  mpz_class num = x.raw().get_num(), den = x.raw().get_den();
  if (k > 0) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prime_power(p, k).get_mpz_t());
  if (k < 0) mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), prime_power(p, -k).get_mpz_t());
  // x = p^k num/den with num, den prime to p; keep num/den mod p^{min_val - k}.
  const mpz_class& mod = prime_power(p, min_val - k);
  mpz_class m;
  if (den == 1) {
    mpz_fdiv_r(m.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  } else {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    m = num * inv;
    mpz_fdiv_r(m.get_mpz_t(), m.get_mpz_t(), mod.get_mpz_t());
  }
  // m is prime to p, so m p^k is already in lowest terms.
  mpq_class r;
  if (k >= 0) {
    r.get_num() = m * prime_power(p, k);
  } else {
    r.get_num() = m;
    r.get_den() = prime_power(p, -k);
  }
  return PadicScalar(std::move(r));
}

long residue_mod_p(const PadicScalar& x, long p) {
  if (x.is_zero()) return 0;
  if (valuation(x, p).value() < 0) throw DomainError("residue of a non-integral scalar");
  mpz_class pp = p;
  mpz_class n = x.raw().get_num() % pp;
  mpz_class d = x.raw().get_den() % pp;
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
  mpz_class r = (n * dinv) % pp;
  if (r < 0) r += pp;
  return r.get_si();
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

QParams::QParams(long p, PadicScalar u) : p_(p), u_(std::move(u)) {
  if (p_ == 2 || !is_prime(p_)) throw ConfigError("p must be an odd prime");
  if (u_.is_zero()) throw ConfigError("u must be nonzero");
  if (valuation(u_, p_).value() != 0) throw ConfigError("|u|_L must be 1");
  q_ = u_ * u_;
  PadicScalar one_minus_q = PadicScalar(1) - q_;
  if (one_minus_q.is_zero() || valuation(one_minus_q, p_).value() <= 0) {
    throw ConfigError("q = u^2 must satisfy |1 - q|_L < 1 with q != 1");
  }
  u_inv_ = PadicScalar(1) / u_;
  q_inv_ = PadicScalar(1) / q_;
  PadicScalar diff = q_ - q_inv_;
  if (diff.is_zero()) throw ConfigError("q - q^{-1} must be nonzero");
  inv_qmq_ = PadicScalar(1) / diff;
}

PadicScalar QParams::q_pow(long k) const { return k >= 0 ? q_.pow(k) : q_inv_.pow(-k); }

PadicScalar QParams::half_pow(long k) const { return k >= 0 ? u_.pow(k) : u_inv_.pow(-k); }

}  // namespace qhyper
