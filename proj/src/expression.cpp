#include "qhyper/expression.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "qhyper/errors.hpp"

namespace qhyper {

std::string dialect_name(Dialect d) {
  switch (d) {
    case Dialect::uq: return "uq";
    case Dialect::breve: return "breve";
    case Dialect::double_: return "double";
    case Dialect::slq2: return "slq2";
    case Dialect::skew: return "skew";
  }
  return "?";
}

Dialect parse_dialect(const std::string& s) {
  if (s == "uq") return Dialect::uq;
  if (s == "breve") return Dialect::breve;
  if (s == "double") return Dialect::double_;
  if (s == "slq2") return Dialect::slq2;
  if (s == "skew") return Dialect::skew;
  throw DomainError("unknown dialect '" + s + "'");
}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  long line;
  long column;
};

const std::set<std::string> kIdentifiers = {"E", "F", "K", "K_-", "a", "b", "c", "d", "z", "q"};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  long line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    long l0 = line, c0 = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), l0, c0});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string name(src.substr(i, j - i));
      if (name == "K_" && j < src.size() && src[j] == '-') {
        name = "K_-";
        ++j;
      }
      if (!kIdentifiers.count(name)) throw ParseError("unknown identifier '" + name + "'", l0, c0);
      out.push_back({Tok::ident, name, l0, c0});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + ch + "'", l0, c0);
    }
    out.push_back({k, std::string(1, ch), l0, c0});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::unique_ptr<Expr> run() {
    if (peek().kind == Tok::end) fail("expected an expression");
    auto e = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

  static std::unique_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = take();
      auto e = node(op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::sub, op);
      e->args.push_back(std::move(lhs));
      e->args.push_back(term());
      lhs = std::move(e);
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    while (peek().kind == Tok::star) {
      const Token& op = take();
      auto e = node(Expr::Kind::mul, op);
      e->args.push_back(std::move(lhs));
      e->args.push_back(unary());
      lhs = std::move(e);
    }
    return lhs;
  }

  std::unique_ptr<Expr> unary() {
    if (peek().kind == Tok::minus) {
      const Token& op = take();
      auto e = node(Expr::Kind::neg, op);
      e->args.push_back(unary());
      return e;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    if (peek().kind != Tok::caret) return base;
    const Token& op = take();
    bool paren = false;
    if (peek().kind == Tok::lparen) {
      take();
      paren = true;
    }
    bool neg = false;
    if (peek().kind == Tok::minus) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::number) fail("expected an integer exponent");
    const Token& num = take();
    if (num.text.size() > 6 || std::stol(num.text) > kMaxExponent) {
      throw ParseError("exponent overflow", num.line, num.column);
    }
    if (paren) {
      if (peek().kind != Tok::rparen) fail("expected ')'");
      take();
    }
    auto e = node(Expr::Kind::pow, op);
    e->exponent = neg ? -std::stol(num.text) : std::stol(num.text);
    e->args.push_back(std::move(base));
    return e;
  }

  std::unique_ptr<Expr> atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        auto e = node(Expr::Kind::number, t);
        std::string text = t.text;
        if (peek().kind == Tok::slash) {
          take();
          if (peek().kind != Tok::number) fail("expected a denominator");
          const Token& den = take();
          if (den.text.find_first_not_of('0') == std::string::npos) {
            throw ParseError("zero denominator", den.line, den.column);
          }
          text += "/" + den.text;
        }
        e->value = PadicScalar::parse(text);
        return e;
      }
      case Tok::ident: {
        take();
        auto e = node(Expr::Kind::ident, t);
        e->name = t.text;
        return e;
      }
      case Tok::lparen: {
        const Token& open = take();
        if (peek().kind == Tok::end) throw ParseError("unmatched '('", open.line, open.column);
        auto e = expr();
        if (peek().kind != Tok::rparen) {
          if (peek().kind == Tok::end) throw ParseError("unmatched '('", open.line, open.column);
          fail("expected ')'");
        }
        take();
        return e;
      }
      case Tok::end: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <class Adapter>
typename Adapter::Value evaluate(const Expr& e, const Adapter& ad) {
  using V = typename Adapter::Value;
  switch (e.kind) {
    case Expr::Kind::number: return ad.scalar(e.value);
    case Expr::Kind::ident: {
      if (e.name == "q") return ad.scalar(ad.params().q());
      std::optional<V> g = ad.ident(e.name);
      if (!g) throw ParseError("identifier '" + e.name + "' is not available in this dialect", e.line, e.column);
      return *g;
    }
    case Expr::Kind::add: return ad.add(evaluate(*e.args[0], ad), evaluate(*e.args[1], ad));
    case Expr::Kind::sub: return ad.sub(evaluate(*e.args[0], ad), evaluate(*e.args[1], ad));
    case Expr::Kind::mul: return ad.mul(evaluate(*e.args[0], ad), evaluate(*e.args[1], ad));
    case Expr::Kind::neg: return ad.sub(ad.scalar(PadicScalar(0)), evaluate(*e.args[0], ad));
    case Expr::Kind::pow: {
      V base = evaluate(*e.args[0], ad);
      if (e.exponent >= 0) return ad.pow(base, e.exponent);
      std::optional<V> inv = ad.inverse(base);
      if (!inv) throw ParseError("negative exponent on a non-invertible factor", e.line, e.column);
      return ad.pow(*inv, -e.exponent);
    }
  }
  throw ParseError("malformed expression", e.line, e.column);
}

struct PBWAdapter {
  using Value = PBWElement;
  const QAlgebra& alg;
  const QParams& params() const { return alg.params(); }
  Value scalar(const PadicScalar& c) const { return alg.scalar(c); }
  std::optional<Value> ident(const std::string& n) const {
    if (n == "E") return alg.E();
    if (n == "F") return alg.F();
    if (n == "K") return alg.K();
    return std::nullopt;
  }
  Value add(const Value& x, const Value& y) const { return x + y; }
  Value sub(const Value& x, const Value& y) const { return x - y; }
  Value mul(const Value& x, const Value& y) const { return alg.mul(x, y); }
  Value pow(const Value& x, long k) const { return alg.pow(x, k); }
  std::optional<Value> inverse(const Value& x) const {
    if (x.terms.size() != 1) return std::nullopt;
    const auto& [m, c] = *x.terms.begin();
    if (m.nE != 0 || m.nF != 0) return std::nullopt;
    return alg.monomial({0, -m.nK, 0}, PadicScalar(1) / c);
  }
};

struct DoubleAdapter {
  using Value = DoubleElement;
  const QuantumDouble& dbl;
  const QParams& params() const { return dbl.params(); }
  Value scalar(const PadicScalar& c) const { return dbl.scalar(c); }
  std::optional<Value> ident(const std::string& n) const {
    if (n == "E") return dbl.E();
    if (n == "F") return dbl.F();
    if (n == "K") return dbl.K();
    if (n == "K_-") return dbl.Km();
    return std::nullopt;
  }
  Value add(const Value& x, const Value& y) const { return x + y; }
  Value sub(const Value& x, const Value& y) const { return x - y; }
  Value mul(const Value& x, const Value& y) const { return dbl.mul(x, y); }
  Value pow(const Value& x, long k) const { return dbl.pow(x, k); }
  std::optional<Value> inverse(const Value& x) const {
    if (x.size() != 1) return std::nullopt;
    const auto& [m, c] = *x.begin();
    if (m.nE != 0 || m.nF != 0) return std::nullopt;
    return dbl.monomial({0, -m.nK, -m.nKm, 0}, PadicScalar(1) / c);
  }
};

struct CoordAdapter {
  using Value = CoordElement;
  const SLq2& sl;
  const QParams& params() const { return sl.params(); }
  Value scalar(const PadicScalar& c) const { return sl.scalar(c); }
  std::optional<Value> ident(const std::string& n) const {
    if (n == "a" || n == "b" || n == "c" || n == "d") return sl.gen(n[0]);
    return std::nullopt;
  }
  Value add(const Value& x, const Value& y) const { return x + y; }
  Value sub(const Value& x, const Value& y) const { return x - y; }
  Value mul(const Value& x, const Value& y) const { return sl.mul(x, y); }
  Value pow(const Value& x, long k) const { return sl.pow(x, k); }
  std::optional<Value> inverse(const Value& x) const {
    if (x.size() != 1) return std::nullopt;
    const auto& [m, c] = *x.begin();
    if (m.degree() != 0) return std::nullopt;
    return sl.scalar(PadicScalar(1) / c);
  }
};

template <class Base>
struct SkewAdapter {
  using Alg = SkewAlgebra<Base>;
  using Value = typename Alg::Element;
  const Alg& alg;
  const QParams& params() const { return alg.params(); }
  Value scalar(const PadicScalar& c) const { return alg.scale(c, alg.one()); }
  std::optional<Value> ident(const std::string& n) const {
    if (n == "z") return alg.variable();
    if constexpr (std::is_same_v<Base, LaurentAlgebra>) {
      if (n == "K") return alg.constant(alg.base().monomial(1));
    }
    return std::nullopt;
  }
  Value add(const Value& x, const Value& y) const { return alg.add(x, y); }
  Value sub(const Value& x, const Value& y) const { return alg.sub(x, y); }
  Value mul(const Value& x, const Value& y) const { return alg.mul(x, y); }
  Value pow(const Value& x, long k) const { return alg.pow(x, k); }
  std::optional<Value> inverse(const Value& x) const {
    if (x.coeffs.size() != 1 || x.coeffs.begin()->first != 0) return std::nullopt;
    const auto& c = x.coeffs.begin()->second;
    if constexpr (std::is_same_v<Base, LaurentAlgebra>) {
      if (c.size() != 1) return std::nullopt;
      const auto& [k, v] = *c.begin();
      return alg.constant(alg.base().monomial(-k, PadicScalar(1) / v));
    } else {
      return alg.constant(PadicScalar(1) / c);
    }
  }
};

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text) { return Parser(lex(text)).run(); }

PBWElement parse_pbw(std::string_view text, const QAlgebra& alg) {
  return evaluate(*parse_expression(text), PBWAdapter{alg});
}

DoubleElement parse_double(std::string_view text, const QuantumDouble& dbl) {
  return evaluate(*parse_expression(text), DoubleAdapter{dbl});
}

CoordElement parse_coord(std::string_view text, const SLq2& sl) {
  return evaluate(*parse_expression(text), CoordAdapter{sl});
}

SkewSeries<LaurentPoly> parse_skew(std::string_view text, const SkewAlgebra<LaurentAlgebra>& alg) {
  return evaluate(*parse_expression(text), SkewAdapter<LaurentAlgebra>{alg});
}

SkewSeries<PadicScalar> parse_skew(std::string_view text, const SkewAlgebra<ScalarField>& alg) {
  return evaluate(*parse_expression(text), SkewAdapter<ScalarField>{alg});
}

}  // namespace qhyper
