#pragma once

// Text expressions over the generators of each algebra.
//
//   expr     = term { ("+" | "-") term } ;
//   term     = unary { "*" unary } ;
//   unary    = "-" unary | power ;
//   power    = atom [ "^" exponent ] ;
//   exponent = [ "-" ] integer | "(" [ "-" ] integer ")" ;
//   atom     = rational | ident | "(" expr ")" ;
//   rational = integer [ "/" integer ] ;
//   ident    = "E" | "F" | "K" | "K_-" | "a" | "b" | "c" | "d" | "z" | "q" ;
//
// Negative exponents are accepted only on invertible monomials (nonzero
// scalars, powers of K and K_-).

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qhyper/base_algebras.hpp"
#include "qhyper/pbw.hpp"
#include "qhyper/quantum_double.hpp"
#include "qhyper/skew_series.hpp"
#include "qhyper/slq2.hpp"

namespace qhyper {

enum class Dialect { uq, breve, double_, slq2, skew };

std::string dialect_name(Dialect d);
Dialect parse_dialect(const std::string& s);

/// Largest accepted |exponent| in expression text.
inline constexpr long kMaxExponent = 4096;

struct Expr {
  enum class Kind { number, ident, add, sub, mul, neg, pow };
  Kind kind = Kind::number;
  PadicScalar value;
  std::string name;
  long exponent = 0;
  long line = 1;
  long column = 1;
  std::vector<std::unique_ptr<Expr>> args;
};

/// Syntax only; throws ParseError with the position of the offending token.
std::unique_ptr<Expr> parse_expression(std::string_view text);

PBWElement parse_pbw(std::string_view text, const QAlgebra& alg);
DoubleElement parse_double(std::string_view text, const QuantumDouble& dbl);
CoordElement parse_coord(std::string_view text, const SLq2& sl);
/// Series in z over U_q(h); K and its inverse are constants.
SkewSeries<LaurentPoly> parse_skew(std::string_view text, const SkewAlgebra<LaurentAlgebra>& alg);
/// Series in z over L.
SkewSeries<PadicScalar> parse_skew(std::string_view text, const SkewAlgebra<ScalarField>& alg);

}  // namespace qhyper
