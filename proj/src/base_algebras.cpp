#include "qhyper/base_algebras.hpp"

#include "qhyper/errors.hpp"

namespace qhyper {

ScalarField::Element ScalarField::residue(const Element& a) const {
  if (norm(a) > PNorm::one()) throw DomainError("residue of an element of norm > 1");
  return PadicScalar(residue_mod_p(a, qp_.p()));
}

std::optional<ScalarField::Element> ScalarField::unit_inverse(const Element& a) const {
  if (norm(a) != PNorm::one()) return std::nullopt;
  return PadicScalar(1) / a;
}

ScalarField::Element ScalarField::truncate(const Element& a, const PNorm& floor) const {
  if (floor.is_zero()) return a;
  return round_padic(a, qp_.p(), -floor.exponent());
}

LaurentAlgebra::Element LaurentAlgebra::mul(const Element& a, const Element& b) const {
  return bilinear(a, b, [](long i, long j) { return i + j; });
}

PNorm LaurentAlgebra::norm(const Element& a) const {
  PNorm best = PNorm::zero();
  for (const auto& [k, c] : a) best = max(best, qp_.norm(c) * PNorm::power(radius_exp_ * k));
  return best;
}

LaurentAlgebra::Element LaurentAlgebra::residue(const Element& a) const {
  if (radius_exp_ != 0) throw StructuralError("Laurent residue needs R_K = 1");
  if (norm(a) > PNorm::one()) throw DomainError("residue of an element of norm > 1");
  LaurentPoly r;
  for (const auto& [k, c] : a) r.add(k, PadicScalar(residue_mod_p(c, qp_.p())));
  return r;
}

std::optional<LaurentAlgebra::Element> LaurentAlgebra::unit_inverse(const Element& a) const {
  if (a.size() != 1) return std::nullopt;
  const auto& [k, c] = *a.begin();
  if (norm(a) != PNorm::one() || qp_.norm(c) != PNorm::one()) return std::nullopt;
  return LaurentPoly(-k, PadicScalar(1) / c);
}

LaurentAlgebra::Element LaurentAlgebra::truncate(const Element& a, const PNorm& floor) const {
  LaurentPoly r;
  for (const auto& [k, c] : a) {
    if (floor.is_zero()) {
      r.add(k, c);
      continue;
    }
    r.add(k, round_padic(c, qp_.p(), radius_exp_ * k - floor.exponent()));
  }
  return r;
}

LaurentAlgebra::Element LaurentAlgebra::twist(const Element& a, const PadicScalar& c) const {
  LaurentPoly r;
  for (const auto& [k, v] : a) r.add(k, v * c.pow(k));
  return r;
}

std::string LaurentAlgebra::str(const Element& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Highest power first.
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    bool neg = sgn(c.raw()) < 0;
    PadicScalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += "K";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace qhyper
