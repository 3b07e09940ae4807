#include "qhyper/json_io.hpp"

#include "qhyper/errors.hpp"

namespace qhyper {

Json to_json(const PadicScalar& x) { return x.wire(); }

PadicScalar scalar_from_json(const Json& j) {
  if (j.is_string()) return PadicScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return PadicScalar(j.get<long>());
  throw DomainError("scalar must be a \"num/den\" string or an integer");
}

Json to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json to_json(const PNorm& n, long p) {
  Json exp = n.is_zero() ? Json(nullptr) : Json(n.exponent());
  return {{"exp", exp}, {"text", n.str(p)}};
}

Json to_json(const PBWElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms) {
    terms.push_back({{"coeff", to_json(c)}, {"nE", m.nE}, {"nF", m.nF}, {"nK", m.nK}});
  }
  return {{"terms", terms}, {"variant", variant_name(x.variant)}};
}

PBWElement pbw_from_json(const Json& j) {
  PBWElement x;
  x.variant = parse_variant(j.value("variant", std::string("standard")));
  for (const auto& t : j.at("terms")) {
    PBWMonomial m{t.value("nE", 0L), t.value("nK", 0L), t.value("nF", 0L)};
    if (m.nE < 0 || m.nF < 0) throw DomainError("negative E or F exponent");
    x.terms.add(m, scalar_from_json(t.at("coeff")));
  }
  return x;
}

namespace {

Json double_monomial_json(const DoubleMonomial& m) {
  return {{"nE", m.nE}, {"nF", m.nF}, {"nK", m.nK}, {"nKminus", m.nKm}};
}

Json coord_monomial_json(const CoordMonomial& m) {
  return {{"kind", m.d_led ? "D" : "A"}, {"r", m.r}, {"s", m.s}, {"t", m.t}};
}

}  // namespace

Json to_json(const DoubleElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x) {
    Json t = double_monomial_json(m);
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  return {{"terms", terms}};
}

DoubleElement double_from_json(const Json& j) {
  DoubleElement x;
  for (const auto& t : j.at("terms")) {
    DoubleMonomial m{t.value("nE", 0L), t.value("nK", 0L), t.value("nKminus", 0L), t.value("nF", 0L)};
    if (m.nE < 0 || m.nF < 0) throw DomainError("negative E or F exponent");
    x.add(m, scalar_from_json(t.at("coeff")));
  }
  return x;
}

Json to_json(const DoubleTensor& t) {
  Json terms = Json::array();
  for (const auto& [k, c] : t) {
    terms.push_back({{"coeff", to_json(c)}, {"legs", {double_monomial_json(k[0]), double_monomial_json(k[1])}}});
  }
  return {{"terms", terms}};
}

Json to_json(const CoordElement& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x) {
    Json t = coord_monomial_json(m);
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  return {{"terms", terms}};
}

CoordElement coord_from_json(const Json& j) {
  CoordElement x;
  for (const auto& t : j.at("terms")) {
    std::string kind = t.value("kind", std::string("A"));
    if (kind != "A" && kind != "D") throw DomainError("coordinate monomial kind must be \"A\" or \"D\"");
    CoordMonomial m{kind == "D", t.value("s", 0L), t.value("r", 0L), t.value("t", 0L)};
    if (m.s < 0 || m.r < 0 || m.t < 0) throw DomainError("negative exponent in a coordinate monomial");
    if (m.d_led && m.s == 0) m.d_led = false;
    x.add(m, scalar_from_json(t.at("coeff")));
  }
  return x;
}

Json to_json(const CoordTensor& t) {
  Json terms = Json::array();
  for (const auto& [k, c] : t) {
    terms.push_back({{"coeff", to_json(c)}, {"legs", {coord_monomial_json(k[0]), coord_monomial_json(k[1])}}});
  }
  return {{"terms", terms}};
}

Json laurent_to_json(const LaurentPoly& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x) terms.push_back({{"coeff", to_json(c)}, {"k", k}});
  return {{"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly x;
  for (const auto& t : j.at("terms")) x.add(t.at("k").get<long>(), scalar_from_json(t.at("coeff")));
  return x;
}

}  // namespace qhyper
