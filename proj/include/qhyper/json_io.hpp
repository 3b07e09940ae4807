#pragma once

// JSON forms of scalars, norms and elements. Objects use sorted keys, so
// dump() is byte-stable for equal inputs.

#include <json.hpp>

#include "qhyper/base_algebras.hpp"
#include "qhyper/pbw.hpp"
#include "qhyper/quantum_double.hpp"
#include "qhyper/skew_series.hpp"
#include "qhyper/slq2.hpp"

namespace qhyper {

using Json = nlohmann::json;

Json to_json(const PadicScalar& x);
PadicScalar scalar_from_json(const Json& j);

/// An integer, or "inf".
Json to_json(const Valuation& v);

/// {"exp": k, "text": "p^k"}, with exp null for the zero norm.
Json to_json(const PNorm& n, long p);

Json to_json(const PBWElement& x);
PBWElement pbw_from_json(const Json& j);

template <std::size_t N>
Json to_json(const PBWTensor<N>& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms) {
    Json legs = Json::array();
    for (const auto& m : key) legs.push_back({{"nE", m.nE}, {"nK", m.nK}, {"nF", m.nF}});
    terms.push_back({{"coeff", to_json(c)}, {"legs", legs}});
  }
  return {{"variant", variant_name(t.variant)}, {"terms", terms}};
}

Json to_json(const DoubleElement& x);
DoubleElement double_from_json(const Json& j);
Json to_json(const DoubleTensor& t);

Json to_json(const CoordElement& x);
CoordElement coord_from_json(const Json& j);
Json to_json(const CoordTensor& t);

/// A Laurent polynomial as {"terms": [{"k": n, "coeff": "a/b"}]}.
Json laurent_to_json(const LaurentPoly& x);
LaurentPoly laurent_from_json(const Json& j);

inline Json base_to_json(const PadicScalar& x) { return to_json(x); }
inline Json base_to_json(const LaurentPoly& x) { return laurent_to_json(x); }

template <class BaseElement>
Json to_json(const SkewSeries<BaseElement>& f) {
  Json terms = Json::array();
  for (const auto& [n, c] : f.coeffs) terms.push_back({{"coeff", base_to_json(c)}, {"deg", n}});
  Json floor = f.floor.is_zero() ? Json(nullptr) : Json(f.floor.exponent());
  return {{"precision_floor_exp", floor}, {"radius_exp", f.radius_exp}, {"terms", terms}};
}

}  // namespace qhyper
