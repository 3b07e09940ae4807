#pragma once

#include <string>
#include <vector>

#include "qhyper/linear.hpp"

namespace qhyper {

/// "X" or "X^k" (k != 1), "" for k = 0.
inline std::string power_factor(const std::string& name, long k) {
  if (k == 0) return "";
  if (k == 1) return name;
  return name + "^" + std::to_string(k);
}

/// Joins non-empty factors with '*'; "1" for an empty product.
inline std::string join_factors(const std::vector<std::string>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (f.empty()) continue;
    if (!out.empty()) out += "*";
    out += f;
  }
  return out.empty() ? "1" : out;
}

/// Signed sum "c1*m1 + c2*m2 - ..." in parseable form.
template <class Key, class KeyFmt>
std::string format_linear(const Linear<Key>& x, KeyFmt&& fmt) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    bool neg = sgn(c.raw()) < 0;
    PadicScalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string m = fmt(k);
    if (m == "1") {
      out += mag.str();
    } else if (mag.is_one()) {
      out += m;
    } else {
      out += mag.str() + "*" + m;
    }
  }
  return out;
}

}  // namespace qhyper
