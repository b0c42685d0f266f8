#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fiberforge/polynomial.hpp"

namespace fiberforge {

inline std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// w[1,3]^2*x[2], largest variable first.
inline std::string format_monomial(const Ring& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : ring.factors(m)) {
    if (!out.empty()) out += "*";
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

/// Terms in descending order, e.g. "w[1,3]*w[2,4] - w[1,2]*w[3,4]".
inline std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coeff < 0;
    Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += format_monomial(*f.ring(), t.mono);
    } else {
      out += format_rational(mag) + "*" + format_monomial(*f.ring(), t.mono);
    }
  }
  return out;
}

/// Exponent key used in JSON: "i,j" for pair variables, "i" for x_i, "t".
inline std::string json_key(const VariableId& v) {
  switch (v.ring()) {
    case RingTag::R_x: return std::to_string(v.i());
    case RingTag::Aux_t: return "t";
    case RingTag::W_w:
    case RingTag::U_u: return std::to_string(v.i()) + "," + std::to_string(v.j());
  }
  return "?";
}

inline std::string family_prefix(const VariableId& v) {
  switch (v.ring()) {
    case RingTag::R_x: return "x";
    case RingTag::W_w: return "w";
    case RingTag::U_u: return "u";
    case RingTag::Aux_t: return "";
  }
  return "";
}

/// True when the ring mixes variable families, in which case JSON keys carry a
/// family prefix ("x1", "w1,2", "u4,4").
inline bool mixed_families(const Ring& ring) {
  std::optional<RingTag> seen;
  for (const auto& v : ring.variables()) {
    if (v.ring() == RingTag::Aux_t) continue;
    if (seen && *seen != v.ring()) return true;
    seen = v.ring();
  }
  return false;
}

inline nlohmann::ordered_json to_json(const Polynomial& f) {
  const bool prefixed = mixed_families(*f.ring());
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : f.terms()) {
    nlohmann::ordered_json exp = nlohmann::ordered_json::object();
    for (const auto& [v, e] : f.ring()->factors(t.mono)) {
      exp[(prefixed ? family_prefix(v) : std::string()) + json_key(v)] = e;
    }
    terms.push_back({{"coeff", format_rational(t.coeff)}, {"exp", exp}});
  }
  return {{"ring", f.ring()->name()}, {"terms", terms}};
}

/// Inverse of to_json; keys are resolved against the variables of `ring`.
inline Polynomial from_json(const nlohmann::json& j, const RingPtr& ring) {
  if (!j.is_object() || !j.contains("terms")) throw Error(ErrorCode::ParseError, "missing terms");
  if (j.contains("ring") && j["ring"].get<std::string>() != ring->name()) {
    throw Error(ErrorCode::RingMismatch, "JSON ring " + j["ring"].get<std::string>());
  }
  const bool prefixed = mixed_families(*ring);
  std::unordered_map<std::string, std::size_t> by_key;
  for (std::size_t k = 0; k < ring->size(); ++k) {
    const auto& v = ring->variable(k);
    by_key[(prefixed ? family_prefix(v) : std::string()) + json_key(v)] = k;
  }
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    Monomial m;
    for (const auto& [key, e] : t.at("exp").items()) {
      auto it = by_key.find(key);
      if (it == by_key.end()) throw Error(ErrorCode::UnknownVariable, key);
      m.set(it->second, m[it->second] + e.get<int>());
    }
    terms.push_back({parse_rational(t.at("coeff").get<std::string>()), m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace fiberforge
