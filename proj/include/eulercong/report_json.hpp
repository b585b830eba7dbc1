#pragma once

/**
 * @file report_json.hpp
 * @brief JSON encoding of polynomials and reports.
 *
 * Rationals are always strings "p/q" (bare "p" for integers) so nothing
 * passes through floating point. Coefficient arrays are ascending in degree;
 * the zero polynomial is []. Objects use insertion order, so dumping a parsed
 * document with the same indent reproduces it byte for byte.
 *
 * Congruence report:
 *   {"n", "m", "holds", "lhs", "rhs", "remainder", "cofactor"}
 * Trace report: the congruence fields for the same (n, m), followed by
 *   "diff": {"num", "den"}, "series": {"num", "den"}, "den_at_one",
 *   "per_j": [{"j", "value": {"num", "den"}, "divisor_exponent", "forms_agree"}],
 *   "checks": {...}, "all_checks"
 */

#include "eulercong/congruence.hpp"
#include "eulercong/eulerian.hpp"
#include "eulercong/prooftrace.hpp"

#include <json.hpp>

#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulercong {

using json = nlohmann::ordered_json;

inline json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient list must be a JSON array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("coefficients must be strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  Poly p(std::move(coeffs));
  if (p.size() != j.size()) throw std::invalid_argument("coefficient list has trailing zeros");
  return p;
}

inline json ratfunc_to_json(const RatFunc& f) {
  json o = json::object();
  o["num"] = poly_to_json(f.num());
  o["den"] = poly_to_json(f.den());
  return o;
}

inline RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline json to_json(const EulerianPoly& a, const std::string& method) {
  json o = json::object();
  o["n"] = a.n;
  o["method"] = method;
  o["coeffs"] = poly_to_json(a.poly);
  return o;
}

inline json to_json(const CongruenceReport& r) {
  json o = json::object();
  o["n"] = r.n;
  o["m"] = r.m;
  o["holds"] = r.holds;
  o["lhs"] = poly_to_json(r.lhs);
  o["rhs"] = poly_to_json(r.rhs);
  o["remainder"] = poly_to_json(r.remainder);
  o["cofactor"] = poly_to_json(r.cofactor);
  return o;
}

/// Rebuilds a report; difference is recomputed as lhs - rhs.
inline CongruenceReport congruence_report_from_json(const json& j) {
  CongruenceReport r;
  r.n = j.at("n").get<unsigned>();
  r.m = j.at("m").get<unsigned>();
  r.holds = j.at("holds").get<bool>();
  r.lhs = poly_from_json(j.at("lhs"));
  r.rhs = poly_from_json(j.at("rhs"));
  r.difference = r.lhs - r.rhs;
  r.remainder = poly_from_json(j.at("remainder"));
  r.cofactor = poly_from_json(j.at("cofactor"));
  return r;
}

inline json to_json(const TraceReport& t, const CongruenceReport& c) {
  json o = to_json(c);
  o["diff"] = ratfunc_to_json(t.diff_value);
  o["series"] = ratfunc_to_json(t.series_value);
  o["den_at_one"] = to_string(t.den_at_one);
  json per_j = json::array();
  for (const auto& rc : t.per_j) {
    json e = json::object();
    e["j"] = rc.j;
    e["value"] = ratfunc_to_json(rc.value);
    e["divisor_exponent"] = rc.divisor_exponent ? json(*rc.divisor_exponent) : json(nullptr);
    e["forms_agree"] = rc.forms_agree;
    per_j.push_back(std::move(e));
  }
  o["per_j"] = std::move(per_j);
  json checks = json::object();
  checks["diff_matches_series"] = t.diff_matches_series;
  checks["telescopes"] = t.telescopes;
  checks["den_at_one_nonzero"] = t.den_at_one != 0;
  o["checks"] = std::move(checks);
  o["all_checks"] = t.all_checks;
  return o;
}

/// Structural check of one congruence report against the schema above.
inline bool is_valid_congruence_json(const json& j) {
  static const char* const keys[] = {"n", "m", "holds", "lhs", "rhs", "remainder", "cofactor"};
  if (!j.is_object() || j.size() < std::size(keys)) return false;
  std::size_t i = 0;
  for (auto it = j.begin(); i < std::size(keys); ++it, ++i)
    if (it.key() != keys[i]) return false;
  if (!j["n"].is_number_unsigned() || !j["m"].is_number_unsigned() || !j["holds"].is_boolean()) return false;
  try {
    for (const char* k : {"lhs", "rhs", "remainder", "cofactor"}) poly_from_json(j[k]);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace eulercong
