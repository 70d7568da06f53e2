#pragma once

// JSON forms of the library values. Terms are emitted in canonical order
// with coefficients as decimal strings (they outgrow 64-bit integers).

#include <json.hpp>

#include "twistknot/invariants.hpp"
#include "twistknot/laurent.hpp"
#include "twistknot/verify.hpp"

namespace twistknot {

inline nlohmann::json terms_to_json(const LaurentPoly2& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back({{"a", e.a}, {"q", e.q}, {"c", to_decimal(c)}});
  return arr;
}

inline LaurentPoly2 terms_from_json(const nlohmann::json& arr) {
  LaurentPoly2 p;
  for (const auto& t : arr)
    p.add_term(bigint_from_decimal(t.at("c").get<std::string>()),
               t.at("a").get<int>(), t.at("q").get<int>());
  return p;
}

inline nlohmann::json terms_to_json(const LaurentPoly1& p,
                                    const std::string& var = "q") {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back({{var, e}, {"c", to_decimal(c)}});
  return arr;
}

inline nlohmann::json twist_result_to_json(int p, int n,
                                           const LaurentPoly2& poly) {
  return {{"knot", {{"type", "twist"}, {"p", p}}},
          {"color", n},
          {"terms", terms_to_json(poly)}};
}

inline nlohmann::json report_to_json(const verify::IdentityReport& r) {
  nlohmann::json j = {{"name", r.suite},
                      {"range", r.range},
                      {"checked", r.checked},
                      {"passed", r.passed},
                      {"millis", r.millis}};
  if (!r.passed) j["counterexample"] = r.counterexample;
  return j;
}

}  // namespace twistknot
