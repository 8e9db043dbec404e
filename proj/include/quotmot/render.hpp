#ifndef QUOTMOT_RENDER_HPP
#define QUOTMOT_RENDER_HPP

#include <json.hpp>

#include "quotmot/lpoly.hpp"
#include "quotmot/lseries.hpp"
#include "quotmot/mseries.hpp"
#include "quotmot/report.hpp"

namespace quotmot {

inline nlohmann::json coeff_to_json(const Int& c) {
  static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
  if (c > lo && c < hi) return static_cast<std::int64_t>(c);
  return c.str();  // decimal string once past exact double-safe range
}

inline nlohmann::json to_json(const LPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(coeff_to_json(c));
  return {{"coeffs", coeffs}, {"order", nullptr}};
}

inline nlohmann::json to_json(const TruncatedLSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Int& c : s.coeffs()) coeffs.push_back(coeff_to_json(c));
  return {{"coeffs", coeffs}, {"order", s.order()}};
}

inline nlohmann::json to_json(const MultiTruncatedSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back({{"exponents", e}, {"coefficient", to_json(c)}});
  return {{"num_vars", s.num_vars()},
          {"total_degree_bound", s.total_degree_bound()},
          {"l_order", s.l_order()},
          {"terms", terms}};
}

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const VerifyFailure& f : r.failures)
    failures.push_back({{"check", f.check}, {"witness", f.witness}});
  return {{"identity", r.identity},
          {"range", r.range},
          {"status", r.passed() ? "pass" : "fail"},
          {"failures", failures}};
}

}  // namespace quotmot

#endif
