#ifndef CONGLAT_REPORT_JSON_HPP_
#define CONGLAT_REPORT_JSON_HPP_

#include "json.hpp"

#include "heights.hpp"

namespace conglat {

// Exact values serialise as JSON integers, symbolic values as strings.
inline nlohmann::json to_json(HeightValue const& v) {
  if (v.is_exact()) {
    return v.exact;
  }
  return v.to_string();
}

inline nlohmann::json to_json(HeightReport const& report) {
  nlohmann::json j;
  j["family"] = report.family;
  j["n"] = report.n;
  if (report.q.has_value()) {
    j["q"] = *report.q;
  }
  j["mode"] = report.mode;
  j["lcong"] = to_json(report.lcong);
  j["rcong"] = to_json(report.rcong);
  j["cong"] = to_json(report.cong);
  j["terms"] = nlohmann::json::array();
  for (auto const& term : report.terms) {
    nlohmann::json t;
    t["r"] = term.label;
    t["m_L"] = term.m_l;
    t["m_R"] = term.m_r;
    t["ht_sub"] = to_json(term.ht_sub);
    t["ht_nsub"] = to_json(term.ht_nsub);
    j["terms"].push_back(std::move(t));
  }
  j["corrections"] = {{"left", report.corrections.left},
                      {"right", report.corrections.right},
                      {"two", report.corrections.two}};
  j["assumptions"] = report.assumptions;
  if (report.count_left) {
    j["congruence_counts"]["left"] = *report.count_left;
  }
  if (report.count_right) {
    j["congruence_counts"]["right"] = *report.count_right;
  }
  if (report.count_two) {
    j["congruence_counts"]["two"] = *report.count_two;
  }
  return j;
}

}  // namespace conglat

#endif  // CONGLAT_REPORT_JSON_HPP_
