#pragma once

// Internal JSON helpers shared by the modules that speak the interchange
// schema (forms, charts, rationals). Not installed.

#include <string>

#include "json.hpp"
#include "plectic/cartan.hpp"

namespace plectic::jsondetail {

using nlohmann::json;

inline Rational json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  fail(ErrorKind::Parse, "expected a rational (integer or \"p/q\" string)");
}

inline json rational_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(to_string(q));
}

inline ChartPtr chart_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::Parse, "chart must be a nonempty name array");
  std::vector<std::string> names;
  for (const auto& e : j) names.push_back(e.get<std::string>());
  return make_chart(std::move(names));
}

inline json chart_json(const ChartPtr& chart) {
  return json(chart->names());
}

template <class Tag>
AltTensor<Tag> tensor_from_json(const ChartPtr& chart, const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
    fail(ErrorKind::Parse, "tensor JSON needs \"degree\" and \"terms\"");
  AltTensor<Tag> t(chart, j.at("degree").get<int>());
  for (const auto& term : j.at("terms")) {
    std::vector<int> idx = term.at("idx").get<std::vector<int>>();
    t.add_term(std::move(idx), ScalarExpr::parse(chart, term.at("coeff").get<std::string>()));
  }
  return t;
}

template <class Tag>
json tensor_json(const AltTensor<Tag>& t) {
  json terms = json::array();
  for (const auto& [idx, c] : t.terms()) terms.push_back({{"idx", idx}, {"coeff", c.str()}});
  return {{"degree", t.degree()}, {"terms", terms}};
}

inline Form form_from_json(const ChartPtr& chart, const json& j) {
  return tensor_from_json<FormTag>(chart, j);
}

inline json form_json(const Form& f) { return tensor_json(f); }

inline MultiVector mv_from_json(const ChartPtr& chart, const json& j) {
  return tensor_from_json<VectorTag>(chart, j);
}

inline json mv_json(const MultiVector& v) { return tensor_json(v); }

/// Wraps json::parse so malformed text surfaces as PlecticError(Parse).
inline json parse_text(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::Parse, std::string("malformed JSON for ") + what);
  return j;
}

} // namespace plectic::jsondetail
