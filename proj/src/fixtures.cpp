#include "plectic/fixtures.hpp"

namespace plectic {

namespace {

Form one_term(const ChartPtr& chart, std::vector<int> idx, const std::string& coeff) {
  Form f(chart, static_cast<int>(idx.size()));
  f.add_term(std::move(idx), ScalarExpr::parse(chart, coeff));
  return f;
}

} // namespace

PlecticStructure builtin_structure(const std::string& name) {
  if (name == "r3vol") {
    auto c = make_chart({"x", "y", "z"});
    return PlecticStructure(c, 2, one_term(c, {0, 1, 2}, "1"),
                            {{rat(0), rat(0), rat(0)}, {rat(1), rat(1), rat(1)}});
  }
  if (name == "r3sphere") {
    auto c = make_chart({"x", "y", "z"});
    return PlecticStructure(c, 2, one_term(c, {0, 1, 2}, "1/(x^2+y^2+z^2)"),
                            {{rat(1), rat(0), rat(0)}, {rat(1), rat(1), rat(1)}});
  }
  if (name == "hk4") {
    auto c = make_chart({"x0", "x1", "x2", "x3"});
    return PlecticStructure(c, 3, one_term(c, {0, 1, 2, 3}, "6"),
                            {{rat(0), rat(0), rat(0), rat(0)}});
  }
  if (name == "pq6") {
    auto c = make_chart({"q1", "q2", "q3", "p12", "p13", "p23"});
    Form w(c, 3);
    w.add_term({3, 0, 1}, ScalarExpr::constant(c, rat(1)));
    w.add_term({4, 0, 2}, ScalarExpr::constant(c, rat(1)));
    w.add_term({5, 1, 2}, ScalarExpr::constant(c, rat(1)));
    return PlecticStructure(c, 2, w, {{rat(0), rat(0), rat(0), rat(0), rat(0), rat(0)}});
  }
  if (name == "r2sym") {
    auto c = make_chart({"x", "y"});
    return PlecticStructure(c, 1, one_term(c, {0, 1}, "1"),
                            {{rat(0), rat(0)}, {rat(2), rat(-1)}});
  }
  if (name == "oscpolar") {
    auto c = make_chart({"r", "t"});
    return PlecticStructure(c, 1, one_term(c, {0, 1}, "r"), {{rat(1), rat(0)}});
  }
  if (name == "deg4") {
    auto c = make_chart({"x", "y", "z", "w"});
    return PlecticStructure(c, 2, one_term(c, {0, 1, 2}, "1"),
                            {{rat(1), rat(1), rat(1), rat(1)}});
  }
  fail(ErrorKind::Invalid, "unknown builtin structure '" + name + "'");
}

std::vector<std::string> builtin_structure_names() {
  return {"r3vol", "r3sphere", "hk4", "pq6", "r2sym", "oscpolar", "deg4"};
}

} // namespace plectic
