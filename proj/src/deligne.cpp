#include "plectic/deligne.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json_detail.hpp"
#include "plectic/quadrature.hpp"

namespace plectic {

namespace {

std::string tuple_str(const PatchTuple& t) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  out << ")";
  return out.str();
}

} // namespace

bool Cover::contains(const PatchTuple& t) const {
  return std::find(nerve.begin(), nerve.end(), t) != nerve.end();
}

std::vector<PatchTuple> Cover::tuples_of_size(int k) const {
  std::vector<PatchTuple> out;
  for (const auto& t : nerve)
    if (static_cast<int>(t.size()) == k) out.push_back(t);
  return out;
}

int Cover::depth() const {
  size_t d = 0;
  for (const auto& t : nerve) d = std::max(d, t.size());
  return static_cast<int>(d);
}

void validate_cover(const Cover& c) {
  for (const auto& t : c.nerve) {
    if (t.empty()) fail(ErrorKind::Invalid, "empty tuple in nerve");
    for (size_t i = 0; i < t.size(); ++i) {
      if (std::find(c.patch_ids.begin(), c.patch_ids.end(), t[i]) == c.patch_ids.end())
        fail(ErrorKind::Invalid, "nerve tuple " + tuple_str(t) + " uses an unknown patch id");
      if (i > 0 && t[i - 1] >= t[i])
        fail(ErrorKind::Invalid, "nerve tuple " + tuple_str(t) + " is not strictly increasing");
    }
    if (t.size() > 1) {
      PatchTuple face;
      for (size_t j = 0; j < t.size(); ++j) {
        face.clear();
        for (size_t i = 0; i < t.size(); ++i)
          if (i != j) face.push_back(t[i]);
        if (!c.contains(face))
          fail(ErrorKind::Invalid,
               "nerve is not closed under sub-tuples: " + tuple_str(t) + " lists a face " +
                   tuple_str(face) + " that is missing");
      }
    }
  }
}

Cover full_cover(int patches, int max_size) {
  if (patches <= 0) fail(ErrorKind::Invalid, "cover needs at least one patch");
  Cover c;
  for (int i = 0; i < patches; ++i) c.patch_ids.push_back(i);
  // Enumerate increasing tuples by counting bitmasks, smallest sizes first.
  for (int size = 1; size <= std::min(max_size, patches); ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      c.nerve.push_back(pick);
      int i = size - 1;
      while (i >= 0 && pick[i] == patches - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return c;
}

Phase Phase::zero(const ChartPtr& chart) { return {ScalarExpr::zero(chart), Rational(0)}; }

Phase Phase::of_pi(const ChartPtr& chart, const Rational& c) {
  return {ScalarExpr::zero(chart), c};
}

bool Phase::is_two_pi_integer() const {
  if (!fn.is_zero()) return false;
  if (!is_integer(pi_coeff)) return false;
  return pi_coeff.get_num() % 2 == 0;
}

Phase Phase::operator-() const { return {-fn, -pi_coeff}; }

Phase Phase::operator+(const Phase& o) const { return {fn + o.fn, pi_coeff + o.pi_coeff}; }

Phase Phase::operator-(const Phase& o) const { return {fn - o.fn, pi_coeff - o.pi_coeff}; }

bool Phase::operator==(const Phase& o) const { return fn == o.fn && pi_coeff == o.pi_coeff; }

const Phase& DeligneCochain::phase(const PatchTuple& t) const {
  auto it = phases.find(t);
  if (it == phases.end())
    fail(ErrorKind::Invalid, "no phase component on tuple " + tuple_str(t));
  return it->second;
}

const Form& DeligneCochain::theta(int k, const PatchTuple& t) const {
  if (k < 1 || k > level) fail(ErrorKind::Invalid, "form layer out of range");
  auto it = forms[k - 1].find(t);
  if (it == forms[k - 1].end())
    fail(ErrorKind::Invalid, "no degree-" + std::to_string(k) + " component on tuple " + tuple_str(t));
  return it->second;
}

void DeligneCochain::set_phase(const PatchTuple& t, Phase h) {
  auto it = phases.find(t);
  if (it == phases.end())
    fail(ErrorKind::Invalid, "phase tuple " + tuple_str(t) + " is not in the nerve at this degree");
  it->second = std::move(h);
}

void DeligneCochain::set_theta(int k, const PatchTuple& t, Form f) {
  if (k < 1 || k > level) fail(ErrorKind::Invalid, "form layer out of range");
  if (f.degree() != k) fail(ErrorKind::Invalid, "component degree does not match its layer");
  auto it = forms[k - 1].find(t);
  if (it == forms[k - 1].end())
    fail(ErrorKind::Invalid,
         "form tuple " + tuple_str(t) + " is not in the nerve at layer " + std::to_string(k));
  it->second = std::move(f);
}

DeligneCochain zero_cochain(ChartPtr chart, Cover cover, int level, int total_degree) {
  if (level < 1) fail(ErrorKind::Invalid, "cochain level must be at least 1");
  if (total_degree < 0) fail(ErrorKind::Invalid, "negative total degree");
  DeligneCochain c;
  c.chart = std::move(chart);
  c.cover = std::move(cover);
  c.level = level;
  c.total_degree = total_degree;
  for (const auto& t : c.cover.tuples_of_size(total_degree + 1))
    c.phases.emplace(t, Phase::zero(c.chart));
  c.forms.resize(level);
  for (int k = 1; k <= level; ++k) {
    int p = total_degree - k;
    if (p < 0) continue;
    for (const auto& t : c.cover.tuples_of_size(p + 1))
      c.forms[k - 1].emplace(t, Form(c.chart, k));
  }
  return c;
}

DeligneCochain global_form_cochain(ChartPtr chart, Cover cover, int level, const Form& alpha) {
  if (alpha.degree() != level)
    fail(ErrorKind::Invalid, "global form degree must equal the cochain level");
  DeligneCochain c = zero_cochain(std::move(chart), std::move(cover), level, level);
  for (auto& [t, f] : c.forms[level - 1]) f = alpha;
  return c;
}

namespace {

void check_same_layout(const DeligneCochain& a, const DeligneCochain& b) {
  if (!(*a.chart == *b.chart) || !(a.cover == b.cover) || a.level != b.level ||
      a.total_degree != b.total_degree)
    fail(ErrorKind::Invalid, "cochain layout mismatch");
}

template <class T, class Op>
std::map<PatchTuple, T> zip_layer(const std::map<PatchTuple, T>& a,
                                  const std::map<PatchTuple, T>& b, Op op) {
  std::map<PatchTuple, T> out;
  for (const auto& [t, va] : a) {
    auto it = b.find(t);
    if (it == b.end()) fail(ErrorKind::Invalid, "cochain layout mismatch on " + tuple_str(t));
    out.emplace(t, op(va, it->second));
  }
  return out;
}

/// Čech coboundary of one layer: component tuples have comp_size entries,
/// result tuples one more. Faces of nerve tuples are present by closure.
template <class T>
std::map<PatchTuple, T> delta_layer(const Cover& cover, const std::map<PatchTuple, T>& comp,
                                    int comp_size) {
  std::map<PatchTuple, T> out;
  PatchTuple face;
  for (const auto& t : cover.tuples_of_size(comp_size + 1)) {
    std::optional<T> acc;
    for (size_t j = 0; j < t.size(); ++j) {
      face.clear();
      for (size_t i = 0; i < t.size(); ++i)
        if (i != j) face.push_back(t[i]);
      auto it = comp.find(face);
      if (it == comp.end())
        fail(ErrorKind::Invalid, "missing face component on " + tuple_str(face));
      if (!acc)
        acc = it->second; // j = 0 enters with sign +1
      else if (j % 2 == 0)
        acc = *acc + it->second;
      else
        acc = *acc - it->second;
    }
    out.emplace(t, std::move(*acc));
  }
  return out;
}

Form d_of_layer(const DeligneCochain& c, int k, const PatchTuple& t) {
  // Exterior derivative of the (k-1)-layer component on t; k-1 = 0 reads the
  // phase function (the pi part is constant and drops out).
  if (k == 1) return ext_d(Form::scalar(c.phase(t).fn));
  return ext_d(c.theta(k - 1, t));
}

} // namespace

DeligneCochain cochain_add(const DeligneCochain& a, const DeligneCochain& b) {
  check_same_layout(a, b);
  DeligneCochain r = a;
  r.phases = zip_layer(a.phases, b.phases, [](const Phase& x, const Phase& y) { return x + y; });
  for (int k = 1; k <= a.level; ++k)
    r.forms[k - 1] =
        zip_layer(a.forms[k - 1], b.forms[k - 1], [](const Form& x, const Form& y) { return x + y; });
  return r;
}

DeligneCochain cochain_sub(const DeligneCochain& a, const DeligneCochain& b) {
  check_same_layout(a, b);
  DeligneCochain r = a;
  r.phases = zip_layer(a.phases, b.phases, [](const Phase& x, const Phase& y) { return x - y; });
  for (int k = 1; k <= a.level; ++k)
    r.forms[k - 1] =
        zip_layer(a.forms[k - 1], b.forms[k - 1], [](const Form& x, const Form& y) { return x - y; });
  return r;
}

bool cochain_is_zero(const DeligneCochain& c) {
  for (const auto& [t, h] : c.phases)
    if (!h.is_zero()) return false;
  for (const auto& layer : c.forms)
    for (const auto& [t, f] : layer)
      if (!f.is_zero()) return false;
  return true;
}

bool cochain_equal_mod_gauge(const DeligneCochain& a, const DeligneCochain& b) {
  check_same_layout(a, b);
  for (const auto& [t, ha] : a.phases) {
    const Phase diff = ha - b.phase(t);
    if (!diff.is_two_pi_integer()) return false;
  }
  for (int k = 1; k <= a.level; ++k)
    for (const auto& [t, fa] : a.forms[k - 1])
      if (!(fa == b.theta(k, t))) return false;
  return true;
}

DeligneCochain deligne_d(const DeligneCochain& c) {
  if (c.total_degree > c.level)
    fail(ErrorKind::Invalid,
         "nerve depth exceeded: cannot differentiate past total degree " +
             std::to_string(c.level + 1));
  const int m = c.total_degree;
  DeligneCochain r = zero_cochain(c.chart, c.cover, c.level, m + 1);
  r.phases = delta_layer(c.cover, c.phases, m + 1);
  for (int k = 1; k <= c.level; ++k) {
    int p = m + 1 - k; // Čech degree of the result layer
    if (p < 0) continue;
    if (k <= m) r.forms[k - 1] = delta_layer(c.cover, c.forms[k - 1], m - k + 1);
    // The derivative of the (k-1)-layer lands here with sign (-1)^{m-k+1},
    // the Čech degree of the differentiated layer.
    const bool flip = (m - k + 1) % 2 != 0;
    for (auto& [t, f] : r.forms[k - 1]) {
      Form d = d_of_layer(c, k, t);
      f += flip ? -d : d;
    }
  }
  return r;
}

bool CocycleReport::ok() const {
  if (!phase_condition) return false;
  for (bool b : form_conditions)
    if (!b) return false;
  return true;
}

CocycleReport is_cocycle(const DeligneCochain& c) {
  if (c.total_degree != c.level)
    fail(ErrorKind::Invalid, "cocycle candidates live at total degree equal to the level");
  const int n = c.level;
  CocycleReport rep;
  rep.form_conditions.assign(n, true);
  for (const auto& [t, h] : delta_layer(c.cover, c.phases, n + 1)) {
    if (!h.is_two_pi_integer()) {
      rep.phase_condition = false;
      rep.failures.push_back("delta g != 1 on " + tuple_str(t));
    }
  }
  for (int k = 1; k <= n; ++k) {
    const bool flip = (n - k) % 2 != 0;
    for (const auto& [t, lhs] : delta_layer(c.cover, c.forms[k - 1], n - k + 1)) {
      Form rhs = d_of_layer(c, k, t);
      Form resid = lhs - (flip ? -rhs : rhs);
      if (!resid.is_zero()) {
        rep.form_conditions[k - 1] = false;
        rep.failures.push_back("layer " + std::to_string(k) + " condition fails on " + tuple_str(t));
      }
    }
  }
  return rep;
}

Form curvature(const DeligneCochain& c) {
  CocycleReport rep = is_cocycle(c);
  if (!rep.ok())
    fail(ErrorKind::Verify,
         "curvature requires a verified cocycle" +
             (rep.failures.empty() ? std::string() : ": " + rep.failures.front()));
  const int n = c.level;
  std::optional<Form> glued;
  for (const auto& t : c.cover.tuples_of_size(1)) {
    Form cand = ext_d(c.theta(n, t));
    if (!glued)
      glued = std::move(cand);
    else if (!(*glued == cand))
      fail(ErrorKind::Verify, "patches disagree on the curvature");
  }
  if (!glued) fail(ErrorKind::Invalid, "cover has no patches");
  return n % 2 == 0 ? *glued : -*glued;
}

LeafMap circle_leaf(double radius, std::vector<double> center) {
  return {LeafKind::Circle, radius, std::move(center)};
}

LeafMap sphere_leaf(double radius, std::vector<double> center) {
  return {LeafKind::Sphere, radius, std::move(center)};
}

namespace {

double eval_coeff(const ScalarExpr& c, const std::vector<double>& pt) {
  double den = c.den().eval_double(pt);
  if (std::fabs(den) < 1e-12)
    fail(ErrorKind::Domain, "parametrization hits a coefficient singularity");
  return c.num().eval_double(pt) / den;
}

double minor_det_d(const std::vector<std::vector<double>>& tans, const std::vector<int>& idx) {
  switch (idx.size()) {
    case 0:
      return 1.0;
    case 1:
      return tans[0][idx[0]];
    case 2:
      return tans[0][idx[0]] * tans[1][idx[1]] - tans[0][idx[1]] * tans[1][idx[0]];
    default:
      fail(ErrorKind::Unsupported, "leaf dimension above 2");
  }
}

double eval_form_at(const Form& f, const std::vector<double>& pt,
                    const std::vector<std::vector<double>>& tans) {
  double acc = 0.0;
  for (const auto& [idx, c] : f.terms()) {
    double det = minor_det_d(tans, idx);
    if (det != 0.0) acc += eval_coeff(c, pt) * det;
  }
  return acc;
}

std::vector<double> center_or_origin(const LeafMap& leaf, int dim) {
  if (leaf.center.empty()) return std::vector<double>(dim, 0.0);
  if (static_cast<int>(leaf.center.size()) != dim)
    fail(ErrorKind::Invalid, "leaf center dimension does not match the chart");
  return leaf.center;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

double integrate_over_leaf(const Form& alpha, const LeafMap& leaf) {
  const ChartPtr& chart = alpha.chart();
  if (!chart) fail(ErrorKind::Invalid, "form has no chart");
  const int dim = chart->dim();
  if (leaf.radius <= 0) fail(ErrorKind::Domain, "leaf radius must be positive");

  if (leaf.kind == LeafKind::Circle) {
    if (dim != 2) fail(ErrorKind::Invalid, "circle leaves need a 2-dim chart");
    if (alpha.degree() != 1) fail(ErrorKind::Invalid, "circle leaves integrate 1-forms");
    const double R = leaf.radius;
    auto ir = chart->index_of("r");
    if (ir) {
      // Polar chart: the leaf is the coordinate circle r = R.
      const int rpos = *ir, tpos = 1 - *ir;
      return integrate(
          [&](double s) {
            std::vector<double> pt(2), tan(2, 0.0);
            pt[rpos] = R;
            pt[tpos] = s;
            tan[tpos] = 1.0;
            return eval_form_at(alpha, pt, {tan});
          },
          0.0, kTwoPi);
    }
    const std::vector<double> cen = center_or_origin(leaf, 2);
    return integrate(
        [&](double s) {
          std::vector<double> pt = {cen[0] + R * std::cos(s), cen[1] + R * std::sin(s)};
          std::vector<double> tan = {-R * std::sin(s), R * std::cos(s)};
          return eval_form_at(alpha, pt, {tan});
        },
        0.0, kTwoPi);
  }

  if (dim != 3) fail(ErrorKind::Invalid, "sphere leaves need a 3-dim chart");
  if (alpha.degree() != 2) fail(ErrorKind::Invalid, "sphere leaves integrate 2-forms");
  const double R = leaf.radius;
  const std::vector<double> cen = center_or_origin(leaf, 3);
  return integrate(
      [&](double u) {
        return integrate(
            [&](double v) {
              const double su = std::sin(u), cu = std::cos(u);
              const double sv = std::sin(v), cv = std::cos(v);
              std::vector<double> pt = {cen[0] + R * su * cv, cen[1] + R * su * sv,
                                        cen[2] + R * cu};
              std::vector<double> du = {R * cu * cv, R * cu * sv, -R * su};
              std::vector<double> dv = {-R * su * sv, R * su * cv, 0.0};
              return eval_form_at(alpha, pt, {du, dv});
            },
            0.0, kTwoPi);
      },
      0.0, 3.14159265358979323846264338328);
}

HolonomyResult holonomy(const DeligneCochain& c, const Form& witness, const LeafMap& leaf,
                        const std::optional<DeligneCochain>& reduction) {
  if (witness.degree() != c.level)
    fail(ErrorKind::Invalid, "witness degree must equal the cochain level");
  const DeligneCochain presented = reduction ? cochain_sub(c, deligne_d(*reduction)) : c;
  const DeligneCochain target = global_form_cochain(c.chart, c.cover, c.level, witness);
  if (!cochain_equal_mod_gauge(presented, target))
    fail(ErrorKind::Verify,
         "reduction witness missing: cochain is not the inclusion of the witness form");
  HolonomyResult r;
  r.exponent = integrate_over_leaf(witness, leaf);
  r.value = std::complex<double>(std::cos(r.exponent), std::sin(r.exponent));
  return r;
}

IntegralityReport integrality_check(const Form& form, const std::vector<LeafMap>& cycles) {
  IntegralityReport rep;
  rep.all_integral = true;
  for (const auto& leaf : cycles) {
    CycleVerdict v;
    v.integral = integrate_over_leaf(form, leaf);
    v.defect = std::fabs(v.integral - kTwoPi * std::round(v.integral / kTwoPi));
    v.in_two_pi_z = v.defect <= 1e-9;
    rep.all_integral = rep.all_integral && v.in_two_pi_z;
    rep.cycles.push_back(v);
  }
  return rep;
}

CocycleFixture oscillator_cocycle(int patches) {
  auto chart = make_chart({"r", "t"});
  Form theta(chart, 1);
  theta.add_term({1}, ScalarExpr::parse(chart, "r^2/2"));
  CocycleFixture fx;
  fx.cochain = global_form_cochain(chart, full_cover(patches, 3), 1, theta);
  fx.witness = theta;
  return fx;
}

CocycleFixture sphere_cocycle(int patches) {
  auto chart = make_chart({"x", "y", "z"});
  Form b(chart, 2);
  b.add_term({1, 2}, ScalarExpr::parse(chart, "x/(x^2+y^2+z^2)"));
  b.add_term({0, 2}, ScalarExpr::parse(chart, "-y/(x^2+y^2+z^2)"));
  b.add_term({0, 1}, ScalarExpr::parse(chart, "z/(x^2+y^2+z^2)"));
  CocycleFixture fx;
  fx.cochain = global_form_cochain(chart, full_cover(patches, 4), 2, b);
  fx.witness = b;
  return fx;
}

namespace {

PatchTuple tuple_from_key(const std::string& key) {
  PatchTuple t;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      t.push_back(std::stoi(part));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad patch tuple key '" + key + "'");
    }
  }
  return t;
}

} // namespace

CocycleFixture cocycle_from_json_text(const std::string& text) {
  using jsondetail::json;
  json j = jsondetail::parse_text(text, "cocycle");
  for (const char* key : {"n", "chart", "cover"})
    if (!j.contains(key)) fail(ErrorKind::Parse, std::string("cocycle JSON missing \"") + key + "\"");
  ChartPtr chart = jsondetail::chart_from_json(j.at("chart"));
  const int n = j.at("n").get<int>();
  Cover cover;
  cover.patch_ids = j.at("cover").at("patch_ids").get<std::vector<int>>();
  for (const auto& t : j.at("cover").at("nerve")) cover.nerve.push_back(t.get<PatchTuple>());
  validate_cover(cover);

  CocycleFixture fx;
  fx.cochain = zero_cochain(chart, std::move(cover), n, n);
  if (j.contains("phases")) {
    for (const auto& [key, val] : j.at("phases").items()) {
      Phase h = Phase::zero(chart);
      if (val.contains("fn")) h.fn = ScalarExpr::parse(chart, val.at("fn").get<std::string>());
      if (val.contains("pi")) h.pi_coeff = jsondetail::json_rational(val.at("pi"));
      fx.cochain.set_phase(tuple_from_key(key), std::move(h));
    }
  }
  if (j.contains("forms")) {
    for (const auto& [key, layer] : j.at("forms").items()) {
      if (key.rfind("theta", 0) != 0)
        fail(ErrorKind::Parse, "form layers must be keyed theta1..theta" + std::to_string(n));
      const int k = std::stoi(key.substr(5));
      for (const auto& [tkey, fj] : layer.items())
        fx.cochain.set_theta(k, tuple_from_key(tkey), jsondetail::form_from_json(chart, fj));
    }
  }
  if (j.contains("global_witness"))
    fx.witness = jsondetail::form_from_json(chart, j.at("global_witness"));
  return fx;
}

LeafMap leaf_from_json_text(const std::string& text) {
  using jsondetail::json;
  json j = jsondetail::parse_text(text, "leaf");
  LeafMap leaf;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "circle")
    leaf.kind = LeafKind::Circle;
  else if (kind == "sphere")
    leaf.kind = LeafKind::Sphere;
  else
    fail(ErrorKind::Parse, "leaf kind must be \"circle\" or \"sphere\"");
  leaf.radius = to_double(jsondetail::json_rational(j.at("radius")));
  if (j.contains("center"))
    for (const auto& e : j.at("center")) leaf.center.push_back(to_double(jsondetail::json_rational(e)));
  return leaf;
}

} // namespace plectic
