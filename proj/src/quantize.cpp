#include "plectic/quantize.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "json_detail.hpp"
#include "plectic/error.hpp"

namespace plectic {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Leaf integral divided by 2*pi, as an exact monomial c * R^k in the radius.
struct RadialMonomial {
  Rational c;
  int k = 0;
};

// The single term of p when p = coeff * x_var^e with no other variables.
std::optional<std::pair<Rational, int>> single_power(const Poly& p, int var) {
  if (p.terms().size() != 1) return std::nullopt;
  const auto& [mono, coeff] = *p.terms().begin();
  for (int i = 0; i < static_cast<int>(mono.size()); ++i)
    if (i != var && mono[i] != 0) return std::nullopt;
  return std::make_pair(coeff, mono[var]);
}

[[noreturn]] void fail_not_closed_form() {
  fail(ErrorKind::Unsupported,
       "leaf integral does not reduce to a closed-form monomial in the radius");
}

// The circle r = R only sees the angular component of the witness 1-form;
// the closed form needs that component constant in the angle and a monomial
// in r. Integral = 2*pi * h(R).
RadialMonomial circle_monomial(const Form& witness, const ChartPtr& chart) {
  int r = *chart->index_of("r");
  int t = 1 - r;
  const ScalarExpr& h = witness.coeff({t});
  if (h.num().degree_in(t) != 0 || h.den().degree_in(t) != 0) fail_not_closed_form();
  auto n = single_power(h.num(), r);
  auto d = single_power(h.den(), r);
  if (!n || !d) fail_not_closed_form();
  return {n->first / d->first, n->second - d->second};
}

// Radial 2-forms c * (x^2+y^2+z^2)^m * (x dy^dz + y dz^dx + z dx^dy)
// integrate to 2*pi * (2c * R^{3+2m}) over the sphere of radius R (the
// bracketed form has exterior derivative 3 dx^dy^dz, so its sphere integral
// is 4*pi*R^3).
RadialMonomial sphere_monomial(const Form& witness, const ChartPtr& chart) {
  Form sigma(chart, 2);
  Poly px = Poly::variable(3, 0), py = Poly::variable(3, 1), pz = Poly::variable(3, 2);
  sigma.add_term({1, 2}, ScalarExpr::from_poly(chart, px));
  sigma.add_term({0, 2}, ScalarExpr::from_poly(chart, -py));
  sigma.add_term({0, 1}, ScalarExpr::from_poly(chart, pz));

  // Candidate radial factor from whichever component is nonzero.
  ScalarExpr f = ScalarExpr::zero(chart);
  if (!witness.coeff({1, 2}).is_zero())
    f = witness.coeff({1, 2}) / ScalarExpr::from_poly(chart, px);
  else if (!witness.coeff({0, 2}).is_zero())
    f = witness.coeff({0, 2}) / ScalarExpr::from_poly(chart, -py);
  else if (!witness.coeff({0, 1}).is_zero())
    f = witness.coeff({0, 1}) / ScalarExpr::from_poly(chart, pz);
  else
    fail(ErrorKind::Unsupported, "leaf integral vanishes identically");

  // Restricting the reduced fraction to the line y = z = 0 exposes the
  // candidate exponent; the reconstruction check below is what certifies it.
  auto restrict_line = [](const Poly& p) {
    Poly out(p.nvars());
    for (const auto& [mono, coeff] : p.terms())
      if (mono[1] == 0 && mono[2] == 0) out.add_term(mono, coeff);
    return out;
  };
  auto n = single_power(restrict_line(f.num()), 0);
  auto d = single_power(restrict_line(f.den()), 0);
  if (!n || !d || n->second % 2 != 0 || d->second % 2 != 0) fail_not_closed_form();
  int m = (n->second - d->second) / 2;
  Rational c = n->first / d->first;

  Poly r2(3);
  r2.add_term({2, 0, 0}, rat(1));
  r2.add_term({0, 2, 0}, rat(1));
  r2.add_term({0, 0, 2}, rat(1));
  ScalarExpr rebuilt =
      m >= 0 ? ScalarExpr::from_poly(chart, r2.pow(m).scaled(c))
             : ScalarExpr::from_fraction(chart, Poly::constant(3, c), r2.pow(-m));
  if (!(rebuilt == f) || !(sigma.scaled(f) == witness)) fail_not_closed_form();
  return {rat(2) * c, 3 + 2 * m};
}

long floor_rat(const Rational& q) {
  mpz_class quot;
  mpz_fdiv_q(quot.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!quot.fits_slong_p())
    fail(ErrorKind::Unsupported, "leaf enumeration bound does not fit a machine integer");
  return quot.get_si();
}

long ceil_rat(const Rational& q) {
  mpz_class quot;
  mpz_cdiv_q(quot.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!quot.fits_slong_p())
    fail(ErrorKind::Unsupported, "leaf enumeration bound does not fit a machine integer");
  return quot.get_si();
}

// Exact k-th root of a positive rational, if it is rational.
std::optional<Rational> exact_root(const Rational& s, int k) {
  mpz_class rn, rd;
  int num_ok = mpz_root(rn.get_mpz_t(), s.get_num().get_mpz_t(), k);
  int den_ok = mpz_root(rd.get_mpz_t(), s.get_den().get_mpz_t(), k);
  if (!num_ok || !den_ok) return std::nullopt;
  return Rational(rn) / Rational(rd);
}

// Solve R^k = s exactly for R > 0; false when even R^2 is irrational.
bool solve_radius(const Rational& s, int k, BSLeaf& leaf) {
  if (k == 1) {
    leaf.radius = s;
    leaf.radius_sq = s * s;
    return true;
  }
  if (k % 2 == 0) {
    auto sq = exact_root(s, k / 2);
    if (!sq) return false;
    leaf.radius_sq = *sq;
    leaf.radius = exact_root(*sq, 2);
    return true;
  }
  auto r = exact_root(s, k);
  if (!r) return false;
  leaf.radius = *r;
  leaf.radius_sq = *r * *r;
  return true;
}

} // namespace

void validate_foliation(const RadialFoliation& f) {
  if (!f.chart) fail(ErrorKind::Invalid, "foliation has no chart");
  bool polar = f.chart->index_of("r").has_value();
  if (f.kind == FoliationKind::CirclesInPlane) {
    if (f.chart->dim() != 2 || !polar)
      fail(ErrorKind::Invalid,
           "circle foliation needs a polar 2-chart with a coordinate named r");
  } else {
    if (f.chart->dim() != 3 || polar)
      fail(ErrorKind::Invalid, "sphere foliation needs a cartesian 3-chart");
  }
  if (f.range.lo < 0 || f.range.empty())
    fail(ErrorKind::Invalid, "foliation radius range is degenerate");
}

RadialFoliation oscillator_foliation() {
  return {make_chart({"r", "t"}), FoliationKind::CirclesInPlane, {rat(0), rat(1000000)}};
}

RadialFoliation sphere_foliation() {
  return {make_chart({"x", "y", "z"}), FoliationKind::SpheresInSpace, {rat(0), rat(1000000)}};
}

BSVariety bohr_sommerfeld(const CocycleFixture& cocycle, const RadialFoliation& foliation,
                          const RationalInterval& search) {
  validate_foliation(foliation);
  const DeligneCochain& c = cocycle.cochain;
  if (!cocycle.witness)
    fail(ErrorKind::Verify, "reduction witness missing: cocycle carries no global witness form");
  if (!(*c.chart == *foliation.chart))
    fail(ErrorKind::Invalid, "foliation chart does not match the cocycle chart");
  int want_level = foliation.kind == FoliationKind::CirclesInPlane ? 1 : 2;
  if (c.level != want_level)
    fail(ErrorKind::Invalid, "foliation kind does not match the cocycle level");
  if (!cochain_equal_mod_gauge(c, global_form_cochain(c.chart, c.cover, c.level,
                                                      *cocycle.witness)))
    fail(ErrorKind::Verify,
         "reduction witness missing: cochain is not the inclusion of the witness form");

  bool circles = foliation.kind == FoliationKind::CirclesInPlane;
  RadialMonomial g = circles ? circle_monomial(*cocycle.witness, c.chart)
                             : sphere_monomial(*cocycle.witness, c.chart);
  if (g.c == 0) fail(ErrorKind::Unsupported, "leaf integral vanishes identically");
  if (g.k <= 0) fail(ErrorKind::Unsupported, "leaf integral must grow with the radius");

  BSVariety out;
  out.kind = foliation.kind;
  {
    std::ostringstream cond;
    cond << "leaf integral over the " << (circles ? "circle" : "sphere")
         << " of radius R equals 2*pi*(" << to_string(g.c) << "*R^" << g.k
         << "); a leaf is admitted iff " << to_string(g.c)
         << "*R^" << g.k << " is a nonzero integer";
    out.generating_condition = cond.str();
  }

  Rational lo = std::max(search.lo, foliation.range.lo);
  Rational hi = std::min(search.hi, foliation.range.hi);
  if (hi <= lo) return out;

  auto pow_rat = [](const Rational& b, int k) {
    Rational p{1};
    for (int i = 0; i < k; ++i) p *= b;
    return p;
  };
  Rational g_lo = g.c * pow_rat(lo, g.k), g_hi = g.c * pow_rat(hi, g.k);
  long n_min, n_max;
  if (g.c > 0) { // increasing: levels in (g(lo), g(hi)]
    n_min = floor_rat(g_lo) + 1;
    n_max = floor_rat(g_hi);
  } else { // decreasing: levels in [g(hi), g(lo))
    n_min = ceil_rat(g_hi);
    n_max = ceil_rat(g_lo) - 1;
  }
  if (n_max - n_min > 100000)
    fail(ErrorKind::Unsupported, "leaf enumeration is too large for the searched range");

  for (long n = n_min; n <= n_max; ++n) {
    if (n == 0) continue;
    BSLeaf leaf;
    leaf.level = n;
    if (!solve_radius(rat(n) / g.c, g.k, leaf))
      fail(ErrorKind::Unsupported, "admitted leaf radius is not exactly representable");
    double radius = leaf.radius ? to_double(*leaf.radius) : std::sqrt(to_double(leaf.radius_sq));
    LeafMap lm = circles ? circle_leaf(radius) : sphere_leaf(radius);
    leaf.holonomy_exponent = integrate_over_leaf(*cocycle.witness, lm);
    leaf.verified = std::fabs(leaf.holonomy_exponent - kTwoPi * static_cast<double>(n)) <= 1e-9;
    if (!leaf.verified)
      fail(ErrorKind::Verify, "quadrature disagrees with the closed-form leaf integral");
    out.leaves.push_back(std::move(leaf));
  }
  std::sort(out.leaves.begin(), out.leaves.end(),
            [](const BSLeaf& a, const BSLeaf& b) { return a.radius_sq < b.radius_sq; });
  return out;
}

SectionPhase oscillator_section_phase(const Rational& energy) {
  if (energy == 0) fail(ErrorKind::Domain, "leaf H = 0 is the excluded origin");
  if (energy < 0) fail(ErrorKind::Domain, "no leaf with negative energy");
  SectionPhase s;
  s.energy = energy;
  s.increment_over_two_pi = -energy;
  s.single_valued = is_integer(energy);
  if (s.single_valued) {
    if (!energy.get_num().fits_slong_p())
      fail(ErrorKind::Unsupported, "energy level does not fit a machine integer");
    long n = energy.get_num().get_si();
    s.winding = -n;
    s.phase = n == 1 ? "exp(-t*i)" : "exp(-" + std::to_string(n) + "*t*i)";
    s.verdict = "single-valued";
  } else {
    s.phase = "exp(-(" + to_string(energy) + ")*t*i)";
    s.verdict = "no single-valued solution";
  }
  return s;
}

QuantumState make_state(const std::map<long, long>& multiplicities) {
  QuantumState s;
  for (const auto& [n, k] : multiplicities) {
    if (n < 1)
      fail(ErrorKind::Invalid,
           "multiplicity keys must be positive integers (the trivial summand is unrepresentable)");
    if (k < 0) fail(ErrorKind::Invalid, "multiplicities must be nonnegative");
    if (k > 0) s.multiplicities[n] = k;
  }
  return s;
}

QuantumState state_from_string(const std::string& text) {
  std::map<long, long> m;
  std::string stripped;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
  std::istringstream in(stripped);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      fail(ErrorKind::Parse, "state entry '" + item + "' is not of the form n:k");
    try {
      size_t used = 0;
      long n = std::stol(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      std::string ks = item.substr(colon + 1);
      long k = std::stol(ks, &used);
      if (used != ks.size()) throw std::invalid_argument(item);
      m[n] += k;
    } catch (const std::logic_error&) {
      fail(ErrorKind::Parse, "state entry '" + item + "' is not of the form n:k");
    }
  }
  return make_state(m);
}

long state_dimension(const QuantumState& s) {
  long dim = 0;
  for (const auto& [n, k] : s.multiplicities) dim += k * (n + 1);
  return dim;
}

std::string state_to_rep(const QuantumState& s) {
  if (s.multiplicities.empty()) return "0";
  std::string out;
  for (const auto& [n, k] : s.multiplicities) {
    if (!out.empty()) out += " + ";
    if (k != 1) out += std::to_string(k) + "*";
    out += "Sym^" + std::to_string(n) + "(C^2*)";
  }
  return out;
}

QuantumState state_direct_sum(const QuantumState& a, const QuantumState& b) {
  std::map<long, long> m = a.multiplicities;
  for (const auto& [n, k] : b.multiplicities) m[n] += k;
  return make_state(m);
}

long sym_power_dimension(int n) {
  if (n < 0) fail(ErrorKind::Invalid, "negative symmetric power");
  // Count monomials a^p b^q of total degree n in two dual coordinates.
  long count = 0;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      if (p + q == n) ++count;
  return count;
}

std::string quantize_report_json(const BSVariety& v, const std::vector<QuantumState>& states) {
  using nlohmann::json;
  json variety = json::array();
  for (const BSLeaf& leaf : v.leaves) {
    json e = json::object();
    e["radius"] = leaf.radius ? to_string(*leaf.radius)
                              : "sqrt(" + to_string(leaf.radius_sq) + ")";
    e["radius_sq"] = to_string(leaf.radius_sq);
    e["holonomy_exponent"] = "2*pi*" + std::to_string(leaf.level);
    e["verified"] = leaf.verified;
    variety.push_back(e);
  }
  json st = json::array();
  for (const QuantumState& s : states) {
    json m = json::object();
    for (const auto& [n, k] : s.multiplicities) m[std::to_string(n)] = k;
    json e = json::object();
    e["multiplicities"] = m;
    e["dimension"] = state_dimension(s);
    e["rep"] = state_to_rep(s);
    st.push_back(e);
  }
  json report = json::object();
  report["variety"] = variety;
  report["states"] = st;
  return report.dump(2);
}

} // namespace plectic
