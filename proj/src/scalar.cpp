#include "plectic/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include "plectic/error.hpp"
#include "lex_detail.hpp"

namespace plectic {

Rational rational_from_string(std::string_view text) {
  std::string s(text);
  if (s.empty()) fail(ErrorKind::Parse, "empty rational literal");
  try {
    Rational q;
    if (q.set_str(s, 10) != 0) fail(ErrorKind::Parse, "malformed rational: " + s);
    if (q.get_den() <= 0) fail(ErrorKind::Parse, "nonpositive denominator in rational: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Parse, "malformed rational: " + s);
  }
}

Rational rat_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rational g(num, den);
  g.canonicalize();
  return abs(g);
}

Chart::Chart(std::vector<std::string> coords) : coords_(std::move(coords)) {
  for (size_t i = 0; i < coords_.size(); ++i)
    for (size_t j = i + 1; j < coords_.size(); ++j)
      if (coords_[i] == coords_[j])
        fail(ErrorKind::Invalid, "duplicate coordinate name: " + coords_[i]);
}

std::optional<int> Chart::index_of(std::string_view name) const {
  for (size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

ChartPtr make_chart(std::vector<std::string> coords) {
  return std::make_shared<const Chart>(std::move(coords));
}

bool GrLexGreater::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  return a > b; // lexicographic tie-break
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  std::vector<int> mono(nvars, 0);
  mono.at(index) = 1;
  p.add_term(mono, Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) fail(ErrorKind::Invalid, "polynomial is not constant");
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& lead = terms_.begin()->first;
  int d = 0;
  for (int e : lead) d += e;
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.at(var));
  return d;
}

const std::vector<int>& Poly::leading_mono() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.begin()->second;
}

void Poly::add_term(const std::vector<int>& mono, const Rational& coeff) {
  if (coeff == 0) return;
  assert(static_cast<int>(mono.size()) == nvars_);
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly r(nvars_);
  std::vector<int> mono(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) mono[i] = ma[i] + mb[i];
      r.add_term(mono, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [mono, k] : terms_) r.terms_.emplace(mono, k * c);
  return r;
}

Poly Poly::pow(int k) const {
  assert(k >= 0);
  Poly r = Poly::constant(nvars_, Rational(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [mono, c] : terms_) {
    int e = mono.at(var);
    if (e == 0) continue;
    std::vector<int> m = mono;
    m[var] = e - 1;
    r.add_term(m, c * e);
  }
  return r;
}

Rational Poly::eval(const QVec& point) const {
  assert(static_cast<int>(point.size()) == nvars_);
  Rational acc(0);
  for (const auto& [mono, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < mono[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

double Poly::eval_double(const std::vector<double>& point) const {
  assert(static_cast<int>(point.size()) == nvars_);
  double acc = 0.0;
  for (const auto& [mono, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < mono[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Poly Poly::coeff_of(int var, int k) const {
  Poly r(nvars_);
  for (const auto& [mono, c] : terms_) {
    if (mono.at(var) != k) continue;
    std::vector<int> m = mono;
    m[var] = 0;
    r.add_term(m, c);
  }
  return r;
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(0);
  Rational g(0);
  for (const auto& [mono, c] : terms_) g = rat_gcd(g, c);
  if (leading_coeff() < 0) g = -g;
  return g;
}

std::optional<Poly> Poly::divided_exactly_by(const Poly& d) const {
  assert(nvars_ == d.nvars_);
  if (d.is_zero()) fail(ErrorKind::Domain, "polynomial division by zero");
  Poly rem = *this;
  Poly quot(nvars_);
  const auto& dm = d.leading_mono();
  const Rational& dc = d.leading_coeff();
  std::vector<int> qm(nvars_);
  while (!rem.is_zero()) {
    const auto& rm = rem.leading_mono();
    for (int i = 0; i < nvars_; ++i) {
      qm[i] = rm[i] - dm[i];
      if (qm[i] < 0) return std::nullopt;
    }
    Rational qc = rem.leading_coeff() / dc;
    Poly t(nvars_);
    t.add_term(qm, qc);
    quot = quot + t;
    rem = rem - t * d;
  }
  return quot;
}

namespace {

/// Scale to integer coefficients, unit content, positive leading coefficient.
Poly normalize_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = p.content();
  return p.scaled(Rational(1) / c);
}

/// gcd of the coefficients of p viewed as univariate in `var`.
Poly content_in(const Poly& p, int var) {
  Poly g(p.nvars());
  for (int k = 0; k <= p.degree_in(var); ++k) {
    Poly c = p.coeff_of(var, k);
    if (!c.is_zero()) g = poly_gcd(g, c);
  }
  return g;
}

/// Associate of the pseudo-remainder of a by b in `var`.
Poly pseudo_rem(Poly a, const Poly& b, int var) {
  int db = b.degree_in(var);
  Poly lcb = b.coeff_of(var, db);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    Poly lca = a.coeff_of(var, da);
    Poly shift(a.nvars());
    std::vector<int> mono(a.nvars(), 0);
    mono[var] = da - db;
    shift.add_term(mono, Rational(1));
    a = a * lcb - b * lca * shift;
  }
  return a;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_primitive(b);
  if (b.is_zero()) return normalize_primitive(a);
  if (a.is_constant() || b.is_constant())
    return Poly::constant(a.nvars(), Rational(1));

  // Divisibility probe: denominators here are typically nested powers of a
  // common factor, so one operand dividing the other is the frequent case
  // and skips the remainder sequence entirely.
  {
    const Poly& lo = a.total_degree() <= b.total_degree() ? a : b;
    const Poly& hi = a.total_degree() <= b.total_degree() ? b : a;
    if (hi.divided_exactly_by(lo)) return normalize_primitive(lo);
  }

  int var = -1;
  for (int v = a.nvars() - 1; v >= 0; --v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      var = v;
      break;
    }
  }
  assert(var >= 0);
  if (a.degree_in(var) == 0) return poly_gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return poly_gcd(content_in(a, var), b);

  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly A = *a.divided_exactly_by(ca);
  Poly B = *b.divided_exactly_by(cb);
  Poly cont = poly_gcd(ca, cb);

  if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
  while (!B.is_zero()) {
    Poly R = pseudo_rem(A, B, var);
    A = B;
    if (R.is_zero()) {
      B = R;
    } else {
      B = *R.divided_exactly_by(content_in(R, var));
    }
  }
  return normalize_primitive(cont * A);
}

ScalarExpr::ScalarExpr(ChartPtr chart)
    : chart_(std::move(chart)),
      num_(chart_->dim()),
      den_(Poly::constant(chart_->dim(), Rational(1))) {}

ScalarExpr ScalarExpr::zero(ChartPtr chart) { return ScalarExpr(std::move(chart)); }

ScalarExpr ScalarExpr::constant(ChartPtr chart, const Rational& c) {
  ScalarExpr e(std::move(chart));
  e.num_ = Poly::constant(e.chart_->dim(), c);
  e.canonicalize();
  return e;
}

ScalarExpr ScalarExpr::variable(ChartPtr chart, int index) {
  ScalarExpr e(std::move(chart));
  e.num_ = Poly::variable(e.chart_->dim(), index);
  return e;
}

ScalarExpr ScalarExpr::from_poly(ChartPtr chart, Poly num) {
  ScalarExpr e(std::move(chart));
  e.num_ = std::move(num);
  e.canonicalize();
  return e;
}

ScalarExpr ScalarExpr::from_fraction(ChartPtr chart, Poly num, Poly den) {
  if (den.is_zero()) fail(ErrorKind::Domain, "division by zero expression");
  ScalarExpr e(std::move(chart));
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  e.canonicalize();
  return e;
}

Rational ScalarExpr::constant_value() const {
  if (!is_constant()) fail(ErrorKind::Invalid, "expression is not constant");
  if (num_.is_zero()) return Rational(0);
  return num_.constant_value() / den_.constant_value();
}

void ScalarExpr::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(chart_->dim(), Rational(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!(g.is_constant() && g.constant_value() == 1)) {
    num_ = *num_.divided_exactly_by(g);
    den_ = *den_.divided_exactly_by(g);
  }
  normalize_contents();
}

void ScalarExpr::normalize_contents() {
  if (num_.is_zero()) {
    den_ = Poly::constant(chart_->dim(), Rational(1));
    return;
  }
  Rational cn = num_.content();
  Rational cd = den_.content();
  Rational s = cn / cd; // lowest terms, positive denominator
  Rational t = Rational(s.get_den()) / cd;
  num_ = num_.scaled(t);
  den_ = den_.scaled(t);
}

ScalarExpr ScalarExpr::from_reduced(ChartPtr chart, Poly num, Poly den) {
  ScalarExpr e(std::move(chart));
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  e.normalize_contents();
  return e;
}

namespace {
void check_same_chart(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.chart() != b.chart() && !(*a.chart() == *b.chart()))
    fail(ErrorKind::Invalid, "chart mismatch in scalar arithmetic");
}
} // namespace

ScalarExpr ScalarExpr::operator-() const {
  ScalarExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {
bool is_one_poly(const Poly& p) {
  return p.is_constant() && !p.is_zero() && p.constant_value() == 1;
}
} // namespace

// Sums and products keep both operands in lowest terms throughout
// (classical reduced rational arithmetic), so the output needs no
// numerator/denominator gcd — only a content rescale.
ScalarExpr ScalarExpr::operator+(const ScalarExpr& o) const {
  check_same_chart(*this, o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Poly g = poly_gcd(den_, o.den_);
  if (g.is_constant())
    return from_reduced(chart_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly d1 = *den_.divided_exactly_by(g);
  Poly d2 = *o.den_.divided_exactly_by(g);
  Poly t = num_ * d2 + o.num_ * d1;
  if (t.is_zero()) return zero(chart_);
  Poly h = poly_gcd(t, g);
  if (h.is_constant()) return from_reduced(chart_, std::move(t), den_ * d2);
  return from_reduced(chart_, *t.divided_exactly_by(h),
                      d1 * *o.den_.divided_exactly_by(h));
}

ScalarExpr ScalarExpr::operator-(const ScalarExpr& o) const {
  return *this + (-o);
}

ScalarExpr ScalarExpr::operator*(const ScalarExpr& o) const {
  check_same_chart(*this, o);
  if (is_zero() || o.is_zero()) return zero(chart_);
  Poly g1 = poly_gcd(num_, o.den_);
  Poly g2 = poly_gcd(o.num_, den_);
  const Poly& n1 = num_;
  const Poly& n2 = o.num_;
  Poly a = is_one_poly(g1) ? n1 : *n1.divided_exactly_by(g1);
  Poly b = is_one_poly(g2) ? n2 : *n2.divided_exactly_by(g2);
  Poly c = is_one_poly(g2) ? den_ : *den_.divided_exactly_by(g2);
  Poly d = is_one_poly(g1) ? o.den_ : *o.den_.divided_exactly_by(g1);
  return from_reduced(chart_, a * b, c * d);
}

ScalarExpr ScalarExpr::operator/(const ScalarExpr& o) const {
  check_same_chart(*this, o);
  if (o.is_zero()) fail(ErrorKind::Domain, "division by zero expression");
  ScalarExpr inv = from_reduced(o.chart_, o.den_, o.num_);
  return *this * inv;
}

ScalarExpr ScalarExpr::scaled(const Rational& c) const {
  if (c == 0) return zero(chart_);
  return from_reduced(chart_, num_.scaled(c), den_);
}

bool ScalarExpr::operator==(const ScalarExpr& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

ScalarExpr ScalarExpr::partial(int var) const {
  Poly dden = den_.derivative(var);
  if (dden.is_zero())
    return from_fraction(chart_, num_.derivative(var), den_);
  // Factor the repeated part of the denominator out of the quotient rule
  // before reducing; for power-of-a-factor denominators this keeps the gcd
  // operands small.
  Poly e = poly_gcd(den_, dden);
  if (e.is_constant())
    return from_fraction(chart_, num_.derivative(var) * den_ - num_ * dden,
                         den_ * den_);
  Poly dbar = *den_.divided_exactly_by(e);
  return from_fraction(chart_,
                       num_.derivative(var) * dbar - num_ * *dden.divided_exactly_by(e),
                       den_ * dbar);
}

Rational ScalarExpr::eval(const QVec& point) const {
  Rational d = den_.eval(point);
  if (d == 0)
    fail(ErrorKind::Domain, "denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

double ScalarExpr::eval_double(const std::vector<double>& point) const {
  return num_.eval_double(point) / den_.eval_double(point);
}

std::string Poly::str(const Chart& chart) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rational c = coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        out << " - ";
        c = -c;
      } else {
        out << " + ";
      }
    }
    std::vector<std::string> parts;
    bool any_var = false;
    for (int e : mono)
      if (e > 0) any_var = true;
    if (!any_var || c != 1) parts.push_back(to_string(c));
    for (int i = 0; i < nvars_; ++i) {
      if (mono[i] == 0) continue;
      if (mono[i] == 1)
        parts.push_back(chart.name(i));
      else
        parts.push_back(chart.name(i) + "^" + std::to_string(mono[i]));
    }
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out << "*";
      out << parts[i];
    }
  }
  return out.str();
}

std::string ScalarExpr::str() const {
  if (is_zero()) return "0";
  std::string n = num_.str(*chart_);
  if (den_.is_constant() && den_.constant_value() == 1) return n;
  if (num_.terms().size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.str(*chart_) + ")";
}

// ---------------------------------------------------------------------------
// Expression parser.

namespace {

using lexdetail::Lexer;
using lexdetail::Token;

class Parser {
public:
  Parser(ChartPtr chart, std::string_view src) : chart_(std::move(chart)), lex_(src) {
    advance();
  }

  ScalarExpr parse_all() {
    ScalarExpr e = parse_expr();
    expect(Token::End, "end of input");
    return e;
  }

private:
  void advance() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const std::string& what) {
    if (tok_.kind != k)
      fail(ErrorKind::Parse, "expected " + what + " at position " + std::to_string(tok_.pos));
  }

  ScalarExpr parse_expr() {
    ScalarExpr acc = parse_term();
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool minus = tok_.kind == Token::Minus;
      advance();
      ScalarExpr rhs = parse_term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  ScalarExpr parse_term() {
    ScalarExpr acc = parse_factor();
    while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
      bool div = tok_.kind == Token::Slash;
      size_t pos = tok_.pos;
      advance();
      ScalarExpr rhs = parse_factor();
      if (div && rhs.is_zero())
        fail(ErrorKind::Parse, "division by zero at position " + std::to_string(pos));
      acc = div ? acc / rhs : acc * rhs;
    }
    return acc;
  }

  ScalarExpr parse_factor() {
    if (tok_.kind == Token::Minus) {
      advance();
      return -parse_factor();
    }
    ScalarExpr base = parse_base();
    if (tok_.kind == Token::Caret) {
      advance();
      expect(Token::Int, "nonnegative integer exponent");
      long e = std::stol(tok_.text);
      if (e > 256)
        fail(ErrorKind::Parse, "exponent too large at position " + std::to_string(tok_.pos));
      advance();
      ScalarExpr acc = ScalarExpr::constant(base.chart(), Rational(1));
      for (long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  ScalarExpr parse_base() {
    switch (tok_.kind) {
      case Token::Int: {
        Rational v(tok_.text);
        v.canonicalize();
        advance();
        return ScalarExpr::constant(chart_, v);
      }
      case Token::Ident: {
        auto idx = chart_->index_of(tok_.text);
        if (!idx)
          fail(ErrorKind::Parse, "unknown identifier '" + tok_.text + "' at position " +
                                     std::to_string(tok_.pos));
        advance();
        return ScalarExpr::variable(chart_, *idx);
      }
      case Token::LParen: {
        advance();
        ScalarExpr e = parse_expr();
        expect(Token::RParen, "')'");
        advance();
        return e;
      }
      default:
        fail(ErrorKind::Parse,
             "expected value at position " + std::to_string(tok_.pos));
    }
  }

  ChartPtr chart_;
  Lexer lex_;
  Token tok_;
};

} // namespace

ScalarExpr ScalarExpr::parse(ChartPtr chart, std::string_view text) {
  Parser p(std::move(chart), text);
  return p.parse_all();
}

} // namespace plectic
