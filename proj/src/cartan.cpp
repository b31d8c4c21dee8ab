#include "plectic/cartan.hpp"

#include <algorithm>
#include <sstream>

#include "lex_detail.hpp"

namespace plectic {

Form ext_d(const Form& a) {
  const ChartPtr& chart = a.chart();
  Form r(chart, a.degree() + 1);
  std::vector<int> idx;
  for (const auto& [ia, c] : a.terms()) {
    for (int i = 0; i < chart->dim(); ++i) {
      ScalarExpr dc = c.partial(i);
      if (dc.is_zero()) continue;
      idx.clear();
      idx.push_back(i);
      idx.insert(idx.end(), ia.begin(), ia.end());
      r.add_term(idx, dc);
    }
  }
  return r;
}

namespace {

/// i_{d/di} applied to a single sorted basis form; returns false if i absent.
bool contract_index(std::vector<int>& idx, int i, int& sign) {
  auto it = std::find(idx.begin(), idx.end(), i);
  if (it == idx.end()) return false;
  int pos = static_cast<int>(it - idx.begin());
  sign = (pos % 2 == 0) ? 1 : -1;
  idx.erase(it);
  return true;
}

} // namespace

Form interior(const MultiVector& v, const Form& alpha) {
  const ChartPtr& chart = alpha.chart();
  int q = v.degree();
  if (q == 0) return alpha.scaled(v.scalar_part());
  Form r(chart, std::max(alpha.degree() - q, 0));
  if (alpha.degree() < q) return r;
  for (const auto& [vi, vc] : v.terms()) {
    for (const auto& [ai, ac] : alpha.terms()) {
      // iota(e_{i1} ^ ... ^ e_{iq}) = i_{e_{iq}} ... i_{e_{i1}}: contract i1 first.
      std::vector<int> idx = ai;
      int total_sign = 1;
      bool ok = true;
      for (int k = 0; k < q; ++k) {
        int s = 1;
        if (!contract_index(idx, vi[k], s)) {
          ok = false;
          break;
        }
        total_sign *= s;
      }
      if (!ok) continue;
      ScalarExpr c = vc * ac;
      r.add_term(idx, total_sign > 0 ? c : -c);
    }
  }
  return r;
}

Form lie_derivative(const MultiVector& v, const Form& alpha) {
  Form first = ext_d(interior(v, alpha));
  Form second = interior(v, ext_d(alpha));
  return (v.degree() % 2 == 0) ? first - second : first + second;
}

MultiVector basis_vector(const ChartPtr& chart, int i) {
  MultiVector v(chart, 1);
  v.add_term({i}, ScalarExpr::constant(chart, Rational(1)));
  return v;
}

Form basis_form(const ChartPtr& chart, int i) {
  Form f(chart, 1);
  f.add_term({i}, ScalarExpr::constant(chart, Rational(1)));
  return f;
}

ScalarExpr apply_vector(const MultiVector& v, const ScalarExpr& f) {
  if (v.degree() != 1) fail(ErrorKind::Invalid, "apply_vector needs a vector field");
  ScalarExpr acc = ScalarExpr::zero(f.chart());
  for (const auto& [idx, c] : v.terms()) acc += c * f.partial(idx[0]);
  return acc;
}

namespace {

/// Lie bracket of coefficient-carrying coordinate fields f d/da and g d/db.
MultiVector vf_bracket(const ChartPtr& chart, const ScalarExpr& f, int a,
                       const ScalarExpr& g, int b) {
  MultiVector r(chart, 1);
  ScalarExpr fg = f * g.partial(a);
  if (!fg.is_zero()) r.add_term({b}, fg);
  ScalarExpr gf = g * f.partial(b);
  if (!gf.is_zero()) r.add_term({a}, -gf);
  return r;
}

} // namespace

MultiVector schouten(const MultiVector& u, const MultiVector& v) {
  const ChartPtr& chart = u.chart();
  int m = u.degree(), n = v.degree();
  if (m < 1 || n < 1)
    fail(ErrorKind::Invalid, "schouten bracket needs degrees >= 1");
  MultiVector acc(chart, m + n - 1);
  ScalarExpr one = ScalarExpr::constant(chart, Rational(1));
  for (const auto& [ui, uc] : u.terms()) {
    for (const auto& [vi, vc] : v.terms()) {
      // Decompose each term with its coefficient on the first factor.
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
          const ScalarExpr& fu = (i == 1) ? uc : one;
          const ScalarExpr& fv = (j == 1) ? vc : one;
          MultiVector part = vf_bracket(chart, fu, ui[i - 1], fv, vi[j - 1]);
          if (part.is_zero()) continue;
          for (int k = 1; k <= m; ++k) {
            if (k == i) continue;
            MultiVector factor(chart, 1);
            factor.add_term({ui[k - 1]}, (k == 1) ? uc : one);
            part = part.wedge(factor);
          }
          for (int l = 1; l <= n; ++l) {
            if (l == j) continue;
            MultiVector factor(chart, 1);
            factor.add_term({vi[l - 1]}, (l == 1) ? vc : one);
            part = part.wedge(factor);
          }
          if ((i + j) % 2 != 0) part = -part;
          acc += part;
        }
      }
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Form expression parser and canonical printers.

namespace {

using lexdetail::Lexer;
using lexdetail::Token;

class FormParser {
public:
  FormParser(ChartPtr chart, std::string_view src) : chart_(std::move(chart)), lex_(src) {
    advance();
  }

  Form parse_all() {
    Form e = parse_expr();
    expect(Token::End, "end of input");
    return e;
  }

private:
  void advance() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const std::string& what) {
    if (tok_.kind != k)
      fail(ErrorKind::Parse, "expected " + what + " at position " + std::to_string(tok_.pos));
  }

  Form parse_expr() {
    Form acc = parse_term();
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool minus = tok_.kind == Token::Minus;
      advance();
      Form rhs = parse_term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Form parse_term() {
    Form acc = parse_factor();
    while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
      bool div = tok_.kind == Token::Slash;
      size_t pos = tok_.pos;
      advance();
      Form rhs = parse_factor();
      if (div) {
        if (rhs.degree() != 0 || rhs.is_zero())
          fail(ErrorKind::Parse,
               "divisor must be a nonzero scalar at position " + std::to_string(pos));
        acc = acc.scaled(ScalarExpr::constant(chart_, Rational(1)) / rhs.scalar_part());
      } else {
        acc = acc.wedge(rhs);
      }
    }
    return acc;
  }

  Form parse_factor() {
    if (tok_.kind == Token::Minus) {
      advance();
      return -parse_factor();
    }
    Form acc = parse_base();
    while (tok_.kind == Token::Caret) {
      advance();
      if (tok_.kind == Token::Int) {
        long e = std::stol(tok_.text);
        if (e > 256)
          fail(ErrorKind::Parse, "exponent too large at position " + std::to_string(tok_.pos));
        advance();
        Form pow = Form::scalar(ScalarExpr::constant(chart_, Rational(1)));
        for (long i = 0; i < e; ++i) pow = pow.wedge(acc);
        acc = pow;
      } else {
        acc = acc.wedge(parse_base());
      }
    }
    return acc;
  }

  Form parse_base() {
    switch (tok_.kind) {
      case Token::Int: {
        Rational v(tok_.text);
        v.canonicalize();
        advance();
        return Form::scalar(ScalarExpr::constant(chart_, v));
      }
      case Token::Ident: {
        if (auto idx = chart_->index_of(tok_.text)) {
          advance();
          return Form::scalar(ScalarExpr::variable(chart_, *idx));
        }
        if (tok_.text.size() > 1 && tok_.text[0] == 'd') {
          if (auto idx = chart_->index_of(tok_.text.substr(1))) {
            advance();
            return basis_form(chart_, *idx);
          }
        }
        fail(ErrorKind::Parse, "unknown identifier '" + tok_.text + "' at position " +
                                   std::to_string(tok_.pos));
      }
      case Token::LParen: {
        advance();
        Form e = parse_expr();
        expect(Token::RParen, "')'");
        advance();
        return e;
      }
      default:
        fail(ErrorKind::Parse, "expected value at position " + std::to_string(tok_.pos));
    }
  }

  ChartPtr chart_;
  Lexer lex_;
  Token tok_;
};

/// True when `s` has a '+' or '-' outside parentheses past position 0, i.e.
/// prefixing it to "*basis" would change how it groups.
bool has_toplevel_sum(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

template <class Tag>
std::string tensor_to_string(const AltTensor<Tag>& t, const char* basis_prefix) {
  if (t.is_zero()) return "0";
  if (t.degree() == 0) return t.scalar_part().str();
  const auto& names = t.chart()->names();
  std::string out;
  for (const auto& [idx, c] : t.terms()) {
    std::string basis;
    for (size_t k = 0; k < idx.size(); ++k) {
      if (k) basis += "^";
      basis += basis_prefix + names[idx[k]];
    }
    std::string cs = c.str();
    std::string term;
    if (cs == "1") term = basis;
    else if (cs == "-1") term = "-" + basis;
    else if (has_toplevel_sum(cs)) term = "(" + cs + ")*" + basis;
    else term = cs + "*" + basis;
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

} // namespace

Form parse_form(const ChartPtr& chart, std::string_view text) {
  FormParser p(chart, text);
  return p.parse_all();
}

std::string form_to_string(const Form& a) { return tensor_to_string(a, "d"); }

std::string mv_to_string(const MultiVector& v) { return tensor_to_string(v, "d/d"); }

} // namespace plectic
