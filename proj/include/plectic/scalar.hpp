#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

/// An ordered list of coordinate names; fixes variable order for canonical
/// printing and for every exponent vector in the module.
class Chart {
public:
  explicit Chart(std::vector<std::string> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::string& name(int i) const { return coords_.at(i); }
  const std::vector<std::string>& names() const { return coords_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const Chart& other) const { return coords_ == other.coords_; }

private:
  std::vector<std::string> coords_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> coords);

/// Graded-lexicographic order on exponent vectors: higher total degree first,
/// ties broken lexicographically (larger power of an earlier variable first).
/// Used descending so that map iteration starts at the leading term.
struct GrLexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
public:
  using TermMap = std::map<std::vector<int>, Rational, GrLexGreater>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero polynomial gives 0).
  Rational constant_value() const;
  int total_degree() const;
  int degree_in(int var) const;
  const TermMap& terms() const { return terms_; }

  const std::vector<int>& leading_mono() const;
  const Rational& leading_coeff() const;

  void add_term(const std::vector<int>& mono, const Rational& coeff);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly pow(int k) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Poly derivative(int var) const;
  Rational eval(const QVec& point) const;
  double eval_double(const std::vector<double>& point) const;

  /// Coefficient of x_var^k, as a polynomial with the same variable list
  /// (exponent of x_var forced to zero).
  Poly coeff_of(int var, int k) const;

  /// Signed rational content: gcd of |coefficients| carrying the sign of the
  /// graded-lex leading coefficient. Zero polynomial has content 0.
  Rational content() const;

  /// Exact division; nullopt if the quotient is not polynomial.
  std::optional<Poly> divided_exactly_by(const Poly& d) const;

  std::string str(const Chart& chart) const;

private:
  int nvars_;
  TermMap terms_;
};

/// Polynomial gcd over the rationals, normalized to integer coefficients,
/// unit content, positive leading coefficient. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Canonical element of the rational function field over a chart.
/// Invariants: numerator and denominator are coprime polynomials with integer
/// coefficients and coprime contents, the denominator's graded-lex leading
/// coefficient is positive, and zero is represented as 0/1.
class ScalarExpr {
public:
  ScalarExpr() = default;
  explicit ScalarExpr(ChartPtr chart);

  static ScalarExpr zero(ChartPtr chart);
  static ScalarExpr constant(ChartPtr chart, const Rational& c);
  static ScalarExpr variable(ChartPtr chart, int index);
  static ScalarExpr from_poly(ChartPtr chart, Poly num);
  static ScalarExpr from_fraction(ChartPtr chart, Poly num, Poly den);

  /// Parse the expression grammar over the chart. Throws PlecticError(Parse)
  /// with a character position on malformed input or unknown identifiers.
  static ScalarExpr parse(ChartPtr chart, std::string_view text);

  const ChartPtr& chart() const { return chart_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;

  ScalarExpr operator-() const;
  ScalarExpr operator+(const ScalarExpr& o) const;
  ScalarExpr operator-(const ScalarExpr& o) const;
  ScalarExpr operator*(const ScalarExpr& o) const;
  /// Throws PlecticError(Domain) on division by the zero expression.
  ScalarExpr operator/(const ScalarExpr& o) const;
  ScalarExpr& operator+=(const ScalarExpr& o) { return *this = *this + o; }
  ScalarExpr& operator-=(const ScalarExpr& o) { return *this = *this - o; }
  ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }
  ScalarExpr scaled(const Rational& c) const;
  bool operator==(const ScalarExpr& o) const;

  ScalarExpr partial(int var) const;

  /// Exact evaluation; throws PlecticError(Domain) if the denominator
  /// vanishes at the point.
  Rational eval(const QVec& point) const;
  double eval_double(const std::vector<double>& point) const;

  /// Canonical printer; output re-parses to an equal expression.
  std::string str() const;

private:
  void canonicalize();
  /// Assumes num/den already coprime as polynomials; only rescales contents.
  static ScalarExpr from_reduced(ChartPtr chart, Poly num, Poly den);
  void normalize_contents();

  ChartPtr chart_;
  Poly num_, den_;
};

} // namespace plectic
