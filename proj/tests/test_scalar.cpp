#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plectic/error.hpp"
#include "plectic/scalar.hpp"

using namespace plectic;

namespace {

ChartPtr xy() { return make_chart({"x", "y"}); }
ChartPtr xyz() { return make_chart({"x", "y", "z"}); }

ScalarExpr sp(const ChartPtr& c, const std::string& s) { return ScalarExpr::parse(c, s); }

/// Random small polynomial expression, degree <= 2 per variable.
ScalarExpr random_poly_expr(const ChartPtr& chart, std::mt19937_64& rng, int terms = 3) {
  ScalarExpr acc = ScalarExpr::zero(chart);
  for (int t = 0; t < terms; ++t) {
    long coeff = static_cast<long>(rng() % 9) - 4;
    ScalarExpr mono = ScalarExpr::constant(chart, Rational(coeff));
    for (int v = 0; v < chart->dim(); ++v) {
      int e = static_cast<int>(rng() % 3);
      for (int k = 0; k < e; ++k) mono = mono * ScalarExpr::variable(chart, v);
    }
    acc = acc + mono;
  }
  return acc;
}

} // namespace

TEST_CASE("parse and canonical print round-trip") {
  auto c = xy();
  for (const char* src : {"x^2 + y", "x", "0", "7", "-x", "x*y - y*x",
                          "(x + y)^2", "1/(x^2 + y^2)", "3*x/2 - 1/2",
                          "x/(y + 1)", "-2*x/(x^4 + 2*x^2*y^2 + y^4)"}) {
    ScalarExpr e = sp(c, src);
    ScalarExpr again = sp(c, e.str());
    CHECK(e == again);
  }
}

TEST_CASE("canonical form collapses common factors") {
  auto c = xy();
  ScalarExpr e = sp(c, "(x^2 - 1)/(x - 1)");
  CHECK(e == sp(c, "x + 1"));
  CHECK(e.str() == "x + 1");

  CHECK(sp(c, "(x + y)^2/(x + y)").str() == "x + y");
  CHECK(sp(c, "x*y - y*x").is_zero());
  CHECK(sp(c, "x*y - y*x").str() == "0");
}

TEST_CASE("printer emits graded-lex order with integer coefficients") {
  auto c = xy();
  CHECK(sp(c, "1 + y^2 + x + x*y + x^2").str() == "x^2 + x*y + y^2 + x + 1");
  CHECK(sp(c, "y - 2*x").str() == "-2*x + y");
  // Halves scale to an integer numerator over a constant denominator.
  CHECK(sp(c, "x/2").str() == "x/(2)");
  CHECK(sp(c, sp(c, "x/2").str()) == sp(c, "x/2"));
}

TEST_CASE("operator precedence and unary minus") {
  auto c = xy();
  CHECK(sp(c, "-x^2 + 2") == sp(c, "2 - x^2"));
  CHECK(sp(c, "6/2*3") == sp(c, "9"));
  CHECK(sp(c, "2*x^3") == sp(c, "2*(x^3)"));
  CHECK(sp(c, "-x*y") == -sp(c, "x*y"));
  CHECK(sp(c, "x - -y") == sp(c, "x + y"));
}

TEST_CASE("partial derivative with quotient rule") {
  auto c = xy();
  ScalarExpr e = sp(c, "1/(x^2 + y^2)");
  ScalarExpr dx = e.partial(0);
  CHECK(dx == sp(c, "-2*x/(x^2 + y^2)^2"));
  CHECK(dx.str() == "-2*x/(x^4 + 2*x^2*y^2 + y^4)");

  CHECK(sp(c, "x^3*y").partial(0) == sp(c, "3*x^2*y"));
  CHECK(sp(c, "x^3*y").partial(1) == sp(c, "x^3"));
  CHECK(sp(c, "7").partial(0).is_zero());
}

TEST_CASE("exact evaluation and domain errors") {
  auto c = xyz();
  ScalarExpr e = sp(c, "(x + y)/(x - z)");
  CHECK(e.eval({Rational(3), Rational(1), Rational(2)}) == Rational(4));
  CHECK_THROWS_AS(e.eval({Rational(1), Rational(0), Rational(1)}), PlecticError);

  ScalarExpr half = sp(c, "1/2");
  CHECK(half.eval({Rational(0), Rational(0), Rational(0)}) == Rational(1, 2));
}

TEST_CASE("parse errors carry positions and kinds") {
  auto c = xy();
  CHECK_THROWS_WITH_AS(sp(c, "x + w"), doctest::Contains("unknown identifier 'w'"),
                       PlecticError);
  CHECK_THROWS_WITH_AS(sp(c, "x^-2"), doctest::Contains("nonnegative integer exponent"),
                       PlecticError);
  CHECK_THROWS_AS(sp(c, "x +"), PlecticError);
  CHECK_THROWS_AS(sp(c, "(x"), PlecticError);
  CHECK_THROWS_AS(sp(c, "x $ y"), PlecticError);
  CHECK_THROWS_AS(sp(c, "1/(x - x)"), PlecticError);
  try {
    sp(c, "x + w");
    FAIL("expected throw");
  } catch (const PlecticError& err) {
    CHECK(err.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("field axioms on random expressions") {
  auto c = xyz();
  std::mt19937_64 rng(20260814u);
  for (int trial = 0; trial < 40; ++trial) {
    ScalarExpr a = random_poly_expr(c, rng);
    ScalarExpr b = random_poly_expr(c, rng);
    ScalarExpr d = random_poly_expr(c, rng);
    CHECK((a + b) + d == a + (b + d));
    CHECK(a + b == b + a);
    CHECK(a * (b + d) == a * b + a * d);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      if (!a.is_zero()) CHECK((a / b) * (b / a) == ScalarExpr::constant(c, Rational(1)));
    }
    CHECK_THROWS_AS(a / ScalarExpr::zero(c), PlecticError);
  }
}

TEST_CASE("canonical invariants hold after arithmetic") {
  auto c = xyz();
  std::mt19937_64 rng(7u);
  for (int trial = 0; trial < 25; ++trial) {
    ScalarExpr a = random_poly_expr(c, rng);
    ScalarExpr b = random_poly_expr(c, rng);
    if (b.is_zero()) continue;
    ScalarExpr q = a / b;
    // Numerator and denominator are coprime...
    Poly g = poly_gcd(q.num(), q.den());
    CHECK(g.is_constant());
    if (!q.is_zero()) {
      // ...with integer coefficients, coprime contents, positive leading
      // denominator coefficient; zero is 0/1.
      Rational cn = q.num().content();
      Rational cd = q.den().content();
      CHECK(is_integer(cn));
      CHECK(is_integer(cd));
      CHECK(rat_gcd(cn, cd) == Rational(1));
      CHECK(q.den().leading_coeff() > 0);
    } else {
      CHECK(q.den().is_constant());
      CHECK(q.den().constant_value() == Rational(1));
    }
  }
}

TEST_CASE("polynomial gcd oracle: re-multiplication") {
  auto c = xy();
  std::mt19937_64 rng(99u);
  for (int trial = 0; trial < 15; ++trial) {
    ScalarExpr a = random_poly_expr(c, rng, 2);
    ScalarExpr b = random_poly_expr(c, rng, 2);
    ScalarExpr m = random_poly_expr(c, rng, 2);
    Poly pa = (a * m).num(), pb = (b * m).num();
    if (pa.is_zero() || pb.is_zero()) continue;
    Poly g = poly_gcd(pa, pb);
    // g divides both products and is divisible by the common factor's
    // primitive part.
    CHECK(pa.divided_exactly_by(g).has_value());
    CHECK(pb.divided_exactly_by(g).has_value());
    if (!m.is_zero()) {
      Poly mm = m.num();
      Poly mg = poly_gcd(mm, g);
      CHECK((mm.total_degree() == 0 || !mg.is_constant() ||
             g.total_degree() >= 0)); // sanity
      CHECK(g.divided_exactly_by(poly_gcd(mm, g)).has_value());
    }
  }
}

TEST_CASE("eval_double tracks exact evaluation") {
  auto c = xy();
  ScalarExpr e = sp(c, "(3*x^2 - y)/(x + 2)");
  QVec pt = {Rational(1, 2), Rational(3)};
  double exact = to_double(e.eval(pt));
  double approx = e.eval_double({0.5, 3.0});
  CHECK(std::abs(exact - approx) < 1e-12);
}
