#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plectic/cartan.hpp"
#include "test_util.hpp"

using namespace plectic;
using namespace plectic::testutil;

TEST_CASE("wedge basics") {
  auto c = chart_xyz();
  Form dx = basis_form(c, 0), dy = basis_form(c, 1), dz = basis_form(c, 2);

  CHECK(dx.wedge(dx).is_zero());
  Form xdy = form_term(c, {1}, "x");
  Form expect = form_term(c, {1, 2}, "x");
  CHECK(xdy.wedge(dz) == expect);
  CHECK(dz.wedge(xdy) == -expect); // odd-odd swap

  // Graded commutativity and associativity on random forms.
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    int p = trial % 3, q = (trial / 3) % 3;
    Form a = random_form(c, p, rng), b = random_form(c, q, rng), w = random_form(c, 1, rng);
    Form ab = a.wedge(b), ba = b.wedge(a);
    if ((p * q) % 2 == 1) ba = -ba;
    CHECK(ab == ba);
    CHECK(a.wedge(b.wedge(w)) == ab.wedge(w));
  }
}

TEST_CASE("flat quaternionic 4-form expands to six times the volume form") {
  auto c = chart_r4();
  auto d = [&](int i) { return basis_form(c, i); };
  Form t1 = d(0).wedge(d(1)) + d(2).wedge(d(3));
  Form t2 = d(0).wedge(d(2)) - d(1).wedge(d(3));
  Form t3 = d(0).wedge(d(3)) + d(1).wedge(d(2));
  Form omega = t1.wedge(t1) + t2.wedge(t2) + t3.wedge(t3);
  Form expect = form_term(c, {0, 1, 2, 3}, "6");
  CHECK(omega == expect);
}

TEST_CASE("exterior derivative") {
  auto c = chart_xyz();
  CHECK(ext_d(form_term(c, {1}, "x")) == form_term(c, {0, 1}, "1"));
  CHECK(ext_d(Form::scalar(sc(c, "7/2"))).is_zero());

  // B on the punctured chart: d B is the inverse-square volume multiple.
  Form B(c, 2);
  B.add_term({1, 2}, sc(c, "x/(x^2+y^2+z^2)"));
  B.add_term({2, 0}, sc(c, "y/(x^2+y^2+z^2)"));
  B.add_term({0, 1}, sc(c, "z/(x^2+y^2+z^2)"));
  Form dB = ext_d(B);
  CHECK(dB == form_term(c, {0, 1, 2}, "1/(x^2+y^2+z^2)"));

  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 25; ++trial) {
    Form a = random_form(c, trial % 3, rng);
    CHECK(ext_d(ext_d(a)).is_zero());
    Form b = random_form(c, trial % 2, rng);
    // Graded Leibniz rule for d.
    Form lhs = ext_d(a.wedge(b));
    Form rhs = ext_d(a).wedge(b);
    Form mixed = a.wedge(ext_d(b));
    rhs += (a.degree() % 2 == 0) ? mixed : -mixed;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("interior product ordering and antiderivation") {
  auto c = chart_xyz();
  MultiVector px = basis_vector(c, 0), py = basis_vector(c, 1), pz = basis_vector(c, 2);
  Form vol = form_term(c, {0, 1, 2}, "1");

  CHECK(interior(pz, vol) == form_term(c, {0, 1}, "1"));
  // The first factor of the wedge contracts first.
  Form one = interior(px.wedge(py), form_term(c, {0, 1}, "1"));
  CHECK(one == Form::scalar(sc(c, "1")));
  CHECK(interior(MultiVector(c, 1), vol).is_zero());

  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 25; ++trial) {
    MultiVector v = random_mv(c, 1, rng);
    Form a = random_form(c, 1 + trial % 2, rng), b = random_form(c, 1 + (trial / 2) % 2, rng);
    Form lhs = interior(v, a.wedge(b));
    Form rhs = interior(v, a).wedge(b);
    Form mixed = a.wedge(interior(v, b));
    rhs += (a.degree() % 2 == 0) ? mixed : -mixed;
    CHECK(lhs == rhs);
    // Nested convention: iota(u ^ v) = iota_v iota_u.
    MultiVector u = random_mv(c, 1, rng);
    Form big = random_form(c, 3, rng);
    CHECK(interior(u.wedge(v), big) == interior(v, interior(u, big)));
  }
}

TEST_CASE("lie derivative") {
  auto c = chart_xyz();
  CHECK(lie_derivative(basis_vector(c, 0), form_term(c, {1}, "x")) == form_term(c, {1}, "1"));
  CHECK(lie_derivative(basis_vector(c, 2), form_term(c, {2}, "y")).is_zero());
  CHECK(lie_derivative(MultiVector(c, 1), form_term(c, {0, 1}, "x*y")).is_zero());

  // L_{x d/dy}(y dx) = x dx.
  CHECK(lie_derivative(mv_term(c, {1}, "x"), form_term(c, {0}, "y")) == form_term(c, {0}, "x"));

  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 25; ++trial) {
    MultiVector v = random_mv(c, 1, rng);
    Form a = random_form(c, trial % 3, rng);
    // Cartan magic formula for degree-1 fields.
    Form magic = ext_d(interior(v, a)) + interior(v, ext_d(a));
    CHECK(lie_derivative(v, a) == magic);
    // d commutes with L_v.
    CHECK(ext_d(lie_derivative(v, a)) == lie_derivative(v, ext_d(a)));
  }
}

TEST_CASE("schouten bracket") {
  auto c = chart_xyz();
  MultiVector px = basis_vector(c, 0), py = basis_vector(c, 1);
  CHECK(schouten(px, mv_term(c, {1}, "x")) == mv_term(c, {1}, "1"));
  CHECK(schouten(px, py).is_zero());
  MultiVector u = mv_term(c, {0}, "2"), vw = mv_term(c, {1, 2}, "3");
  CHECK(schouten(u, vw).is_zero());

  // [x d/dy, y d/dx] = x d/dx - y d/dy.
  MultiVector lhs = schouten(mv_term(c, {1}, "x"), mv_term(c, {0}, "y"));
  MultiVector expect = mv_term(c, {0}, "x") - mv_term(c, {1}, "y");
  CHECK(lhs == expect);

  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 12; ++trial) {
    int du = 1 + trial % 2, dv = 1 + (trial / 2) % 2, dw = 1 + (trial / 4) % 2;
    MultiVector a = random_mv(c, du, rng, 2), b = random_mv(c, dv, rng, 2),
                w = random_mv(c, dw, rng, 2);
    // Graded antisymmetry: [u,v] = -(-1)^{(|u|-1)(|v|-1)} [v,u].
    MultiVector flip = schouten(b, a);
    if (((du - 1) * (dv - 1)) % 2 == 0) flip = -flip;
    CHECK(schouten(a, b) == flip);
    // Graded Jacobi: [u,[v,w]] = [[u,v],w] + (-1)^{(|u|-1)(|v|-1)} [v,[u,w]].
    MultiVector jac = schouten(a, schouten(b, w)) - schouten(schouten(a, b), w);
    MultiVector tail = schouten(b, schouten(a, w));
    if (((du - 1) * (dv - 1)) % 2 == 1) tail = -tail;
    CHECK(jac == tail);
  }
}

TEST_CASE("graded commutator identity between interior and Lie") {
  auto c = chart_xyz();
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 18; ++trial) {
    int du = 1 + trial % 3, dv = 1 + (trial / 3) % 2;
    MultiVector u = random_mv(c, du, rng, 2), v = random_mv(c, dv, rng, 2);
    Form a = random_form(c, 3, rng, 2);
    Form lhs = interior(schouten(u, v), a);
    Form first = lie_derivative(u, interior(v, a));
    if (((du - 1) * dv) % 2 == 1) first = -first;
    Form rhs = first - interior(v, lie_derivative(u, a));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pointwise evaluation") {
  auto c = chart_xyz();
  Form w = form_term(c, {0, 1}, "x");
  QVec e1{rat(1), rat(0), rat(0)}, e2{rat(0), rat(1), rat(0)};
  QVec pt{rat(3), rat(7), rat(-1)};
  std::vector<QVec> vecs{e1, e2};
  CHECK(w.eval(vecs, pt) == rat(3));
  std::vector<QVec> flipped{e2, e1};
  CHECK(w.eval(flipped, pt) == rat(-3));
}

TEST_CASE("apply_vector") {
  auto c = chart_xy();
  ScalarExpr f = sc(c, "x^2*y");
  CHECK(apply_vector(mv_term(c, {0}, "1"), f) == sc(c, "2*x*y"));
  CHECK(apply_vector(mv_term(c, {1}, "x"), f) == sc(c, "x^3"));
}

TEST_CASE("form expression parsing") {
  auto c = chart_xyz();
  CHECK(parse_form(c, "x*dy") == form_term(c, {1}, "x"));
  CHECK(parse_form(c, "dy^dz") == form_term(c, {1, 2}, "1"));
  CHECK(parse_form(c, "dz^dy") == form_term(c, {1, 2}, "-1"));
  CHECK(parse_form(c, "x*dy^dz - 2*dz^dx") ==
        form_term(c, {1, 2}, "x") + form_term(c, {0, 2}, "2"));
  CHECK(parse_form(c, "1/(x^2+y^2)*dx") == form_term(c, {0}, "1/(x^2+y^2)"));
  CHECK(parse_form(c, "(x+y)*dx^dy") == form_term(c, {0, 1}, "x+y"));
  CHECK(parse_form(c, "x^2*y - z") == Form::scalar(sc(c, "x^2*y-z")));
  CHECK(parse_form(c, "dx^2").is_zero());   // dx wedge dx
  CHECK(parse_form(c, "-dy/2") == form_term(c, {1}, "-1/2"));
  CHECK(parse_form(c, "x * dy ^ dz") == form_term(c, {1, 2}, "x"));
  CHECK(parse_form(c, "0*dx").is_zero());

  CHECK_THROWS_AS(parse_form(c, "dq"), PlecticError);
  CHECK_THROWS_AS(parse_form(c, "x*"), PlecticError);
  CHECK_THROWS_AS(parse_form(c, "dx/dy"), PlecticError);
  CHECK_THROWS_AS(parse_form(c, "dx/(x-x)"), PlecticError);
  CHECK_THROWS_AS(parse_form(c, "dx)"), PlecticError);

  // A chart variable whose name begins with 'd' shadows the differential.
  auto odd = make_chart({"dx", "u"});
  CHECK(parse_form(odd, "dx") == Form::scalar(ScalarExpr::variable(odd, 0)));
  CHECK(parse_form(odd, "ddx") == basis_form(odd, 0));
}

TEST_CASE("form printing round-trips") {
  auto c = chart_xyz();
  CHECK(form_to_string(form_term(c, {1}, "1")) == "dy");
  CHECK(form_to_string(form_term(c, {1}, "-1")) == "-dy");
  CHECK(form_to_string(Form(c, 2)) == "0");
  CHECK(form_to_string(Form::scalar(sc(c, "x+1"))) == sc(c, "x+1").str());
  CHECK(mv_to_string(mv_term(c, {2}, "-1")) == "-d/dz");
  CHECK(mv_to_string(mv_term(c, {0, 1}, "x")) == "x*d/dx^d/dy");

  std::mt19937_64 rng(29);
  for (int deg = 0; deg <= 3; ++deg) {
    for (int trial = 0; trial < 10; ++trial) {
      Form f = random_form(c, deg, rng, 2);
      CHECK(parse_form(c, form_to_string(f)) == f);
    }
  }
}
