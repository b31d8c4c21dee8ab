#include "plectic/leibniz.hpp"

#include "plectic/error.hpp"

namespace plectic {

namespace {

GradedElement ge_zero(const PlecticStructure& P, int degree) {
  // Degrees outside the complex only ever hold the zero element; park its
  // payload at form degree 0 so the tensor stays well formed.
  int form_degree = P.n - 1 - degree;
  if (form_degree < 0 || form_degree > P.chart->dim()) form_degree = 0;
  return GradedElement{degree, Form(P.chart, form_degree), MultiVector(P.chart, 1)};
}

bool fully_zero(const GradedElement& a) { return a.payload.is_zero() && a.vf.is_zero(); }

void require_2plectic(const PlecticStructure& P) {
  if (P.n != 2)
    fail(ErrorKind::Invalid, "the weak Lie 2-algebra comparison needs a 2-plectic structure");
}

ScalarExpr scalar_bracket_01(const PlecticStructure& P, WeakStructure s,
                             const HamiltonianPair& x, const ScalarExpr& f) {
  if (s == WeakStructure::Semi) return ScalarExpr::zero(P.chart);
  return lie_derivative(x.vf, Form::scalar(f)).scalar_part();
}

HamiltonianPair bracket_00(const PlecticStructure& P, WeakStructure s,
                           const HamiltonianPair& x, const HamiltonianPair& y) {
  if (s == WeakStructure::Semi) return ham_bracket_pair(P, x, y);
  return HamiltonianPair{lie_derivative(x.vf, y.alpha), schouten(x.vf, y.vf)};
}

ScalarExpr alternator(const PlecticStructure& P, WeakStructure s, const HamiltonianPair& x,
                      const HamiltonianPair& y) {
  if (s == WeakStructure::Semi) return ScalarExpr::zero(P.chart);
  return (interior(x.vf, y.alpha) + interior(y.vf, x.alpha)).scalar_part();
}

ScalarExpr jacobiator(const PlecticStructure& P, WeakStructure s, const HamiltonianPair& x,
                      const HamiltonianPair& y, const HamiltonianPair& z) {
  if (s == WeakStructure::Hemi) return ScalarExpr::zero(P.chart);
  return semistrict_j(P, x.vf, y.vf, z.vf).scalar_part();
}

} // namespace

GradedElement leib_delta(const PlecticStructure& P, const GradedElement& a) {
  if (a.degree <= 0) return ge_zero(P, 0);
  if (a.degree > P.n - 1) return ge_zero(P, a.degree - 1);
  if (a.degree == 1)
    return ge_degree0(P, HamiltonianPair{ext_d(a.payload), MultiVector(P.chart, 1)});
  return ge_higher(P, a.degree - 1, ext_d(a.payload));
}

GradedElement leibniz_bracket(const PlecticStructure& P, const GradedElement& a,
                              const GradedElement& b) {
  if (a.degree > 0 || b.degree > P.n - 1) return ge_zero(P, a.degree + b.degree);
  if (b.degree == 0)
    return ge_degree0(
        P, HamiltonianPair{lie_derivative(a.vf, b.payload), schouten(a.vf, b.vf)});
  return ge_higher(P, b.degree, lie_derivative(a.vf, b.payload));
}

bool DgLeibnizReport::ok() const {
  return fully_zero(delta_sq) && fully_zero(derivation) && fully_zero(jacobi);
}

DgLeibnizReport check_dg_leibniz(const PlecticStructure& P, const GradedElement& a,
                                 const GradedElement& b, const GradedElement& c) {
  DgLeibnizReport r;
  r.delta_sq = leib_delta(P, leib_delta(P, a));

  int sign_a = a.degree % 2 == 0 ? 1 : -1;
  r.derivation = ge_add(
      leib_delta(P, leibniz_bracket(P, a, b)),
      ge_add(ge_scale(leibniz_bracket(P, leib_delta(P, a), b), rat(-1)),
             ge_scale(leibniz_bracket(P, a, leib_delta(P, b)), rat(-sign_a))));

  int sign_ab = (a.degree * b.degree) % 2 == 0 ? 1 : -1;
  r.jacobi = ge_add(
      leibniz_bracket(P, a, leibniz_bracket(P, b, c)),
      ge_add(ge_scale(leibniz_bracket(P, leibniz_bracket(P, a, b), c), rat(-1)),
             ge_scale(leibniz_bracket(P, b, leibniz_bracket(P, a, c)), rat(-sign_ab))));
  return r;
}

Form symmetrization_identity(const PlecticStructure& P, const HamiltonianPair& a,
                             const HamiltonianPair& b) {
  ge_degree0(P, a); // re-verify the Hamiltonian certificates
  ge_degree0(P, b);
  Form lhs = lie_derivative(a.vf, b.alpha) + lie_derivative(b.vf, a.alpha);
  Form rhs = ext_d(interior(a.vf, b.alpha) + interior(b.vf, a.alpha));
  return lhs - rhs;
}

bool WeakL2AReport::ok() const {
  for (const ScalarExpr& r : residuals)
    if (!r.is_zero()) return false;
  return true;
}

WeakL2AReport check_weak_l2a(const PlecticStructure& P, WeakStructure s,
                             const HamiltonianPair& x, const HamiltonianPair& y,
                             const HamiltonianPair& z, const HamiltonianPair& w) {
  require_2plectic(P);
  auto b0 = [&](const HamiltonianPair& u, const HamiltonianPair& v) {
    return bracket_00(P, s, u, v);
  };
  auto b01 = [&](const HamiltonianPair& u, const ScalarExpr& f) {
    return scalar_bracket_01(P, s, u, f);
  };
  // The degree-1-first bracket [f, x] vanishes in both structures.
  auto b10 = [&](const ScalarExpr&, const HamiltonianPair&) {
    return ScalarExpr::zero(P.chart);
  };
  auto S = [&](const HamiltonianPair& u, const HamiltonianPair& v) {
    return alternator(P, s, u, v);
  };
  auto J = [&](const HamiltonianPair& u, const HamiltonianPair& v, const HamiltonianPair& t) {
    return jacobiator(P, s, u, v, t);
  };

  WeakL2AReport r;
  r.residuals[0] = b01(x, J(y, z, w)) + J(x, b0(y, z), w) + J(x, z, b0(y, w)) +
                   b10(J(x, y, z), w) + b01(z, J(x, y, w)) - J(x, y, b0(z, w)) -
                   J(b0(x, y), z, w) - b01(y, J(x, z, w)) - J(y, b0(x, z), w) -
                   J(y, z, b0(x, w));
  r.residuals[1] = J(x, y, z) + J(y, x, z) + b10(S(x, y), z);
  r.residuals[2] =
      J(x, y, z) + J(x, z, y) - b01(x, S(y, z)) + S(b0(x, y), z) + S(y, b0(x, z));
  r.residuals[3] = S(x, b0(y, z)) - S(b0(y, z), x);
  return r;
}

bool WeakIsoReport::ok() const { return homo1.is_zero() && homo2.is_zero(); }

WeakIsoReport weak_iso_check(const PlecticStructure& P, const HamiltonianPair& x,
                             const HamiltonianPair& y, const HamiltonianPair& z) {
  require_2plectic(P);
  auto phi = [&](const HamiltonianPair& a, const HamiltonianPair& b) {
    return interior(a.vf, b.alpha).scalar_part();
  };

  WeakIsoReport r;
  r.homo1 = alternator(P, WeakStructure::Hemi, x, y) - phi(x, y) - phi(y, x);

  // Target-side brackets are the Leibniz ones; [Phi(x,y), z] vanishes there.
  ScalarExpr lhs = ScalarExpr::zero(P.chart) - semistrict_j(P, x.vf, y.vf, z.vf).scalar_part();
  ScalarExpr rhs = scalar_bracket_01(P, WeakStructure::Hemi, x, phi(y, z)) -
                   scalar_bracket_01(P, WeakStructure::Hemi, y, phi(x, z)) -
                   phi(ham_bracket_pair(P, x, y), z) - phi(y, ham_bracket_pair(P, x, z)) +
                   phi(x, ham_bracket_pair(P, y, z));
  r.homo2 = lhs - rhs;
  return r;
}

} // namespace plectic
