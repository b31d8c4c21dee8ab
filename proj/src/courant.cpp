#include "plectic/courant.hpp"

#include "plectic/error.hpp"

namespace plectic {

namespace {

void check_section(const CourantSection& e) {
  if (e.vf.degree() != 1 && !e.vf.is_zero())
    fail(ErrorKind::Invalid, "section vector part must have degree 1");
  if (e.alpha.degree() != 1 && !e.alpha.is_zero())
    fail(ErrorKind::Invalid, "section form part must have degree 1");
  if (e.vf.chart() != e.alpha.chart() && !(*e.vf.chart() == *e.alpha.chart()))
    fail(ErrorKind::Invalid, "section components on different charts");
}

void require_2plectic(const PlecticStructure& P) {
  if (P.n != 2) fail(ErrorKind::Invalid, "Courant operations need a 2-plectic structure");
}

ScalarExpr half_of(const ScalarExpr& f) { return f.scaled(Rational(1, 2)); }

} // namespace

CourantSection courant_section(MultiVector vf, Form alpha) {
  CourantSection e{std::move(vf), std::move(alpha)};
  check_section(e);
  return e;
}

CourantSection section_add(const CourantSection& a, const CourantSection& b) {
  return {a.vf + b.vf, a.alpha + b.alpha};
}

CourantSection section_sub(const CourantSection& a, const CourantSection& b) {
  return {a.vf - b.vf, a.alpha - b.alpha};
}

CourantSection section_scale(const CourantSection& e, const ScalarExpr& f) {
  return {e.vf.scaled(f), e.alpha.scaled(f)};
}

bool section_is_zero(const CourantSection& e) {
  return e.vf.is_zero() && e.alpha.is_zero();
}

CourantSection d_section(const ScalarExpr& f) {
  return {MultiVector::zero(f.chart(), 1), ext_d(Form::scalar(f))};
}

ScalarExpr pair_plus(const CourantSection& e1, const CourantSection& e2) {
  check_section(e1);
  check_section(e2);
  return interior(e1.vf, e2.alpha).scalar_part() +
         interior(e2.vf, e1.alpha).scalar_part();
}

ScalarExpr pair_minus(const CourantSection& e1, const CourantSection& e2) {
  check_section(e1);
  check_section(e2);
  return interior(e1.vf, e2.alpha).scalar_part() -
         interior(e2.vf, e1.alpha).scalar_part();
}

CourantSection twisted_courant(const PlecticStructure& P, const CourantSection& e1,
                               const CourantSection& e2) {
  require_2plectic(P);
  check_section(e1);
  check_section(e2);
  Form part = lie_derivative(e1.vf, e2.alpha) - lie_derivative(e2.vf, e1.alpha) -
              ext_d(Form::scalar(half_of(pair_minus(e1, e2)))) -
              interior(e2.vf, interior(e1.vf, P.omega));
  return {schouten(e1.vf, e2.vf), std::move(part)};
}

CourantSection twisted_dorfman(const PlecticStructure& P, const CourantSection& e1,
                               const CourantSection& e2) {
  require_2plectic(P);
  check_section(e1);
  check_section(e2);
  Form part = lie_derivative(e1.vf, e2.alpha) - interior(e2.vf, ext_d(e1.alpha)) -
              interior(e2.vf, interior(e1.vf, P.omega));
  return {schouten(e1.vf, e2.vf), std::move(part)};
}

ScalarExpr courant_t(const PlecticStructure& P, const CourantSection& e1,
                     const CourantSection& e2, const CourantSection& e3) {
  ScalarExpr s = pair_plus(twisted_courant(P, e1, e2), e3) +
                 pair_plus(twisted_courant(P, e3, e1), e2) +
                 pair_plus(twisted_courant(P, e2, e3), e1);
  return s.scaled(Rational(1, 6));
}

CourantAxiomsReport check_courant_axioms(const PlecticStructure& P,
                                         const CourantSection& e1,
                                         const CourantSection& e2,
                                         const CourantSection& e3,
                                         const ScalarExpr& f, const ScalarExpr& g) {
  require_2plectic(P);
  CourantAxiomsReport rep;

  auto cb = [&](const CourantSection& a, const CourantSection& b) {
    return twisted_courant(P, a, b);
  };
  auto db = [&](const CourantSection& a, const CourantSection& b) {
    return twisted_dorfman(P, a, b);
  };

  {
    CourantSection jac = section_sub(
        section_sub(cb(e1, cb(e2, e3)), cb(cb(e1, e2), e3)), cb(e2, cb(e1, e3)));
    CourantSection dt = d_section(courant_t(P, e1, e2, e3));
    rep.skew_jacobi_dt = section_is_zero(section_add(jac, dt));
  }

  rep.skew_anchor =
      (cb(e1, e2).vf - schouten(e1.vf, e2.vf)).is_zero();

  {
    CourantSection lhs = cb(e1, section_scale(e2, f));
    CourantSection rhs = section_add(
        section_sub(section_scale(cb(e1, e2), f),
                    section_scale(d_section(f), half_of(pair_plus(e1, e2)))),
        section_scale(e2, apply_vector(e1.vf, f)));
    rep.skew_leibniz = section_is_zero(section_sub(lhs, rhs));
  }

  rep.skew_pair_df_dg = pair_plus(d_section(f), d_section(g)).is_zero();

  {
    ScalarExpr lhs = apply_vector(e1.vf, pair_plus(e2, e3));
    auto corrected = [&](const CourantSection& a, const CourantSection& b) {
      return section_add(cb(a, b), section_scale(d_section(pair_plus(a, b)),
                                                 ScalarExpr::constant(f.chart(), Rational(1, 2))));
    };
    ScalarExpr rhs =
        pair_plus(corrected(e1, e2), e3) + pair_plus(e2, corrected(e1, e3));
    rep.skew_invariance = (lhs - rhs).is_zero();
  }

  {
    CourantSection jac = section_sub(
        section_sub(db(e1, db(e2, e3)), db(db(e1, e2), e3)), db(e2, db(e1, e3)));
    rep.dorf_jacobi = section_is_zero(jac);
  }

  rep.dorf_anchor =
      (db(e1, e2).vf - schouten(e1.vf, e2.vf)).is_zero();

  {
    CourantSection lhs = db(e1, section_scale(e2, f));
    CourantSection rhs = section_add(section_scale(db(e1, e2), f),
                                     section_scale(e2, apply_vector(e1.vf, f)));
    rep.dorf_leibniz = section_is_zero(section_sub(lhs, rhs));
  }

  {
    CourantSection sq = section_sub(
        db(e1, e1), section_scale(d_section(pair_plus(e1, e1)),
                                  ScalarExpr::constant(f.chart(), Rational(1, 2))));
    rep.dorf_square = section_is_zero(sq);
  }

  {
    ScalarExpr lhs = apply_vector(e1.vf, pair_plus(e2, e3));
    ScalarExpr rhs = pair_plus(db(e1, e2), e3) + pair_plus(e2, db(e1, e3));
    rep.dorf_invariance = (lhs - rhs).is_zero();
  }

  return rep;
}

CourantLie2::E1 CourantLie2::b01(const E0& e, const E1& f) const {
  return half_of(pair_plus(e, d_section(f)));
}

CourantLie2::E1 CourantLie2::b10(const E1& f, const E0& e) const {
  return -b01(e, f);
}

CourantLie2::E1 CourantLie2::j(const E0& x, const E0& y, const E0& z) const {
  return -courant_t(*P, x, y, z);
}

CourantLie2 courant_l2a(const PlecticStructure& P) {
  require_2plectic(P);
  return CourantLie2{&P};
}

CourantSection embed_observables(const PlecticStructure& P, const HamiltonianPair& a) {
  require_2plectic(P);
  return courant_section(a.vf, a.alpha);
}

ScalarExpr embed_homotopy(const PlecticStructure& P, const HamiltonianPair& a,
                          const HamiltonianPair& b) {
  return -half_of(pair_minus(embed_observables(P, a), embed_observables(P, b)));
}

bool preserves_splitting(const PlecticStructure& P, const CourantSection& e) {
  require_2plectic(P);
  check_section(e);
  return (ext_d(e.alpha) + interior(e.vf, P.omega)).is_zero();
}

AtiyahSection atiyah_section(MultiVector vf, ScalarExpr fn) {
  if (vf.degree() != 1 && !vf.is_zero())
    fail(ErrorKind::Invalid, "section vector part must have degree 1");
  return {std::move(vf), std::move(fn)};
}

namespace {
void require_symplectic(const PlecticStructure& P) {
  if (P.n != 1) fail(ErrorKind::Invalid, "Atiyah operations need a symplectic structure");
}
} // namespace

AtiyahSection atiyah_bracket(const PlecticStructure& P, const AtiyahSection& a1,
                             const AtiyahSection& a2) {
  require_symplectic(P);
  ScalarExpr fn = apply_vector(a1.vf, a2.fn) - apply_vector(a2.vf, a1.fn) -
                  interior(a2.vf, interior(a1.vf, P.omega)).scalar_part();
  return {schouten(a1.vf, a2.vf), std::move(fn)};
}

bool atiyah_preserves_splitting(const PlecticStructure& P, const AtiyahSection& a) {
  require_symplectic(P);
  return (ext_d(Form::scalar(a.fn)) + interior(a.vf, P.omega)).is_zero();
}

AtiyahSection atiyah_phi(const PlecticStructure& P, const ScalarExpr& f) {
  require_symplectic(P);
  auto pair = hamiltonian_vf(P, Form::scalar(f));
  if (!pair) fail(ErrorKind::Invalid, "function has no Hamiltonian vector field");
  return {pair->vf, f};
}

ScalarExpr poisson_bracket(const PlecticStructure& P, const ScalarExpr& f,
                           const ScalarExpr& g) {
  require_symplectic(P);
  AtiyahSection af = atiyah_phi(P, f);
  AtiyahSection ag = atiyah_phi(P, g);
  return interior(ag.vf, interior(af.vf, P.omega)).scalar_part();
}

bool atiyah_iso_check(const PlecticStructure& P, const ScalarExpr& f,
                      const ScalarExpr& g) {
  AtiyahSection af = atiyah_phi(P, f);
  AtiyahSection ag = atiyah_phi(P, g);
  AtiyahSection lhs = atiyah_bracket(P, af, ag);
  AtiyahSection rhs = atiyah_phi(P, poisson_bracket(P, f, g));
  return (lhs.vf - rhs.vf).is_zero() && (lhs.fn - rhs.fn).is_zero();
}

} // namespace plectic
