#pragma once

#include "plectic/cartan.hpp"
#include "plectic/plectic.hpp"

namespace plectic {

/// Section e = s(v) + alpha of the exact Courant algebroid over a 2-plectic
/// manifold, stored in split coordinates; the isotropic splitting s is the
/// implicit bookkeeping device, and the anchor is e |-> v.
struct CourantSection {
  MultiVector vf;
  Form alpha;
};

/// Validating constructor: degree-1 components on a shared chart.
CourantSection courant_section(MultiVector vf, Form alpha);

CourantSection section_add(const CourantSection& a, const CourantSection& b);
CourantSection section_sub(const CourantSection& a, const CourantSection& b);
CourantSection section_scale(const CourantSection& e, const ScalarExpr& f);
bool section_is_zero(const CourantSection& e);

/// D f = (0, df): the de Rham differential embedded along the anchor dual.
CourantSection d_section(const ScalarExpr& f);

/// <e1,e2>+ = i_{v1} a2 + i_{v2} a1 (symmetric, splitting-independent).
ScalarExpr pair_plus(const CourantSection& e1, const CourantSection& e2);

/// <e1,e2>- = i_{v1} a2 - i_{v2} a1 (antisymmetric).
ScalarExpr pair_minus(const CourantSection& e1, const CourantSection& e2);

/// Twisted Courant bracket
///   [[e1,e2]] = s([v1,v2]) + L_{v1}a2 - L_{v2}a1 - 1/2 d<e1,e2>- - i_{v2}i_{v1}omega.
CourantSection twisted_courant(const PlecticStructure& P, const CourantSection& e1,
                               const CourantSection& e2);

/// Twisted Dorfman bracket
///   [[e1,e2]] = s([v1,v2]) + L_{v1}a2 - i_{v2}da1 - i_{v2}i_{v1}omega
/// = twisted_courant + 1/2 D<e1,e2>+.
CourantSection twisted_dorfman(const PlecticStructure& P, const CourantSection& e1,
                               const CourantSection& e2);

/// T = 1/6 (<[[e1,e2]],e3> + <[[e3,e1]],e2> + <[[e2,e3]],e1>).
ScalarExpr courant_t(const PlecticStructure& P, const CourantSection& e1,
                     const CourantSection& e2, const CourantSection& e3);

/// Residuals of the five skew-bracket axioms (Jacobi defect -DT, anchor,
/// Leibniz with the -1/2<e1,e2>Df correction, <Df,Dg> = 0, invariance with
/// the 1/2 D corrections) and the five Dorfman-bracket axioms.
struct CourantAxiomsReport {
  bool skew_jacobi_dt = false;
  bool skew_anchor = false;
  bool skew_leibniz = false;
  bool skew_pair_df_dg = false;
  bool skew_invariance = false;
  bool dorf_jacobi = false;
  bool dorf_anchor = false;
  bool dorf_leibniz = false;
  bool dorf_square = false;
  bool dorf_invariance = false;

  bool all_ok() const {
    return skew_jacobi_dt && skew_anchor && skew_leibniz && skew_pair_df_dg &&
           skew_invariance && dorf_jacobi && dorf_anchor && dorf_leibniz &&
           dorf_square && dorf_invariance;
  }
};

CourantAxiomsReport check_courant_axioms(const PlecticStructure& P,
                                         const CourantSection& e1,
                                         const CourantSection& e2,
                                         const CourantSection& e3,
                                         const ScalarExpr& f, const ScalarExpr& g);

/// Lie 2-algebra of global sections: 0-chains are sections, 1-chains are
/// functions, d f = (0, df), the degree-0 bracket is the twisted Courant
/// bracket, [e,f] = -[f,e] = 1/2 <e, df>+, and the Jacobiator is -T.
struct CourantLie2 {
  const PlecticStructure* P = nullptr;

  using E0 = CourantSection;
  using E1 = ScalarExpr;

  E0 d(const E1& f) const { return d_section(f); }
  E0 b(const E0& x, const E0& y) const { return twisted_courant(*P, x, y); }
  E1 b01(const E0& e, const E1& f) const;
  E1 b10(const E1& f, const E0& e) const;
  E1 j(const E0& x, const E0& y, const E0& z) const;

  E0 add0(const E0& x, const E0& y) const { return section_add(x, y); }
  E0 sub0(const E0& x, const E0& y) const { return section_sub(x, y); }
  E1 add1(const E1& x, const E1& y) const { return x + y; }
  E1 sub1(const E1& x, const E1& y) const { return x - y; }
  bool zero0(const E0& x) const { return section_is_zero(x); }
  bool zero1(const E1& x) const { return x.is_zero(); }
};

CourantLie2 courant_l2a(const PlecticStructure& P);

/// phi0(alpha) = s(v_alpha) + alpha.
CourantSection embed_observables(const PlecticStructure& P, const HamiltonianPair& a);

/// Chain homotopy of the embedding: Phi(a,b) = -1/2 <v_a + a, v_b + b>-.
ScalarExpr embed_homotopy(const PlecticStructure& P, const HamiltonianPair& a,
                          const HamiltonianPair& b);

/// Morphism package for check_morphism against the observables' Lie 2-algebra.
/// `homotopy_scale` exists to corrupt Phi in negative controls.
struct ObservableEmbedding {
  const PlecticStructure* P = nullptr;
  Rational homotopy_scale = Rational(1);

  CourantSection phi0(const HamiltonianPair& a) const { return embed_observables(*P, a); }
  ScalarExpr phi1(const ScalarExpr& f) const { return f; }
  ScalarExpr chi(const HamiltonianPair& a, const HamiltonianPair& b) const {
    return embed_homotopy(*P, a, b).scaled(homotopy_scale);
  }
};

/// e preserves the splitting iff d(alpha) + i_v omega = 0; equivalently e is
/// in the image of embed_observables.
bool preserves_splitting(const PlecticStructure& P, const CourantSection& e);

/// Section a = s(v) + f of the Atiyah algebroid over a symplectic manifold.
struct AtiyahSection {
  MultiVector vf;
  ScalarExpr fn;
};

AtiyahSection atiyah_section(MultiVector vf, ScalarExpr fn);

/// [s(v1)+f1, s(v2)+f2] = s([v1,v2]) + v1(f2) - v2(f1) - i_{v2}i_{v1}omega.
AtiyahSection atiyah_bracket(const PlecticStructure& P, const AtiyahSection& a1,
                             const AtiyahSection& a2);

/// a preserves the splitting iff df = -i_v omega.
bool atiyah_preserves_splitting(const PlecticStructure& P, const AtiyahSection& a);

/// phi(f) = s(v_f) + f; throws PlecticError(Invalid) if f has no Hamiltonian
/// vector field.
AtiyahSection atiyah_phi(const PlecticStructure& P, const ScalarExpr& f);

/// Poisson bracket {f,g} = i_{v_g} i_{v_f} omega.
ScalarExpr poisson_bracket(const PlecticStructure& P, const ScalarExpr& f,
                           const ScalarExpr& g);

/// [phi(f), phi(g)] = phi({f,g}), checked exactly.
bool atiyah_iso_check(const PlecticStructure& P, const ScalarExpr& f,
                      const ScalarExpr& g);

} // namespace plectic
