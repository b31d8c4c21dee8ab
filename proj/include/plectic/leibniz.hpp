#pragma once

#include <array>

#include "plectic/linfty.hpp"

namespace plectic {

/// Differential of the Leibniz complex: the exterior derivative in positive
/// degree (a degree-1 image is exact, hence Hamiltonian with zero field),
/// zero on degree 0.
GradedElement leib_delta(const PlecticStructure& P, const GradedElement& a);

/// The Leibniz bracket: L_{v_a}(payload of b) when deg a = 0, zero when the
/// first argument has positive degree. A degree-0 result carries the field
/// [v_a, v_b], re-verified against its payload.
GradedElement leibniz_bracket(const PlecticStructure& P, const GradedElement& a,
                              const GradedElement& b);

/// Residuals of the three dg Leibniz axioms on (a, b, c); each is exactly
/// zero. Valid in every degree and for every n.
struct DgLeibnizReport {
  /// delta(delta(a)).
  GradedElement delta_sq;
  /// delta[a,b] - [delta a, b] - (-1)^{deg a} [a, delta b].
  GradedElement derivation;
  /// [a,[b,c]] - [[a,b],c] - (-1)^{deg a deg b} [b,[a,c]].
  GradedElement jacobi;

  bool ok() const;
};

DgLeibnizReport check_dg_leibniz(const PlecticStructure& P, const GradedElement& a,
                                 const GradedElement& b, const GradedElement& c);

/// [[a,b]] + [[b,a]] - d(i_{v_a} b + i_{v_b} a); exactly zero, exhibiting the
/// failure of skew-symmetry as an exact term.
Form symmetrization_identity(const PlecticStructure& P, const HamiltonianPair& a,
                             const HamiltonianPair& b);

/// The two weak-Lie-2 structures carried by a 2-plectic manifold on the
/// complex C^inf -> Ham^1: Hemi has the Leibniz bracket, alternator
/// S(a,b) = i_{v_a}b + i_{v_b}a and trivial Jacobiator; Semi has the
/// skew bracket, trivial alternator and Jacobiator omega(v_c, v_b, v_a).
enum class WeakStructure { Hemi, Semi };

/// Residuals of the four coherence equations of a weak Lie 2-algebra,
/// evaluated on (x, y, z, w): the pentagon-like equation uses all four
/// inputs, the remaining three use (x, y, z). All residuals are functions
/// and are exactly zero for both structures. Requires n = 2.
struct WeakL2AReport {
  std::array<ScalarExpr, 4> residuals;

  bool ok() const;
};

WeakL2AReport check_weak_l2a(const PlecticStructure& P, WeakStructure s,
                             const HamiltonianPair& x, const HamiltonianPair& y,
                             const HamiltonianPair& z, const HamiltonianPair& w);

/// Residuals of the two homomorphism equations for the isomorphism from the
/// Semi structure to the Hemi structure given by the identity chain map and
/// the homotopy Phi(a, b) = i_{v_a}b. Both exactly zero. Requires n = 2.
struct WeakIsoReport {
  ScalarExpr homo1;
  ScalarExpr homo2;

  bool ok() const;
};

WeakIsoReport weak_iso_check(const PlecticStructure& P, const HamiltonianPair& x,
                             const HamiltonianPair& y, const HamiltonianPair& z);

} // namespace plectic
