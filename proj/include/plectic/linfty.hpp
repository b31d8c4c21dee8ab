#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "plectic/plectic.hpp"
#include "plectic/qlinalg.hpp"

namespace plectic {

/// Element of the graded complex attached to an n-plectic structure:
/// degree-i elements are (n-1-i)-forms, and degree-0 elements carry their
/// Hamiltonian vector field.
struct GradedElement {
  int degree = 0;
  Form payload;
  MultiVector vf; // meaningful only in degree 0

  bool is_zero() const { return payload.is_zero(); }
};

/// Degree-0 element from a Hamiltonian pair (certificate re-verified).
GradedElement ge_degree0(const PlecticStructure& P, const HamiltonianPair& pair);

/// Positive-degree element wrapping an (n-1-degree)-form.
GradedElement ge_higher(const PlecticStructure& P, int degree, Form payload);

bool ge_equal(const GradedElement& a, const GradedElement& b);
GradedElement ge_add(const GradedElement& a, const GradedElement& b);
GradedElement ge_scale(const GradedElement& a, const Rational& c);

/// Permutation of {1..m} in one-line notation.
struct Permutation {
  std::vector<int> images;
};

/// All (p,q)-unshuffles: sigma(i) < sigma(i+1) whenever i != p.
/// Ordered lexicographically by one-line notation.
std::vector<Permutation> unshuffles(int p, int q);

/// (-1)^sigma.
int perm_sign(const Permutation& sigma);

/// Koszul sign from graded commutativity, excluding (-1)^sigma.
/// degrees[i] is the degree of x_{i+1} in the original order.
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

/// The k-ary bracket of the structure's Lie n-algebra:
///   l_1 = d on positive degrees; l_k vanishes if any input has positive
///   degree, and is the signed k-fold contraction of omega otherwise.
/// Degree-0 inputs must carry valid Hamiltonian certificates.
GradedElement l_k(const PlecticStructure& P, const std::vector<GradedElement>& inputs);

/// LHS of the generalized Jacobi identity at arity m = |inputs|;
/// exactly zero in payload (and vector field) for every m.
GradedElement gen_jacobi_residual(const PlecticStructure& P,
                                  const std::vector<GradedElement>& inputs);

/// J(a,b,c) = i_{v_a} i_{v_b} i_{v_c} omega (a 0-form for n=2).
Form semistrict_j(const PlecticStructure& P, const MultiVector& v1, const MultiVector& v2,
                  const MultiVector& v3);

/// Chevalley–Eilenberg coboundary with values treated as constants:
///   (delta c)(v_1..v_{k+1}) = sum_{i<j} (-1)^{i+j} c([v_i,v_j], ..no i,j..).
ScalarExpr ce_delta(const std::function<ScalarExpr(const std::vector<MultiVector>&)>& c,
                    const std::vector<MultiVector>& vfs);

double ce_delta_num(const std::function<double(const std::vector<MultiVector>&)>& c,
                    const std::vector<MultiVector>& vfs);

/// |delta c - (J_y - J_x)| on one triple of Hamiltonian fields, where
/// c(v,w) integrates omega(v,w,.) along the straight segment x -> y.
double ce_path_defect(const PlecticStructure& P, const QVec& x, const QVec& y,
                      const MultiVector& v1, const MultiVector& v2, const MultiVector& v3);

/// Betti numbers (b0, b1) of a two-term complex with differential d: L1 -> L0
/// given as a (dim L0) x (dim L1) matrix.
std::pair<int, int> homology_finite(const QMatrix& d);

/// The n=2 Lie 2-algebra of an n-plectic structure, packaged for the generic
/// checkers: degree-0 part = Hamiltonian pairs, degree-1 part = functions.
struct PlecticLie2 {
  const PlecticStructure* P;

  using E0 = HamiltonianPair;
  using E1 = ScalarExpr;

  E0 d(const E1& f) const;
  E0 b(const E0& x, const E0& y) const;
  E1 b01(const E0& x, const E1& f) const;
  E1 b10(const E1& f, const E0& x) const;
  E1 j(const E0& x, const E0& y, const E0& z) const;

  E0 add0(const E0& x, const E0& y) const;
  E0 sub0(const E0& x, const E0& y) const;
  E1 add1(const E1& f, const E1& g) const;
  E1 sub1(const E1& f, const E1& g) const;
  bool zero0(const E0& x) const;
  bool zero1(const E1& f) const;
};

} // namespace plectic
