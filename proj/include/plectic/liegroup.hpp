#pragma once

#include <string>
#include <vector>

#include "plectic/qlinalg.hpp"
#include "plectic/rational.hpp"

namespace plectic {

/// Constant-coefficient model over a compact-type Lie algebra. Everything is
/// done at the algebra level with a fixed basis e_1..e_dim: exact rational
/// structure constants and an invariant inner product. The group manifold is
/// never represented.
struct LieAlgebraData {
  int dim = 0;
  /// c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k
  std::vector<std::vector<std::vector<Rational>>> c;
  /// Gram matrix of the invariant inner product.
  QMatrix ip;

  QVec bracket(const QVec& x, const QVec& y) const;
  Rational pair(const QVec& x, const QVec& y) const;
};

/// Checks antisymmetry of the structure constants, the Jacobi identity,
/// ad-invariance of the inner product (<[x,y],z> + <y,[x,z]> = 0), and
/// positive definiteness, all exactly on basis tuples. Throws
/// PlecticError(Invalid) naming the first violated law.
void validate_lie_algebra(const LieAlgebraData& g);

/// su(2) with c_{ij}^k = epsilon_{ijk} and the delta inner product.
LieAlgebraData su2();

/// Parse {"dim": d, "c": [[[rationals]]], "ip": [[rationals]]}; rational
/// entries may be JSON integers or strings like "-3/2". Validates before
/// returning.
LieAlgebraData lie_algebra_from_json_text(const std::string& text);

/// Totally antisymmetric trilinear form on the algebra, stored densely on
/// basis triples.
struct Trilinear {
  int dim = 0;
  std::vector<Rational> v;

  explicit Trilinear(int d = 0)
      : dim(d), v(static_cast<size_t>(d) * d * d, Rational(0)) {}

  Rational& at(int i, int j, int k) {
    return v[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  const Rational& at(int i, int j, int k) const {
    return v[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  Rational eval(const QVec& x, const QVec& y, const QVec& z) const;
  bool totally_antisymmetric() const;
};

/// nu_k(x,y,z) = k <x,[y,z]>. Throws PlecticError(Invalid) on k = 0.
Trilinear cartan_3form(const LieAlgebraData& g, const Rational& k);

/// Nondegeneracy in the 2-plectic sense: x -> t(x,.,.) is injective.
bool trilinear_nondegenerate(const Trilinear& t);

/// The unique v with alpha = k<v,.>, by an exact solve against the Gram
/// matrix. alpha is given by its coordinates in the dual basis e_i*.
QVec left_inv_ham_vf(const LieAlgebraData& g, const Rational& k, const QVec& alpha);

/// Lie 2-algebra of left-invariant Hamiltonian 1-forms: 0-chains are g*
/// (coordinates in the dual basis), 1-chains are R, the differential is 0,
/// the bracket is {a,b} = nu_k(v_a, v_b, .) in degree 0 and trivial
/// otherwise, and the Jacobiator is J(a,b,c) = -nu_k(v_a, v_b, v_c).
struct LeftInvariantLie2 {
  LieAlgebraData g;
  Rational k;
  Trilinear nu;

  using E0 = QVec;
  using E1 = Rational;

  QVec ham_vf(const QVec& alpha) const;

  E0 d(const E1&) const { return QVec(static_cast<size_t>(g.dim), Rational(0)); }
  E0 b(const E0& x, const E0& y) const;
  E1 b01(const E0&, const E1&) const { return Rational(0); }
  E1 b10(const E1&, const E0&) const { return Rational(0); }
  E1 j(const E0& x, const E0& y, const E0& z) const;

  E0 add0(const E0& x, const E0& y) const;
  E0 sub0(const E0& x, const E0& y) const;
  E1 add1(const E1& x, const E1& y) const { return x + y; }
  E1 sub1(const E1& x, const E1& y) const { return x - y; }
  bool zero0(const E0& x) const;
  bool zero1(const E1& x) const { return x == 0; }
};

/// String Lie 2-algebra g_k: 0-chains are g with its Lie bracket, 1-chains
/// are R with the trivial action, d = 0, Jacobiator j(x,y,z) = k<x,[y,z]>.
struct StringLie2 {
  LieAlgebraData g;
  Rational k;

  using E0 = QVec;
  using E1 = Rational;

  E0 d(const E1&) const { return QVec(static_cast<size_t>(g.dim), Rational(0)); }
  E0 b(const E0& x, const E0& y) const { return g.bracket(x, y); }
  E1 b01(const E0&, const E1&) const { return Rational(0); }
  E1 b10(const E1&, const E0&) const { return Rational(0); }
  E1 j(const E0& x, const E0& y, const E0& z) const;

  E0 add0(const E0& x, const E0& y) const;
  E0 sub0(const E0& x, const E0& y) const;
  E1 add1(const E1& x, const E1& y) const { return x + y; }
  E1 sub1(const E1& x, const E1& y) const { return x - y; }
  bool zero0(const E0& x) const;
  bool zero1(const E1& x) const { return x == 0; }
};

/// Validates g and requires nu_k nondegenerate; throws PlecticError(Invalid)
/// otherwise.
LeftInvariantLie2 left_inv_l2a(const LieAlgebraData& g, const Rational& k);

StringLie2 string_l2a(const LieAlgebraData& g, const Rational& k);

/// phi(v) = k<v,.> as coordinates in the dual basis.
QVec string_phi(const LieAlgebraData& g, const Rational& k, const QVec& v);

struct StringIsoReport {
  /// {phi v1, phi v2} = phi([v1,v2]) on all basis pairs.
  bool bracket_intertwines = false;
  /// J(phi x, phi y, phi z) - j(x,y,z) = 0 on all basis triples.
  bool minus_residual_vanishes = false;
  /// J(phi x, phi y, phi z) + j(x,y,z) = 0 on all basis triples.
  bool plus_residual_vanishes = false;
};

/// Compares the two Lie 2-algebras along phi: checks exact bracket
/// intertwining and evaluates both Jacobiator residuals, recording which
/// one vanishes rather than fixing an orientation convention.
StringIsoReport string_iso_check(const LieAlgebraData& g, const Rational& k);

} // namespace plectic
