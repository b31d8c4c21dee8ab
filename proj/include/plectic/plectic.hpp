#pragma once

#include <optional>
#include <vector>

#include "plectic/cartan.hpp"

namespace plectic {

/// A chart carrying a closed nondegenerate form of degree n+1.
struct PlecticStructure {
  ChartPtr chart;
  int n = 1;
  Form omega;
  std::vector<QVec> samples; // points where nondegeneracy is certified

  PlecticStructure(ChartPtr c, int n_, Form om, std::vector<QVec> pts = {});
};

/// Nondegeneracy certificate: exact closedness, generic (function-field)
/// column rank of v -> i_v omega, and the pointwise rank at each sample.
struct NplecticReport {
  bool closed = false;
  int generic_rank = 0;
  std::vector<int> sample_ranks;
  bool accepted = false;
};

NplecticReport check_nplectic(const ChartPtr& chart, const Form& omega, int n,
                              const std::vector<QVec>& samples);

/// A Hamiltonian (n-1)-form together with its vector field:
/// ext_d(alpha) = -interior(vf, omega) exactly.
struct HamiltonianPair {
  Form alpha;
  MultiVector vf;
};

/// Solves i_v omega = -d alpha over the rational-function field.
/// nullopt means the form is not Hamiltonian (inconsistent system).
std::optional<HamiltonianPair> hamiltonian_vf(const PlecticStructure& P, const Form& alpha);

/// {a,b} = i_{v_b} i_{v_a} omega.
Form ham_bracket(const PlecticStructure& P, const HamiltonianPair& a, const HamiltonianPair& b);

/// The bracket together with its vector field [v_a, v_b].
HamiltonianPair ham_bracket_pair(const PlecticStructure& P, const HamiltonianPair& a,
                                 const HamiltonianPair& b);

/// Both sides of the Jacobi-failure identity:
///   {a,{b,c}} - {{a,b},c} - {b,{a,c}}   and   -d i(v_a ^ v_b ^ v_c) omega.
struct JacobiDefect {
  Form bracket_side;
  Form exact_side;
};

JacobiDefect jacobi_defect(const PlecticStructure& P, const HamiltonianPair& a,
                           const HamiltonianPair& b, const HamiltonianPair& c);

/// LHS - RHS of
///   d i(v_1^...^v_m) omega
///     = (-1)^m sum_{i<j} (-1)^{i+j} i([v_i,v_j]^v_1^...^{no i,j}...^v_m) omega
/// for Hamiltonian vector fields; exactly zero on valid input.
Form multi_contraction_residual(const PlecticStructure& P, const std::vector<MultiVector>& vfs);

/// A subspace of the tangent space at a rational point.
struct PointSubspace {
  QVec point;
  std::vector<QVec> basis;
};

/// k-orthogonal complement: all v with omega(v, w_1, ..., w_k)|_point = 0
/// for every choice of w_i from W.
PointSubspace orth_complement(const PlecticStructure& P, const PointSubspace& W, int k);

enum class SubspaceClass { None, Isotropic, Lagrangian };

/// isotropic iff W is contained in its k-orthogonal complement;
/// lagrangian iff they are equal.
SubspaceClass classify_subspace(const PlecticStructure& P, const PointSubspace& W, int k);

} // namespace plectic
