#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plectic/deligne.hpp"

namespace plectic {

/// Half-open interval (lo, hi] of leaf radii with exact endpoints.
struct RationalInterval {
  Rational lo{0};
  Rational hi{0};

  bool contains(const Rational& x) const { return x > lo && x <= hi; }
  bool empty() const { return hi <= lo; }
};

enum class FoliationKind { CirclesInPlane, SpheresInSpace };

/// Foliation of a punctured plane or space by concentric circles or spheres.
/// Leaves are the regular level sets of the radius inside `range`; circles
/// live on a polar chart (r, angle), spheres on a cartesian 3-chart.
struct RadialFoliation {
  ChartPtr chart;
  FoliationKind kind = FoliationKind::CirclesInPlane;
  RationalInterval range;
};

/// Throws PlecticError(Invalid) when the kind does not match the chart or
/// the range is degenerate.
void validate_foliation(const RadialFoliation& f);

/// Circles r = R on the polar chart (r, t), all R > 0.
RadialFoliation oscillator_foliation();
/// Spheres of radius R about the origin of the (x, y, z) chart, all R > 0.
RadialFoliation sphere_foliation();

/// One leaf passing the holonomy-triviality test, with exact parameters.
/// `radius` is filled whenever the radius itself is rational; `radius_sq`
/// is always exact.
struct BSLeaf {
  Rational radius_sq;
  std::optional<Rational> radius;
  /// Integer n with leaf integral 2*pi*n.
  long level = 0;
  /// Quadrature value of the leaf integral of the reduced witness form.
  double holonomy_exponent = 0.0;
  /// |holonomy_exponent - 2*pi*level| <= 1e-9; always true on return.
  bool verified = false;
};

struct BSVariety {
  FoliationKind kind = FoliationKind::CirclesInPlane;
  /// Sorted by increasing radius; complete within the searched interval.
  std::vector<BSLeaf> leaves;
  /// Textual record of the criterion the enumeration solved.
  std::string generating_condition;
};

/// Enumerates every leaf in `search` (intersected with the foliation's own
/// range) on which the cocycle has trivial holonomy. The leaf integral of
/// the reduced witness form is solved in closed form -- it must reduce to a
/// monomial c * R^k in the leaf radius -- and each solution is re-verified
/// by quadrature to 1e-9. The cocycle must carry a global witness exhibiting
/// its reduced presentation.
BSVariety bohr_sommerfeld(const CocycleFixture& cocycle,
                          const RadialFoliation& foliation,
                          const RationalInterval& search);

/// Covariantly-constant section datum on the oscillator leaf H = energy.
/// Parallel transport around the leaf multiplies a section value by
/// exp(-2*pi*H*i); a nowhere-zero section exists iff that factor is 1,
/// i.e. iff the total phase increment lies in 2*pi*Z.
struct SectionPhase {
  Rational energy;
  bool single_valued = false;
  /// Winding number of the section phase, -H; meaningful when single_valued.
  long winding = 0;
  /// Exact phase increment around the leaf divided by 2*pi, equal to -H.
  Rational increment_over_two_pi;
  /// e.g. "exp(-2*t*i)".
  std::string phase;
  /// "single-valued" or "no single-valued solution".
  std::string verdict;
};

/// Throws PlecticError(Domain) for energy <= 0 (the would-be leaf is the
/// excluded origin or empty). Non-integer positive energies return the
/// no-solution verdict rather than throwing.
SectionPhase oscillator_section_phase(const Rational& energy);

/// Isomorphism class of a quantized leaf assignment: finitely supported
/// multiplicities n -> k_n over positive integers n. Zero multiplicities are
/// dropped; the n = 0 summand is unrepresentable by construction.
struct QuantumState {
  std::map<long, long> multiplicities;

  bool operator==(const QuantumState& o) const = default;
};

/// Validates keys (n >= 1) and values (k >= 0), dropping zero entries.
QuantumState make_state(const std::map<long, long>& multiplicities);

/// Parses "1:2,2:1" into a state; "" is the empty state.
QuantumState state_from_string(const std::string& text);

/// dim(sum_n k_n * Sym^n(C^2*)) = sum_n k_n * (n + 1).
long state_dimension(const QuantumState& s);

/// Canonical description, e.g. "2*Sym^1(C^2*) + Sym^2(C^2*)"; "0" when
/// empty. Distinct states yield distinct strings.
std::string state_to_rep(const QuantumState& s);

/// Pointwise sum of multiplicities; dimension is additive.
QuantumState state_direct_sum(const QuantumState& a, const QuantumState& b);

/// Dimension of Sym^n(C^2*) by brute-force monomial enumeration.
long sym_power_dimension(int n);

/// Report payload: {"variety": [{"radius": ..., "radius_sq": ...,
/// "holonomy_exponent": "2*pi*n", "verified": ...}], "states": [...]}.
/// Irrational radii print as "sqrt(p/q)".
std::string quantize_report_json(const BSVariety& v,
                                 const std::vector<QuantumState>& states);

} // namespace plectic
