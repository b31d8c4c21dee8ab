#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plectic/cartan.hpp"

namespace plectic {

/// Strictly increasing list of patch ids naming a nonempty intersection.
using PatchTuple = std::vector<int>;

/// Finite open cover presented combinatorially: patch ids plus the nerve,
/// the explicit list of nonempty intersections. The nerve must be closed
/// under taking sub-tuples, so every face needed by the coboundary of a
/// listed tuple is itself listed.
struct Cover {
  std::vector<int> patch_ids;
  std::vector<PatchTuple> nerve;

  bool contains(const PatchTuple& t) const;
  std::vector<PatchTuple> tuples_of_size(int k) const;
  /// Size of the largest listed tuple.
  int depth() const;

  bool operator==(const Cover& o) const = default;
};

/// Throws PlecticError(Invalid) naming the first offending tuple.
void validate_cover(const Cover& c);

/// Cover on ids 0..patches-1 whose nerve lists every increasing tuple up to
/// the given size (all intersections nonempty, as for convex patches).
Cover full_cover(int patches, int max_size);

/// Phase of a U(1)-valued function g = exp(i h), stored as a chart function
/// plus a rational multiple of pi kept as a formal symbol. Keeping pi
/// symbolic makes "constant lying in 2*pi*Z" an exact rational test.
struct Phase {
  ScalarExpr fn;
  Rational pi_coeff{0};

  static Phase zero(const ChartPtr& chart);
  static Phase of_pi(const ChartPtr& chart, const Rational& c);

  bool is_zero() const { return fn.is_zero() && pi_coeff == 0; }
  /// g = exp(i h) is the constant function 1.
  bool is_two_pi_integer() const;

  Phase operator-() const;
  Phase operator+(const Phase& o) const;
  Phase operator-(const Phase& o) const;
  bool operator==(const Phase& o) const;
};

/// One layer of the total Čech–de Rham complex truncated at form degree
/// `level`: a cochain of total degree m keeps a phase component at Čech
/// degree m and a k-form component at Čech degree m-k for 1 <= k <= level.
/// Components are indexed by the nerve tuples of matching size; an absent
/// tuple means the intersection is empty and the group there is trivial.
struct DeligneCochain {
  ChartPtr chart;
  Cover cover;
  int level = 1;
  int total_degree = 0;
  std::map<PatchTuple, Phase> phases;
  /// forms[k-1] holds the k-form components.
  std::vector<std::map<PatchTuple, Form>> forms;

  /// Čech degree of the k-form layer (k = 0 addresses the phases).
  int cech_degree(int k) const { return total_degree - k; }

  const Phase& phase(const PatchTuple& t) const;
  const Form& theta(int k, const PatchTuple& t) const;
  void set_phase(const PatchTuple& t, Phase h);
  void set_theta(int k, const PatchTuple& t, Form f);
};

/// All-zero cochain with components laid out over the nerve.
DeligneCochain zero_cochain(ChartPtr chart, Cover cover, int level, int total_degree);

/// The inclusion of a global form of degree `level`: trivial phases, zero
/// middle layers, and the form restricted to every patch.
DeligneCochain global_form_cochain(ChartPtr chart, Cover cover, int level, const Form& alpha);

DeligneCochain cochain_add(const DeligneCochain& a, const DeligneCochain& b);
DeligneCochain cochain_sub(const DeligneCochain& a, const DeligneCochain& b);
/// Every component identically zero (phases as honest functions, not mod 2pi).
bool cochain_is_zero(const DeligneCochain& c);
/// Equal up to per-tuple phase constants in 2*pi*Z, i.e. equal as U(1) data.
bool cochain_equal_mod_gauge(const DeligneCochain& a, const DeligneCochain& b);

/// Total differential: the phase layer maps to (delta h, (-1)^p dh) and the
/// k-form layers to delta theta^k + (-1)^p d theta^k with p the Čech degree
/// of the differentiated layer; the d theta^level term is truncated away.
/// Throws PlecticError(Invalid, "nerve depth exceeded") when the result
/// would need intersections deeper than the nerve attests (total degree
/// above `level`).
DeligneCochain deligne_d(const DeligneCochain& c);

/// Residual report of the cocycle conditions at top total degree:
///   delta g = 1           (phase residual constant in 2*pi*Z, checked exactly)
///   delta theta^1 = (-1)^{n-1} dh
///   delta theta^k = (-1)^{n-k} d theta^{k-1}    2 <= k <= n.
struct CocycleReport {
  bool phase_condition = true;
  std::vector<bool> form_conditions;       // entry k-1 for layer k
  std::vector<std::string> failures;       // one line per violated tuple

  bool ok() const;
};

CocycleReport is_cocycle(const DeligneCochain& c);

/// The global closed (level+1)-form (-1)^n d theta^n. Verifies that the
/// patchwise candidates agree before gluing; throws PlecticError(Verify)
/// if they do not (impossible for verified cocycles built from one chart).
Form curvature(const DeligneCochain& c);

enum class LeafKind { Circle, Sphere };

/// A parametrized cycle used for holonomy and integrality checks.
/// Circles on a polar chart (recognized by a coordinate named "r") are the
/// coordinate lines r = R; on other 2-dim charts they are round circles
/// center + R(cos s, sin s). Spheres use center + R(sin u cos v, sin u sin v,
/// cos u) over [0,pi] x [0,2pi], the outward orientation.
struct LeafMap {
  LeafKind kind = LeafKind::Circle;
  double radius = 1.0;
  std::vector<double> center; // defaults to the chart origin
};

LeafMap circle_leaf(double radius, std::vector<double> center = {});
LeafMap sphere_leaf(double radius, std::vector<double> center = {});

/// Pullback integral over the leaf by adaptive quadrature (absolute error
/// well under 1e-10 on these integrands). The form degree must match the
/// leaf dimension. Throws PlecticError(Domain) if the parametrization meets
/// a coefficient singularity.
double integrate_over_leaf(const Form& alpha, const LeafMap& leaf);

struct HolonomyResult {
  double exponent = 0.0;            // integral of the reduced form over the leaf
  std::complex<double> value{1, 0}; // exp(i * exponent)
};

/// Holonomy of a cocycle presented in reduced form: the cochain must equal
/// the inclusion of the global witness form, either directly or after
/// subtracting deligne_d(reduction) for a caller-supplied comparison
/// cochain. Throws PlecticError(Verify, "reduction witness missing") when
/// the presentation cannot be verified.
HolonomyResult holonomy(const DeligneCochain& c, const Form& witness, const LeafMap& leaf,
                        const std::optional<DeligneCochain>& reduction = std::nullopt);

struct CycleVerdict {
  double integral = 0.0;      // pullback integral over the cycle
  double defect = 0.0;        // distance to the nearest point of 2*pi*Z
  bool in_two_pi_z = false;   // within 1e-9
};

/// The verdict is relative to the supplied cycles only: it certifies
/// membership of each listed period in 2*pi*Z, not integrality over the
/// whole homology of the ambient manifold.
struct IntegralityReport {
  std::vector<CycleVerdict> cycles;
  bool all_integral = false;
  std::string scope = "relative to supplied cycles";
};

IntegralityReport integrality_check(const Form& form, const std::vector<LeafMap>& cycles);

/// A cocycle fixture: the cochain plus the global reduction witness when the
/// presentation has one.
struct CocycleFixture {
  DeligneCochain cochain;
  std::optional<Form> witness;
};

/// (1, p0* theta) with theta = r^2/2 dt on the punctured polar plane.
CocycleFixture oscillator_cocycle(int patches = 3);
/// (1, 0, p0* B) with B the inverse-square solid-angle 2-form on punctured
/// 3-space, whose exterior derivative is the volume multiple 1/r^2 dx dy dz.
CocycleFixture sphere_cocycle(int patches = 3);

/// Cocycle JSON: {"n": int, "chart": [names], "cover": {"patch_ids": [...],
/// "nerve": [[...], ...]}, "phases": {"i,j": {"fn": expr, "pi": rational}},
/// "forms": {"theta1": {"i": <form>}, ...}, "global_witness": <form>?}
/// with <form> = {"degree": int, "terms": [{"idx": [...], "coeff": expr}]}.
CocycleFixture cocycle_from_json_text(const std::string& text);

/// Leaf JSON: {"kind": "circle"|"sphere", "radius": rational, "center": [rationals]}.
LeafMap leaf_from_json_text(const std::string& text);

} // namespace plectic
