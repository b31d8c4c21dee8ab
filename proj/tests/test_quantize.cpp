#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "json.hpp"
#include "plectic/fixtures.hpp"
#include "plectic/plectic.hpp"
#include "plectic/quantize.hpp"
#include "test_util.hpp"

using namespace plectic;
using namespace plectic::testutil;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

CocycleFixture scaled_fixture(const CocycleFixture& fx, const Rational& c) {
  CocycleFixture out = fx;
  for (auto& layer : out.cochain.forms)
    for (auto& [tuple, form] : layer) form = form.scaled(c);
  if (out.witness) out.witness = out.witness->scaled(c);
  return out;
}

} // namespace

TEST_CASE("radial foliations") {
  RadialFoliation osc = oscillator_foliation();
  CHECK(osc.kind == FoliationKind::CirclesInPlane);
  CHECK(osc.chart->index_of("r").has_value());
  validate_foliation(osc);

  RadialFoliation sph = sphere_foliation();
  CHECK(sph.kind == FoliationKind::SpheresInSpace);
  CHECK(sph.chart->dim() == 3);
  validate_foliation(sph);

  RadialFoliation bad = osc;
  bad.chart = chart_xyz();
  CHECK_THROWS_AS(validate_foliation(bad), PlecticError);
  bad = sph;
  bad.chart = make_chart({"r", "t"});
  CHECK_THROWS_AS(validate_foliation(bad), PlecticError);
  bad = osc;
  bad.range = {rat(2), rat(1)};
  CHECK_THROWS_AS(validate_foliation(bad), PlecticError);
  bad.range = {rat(-1), rat(1)};
  CHECK_THROWS_AS(validate_foliation(bad), PlecticError);

  RationalInterval iv{rat(0), rat(3)};
  CHECK(iv.contains(rat(3)));
  CHECK(iv.contains(rat(1, 2)));
  CHECK(!iv.contains(rat(0)));
  CHECK(!iv.contains(rat(7, 2)));
  CHECK(RationalInterval{rat(1), rat(1)}.empty());
}

TEST_CASE("oscillator Bohr-Sommerfeld variety") {
  CocycleFixture osc = oscillator_cocycle();
  // Radii up to 5/2 catch exactly the energy levels 1, 2, 3.
  BSVariety v = bohr_sommerfeld(osc, oscillator_foliation(), {rat(0), rat(5, 2)});
  REQUIRE(v.leaves.size() == 3);
  for (long n = 1; n <= 3; ++n) {
    const BSLeaf& leaf = v.leaves[n - 1];
    CHECK(leaf.level == n);
    CHECK(leaf.radius_sq == rat(2 * n));
    CHECK(leaf.verified);
    CHECK(std::fabs(leaf.holonomy_exponent - 2 * kPi * n) < 1e-9);
  }
  CHECK(!v.leaves[0].radius.has_value()); // sqrt(2)
  REQUIRE(v.leaves[1].radius.has_value());
  CHECK(*v.leaves[1].radius == rat(2));
  CHECK(!v.leaves[2].radius.has_value()); // sqrt(6)
  CHECK(v.generating_condition.find("1/2*R^2") != std::string::npos);

  v = bohr_sommerfeld(osc, oscillator_foliation(), {rat(0), rat(3)});
  REQUIRE(v.leaves.size() == 4); // sqrt(8) <= 3 joins the first three
  CHECK(v.leaves[3].radius_sq == rat(8));

  // Wider search: every level n = 1..8 appears, with exact radius squares.
  v = bohr_sommerfeld(osc, oscillator_foliation(), {rat(0), rat(4)});
  REQUIRE(v.leaves.size() == 8);
  for (long n = 1; n <= 8; ++n) {
    CHECK(v.leaves[n - 1].radius_sq == rat(2 * n));
    CHECK(v.leaves[n - 1].level == n);
    CHECK(v.leaves[n - 1].verified);
  }

  // An empty window and a scaled-down cocycle both give empty varieties.
  CHECK(bohr_sommerfeld(osc, oscillator_foliation(), {rat(3), rat(3)}).leaves.empty());
  CocycleFixture tiny = scaled_fixture(osc, rat(1, 100));
  CHECK(is_cocycle(tiny.cochain).ok());
  CHECK(bohr_sommerfeld(tiny, oscillator_foliation(), {rat(0), rat(3)}).leaves.empty());

  // Doubling the cocycle doubles the density of admitted leaves.
  CocycleFixture twice = scaled_fixture(osc, rat(2));
  BSVariety dense = bohr_sommerfeld(twice, oscillator_foliation(), {rat(0), rat(2)});
  REQUIRE(dense.leaves.size() == 4); // R^2 = n for n = 1..4
  for (long n = 1; n <= 4; ++n) CHECK(dense.leaves[n - 1].radius_sq == rat(n));
}

TEST_CASE("sphere Bohr-Sommerfeld variety") {
  CocycleFixture sph = sphere_cocycle();
  BSVariety v = bohr_sommerfeld(sph, sphere_foliation(), {rat(0), rat(2)});
  REQUIRE(v.leaves.size() == 4);
  for (long n = 1; n <= 4; ++n) {
    const BSLeaf& leaf = v.leaves[n - 1];
    REQUIRE(leaf.radius.has_value());
    CHECK(*leaf.radius == rat(n, 2)); // half-integer radii, 2R integral
    CHECK(is_integer(*leaf.radius * 2));
    CHECK(leaf.radius_sq == rat(n, 2) * rat(n, 2));
    CHECK(leaf.level == n);
    // Flux through the leaf is 4*pi*R.
    CHECK(std::fabs(leaf.holonomy_exponent - 4 * kPi * to_double(*leaf.radius)) < 1e-9);
    CHECK(leaf.verified);
  }
  CHECK(v.generating_condition.find("2*R^1") != std::string::npos);

  v = bohr_sommerfeld(sph, sphere_foliation(), {rat(0), rat(3)});
  REQUIRE(v.leaves.size() == 6);
  for (long n = 1; n <= 6; ++n) CHECK(*v.leaves[n - 1].radius == rat(n, 2));

  // No rejected radius of small denominator sneaks past the quadrature test.
  for (long p = 1; p <= 6; ++p) {
    for (long q = 1; q <= 3; ++q) {
      Rational r = rat(p, q);
      if (r > rat(2) || is_integer(r * 2)) continue;
      IntegralityReport rep = integrality_check(*sph.witness, {sphere_leaf(to_double(r))});
      CHECK(!rep.all_integral);
      CHECK(rep.cycles[0].defect > 1e-3);
    }
  }

  // Tripled cocycle: flux 12*pi*R, so leaves sit at R = n/6.
  CocycleFixture three = scaled_fixture(sph, rat(3));
  BSVariety dense = bohr_sommerfeld(three, sphere_foliation(), {rat(0), rat(1)});
  REQUIRE(dense.leaves.size() == 6);
  for (long n = 1; n <= 6; ++n) CHECK(*dense.leaves[n - 1].radius == rat(n, 6));
}

TEST_CASE("Bohr-Sommerfeld input checking") {
  CocycleFixture osc = oscillator_cocycle();
  CocycleFixture sph = sphere_cocycle();

  CocycleFixture no_witness = osc;
  no_witness.witness.reset();
  CHECK_THROWS_WITH_AS(
      bohr_sommerfeld(no_witness, oscillator_foliation(), {rat(0), rat(3)}),
      doctest::Contains("reduction witness"), PlecticError);

  CocycleFixture wrong = osc;
  wrong.witness = osc.witness->scaled(rat(2)); // no longer presents the cochain
  CHECK_THROWS_WITH_AS(bohr_sommerfeld(wrong, oscillator_foliation(), {rat(0), rat(3)}),
                       doctest::Contains("reduction witness"), PlecticError);

  // Chart and kind mismatches.
  CHECK_THROWS_AS(bohr_sommerfeld(sph, oscillator_foliation(), {rat(0), rat(2)}),
                  PlecticError);
  CHECK_THROWS_AS(bohr_sommerfeld(osc, sphere_foliation(), {rat(0), rat(2)}),
                  PlecticError);

  // Angle-dependent and non-monomial witnesses have no closed-form solve.
  auto rt = osc.cochain.chart;
  CocycleFixture crooked = osc;
  Form skew = form_term(rt, {1}, "r^2*t");
  crooked.witness = skew;
  crooked.cochain = global_form_cochain(rt, osc.cochain.cover, 1, skew);
  CHECK_THROWS_WITH_AS(bohr_sommerfeld(crooked, oscillator_foliation(), {rat(0), rat(3)}),
                       doctest::Contains("closed-form"), PlecticError);
  Form mixed = form_term(rt, {1}, "r^2/2+r");
  crooked.witness = mixed;
  crooked.cochain = global_form_cochain(rt, osc.cochain.cover, 1, mixed);
  CHECK_THROWS_WITH_AS(bohr_sommerfeld(crooked, oscillator_foliation(), {rat(0), rat(3)}),
                       doctest::Contains("closed-form"), PlecticError);

  // A non-radial 2-form on the sphere chart is likewise refused.
  CocycleFixture lopsided = sph;
  Form flat = form_term(sph.cochain.chart, {0, 1}, "1");
  lopsided.witness = flat;
  lopsided.cochain = global_form_cochain(sph.cochain.chart, sph.cochain.cover, 2, flat);
  CHECK_THROWS_AS(bohr_sommerfeld(lopsided, sphere_foliation(), {rat(0), rat(2)}),
                  PlecticError);
}

TEST_CASE("oscillator section phases") {
  for (long n = 1; n <= 4; ++n) {
    SectionPhase s = oscillator_section_phase(rat(n));
    CHECK(s.single_valued);
    CHECK(s.winding == -n);
    CHECK(s.increment_over_two_pi == rat(-n));
    CHECK(s.verdict == "single-valued");
  }
  CHECK(oscillator_section_phase(rat(1)).phase == "exp(-t*i)");
  CHECK(oscillator_section_phase(rat(2)).phase == "exp(-2*t*i)");

  SectionPhase bad = oscillator_section_phase(rat(3, 2));
  CHECK(!bad.single_valued);
  CHECK(bad.verdict == "no single-valued solution");
  CHECK(bad.increment_over_two_pi == rat(-3, 2));
  CHECK(bad.phase == "exp(-(3/2)*t*i)");

  CHECK_THROWS_AS(oscillator_section_phase(rat(0)), PlecticError);
  CHECK_THROWS_AS(oscillator_section_phase(rat(-2)), PlecticError);

  // Every admitted leaf carries a single-valued section of winding -n.
  CocycleFixture osc = oscillator_cocycle();
  BSVariety v = bohr_sommerfeld(osc, oscillator_foliation(), {rat(0), rat(3)});
  for (const BSLeaf& leaf : v.leaves) {
    SectionPhase s = oscillator_section_phase(rat(leaf.level));
    CHECK(s.single_valued);
    CHECK(s.winding == -leaf.level);
  }
}

TEST_CASE("quantum states and the representation dictionary") {
  QuantumState empty = make_state({});
  CHECK(state_dimension(empty) == 0);
  CHECK(state_to_rep(empty) == "0");

  QuantumState one = make_state({{1, 1}});
  CHECK(state_dimension(one) == 2);
  CHECK(state_to_rep(one) == "Sym^1(C^2*)");

  QuantumState mix = make_state({{1, 2}, {2, 1}});
  CHECK(state_dimension(mix) == 7);
  CHECK(state_to_rep(mix) == "2*Sym^1(C^2*) + Sym^2(C^2*)");

  CHECK(make_state({{1, 0}, {3, 2}}) == make_state({{3, 2}}));
  CHECK_THROWS_AS(make_state({{0, 1}}), PlecticError);
  CHECK_THROWS_AS(make_state({{-2, 1}}), PlecticError);
  CHECK_THROWS_AS(make_state({{1, -1}}), PlecticError);

  CHECK(state_from_string("1:2,2:1") == mix);
  CHECK(state_from_string(" 1:2, 2:1 ") == mix);
  CHECK(state_from_string("") == empty);
  CHECK(state_from_string("2:1,1:1,1:1") == make_state({{1, 2}, {2, 1}}));
  CHECK_THROWS_AS(state_from_string("1"), PlecticError);
  CHECK_THROWS_AS(state_from_string("a:1"), PlecticError);
  CHECK_THROWS_AS(state_from_string("0:1"), PlecticError);
  CHECK_THROWS_AS(state_from_string("1:-2"), PlecticError);

  CHECK(state_direct_sum(one, one) == make_state({{1, 2}}));
  CHECK(state_direct_sum(mix, empty) == mix);

  // Dimension agrees with brute-force monomial counting of Sym^n(C^2*).
  for (int n = 1; n <= 10; ++n) {
    CHECK(sym_power_dimension(n) == n + 1);
    CHECK(state_dimension(make_state({{n, 1}})) == sym_power_dimension(n));
  }

  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<long> pick_n(1, 6), pick_k(0, 3);
  std::map<std::string, QuantumState> seen;
  for (int trial = 0; trial < 40; ++trial) {
    std::map<long, long> m;
    for (int j = 0; j < 3; ++j) m[pick_n(rng)] = pick_k(rng);
    QuantumState s = make_state(m);
    long by_oracle = 0;
    for (const auto& [n, k] : s.multiplicities)
      by_oracle += k * sym_power_dimension(static_cast<int>(n));
    CHECK(state_dimension(s) == by_oracle);
    // Injectivity: equal descriptions force equal states.
    auto [it, fresh] = seen.emplace(state_to_rep(s), s);
    if (!fresh) CHECK(it->second == s);

    std::map<long, long> m2;
    for (int j = 0; j < 2; ++j) m2[pick_n(rng)] = pick_k(rng);
    QuantumState s2 = make_state(m2);
    CHECK(state_dimension(state_direct_sum(s, s2)) ==
          state_dimension(s) + state_dimension(s2));
  }
}

TEST_CASE("leaves are Lagrangian") {
  PlecticStructure osc = builtin_structure("oscpolar");
  for (const Rational& radius : {rat(1), rat(2), rat(3, 2)}) {
    PointSubspace tangent{{radius, rat(1)}, {{rat(0), rat(1)}}};
    CHECK(classify_subspace(osc, tangent, 1) == SubspaceClass::Lagrangian);
  }

  PlecticStructure sph = builtin_structure("r3sphere");
  struct SpherePoint {
    QVec point;
    std::vector<QVec> basis;
  };
  // Rational points with tangent bases perpendicular to the radius.
  std::vector<SpherePoint> samples = {
      {{rat(1, 2), rat(0), rat(0)}, {{rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}}},
      {{rat(3, 5), rat(4, 5), rat(0)}, {{rat(-4, 5), rat(3, 5), rat(0)}, {rat(0), rat(0), rat(1)}}},
      {{rat(1, 3), rat(2, 3), rat(2, 3)},
       {{rat(-2, 3), rat(1, 3), rat(0)}, {rat(-2, 3), rat(0), rat(1, 3)}}},
  };
  for (const SpherePoint& s : samples) {
    PointSubspace tangent{s.point, s.basis};
    CHECK(classify_subspace(sph, tangent, 2) == SubspaceClass::Lagrangian);
  }
}

TEST_CASE("quantize report JSON") {
  CocycleFixture osc = oscillator_cocycle();
  BSVariety v = bohr_sommerfeld(osc, oscillator_foliation(), {rat(0), rat(5, 2)});
  std::string text = quantize_report_json(v, {make_state({{1, 2}, {2, 1}})});
  CHECK(text == quantize_report_json(v, {make_state({{1, 2}, {2, 1}})}));

  nlohmann::json j = nlohmann::json::parse(text);
  REQUIRE(j["variety"].size() == 3);
  CHECK(j["variety"][0]["radius"] == "sqrt(2)");
  CHECK(j["variety"][0]["radius_sq"] == "2");
  CHECK(j["variety"][0]["holonomy_exponent"] == "2*pi*1");
  CHECK(j["variety"][0]["verified"] == true);
  CHECK(j["variety"][1]["radius"] == "2");
  REQUIRE(j["states"].size() == 1);
  CHECK(j["states"][0]["dimension"] == 7);
  CHECK(j["states"][0]["multiplicities"]["1"] == 2);
  CHECK(j["states"][0]["rep"] == "2*Sym^1(C^2*) + Sym^2(C^2*)");

  CocycleFixture sph = sphere_cocycle();
  BSVariety sv = bohr_sommerfeld(sph, sphere_foliation(), {rat(0), rat(1)});
  nlohmann::json js = nlohmann::json::parse(quantize_report_json(sv, {}));
  CHECK(js["variety"][0]["radius"] == "1/2");
  CHECK(js["states"].empty());
}
