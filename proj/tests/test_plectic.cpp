#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plectic/plectic.hpp"
#include "test_util.hpp"

using namespace plectic;
using namespace plectic::testutil;

namespace {

PlecticStructure r3vol() {
  auto c = chart_xyz();
  return PlecticStructure(c, 2, form_term(c, {0, 1, 2}, "1"),
                          {{rat(0), rat(0), rat(0)}, {rat(1), rat(1), rat(1)}});
}

ChartPtr chart_pq6() {
  static ChartPtr c = make_chart({"q1", "q2", "q3", "p12", "p13", "p23"});
  return c;
}

// omega = sum_I dp_I ^ dq^I over increasing pairs I on the 6-dim chart.
PlecticStructure pq6() {
  auto c = chart_pq6();
  Form w(c, 3);
  w.add_term({3, 0, 1}, sc(c, "1")); // dp12 ^ dq1 ^ dq2
  w.add_term({4, 0, 2}, sc(c, "1")); // dp13 ^ dq1 ^ dq3
  w.add_term({5, 1, 2}, sc(c, "1")); // dp23 ^ dq2 ^ dq3
  return PlecticStructure(c, 2, w, {{rat(0), rat(0), rat(0), rat(0), rat(0), rat(0)}});
}

PlecticStructure hk4() {
  auto c = chart_r4();
  return PlecticStructure(c, 3, form_term(c, {0, 1, 2, 3}, "6"),
                          {{rat(0), rat(0), rat(0), rat(0)}});
}

HamiltonianPair must_pair(const PlecticStructure& P, const Form& alpha) {
  auto p = hamiltonian_vf(P, alpha);
  REQUIRE(p.has_value());
  // Defining equation holds exactly.
  CHECK(ext_d(p->alpha) == -interior(p->vf, P.omega));
  return *p;
}

} // namespace

TEST_CASE("nondegeneracy certificates") {
  auto P = r3vol();
  auto rep = check_nplectic(P.chart, P.omega, P.n, P.samples);
  CHECK(rep.closed);
  CHECK(rep.generic_rank == 3);
  CHECK(rep.sample_ranks == std::vector<int>{3, 3});
  CHECK(rep.accepted);

  // The same volume form regarded on a 4-dim chart is degenerate.
  auto c4 = make_chart({"x", "y", "z", "w"});
  Form w4 = form_term(c4, {0, 1, 2}, "1");
  auto rep4 = check_nplectic(c4, w4, 2, {{rat(1), rat(0), rat(0), rat(0)}});
  CHECK(rep4.closed);
  CHECK(rep4.generic_rank == 3);
  CHECK_FALSE(rep4.accepted);

  auto P6 = pq6();
  auto rep6 = check_nplectic(P6.chart, P6.omega, P6.n, P6.samples);
  CHECK(rep6.closed);
  CHECK(rep6.generic_rank == 6);
  CHECK(rep6.accepted);

  // Non-closed control: d(x0 dx1^dx2^dx3) is the volume form of the 4-chart.
  auto repn = check_nplectic(chart_r4(), form_term(chart_r4(), {1, 2, 3}, "x0"), 2, {});
  CHECK_FALSE(repn.closed);
  CHECK_FALSE(repn.accepted);
}

TEST_CASE("hamiltonian vector fields") {
  auto P = r3vol();
  auto c = P.chart;

  auto p1 = must_pair(P, form_term(c, {1}, "x"));
  CHECK(p1.vf == mv_term(c, {2}, "-1")); // v_{x dy} = -d/dz

  auto closed = must_pair(P, form_term(c, {1}, "1"));
  CHECK(closed.vf.is_zero());

  auto P6 = pq6();
  auto c6 = P6.chart;
  auto q12 = must_pair(P6, form_term(c6, {1}, "q1")); // q1 dq2
  CHECK(q12.vf == mv_term(c6, {3}, "-1"));            // -d/dp12

  // p12 dq3 is not Hamiltonian: dp12 ^ dq3 is outside the image of v -> i_v omega.
  CHECK_FALSE(hamiltonian_vf(P6, form_term(c6, {2}, "p12")).has_value());
}

TEST_CASE("bracket values and properties") {
  auto P = r3vol();
  auto c = P.chart;
  auto a = must_pair(P, form_term(c, {1}, "x"));  // x dy
  auto b = must_pair(P, form_term(c, {2}, "y"));  // y dz
  CHECK(ham_bracket(P, a, b) == form_term(c, {1}, "1")); // dy
  CHECK(ham_bracket(P, a, a).is_zero());

  // beta closed -> bracket vanishes.
  auto closed = must_pair(P, form_term(c, {0}, "5"));
  CHECK(ham_bracket(P, a, closed).is_zero());

  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 10; ++trial) {
    Form fa = random_form(c, 1, rng, 2), fb = random_form(c, 1, rng, 2);
    auto pa = hamiltonian_vf(P, fa), pb = hamiltonian_vf(P, fb);
    REQUIRE(pa.has_value());
    REQUIRE(pb.has_value());
    // L_{v_alpha} omega = 0.
    CHECK(lie_derivative(pa->vf, P.omega).is_zero());
    // Antisymmetry.
    CHECK(ham_bracket(P, *pa, *pb) == -ham_bracket(P, *pb, *pa));
    // d{a,b} = -i_{[v_a,v_b]} omega, i.e. the bracket pair is again Hamiltonian.
    auto br = ham_bracket_pair(P, *pa, *pb);
    CHECK(ext_d(br.alpha) == -interior(br.vf, P.omega));
    // {a, d beta} = 0 for (n-2)-form beta.
    Form dbeta = ext_d(Form::scalar(random_poly(c, rng)));
    auto pc = hamiltonian_vf(P, dbeta);
    REQUIRE(pc.has_value());
    CHECK(pc->vf.is_zero());
    CHECK(ham_bracket(P, *pa, *pc).is_zero());
  }
}

TEST_CASE("jacobi defect equals the exact correction term") {
  auto P = r3vol();
  auto c = P.chart;

  auto a = must_pair(P, form_term(c, {1}, "x"));
  auto b = must_pair(P, form_term(c, {2}, "y"));
  auto cc = must_pair(P, form_term(c, {0}, "z"));
  auto d0 = jacobi_defect(P, a, b, cc);
  CHECK(d0.bracket_side == d0.exact_side);
  CHECK(d0.bracket_side.is_zero()); // i(v^3)omega is the constant 1 here

  auto a2 = must_pair(P, form_term(c, {1}, "x^2"));
  auto d2 = jacobi_defect(P, a2, b, cc);
  CHECK(d2.bracket_side == d2.exact_side);
  CHECK(d2.bracket_side == form_term(c, {0}, "2")); // defect 2 dx
  // ... matching -d(-2x).
  CHECK(interior(a2.vf.wedge(b.vf).wedge(cc.vf), P.omega) == Form::scalar(sc(c, "-2*x")));

  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 8; ++trial) {
    auto pa = hamiltonian_vf(P, random_form(c, 1, rng, 2));
    auto pb = hamiltonian_vf(P, random_form(c, 1, rng, 2));
    auto pc = hamiltonian_vf(P, random_form(c, 1, rng, 2));
    REQUIRE((pa && pb && pc));
    auto d = jacobi_defect(P, *pa, *pb, *pc);
    CHECK(d.bracket_side == d.exact_side);
  }
  // Triple with one closed entry.
  auto closed = must_pair(P, ext_d(Form::scalar(sc(c, "x*y*z"))));
  auto dcl = jacobi_defect(P, a, closed, cc);
  CHECK(dcl.bracket_side == dcl.exact_side);
}

TEST_CASE("multi-contraction identity") {
  auto P = r3vol();
  auto c = P.chart;
  CHECK(multi_contraction_residual(P, {mv_term(c, {2}, "-1"), mv_term(c, {0}, "-1")}).is_zero());
  CHECK(multi_contraction_residual(P, {mv_term(c, {2}, "-1"), MultiVector(c, 1)}).is_zero());

  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<MultiVector> vfs;
    for (int i = 0; i < 2 + trial % 2; ++i) {
      auto p = hamiltonian_vf(P, random_form(c, 1, rng, 2));
      REQUIRE(p.has_value());
      vfs.push_back(p->vf);
    }
    CHECK(multi_contraction_residual(P, vfs).is_zero());
  }

  // m=3 on the 3-plectic quaternionic fixture with coordinate Hamiltonian fields.
  auto H = hk4();
  auto c4 = H.chart;
  std::vector<MultiVector> threes;
  for (int i = 0; i < 3; ++i) {
    auto p = hamiltonian_vf(H, random_form(c4, 2, rng, 2));
    REQUIRE(p.has_value());
    threes.push_back(p->vf);
  }
  CHECK(multi_contraction_residual(H, threes).is_zero());
}

TEST_CASE("orthogonal complements and subspace classes") {
  auto P = r3vol();
  QVec pt{rat(1), rat(1), rat(1)};
  QVec ex{rat(1), rat(0), rat(0)}, ey{rat(0), rat(1), rat(0)}, ez{rat(0), rat(0), rat(1)};

  PointSubspace W{pt, {ex, ey}};
  auto perp2 = orth_complement(P, W, 2);
  CHECK(perp2.basis.size() == 2);
  CHECK(classify_subspace(P, W, 2) == SubspaceClass::Lagrangian);

  auto perp1 = orth_complement(P, W, 1);
  CHECK(perp1.basis.empty());
  CHECK(classify_subspace(P, W, 1) == SubspaceClass::None);

  PointSubspace full{pt, {ex, ey, ez}};
  auto perpf = orth_complement(P, full, 2);
  CHECK(perpf.basis.empty()); // nondegeneracy
  CHECK(classify_subspace(P, full, 2) == SubspaceClass::None);

  // Every 1-dim subspace is 1-isotropic.
  std::mt19937_64 rng(111);
  for (int trial = 0; trial < 6; ++trial) {
    QVec v{random_rat(rng), random_rat(rng), random_rat(rng)};
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) v[0] = 1;
    PointSubspace L{pt, {v}};
    auto cls = classify_subspace(P, L, 1);
    CHECK((cls == SubspaceClass::Isotropic || cls == SubspaceClass::Lagrangian));
  }

  // span{d/dx} with k=2: every pair from W is dependent, so the complement
  // is everything; isotropic but not lagrangian.
  PointSubspace line{pt, {ex}};
  auto perpl = orth_complement(P, line, 2);
  CHECK(perpl.basis.size() == 3);
  CHECK(classify_subspace(P, line, 2) == SubspaceClass::Isotropic);

  // Volume case: n-Lagrangian iff dim W = n, at sample points.
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<QVec> basis;
    int want = 1 + trial % 3;
    std::mt19937_64 r2(1000 + trial);
    while (static_cast<int>(basis.size()) < want) {
      QVec v{random_rat(r2), random_rat(r2), random_rat(r2)};
      std::vector<QVec> cand = basis;
      cand.push_back(v);
      PointSubspace probe{pt, cand};
      try {
        orth_complement(P, probe, 1);
        basis = cand;
      } catch (const PlecticError&) {
        // dependent pick; try again
      }
    }
    PointSubspace W2{pt, basis};
    bool lag = classify_subspace(P, W2, 2) == SubspaceClass::Lagrangian;
    CHECK(lag == (want == 2));
  }
}
