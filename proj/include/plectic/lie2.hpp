#pragma once

#include <array>
#include <vector>

namespace plectic {

/// Generic checkers over "Lie 2-algebra" packages. A package L provides:
///   types E0, E1;
///   E0 d(E1); E0 b(E0,E0); E1 b01(E0,E1); E1 b10(E1,E0); E1 j(E0,E0,E0);
///   E0 add0/sub0; E1 add1/sub1; bool zero0(E0); bool zero1(E1).
/// A morphism package M between source S and target T provides:
///   T::E0 phi0(S::E0); T::E1 phi1(S::E1); T::E1 chi(S::E0, S::E0).

/// Jacobiator coherence law: five terms against five terms.
template <class L>
typename L::E1 big_j_residual(const L& S, const typename L::E0& x, const typename L::E0& y,
                              const typename L::E0& z, const typename L::E0& w) {
  using E1 = typename L::E1;
  E1 lhs = S.add1(
      S.add1(S.add1(S.add1(S.b01(x, S.j(y, z, w)), S.j(x, S.b(y, z), w)),
                    S.j(x, z, S.b(y, w))),
             S.b10(S.j(x, y, z), w)),
      S.b01(z, S.j(x, y, w)));
  E1 rhs = S.add1(
      S.add1(S.add1(S.add1(S.j(x, y, S.b(z, w)), S.j(S.b(x, y), z, w)),
                    S.b01(y, S.j(x, z, w))),
             S.j(y, S.b(x, z), w)),
      S.j(y, z, S.b(x, w)));
  return S.sub1(lhs, rhs);
}

struct MorphismReport {
  bool chain_ok = true;     // phi0 . d = d' . phi1
  bool eq00_ok = true;      // phi0[x,y] - [phi0 x, phi0 y]' = d' Chi(x,y)
  bool eq01_ok = true;      // phi1[x,f] - [phi0 x, phi1 f]' = Chi(x, df)
  bool eq10_ok = true;      // phi1[f,x] - [phi1 f, phi0 x]' = Chi(df, x)
  bool coherence_ok = true; // Jacobiator exchange law

  bool all_ok() const { return chain_ok && eq00_ok && eq01_ok && eq10_ok && coherence_ok; }
};

template <class LS, class LT, class M>
MorphismReport check_morphism(const LS& S, const LT& T, const M& mor,
                              const std::vector<std::array<typename LS::E0, 3>>& triples,
                              const std::vector<typename LS::E1>& ones) {
  MorphismReport rep;

  auto eq00 = [&](const typename LS::E0& x, const typename LS::E0& y) {
    auto lhs = T.sub0(mor.phi0(S.b(x, y)), T.b(mor.phi0(x), mor.phi0(y)));
    return T.zero0(T.sub0(lhs, T.d(mor.chi(x, y))));
  };

  for (const auto& tr : triples) {
    const auto& x = tr[0];
    const auto& y = tr[1];
    const auto& z = tr[2];
    if (!eq00(x, y) || !eq00(y, z) || !eq00(x, z)) rep.eq00_ok = false;

    auto lhs = T.sub1(mor.phi1(S.j(x, y, z)), T.j(mor.phi0(x), mor.phi0(y), mor.phi0(z)));
    auto rhs = T.sub1(
        T.add1(T.sub1(T.sub1(mor.chi(x, S.b(y, z)), mor.chi(S.b(x, y), z)),
                      mor.chi(y, S.b(x, z))),
               T.sub1(T.b01(mor.phi0(x), mor.chi(y, z)), T.b01(mor.phi0(y), mor.chi(x, z)))),
        T.b10(mor.chi(x, y), mor.phi0(z)));
    if (!T.zero1(T.sub1(lhs, rhs))) rep.coherence_ok = false;

    for (const auto& f : ones) {
      auto m01 = T.sub1(mor.phi1(S.b01(x, f)), T.b01(mor.phi0(x), mor.phi1(f)));
      if (!T.zero1(T.sub1(m01, mor.chi(x, S.d(f))))) rep.eq01_ok = false;
      auto m10 = T.sub1(mor.phi1(S.b10(f, x)), T.b10(mor.phi1(f), mor.phi0(x)));
      if (!T.zero1(T.sub1(m10, mor.chi(S.d(f), x)))) rep.eq10_ok = false;
    }
  }

  for (const auto& f : ones)
    if (!T.zero0(T.sub0(mor.phi0(S.d(f)), T.d(mor.phi1(f))))) rep.chain_ok = false;

  return rep;
}

} // namespace plectic
