#include "plectic/linfty.hpp"

#include <algorithm>

#include "plectic/quadrature.hpp"

namespace plectic {

namespace {

void verify_degree0(const PlecticStructure& P, const GradedElement& x) {
  if (!(ext_d(x.payload) == -interior(x.vf, P.omega)))
    fail(ErrorKind::Invalid, "degree-0 element lacks a Hamiltonian certificate");
}

/// Sign of the k-fold contraction in the structure's bracket family.
Rational zeta(int k) {
  int e = (k % 2 == 0) ? (k / 2 + 1) : ((k - 1) / 2);
  return (e % 2 == 0) ? Rational(1) : Rational(-1);
}

/// l_k without the public-precondition checks; degree-0 l_1 gives zero.
GradedElement l_k_eval(const PlecticStructure& P, const std::vector<GradedElement>& xs) {
  int k = static_cast<int>(xs.size());
  const ChartPtr& chart = P.chart;
  if (k == 1) {
    const GradedElement& x = xs[0];
    if (x.degree == 0) // bottom of the complex
      return GradedElement{0, Form::zero(chart, P.n - 1), MultiVector(chart, 1)};
    GradedElement r{x.degree - 1, ext_d(x.payload), MultiVector(chart, 1)};
    return r;
  }

  int out_deg = std::min(k - 2, P.n - 1);
  GradedElement zero{out_deg, Form::zero(chart, P.n - 1 - out_deg), MultiVector(chart, 1)};
  for (const auto& x : xs)
    if (x.degree > 0 || x.is_zero()) return zero;
  if (k > P.n + 1) return zero;

  MultiVector all = xs[0].vf;
  for (int i = 1; i < k; ++i) all = all.wedge(xs[i].vf);
  Form payload = interior(all, P.omega).scaled(zeta(k));
  MultiVector vf(chart, 1);
  if (k == 2) vf = schouten(xs[0].vf, xs[1].vf);
  return GradedElement{k - 2, std::move(payload), std::move(vf)};
}

} // namespace

GradedElement ge_degree0(const PlecticStructure& P, const HamiltonianPair& pair) {
  GradedElement x{0, pair.alpha, pair.vf};
  verify_degree0(P, x);
  return x;
}

GradedElement ge_higher(const PlecticStructure& P, int degree, Form payload) {
  if (degree < 1 || degree > P.n - 1)
    fail(ErrorKind::Invalid, "element degree out of range");
  if (!payload.is_zero() && payload.degree() != P.n - 1 - degree)
    fail(ErrorKind::Invalid, "payload degree does not match element degree");
  return GradedElement{degree, std::move(payload), MultiVector(P.chart, 1)};
}

bool ge_equal(const GradedElement& a, const GradedElement& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree == b.degree && a.payload == b.payload;
}

GradedElement ge_add(const GradedElement& a, const GradedElement& b) {
  if (a.is_zero() && a.vf.is_zero()) return b;
  if (b.is_zero() && b.vf.is_zero()) return a;
  if (a.degree != b.degree) fail(ErrorKind::Invalid, "degree mismatch in graded sum");
  return GradedElement{a.degree, a.payload + b.payload, a.vf + b.vf};
}

GradedElement ge_scale(const GradedElement& a, const Rational& c) {
  return GradedElement{a.degree, a.payload.scaled(c), a.vf.scaled(c)};
}

std::vector<Permutation> unshuffles(int p, int q) {
  if (p < 0 || q < 0) fail(ErrorKind::Invalid, "negative unshuffle arity");
  int m = p + q;
  std::vector<Permutation> out;
  // A (p,q)-unshuffle is determined by the image of {1..p}; lexicographic
  // enumeration of p-subsets is lexicographic in one-line notation.
  std::vector<int> c(p);
  for (int i = 0; i < p; ++i) c[i] = i + 1;
  while (true) {
    Permutation sigma;
    sigma.images.reserve(m);
    sigma.images.insert(sigma.images.end(), c.begin(), c.end());
    std::vector<bool> used(m + 1, false);
    for (int v : c) used[v] = true;
    for (int v = 1; v <= m; ++v)
      if (!used[v]) sigma.images.push_back(v);
    out.push_back(std::move(sigma));
    if (p == 0) break;
    int i = p - 1;
    while (i >= 0 && c[i] == m - p + i + 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < p; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

int perm_sign(const Permutation& sigma) {
  int inv = 0;
  int m = static_cast<int>(sigma.images.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (sigma.images[a] > sigma.images[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
  int m = static_cast<int>(sigma.images.size());
  if (static_cast<int>(degrees.size()) != m)
    fail(ErrorKind::Invalid, "degree list does not match permutation size");
  int parity = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (sigma.images[a] > sigma.images[b])
        parity += degrees[sigma.images[a] - 1] * degrees[sigma.images[b] - 1];
  return parity % 2 == 0 ? 1 : -1;
}

GradedElement l_k(const PlecticStructure& P, const std::vector<GradedElement>& inputs) {
  int k = static_cast<int>(inputs.size());
  if (k < 1) fail(ErrorKind::Invalid, "bracket arity must be positive");
  if (k == 1 && inputs[0].degree == 0)
    fail(ErrorKind::Invalid, "unary bracket needs positive degree");
  for (const auto& x : inputs)
    if (x.degree == 0) verify_degree0(P, x);
  return l_k_eval(P, inputs);
}

GradedElement gen_jacobi_residual(const PlecticStructure& P,
                                  const std::vector<GradedElement>& inputs) {
  int m = static_cast<int>(inputs.size());
  if (m < 1) fail(ErrorKind::Invalid, "need at least one input");
  for (const auto& x : inputs)
    if (x.degree == 0) verify_degree0(P, x);

  std::vector<int> degrees;
  degrees.reserve(m);
  for (const auto& x : inputs) degrees.push_back(x.degree);

  int total = 0;
  for (int d : degrees) total += d;
  int out_deg = std::clamp(total + m - 3, 0, P.n - 1);
  GradedElement acc{out_deg, Form::zero(P.chart, P.n - 1 - out_deg), MultiVector(P.chart, 1)};

  for (int i = 1; i <= m; ++i) {
    int j = m + 1 - i;
    for (const Permutation& sigma : unshuffles(i, m - i)) {
      int sign = perm_sign(sigma) * koszul_sign(sigma, degrees);
      if ((i * (j - 1)) % 2 != 0) sign = -sign;
      std::vector<GradedElement> head;
      head.reserve(i);
      for (int t = 0; t < i; ++t) head.push_back(inputs[sigma.images[t] - 1]);
      GradedElement inner = l_k_eval(P, head);
      if (inner.is_zero() && inner.vf.is_zero()) continue;
      std::vector<GradedElement> outer;
      outer.reserve(j);
      outer.push_back(std::move(inner));
      for (int t = i; t < m; ++t) outer.push_back(inputs[sigma.images[t] - 1]);
      GradedElement term = l_k_eval(P, outer);
      acc = ge_add(acc, ge_scale(term, Rational(sign)));
    }
  }
  return acc;
}

Form semistrict_j(const PlecticStructure& P, const MultiVector& v1, const MultiVector& v2,
                  const MultiVector& v3) {
  return interior(v1, interior(v2, interior(v3, P.omega)));
}

ScalarExpr ce_delta(const std::function<ScalarExpr(const std::vector<MultiVector>&)>& c,
                    const std::vector<MultiVector>& vfs) {
  int m = static_cast<int>(vfs.size());
  if (m < 1) fail(ErrorKind::Invalid, "coboundary needs at least one field");
  ScalarExpr acc = ScalarExpr::zero(vfs[0].chart());
  if (m == 1) return acc; // constants have vanishing coboundary
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      std::vector<MultiVector> args;
      args.reserve(m - 1);
      args.push_back(schouten(vfs[i - 1], vfs[j - 1]));
      for (int t = 1; t <= m; ++t)
        if (t != i && t != j) args.push_back(vfs[t - 1]);
      ScalarExpr val = c(args);
      acc += ((i + j) % 2 == 0) ? val : -val;
    }
  }
  return acc;
}

double ce_delta_num(const std::function<double(const std::vector<MultiVector>&)>& c,
                    const std::vector<MultiVector>& vfs) {
  int m = static_cast<int>(vfs.size());
  if (m < 2) fail(ErrorKind::Invalid, "coboundary needs at least two fields");
  double acc = 0.0;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      std::vector<MultiVector> args;
      args.reserve(m - 1);
      args.push_back(schouten(vfs[i - 1], vfs[j - 1]));
      for (int t = 1; t <= m; ++t)
        if (t != i && t != j) args.push_back(vfs[t - 1]);
      double val = c(args);
      acc += ((i + j) % 2 == 0) ? val : -val;
    }
  }
  return acc;
}

double ce_path_defect(const PlecticStructure& P, const QVec& x, const QVec& y,
                      const MultiVector& v1, const MultiVector& v2, const MultiVector& v3) {
  const ChartPtr& chart = P.chart;
  int dim = chart->dim();

  auto j_at = [&](const QVec& pt) {
    Form j = semistrict_j(P, v1, v2, v3);
    return to_double(j.scalar_part().eval(pt));
  };

  std::vector<double> x0(dim), dir(dim);
  for (int i = 0; i < dim; ++i) {
    x0[i] = to_double(x[i]);
    dir[i] = to_double(y[i]) - x0[i];
  }

  auto cochain = [&](const std::vector<MultiVector>& pair) {
    // integrate omega(v, w, .) over the straight segment
    Form beta = interior(pair[1], interior(pair[0], P.omega));
    return integrate(
        [&](double t) {
          std::vector<double> pt(dim);
          for (int i = 0; i < dim; ++i) pt[i] = x0[i] + t * dir[i];
          double acc = 0.0;
          for (const auto& [idx, cexpr] : beta.terms())
            acc += cexpr.eval_double(pt) * dir[idx[0]];
          return acc;
        },
        0.0, 1.0);
  };

  double delta = ce_delta_num(cochain, {v1, v2, v3});
  return std::abs(delta - (j_at(y) - j_at(x)));
}

std::pair<int, int> homology_finite(const QMatrix& d) {
  int r = qrank(d);
  return {d.rows - r, d.cols - r};
}

PlecticLie2::E0 PlecticLie2::d(const E1& f) const {
  Form alpha = ext_d(Form::scalar(f));
  return HamiltonianPair{std::move(alpha), MultiVector(P->chart, 1)};
}

PlecticLie2::E0 PlecticLie2::b(const E0& x, const E0& y) const {
  return ham_bracket_pair(*P, x, y);
}

PlecticLie2::E1 PlecticLie2::b01(const E0&, const E1&) const {
  return ScalarExpr::zero(P->chart);
}

PlecticLie2::E1 PlecticLie2::b10(const E1&, const E0&) const {
  return ScalarExpr::zero(P->chart);
}

PlecticLie2::E1 PlecticLie2::j(const E0& x, const E0& y, const E0& z) const {
  return semistrict_j(*P, x.vf, y.vf, z.vf).scalar_part();
}

PlecticLie2::E0 PlecticLie2::add0(const E0& x, const E0& y) const {
  return HamiltonianPair{x.alpha + y.alpha, x.vf + y.vf};
}

PlecticLie2::E0 PlecticLie2::sub0(const E0& x, const E0& y) const {
  return HamiltonianPair{x.alpha - y.alpha, x.vf - y.vf};
}

PlecticLie2::E1 PlecticLie2::add1(const E1& f, const E1& g) const { return f + g; }

PlecticLie2::E1 PlecticLie2::sub1(const E1& f, const E1& g) const { return f - g; }

bool PlecticLie2::zero0(const E0& x) const { return x.alpha.is_zero() && x.vf.is_zero(); }

bool PlecticLie2::zero1(const E1& f) const { return f.is_zero(); }

} // namespace plectic
