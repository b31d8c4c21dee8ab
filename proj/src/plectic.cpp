#include "plectic/plectic.hpp"

#include <algorithm>

#include "plectic/linsolve.hpp"
#include "plectic/qlinalg.hpp"

namespace plectic {

namespace {

/// All strictly increasing k-tuples from {0,...,m-1}, lexicographic.
std::vector<std::vector<int>> combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

/// Matrix of the pointwise-linear map v -> i_v omega: columns indexed by
/// coordinate directions, rows by the n-form components of the contraction.
std::vector<std::vector<ScalarExpr>> contraction_matrix(const ChartPtr& chart, const Form& omega,
                                                        int n) {
  int dim = chart->dim();
  std::vector<Form> cols;
  cols.reserve(dim);
  for (int i = 0; i < dim; ++i) cols.push_back(interior(basis_vector(chart, i), omega));
  auto keys = combinations(dim, n);
  std::vector<std::vector<ScalarExpr>> A;
  A.reserve(keys.size());
  for (const auto& K : keys) {
    std::vector<ScalarExpr> row;
    row.reserve(dim);
    for (int i = 0; i < dim; ++i) row.push_back(cols[i].coeff(K));
    A.push_back(std::move(row));
  }
  return A;
}

Rational eval_at_sample(const ScalarExpr& e, const QVec& point) {
  try {
    return e.eval(point);
  } catch (const PlecticError& err) {
    if (err.kind() == ErrorKind::Domain)
      fail(ErrorKind::Singular, "coefficient singular at sample point");
    throw;
  }
}

QMatrix eval_matrix(const std::vector<std::vector<ScalarExpr>>& A, const QVec& point) {
  QMatrix M(static_cast<int>(A.size()), A.empty() ? 0 : static_cast<int>(A[0].size()));
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c) M.at(r, c) = eval_at_sample(A[r][c], point);
  return M;
}

MultiVector constant_vector(const ChartPtr& chart, const QVec& w) {
  MultiVector v(chart, 1);
  for (int i = 0; i < chart->dim(); ++i)
    v.add_term({i}, ScalarExpr::constant(chart, w[i]));
  return v;
}

int span_rank(const std::vector<QVec>& vecs, int dim) {
  QMatrix M(static_cast<int>(vecs.size()), dim);
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < dim; ++c) M.at(r, c) = vecs[r][c];
  return qrank(M);
}

bool span_contains(const std::vector<QVec>& span, const std::vector<QVec>& probe, int dim) {
  int base = span_rank(span, dim);
  std::vector<QVec> joined = span;
  joined.insert(joined.end(), probe.begin(), probe.end());
  return span_rank(joined, dim) == base;
}

} // namespace

PlecticStructure::PlecticStructure(ChartPtr c, int n_, Form om, std::vector<QVec> pts)
    : chart(std::move(c)), n(n_), omega(std::move(om)), samples(std::move(pts)) {
  if (n < 1) fail(ErrorKind::Invalid, "structure order must be positive");
  if (omega.degree() != n + 1)
    fail(ErrorKind::Invalid, "form degree does not match structure order");
}

NplecticReport check_nplectic(const ChartPtr& chart, const Form& omega, int n,
                              const std::vector<QVec>& samples) {
  if (omega.degree() != n + 1)
    fail(ErrorKind::Invalid, "form degree does not match structure order");
  NplecticReport rep;
  rep.closed = ext_d(omega).is_zero();
  auto A = contraction_matrix(chart, omega, n);
  rep.generic_rank = field_rank(A);
  int dim = chart->dim();
  bool samples_full = true;
  for (const auto& pt : samples) {
    int r = qrank(eval_matrix(A, pt));
    rep.sample_ranks.push_back(r);
    if (r != dim) samples_full = false;
  }
  rep.accepted = rep.closed && rep.generic_rank == dim && samples_full;
  return rep;
}

std::optional<HamiltonianPair> hamiltonian_vf(const PlecticStructure& P, const Form& alpha) {
  if (alpha.degree() != P.n - 1)
    fail(ErrorKind::Invalid, "form degree does not match structure order");
  const ChartPtr& chart = P.chart;
  int dim = chart->dim();
  auto A = contraction_matrix(chart, P.omega, P.n);
  Form rhs = -ext_d(alpha);
  auto keys = combinations(dim, P.n);
  std::vector<ScalarExpr> b;
  b.reserve(keys.size());
  for (const auto& K : keys) b.push_back(rhs.coeff(K));
  FieldSolution sol = field_solve(A, b);
  if (!sol.consistent) return std::nullopt;
  MultiVector vf(chart, 1);
  for (int i = 0; i < dim; ++i) vf.add_term({i}, sol.x[i]);
  return HamiltonianPair{alpha, vf};
}

Form ham_bracket(const PlecticStructure& P, const HamiltonianPair& a, const HamiltonianPair& b) {
  return interior(b.vf, interior(a.vf, P.omega));
}

HamiltonianPair ham_bracket_pair(const PlecticStructure& P, const HamiltonianPair& a,
                                 const HamiltonianPair& b) {
  return HamiltonianPair{ham_bracket(P, a, b), schouten(a.vf, b.vf)};
}

JacobiDefect jacobi_defect(const PlecticStructure& P, const HamiltonianPair& a,
                           const HamiltonianPair& b, const HamiltonianPair& c) {
  Form lhs = ham_bracket(P, a, ham_bracket_pair(P, b, c)) -
             ham_bracket(P, ham_bracket_pair(P, a, b), c) -
             ham_bracket(P, b, ham_bracket_pair(P, a, c));
  Form rhs = -ext_d(interior(a.vf.wedge(b.vf).wedge(c.vf), P.omega));
  return JacobiDefect{std::move(lhs), std::move(rhs)};
}

Form multi_contraction_residual(const PlecticStructure& P, const std::vector<MultiVector>& vfs) {
  int m = static_cast<int>(vfs.size());
  if (m < 2) fail(ErrorKind::Invalid, "need at least two vector fields");
  MultiVector all = vfs[0];
  for (int i = 1; i < m; ++i) all = all.wedge(vfs[i]);
  Form lhs = ext_d(interior(all, P.omega));

  Form rhs = Form::zero(P.chart, P.n + 1 - m + 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      MultiVector head = schouten(vfs[i - 1], vfs[j - 1]);
      for (int t = 1; t <= m; ++t) {
        if (t == i || t == j) continue;
        head = head.wedge(vfs[t - 1]);
      }
      Form term = interior(head, P.omega);
      int sign = ((i + j) % 2 == 0 ? 1 : -1) * (m % 2 == 0 ? 1 : -1);
      rhs += term.scaled(Rational(sign));
    }
  }
  return lhs - rhs;
}

PointSubspace orth_complement(const PlecticStructure& P, const PointSubspace& W, int k) {
  if (k < 1 || k > P.n) fail(ErrorKind::Invalid, "orthogonality order out of range");
  const ChartPtr& chart = P.chart;
  int dim = chart->dim();
  if (span_rank(W.basis, dim) != static_cast<int>(W.basis.size()))
    fail(ErrorKind::Invalid, "subspace basis is linearly dependent");

  std::vector<Form> contracted; // i_{partial_i} omega
  contracted.reserve(dim);
  for (int i = 0; i < dim; ++i) contracted.push_back(interior(basis_vector(chart, i), P.omega));

  // One row per choice of k basis vectors and per surviving component.
  std::vector<Rational> rows;
  int nrows = 0;
  for (const auto& combo : combinations(static_cast<int>(W.basis.size()), k)) {
    MultiVector wk(chart, 0);
    {
      MultiVector acc = constant_vector(chart, W.basis[combo[0]]);
      for (int t = 1; t < k; ++t) acc = acc.wedge(constant_vector(chart, W.basis[combo[t]]));
      wk = acc;
    }
    std::vector<Form> entries;
    entries.reserve(dim);
    for (int i = 0; i < dim; ++i) entries.push_back(interior(wk, contracted[i]));
    for (const auto& key : combinations(dim, P.n - k)) {
      std::vector<Rational> row(dim);
      bool nonzero = false;
      for (int i = 0; i < dim; ++i) {
        row[i] = eval_at_sample(entries[i].coeff(key), W.point);
        if (row[i] != 0) nonzero = true;
      }
      if (!nonzero) continue;
      rows.insert(rows.end(), row.begin(), row.end());
      ++nrows;
    }
  }

  QMatrix M(nrows, dim);
  M.a = std::move(rows);
  std::vector<QVec> kernel = qkernel(M);
  return PointSubspace{W.point, std::move(kernel)};
}

SubspaceClass classify_subspace(const PlecticStructure& P, const PointSubspace& W, int k) {
  PointSubspace perp = orth_complement(P, W, k);
  int dim = P.chart->dim();
  if (!span_contains(perp.basis, W.basis, dim)) return SubspaceClass::None;
  bool equal = span_rank(perp.basis, dim) == span_rank(W.basis, dim);
  return equal ? SubspaceClass::Lagrangian : SubspaceClass::Isotropic;
}

} // namespace plectic
