#include "plectic/linsolve.hpp"

#include <cassert>

#include "plectic/error.hpp"

namespace plectic {

namespace {

struct PolyMatrix {
  int rows = 0, cols = 0;
  std::vector<Poly> a;
  Poly& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Poly& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

Poly poly_lcm(const Poly& a, const Poly& b) {
  Poly g = poly_gcd(a, b);
  return *(a * b).divided_exactly_by(g);
}

/// Clear denominators row by row (an exact row scaling).
PolyMatrix clear_rows(const std::vector<std::vector<ScalarExpr>>& A,
                      const std::vector<ScalarExpr>* b, ChartPtr chart) {
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  PolyMatrix m;
  m.rows = rows;
  m.cols = cols + (b ? 1 : 0);
  m.a.assign(static_cast<size_t>(m.rows) * m.cols, Poly(chart->dim()));
  for (int r = 0; r < rows; ++r) {
    Poly lcm = Poly::constant(chart->dim(), Rational(1));
    auto fold = [&](const ScalarExpr& e) {
      if (!e.is_zero()) lcm = poly_lcm(lcm, e.den());
    };
    for (const auto& e : A[r]) fold(e);
    if (b) fold((*b)[r]);
    auto cleared = [&](const ScalarExpr& e) {
      if (e.is_zero()) return Poly(chart->dim());
      return e.num() * *lcm.divided_exactly_by(e.den());
    };
    for (int c = 0; c < cols; ++c) m.at(r, c) = cleared(A[r][c]);
    if (b) m.at(r, cols) = cleared((*b)[r]);
  }
  return m;
}

struct Eliminated {
  PolyMatrix m;
  std::vector<int> colperm; // colperm[k] = original column in pivot slot k
  int rank = 0;
};

/// Fraction-free Bareiss elimination with full pivoting over the first
/// `ncols` columns; trailing columns (the augmented part) ride along.
Eliminated bareiss(PolyMatrix m, int ncols) {
  Eliminated out;
  out.colperm.resize(ncols);
  for (int i = 0; i < ncols; ++i) out.colperm[i] = i;
  Poly prev; // previous pivot; empty means 1
  bool have_prev = false;
  int k = 0;
  for (; k < m.rows && k < ncols; ++k) {
    // Pick the nonzero candidate with fewest terms to limit growth.
    int pr = -1, pc = -1;
    size_t best = 0;
    for (int r = k; r < m.rows; ++r) {
      for (int c = k; c < ncols; ++c) {
        const Poly& e = m.at(r, c);
        if (e.is_zero()) continue;
        size_t sz = e.terms().size();
        if (pr < 0 || sz < best) {
          pr = r;
          pc = c;
          best = sz;
        }
      }
    }
    if (pr < 0) break;
    if (pr != k)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(k, c));
    if (pc != k) {
      for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, pc), m.at(r, k));
      std::swap(out.colperm[pc], out.colperm[k]);
    }
    for (int r = k + 1; r < m.rows; ++r) {
      for (int c = k + 1; c < m.cols; ++c) {
        Poly num = m.at(k, k) * m.at(r, c) - m.at(r, k) * m.at(k, c);
        if (have_prev && !num.is_zero()) {
          auto q = num.divided_exactly_by(prev);
          if (!q) fail(ErrorKind::Singular, "fraction-free elimination step failed");
          num = *q;
        } else if (have_prev) {
          num = Poly(num.nvars());
        }
        m.at(r, c) = num;
      }
      m.at(r, k) = Poly(m.at(r, k).nvars());
    }
    prev = m.at(k, k);
    have_prev = true;
  }
  out.rank = k;
  out.m = std::move(m);
  return out;
}

} // namespace

int field_rank(const std::vector<std::vector<ScalarExpr>>& A) {
  if (A.empty() || A[0].empty()) return 0;
  ChartPtr chart = A[0][0].chart();
  PolyMatrix m = clear_rows(A, nullptr, chart);
  int ncols = m.cols;
  return bareiss(std::move(m), ncols).rank;
}

FieldSolution field_solve(const std::vector<std::vector<ScalarExpr>>& A,
                          const std::vector<ScalarExpr>& b) {
  FieldSolution sol;
  if (A.empty()) {
    sol.consistent = true;
    sol.unique = true;
    return sol;
  }
  ChartPtr chart = A[0][0].chart();
  int rows = static_cast<int>(A.size());
  int cols = static_cast<int>(A[0].size());
  assert(static_cast<int>(b.size()) == rows);

  PolyMatrix m = clear_rows(A, &b, chart);
  Eliminated e = bareiss(std::move(m), cols);
  sol.rank = e.rank;

  // Rows below the pivot block have zero coefficient part; a nonzero
  // augmented entry there makes the system inconsistent.
  sol.consistent = true;
  for (int r = e.rank; r < e.m.rows; ++r)
    if (!e.m.at(r, cols).is_zero()) sol.consistent = false;
  if (!sol.consistent) return sol;
  sol.unique = (e.rank == cols);

  std::vector<ScalarExpr> xp(cols, ScalarExpr::zero(chart));
  auto as_expr = [&](const Poly& p) { return ScalarExpr::from_poly(chart, p); };
  for (int r = e.rank - 1; r >= 0; --r) {
    ScalarExpr acc = as_expr(e.m.at(r, cols));
    for (int c = r + 1; c < cols; ++c) {
      if (e.m.at(r, c).is_zero() || xp[c].is_zero()) continue;
      acc -= as_expr(e.m.at(r, c)) * xp[c];
    }
    xp[r] = acc / as_expr(e.m.at(r, r));
  }
  sol.x.assign(cols, ScalarExpr::zero(chart));
  for (int c = 0; c < cols; ++c) sol.x[e.colperm[c]] = xp[c];

  // Exact verification against the original system.
  for (int r = 0; r < rows; ++r) {
    ScalarExpr acc = ScalarExpr::zero(chart);
    for (int c = 0; c < cols; ++c) {
      if (A[r][c].is_zero() || sol.x[c].is_zero()) continue;
      acc += A[r][c] * sol.x[c];
    }
    if (!(acc == b[r]))
      fail(ErrorKind::Singular, "linear solution failed exact verification");
  }
  return sol;
}

} // namespace plectic
