#include "plectic/qlinalg.hpp"

#include <cassert>

namespace plectic {

namespace {

/// Row echelon elimination; returns pivot columns. Destructive.
std::vector<int> echelon(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    for (int r = row + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      Rational f = m.at(r, col) / m.at(row, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

int qrank(QMatrix m) { return static_cast<int>(echelon(m).size()); }

Rational qdet(QMatrix m) {
  assert(m.rows == m.cols);
  Rational det(1);
  for (int col = 0; col < m.cols; ++col) {
    int piv = -1;
    for (int r = col; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      Rational f = m.at(r, col) / m.at(col, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

std::optional<QVec> qsolve(QMatrix a, QVec b) {
  assert(a.rows == a.cols && static_cast<int>(b.size()) == a.rows);
  int n = a.rows;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col) == 0) continue;
      Rational f = a.at(r, col) / a.at(col, col);
      for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
      b[r] -= f * b[col];
    }
  }
  QVec x(n, Rational(0));
  for (int r = n - 1; r >= 0; --r) {
    Rational acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a.at(r, c) * x[c];
    x[r] = acc / a.at(r, r);
  }
  return x;
}

std::vector<QVec> qkernel(const QMatrix& m) {
  QMatrix e = m;
  std::vector<int> pivots = echelon(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<QVec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    QVec x(m.cols, Rational(0));
    x[free] = Rational(1);
    // Back-substitute pivot rows from the bottom up.
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      int pc = pivots[r];
      Rational acc(0);
      for (int c = pc + 1; c < m.cols; ++c) acc += e.at(r, c) * x[c];
      x[pc] = -acc / e.at(r, pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

bool qposdef(const QMatrix& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  for (int k = 1; k <= m.rows; ++k) {
    QMatrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
    if (qdet(lead) <= 0) return false;
  }
  return true;
}

} // namespace plectic
