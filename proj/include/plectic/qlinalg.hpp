#pragma once

#include <optional>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

/// Dense matrix of exact rationals.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

int qrank(QMatrix m);

Rational qdet(QMatrix m);

/// Unique solution of a square nonsingular system; nullopt if singular.
std::optional<QVec> qsolve(QMatrix a, QVec b);

/// Basis of the right kernel (reduced, one vector per free column).
std::vector<QVec> qkernel(const QMatrix& m);

/// Symmetric positive definite test via leading principal minors.
bool qposdef(const QMatrix& m);

} // namespace plectic
