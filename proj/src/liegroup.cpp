#include "plectic/liegroup.hpp"

#include "json.hpp"

#include "plectic/error.hpp"

namespace plectic {

namespace {

QVec qvec_zero(int n) { return QVec(static_cast<size_t>(n), Rational(0)); }

QVec qvec_add(const QVec& x, const QVec& y) {
  QVec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

QVec qvec_sub(const QVec& x, const QVec& y) {
  QVec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

bool qvec_is_zero(const QVec& x) {
  for (const auto& c : x)
    if (c != 0) return false;
  return true;
}

void check_dim(const LieAlgebraData& g, const QVec& x, const char* what) {
  if (static_cast<int>(x.size()) != g.dim)
    fail(ErrorKind::Invalid, std::string(what) + " has wrong dimension");
}

} // namespace

QVec LieAlgebraData::bracket(const QVec& x, const QVec& y) const {
  check_dim(*this, x, "bracket argument");
  check_dim(*this, y, "bracket argument");
  QVec r = qvec_zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Rational s = x[i] * y[j];
      for (int k = 0; k < dim; ++k) r[k] += s * c[i][j][k];
    }
  }
  return r;
}

Rational LieAlgebraData::pair(const QVec& x, const QVec& y) const {
  check_dim(*this, x, "pairing argument");
  check_dim(*this, y, "pairing argument");
  Rational r(0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r += x[i] * ip.at(i, j) * y[j];
  return r;
}

void validate_lie_algebra(const LieAlgebraData& g) {
  if (g.dim <= 0) fail(ErrorKind::Invalid, "Lie algebra dimension must be positive");
  if (static_cast<int>(g.c.size()) != g.dim)
    fail(ErrorKind::Invalid, "structure constant array has wrong shape");
  for (const auto& ci : g.c) {
    if (static_cast<int>(ci.size()) != g.dim)
      fail(ErrorKind::Invalid, "structure constant array has wrong shape");
    for (const auto& cij : ci)
      if (static_cast<int>(cij.size()) != g.dim)
        fail(ErrorKind::Invalid, "structure constant array has wrong shape");
  }
  if (g.ip.rows != g.dim || g.ip.cols != g.dim)
    fail(ErrorKind::Invalid, "inner product matrix has wrong shape");

  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k)
        if (g.c[i][j][k] != -g.c[j][i][k])
          fail(ErrorKind::Invalid, "structure constants are not antisymmetric");

  // Jacobi: [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] = 0.
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j)
      for (int l = 0; l < g.dim; ++l)
        for (int m = 0; m < g.dim; ++m) {
          Rational s(0);
          for (int k = 0; k < g.dim; ++k)
            s += g.c[i][j][k] * g.c[k][l][m] + g.c[j][l][k] * g.c[k][i][m] +
                 g.c[l][i][k] * g.c[k][j][m];
          if (s != 0) fail(ErrorKind::Invalid, "Jacobi identity fails");
        }

  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      if (g.ip.at(i, j) != g.ip.at(j, i))
        fail(ErrorKind::Invalid, "inner product is not symmetric");

  // ad-invariance: <[e_i,e_j],e_l> + <e_j,[e_i,e_l]> = 0.
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int l = 0; l < g.dim; ++l) {
        Rational s(0);
        for (int k = 0; k < g.dim; ++k)
          s += g.c[i][j][k] * g.ip.at(k, l) + g.c[i][l][k] * g.ip.at(j, k);
        if (s != 0) fail(ErrorKind::Invalid, "inner product is not ad-invariant");
      }

  if (!qposdef(g.ip))
    fail(ErrorKind::Invalid, "inner product is not positive definite");
}

LieAlgebraData su2() {
  LieAlgebraData g;
  g.dim = 3;
  g.c.assign(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
  int eps[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                   {2, 1, 0, -1}, {0, 2, 1, -1}, {1, 0, 2, -1}};
  for (auto& e : eps) g.c[e[0]][e[1]][e[2]] = Rational(e[3]);
  g.ip = QMatrix(3, 3);
  for (int i = 0; i < 3; ++i) g.ip.at(i, i) = Rational(1);
  return g;
}

namespace {

Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  fail(ErrorKind::Parse, "rational entries must be integers or strings");
}

} // namespace

LieAlgebraData lie_algebra_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("bad Lie algebra JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("c") || !j.contains("ip"))
    fail(ErrorKind::Parse, "Lie algebra JSON needs dim, c, and ip");
  LieAlgebraData g;
  g.dim = j.at("dim").get<int>();
  if (g.dim <= 0) fail(ErrorKind::Parse, "dim must be positive");
  const auto& jc = j.at("c");
  const auto& jip = j.at("ip");
  if (!jc.is_array() || static_cast<int>(jc.size()) != g.dim)
    fail(ErrorKind::Parse, "c must be a dim^3 array");
  g.c.assign(g.dim, std::vector<std::vector<Rational>>(
                        g.dim, std::vector<Rational>(g.dim, Rational(0))));
  for (int i = 0; i < g.dim; ++i) {
    if (!jc[i].is_array() || static_cast<int>(jc[i].size()) != g.dim)
      fail(ErrorKind::Parse, "c must be a dim^3 array");
    for (int jj = 0; jj < g.dim; ++jj) {
      if (!jc[i][jj].is_array() || static_cast<int>(jc[i][jj].size()) != g.dim)
        fail(ErrorKind::Parse, "c must be a dim^3 array");
      for (int k = 0; k < g.dim; ++k) g.c[i][jj][k] = json_rational(jc[i][jj][k]);
    }
  }
  if (!jip.is_array() || static_cast<int>(jip.size()) != g.dim)
    fail(ErrorKind::Parse, "ip must be a dim^2 array");
  g.ip = QMatrix(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i) {
    if (!jip[i].is_array() || static_cast<int>(jip[i].size()) != g.dim)
      fail(ErrorKind::Parse, "ip must be a dim^2 array");
    for (int jj = 0; jj < g.dim; ++jj) g.ip.at(i, jj) = json_rational(jip[i][jj]);
  }
  validate_lie_algebra(g);
  return g;
}

Rational Trilinear::eval(const QVec& x, const QVec& y, const QVec& z) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim ||
      static_cast<int>(z.size()) != dim)
    fail(ErrorKind::Invalid, "trilinear argument has wrong dimension");
  Rational r(0);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Rational s = x[i] * y[j];
      for (int k = 0; k < dim; ++k)
        if (z[k] != 0) r += s * z[k] * at(i, j, k);
    }
  }
  return r;
}

bool Trilinear::totally_antisymmetric() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        if (at(i, j, k) != -at(j, i, k)) return false;
        if (at(i, j, k) != -at(i, k, j)) return false;
      }
  return true;
}

Trilinear cartan_3form(const LieAlgebraData& g, const Rational& k) {
  if (k == 0) fail(ErrorKind::Invalid, "the scale k must be nonzero");
  Trilinear t(g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (int l = 0; l < g.dim; ++l) {
        Rational s(0);
        for (int m = 0; m < g.dim; ++m) s += g.c[j][l][m] * g.ip.at(i, m);
        t.at(i, j, l) = k * s;
      }
  if (!t.totally_antisymmetric())
    fail(ErrorKind::Verify, "Cartan 3-form is not totally antisymmetric");
  return t;
}

bool trilinear_nondegenerate(const Trilinear& t) {
  // x -> t(x,.,.) into 2-forms: rank of the dim x (dim choose 2) matrix.
  int n = t.dim;
  int pairs = n * (n - 1) / 2;
  if (pairs == 0) return false;
  QMatrix m(pairs, n);
  int row = 0;
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l) {
      for (int i = 0; i < n; ++i) m.at(row, i) = t.at(i, j, l);
      ++row;
    }
  return qrank(m) == n;
}

QVec left_inv_ham_vf(const LieAlgebraData& g, const Rational& k, const QVec& alpha) {
  if (k == 0) fail(ErrorKind::Invalid, "the scale k must be nonzero");
  check_dim(g, alpha, "covector");
  QMatrix m = g.ip;
  for (auto& e : m.a) e *= k;
  auto v = qsolve(m, alpha);
  if (!v) fail(ErrorKind::Verify, "Gram matrix solve failed");
  return *v;
}

QVec LeftInvariantLie2::ham_vf(const QVec& alpha) const {
  return left_inv_ham_vf(g, k, alpha);
}

LeftInvariantLie2::E0 LeftInvariantLie2::b(const E0& x, const E0& y) const {
  QVec vx = ham_vf(x);
  QVec vy = ham_vf(y);
  QVec r = qvec_zero(g.dim);
  for (int cidx = 0; cidx < g.dim; ++cidx) {
    QVec e = qvec_zero(g.dim);
    e[cidx] = Rational(1);
    r[cidx] = nu.eval(vx, vy, e);
  }
  return r;
}

LeftInvariantLie2::E1 LeftInvariantLie2::j(const E0& x, const E0& y, const E0& z) const {
  return -nu.eval(ham_vf(x), ham_vf(y), ham_vf(z));
}

LeftInvariantLie2::E0 LeftInvariantLie2::add0(const E0& x, const E0& y) const {
  return qvec_add(x, y);
}
LeftInvariantLie2::E0 LeftInvariantLie2::sub0(const E0& x, const E0& y) const {
  return qvec_sub(x, y);
}
bool LeftInvariantLie2::zero0(const E0& x) const { return qvec_is_zero(x); }

StringLie2::E1 StringLie2::j(const E0& x, const E0& y, const E0& z) const {
  return k * g.pair(x, g.bracket(y, z));
}

StringLie2::E0 StringLie2::add0(const E0& x, const E0& y) const { return qvec_add(x, y); }
StringLie2::E0 StringLie2::sub0(const E0& x, const E0& y) const { return qvec_sub(x, y); }
bool StringLie2::zero0(const E0& x) const { return qvec_is_zero(x); }

LeftInvariantLie2 left_inv_l2a(const LieAlgebraData& g, const Rational& k) {
  validate_lie_algebra(g);
  Trilinear nu = cartan_3form(g, k);
  if (!trilinear_nondegenerate(nu))
    fail(ErrorKind::Invalid, "the Cartan 3-form is degenerate");
  return LeftInvariantLie2{g, k, std::move(nu)};
}

StringLie2 string_l2a(const LieAlgebraData& g, const Rational& k) {
  validate_lie_algebra(g);
  if (k == 0) fail(ErrorKind::Invalid, "the scale k must be nonzero");
  return StringLie2{g, k};
}

QVec string_phi(const LieAlgebraData& g, const Rational& k, const QVec& v) {
  check_dim(g, v, "vector");
  QVec r = qvec_zero(g.dim);
  for (int i = 0; i < g.dim; ++i) {
    Rational s(0);
    for (int jj = 0; jj < g.dim; ++jj) s += g.ip.at(jj, i) * v[jj];
    r[i] = k * s;
  }
  return r;
}

StringIsoReport string_iso_check(const LieAlgebraData& g, const Rational& k) {
  LeftInvariantLie2 L = left_inv_l2a(g, k);
  StringLie2 S = string_l2a(g, k);
  StringIsoReport rep;
  rep.bracket_intertwines = true;
  rep.minus_residual_vanishes = true;
  rep.plus_residual_vanishes = true;

  std::vector<QVec> basis;
  for (int i = 0; i < g.dim; ++i) {
    QVec e = qvec_zero(g.dim);
    e[i] = Rational(1);
    basis.push_back(e);
  }

  for (const auto& v1 : basis)
    for (const auto& v2 : basis) {
      QVec lhs = L.b(string_phi(g, k, v1), string_phi(g, k, v2));
      QVec rhs = string_phi(g, k, S.b(v1, v2));
      if (!qvec_is_zero(qvec_sub(lhs, rhs))) rep.bracket_intertwines = false;
    }

  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        Rational big = L.j(string_phi(g, k, x), string_phi(g, k, y), string_phi(g, k, z));
        Rational small = S.j(x, y, z);
        if (big - small != 0) rep.minus_residual_vanishes = false;
        if (big + small != 0) rep.plus_residual_vanishes = false;
      }

  return rep;
}

} // namespace plectic
