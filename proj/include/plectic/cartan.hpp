#pragma once

#include <map>
#include <span>
#include <vector>

#include "plectic/error.hpp"
#include "plectic/scalar.hpp"

namespace plectic {

/// Shared storage for alternating tensors: a map from strictly increasing
/// index tuples to nonzero scalar coefficients. Instantiated as differential
/// forms (covariant) and multivector fields (contravariant).
template <class Tag>
class AltTensor {
public:
  using TermMap = std::map<std::vector<int>, ScalarExpr>;

  AltTensor() = default;
  /// Degrees above the chart dimension are allowed and necessarily zero.
  AltTensor(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
    if (degree_ < 0) fail(ErrorKind::Invalid, "negative tensor degree");
  }

  static AltTensor zero(ChartPtr chart, int degree) { return AltTensor(std::move(chart), degree); }

  /// Degree-0 tensor wrapping a scalar.
  static AltTensor scalar(const ScalarExpr& f) {
    AltTensor t(f.chart(), 0);
    t.add_term({}, f);
    return t;
  }

  const ChartPtr& chart() const { return chart_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * e_{idx}; idx need not be sorted, repeated indices give 0.
  void add_term(std::vector<int> idx, const ScalarExpr& coeff) {
    if (static_cast<int>(idx.size()) != degree_)
      fail(ErrorKind::Invalid, "index tuple size does not match tensor degree");
    if (coeff.is_zero()) return;
    int sign = sort_sign(idx);
    if (sign == 0) return;
    for (int i : idx)
      if (i < 0 || i >= chart_->dim())
        fail(ErrorKind::Invalid, "tensor index out of range");
    ScalarExpr c = sign > 0 ? coeff : -coeff;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
      terms_.emplace(std::move(idx), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const ScalarExpr& coeff(const std::vector<int>& sorted_idx) const {
    auto it = terms_.find(sorted_idx);
    if (it == terms_.end()) {
      zero_cache_ = ScalarExpr::zero(chart_);
      return zero_cache_;
    }
    return it->second;
  }

  AltTensor operator-() const {
    AltTensor r(chart_, degree_);
    for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
    return r;
  }

  AltTensor operator+(const AltTensor& o) const {
    // The zero tensor acts as the zero of every degree.
    if (is_zero() && degree_ != o.degree_) {
      check_chart(o);
      return o;
    }
    if (o.is_zero() && degree_ != o.degree_) {
      check_chart(o);
      return *this;
    }
    check_compatible(o);
    AltTensor r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
    return r;
  }

  AltTensor operator-(const AltTensor& o) const { return *this + (-o); }

  AltTensor& operator+=(const AltTensor& o) { return *this = *this + o; }
  AltTensor& operator-=(const AltTensor& o) { return *this = *this - o; }

  AltTensor scaled(const ScalarExpr& f) const {
    AltTensor r(chart_, degree_);
    for (const auto& [idx, c] : terms_) r.add_term(idx, c * f);
    return r;
  }

  AltTensor scaled(const Rational& q) const {
    AltTensor r(chart_, degree_);
    for (const auto& [idx, c] : terms_) r.add_term(idx, c.scaled(q));
    return r;
  }

  bool operator==(const AltTensor& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

  /// Exterior (wedge) product.
  AltTensor wedge(const AltTensor& o) const {
    check_chart(o);
    AltTensor r(chart_, degree_ + o.degree_);
    std::vector<int> idx;
    for (const auto& [ia, ca] : terms_) {
      for (const auto& [ib, cb] : o.terms_) {
        idx = ia;
        idx.insert(idx.end(), ib.begin(), ib.end());
        r.add_term(idx, ca * cb);
      }
    }
    return r;
  }

  /// Full contraction against `degree()` many constant vectors at a point.
  Rational eval(std::span<const QVec> vectors, const QVec& point) const {
    if (static_cast<int>(vectors.size()) != degree_)
      fail(ErrorKind::Invalid, "wrong number of vectors in contraction");
    Rational acc(0);
    for (const auto& [idx, c] : terms_) {
      // det of the degree x degree minor picked by idx.
      Rational det = minor_det(vectors, idx);
      if (det != 0) acc += c.eval(point) * det;
    }
    return acc;
  }

  ScalarExpr scalar_part() const {
    if (degree_ != 0) fail(ErrorKind::Invalid, "tensor is not degree 0");
    if (terms_.empty()) return ScalarExpr::zero(chart_);
    return terms_.begin()->second;
  }

private:
  void check_chart(const AltTensor& o) const {
    if (chart_ != o.chart_ && !(*chart_ == *o.chart_))
      fail(ErrorKind::Invalid, "chart mismatch in tensor arithmetic");
  }
  void check_compatible(const AltTensor& o) const {
    check_chart(o);
    if (degree_ != o.degree_)
      fail(ErrorKind::Invalid, "degree mismatch in tensor arithmetic");
  }

  static int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
      for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
        if (idx[j - 1] == idx[j]) return 0;
        std::swap(idx[j - 1], idx[j]);
        sign = -sign;
      }
    }
    return sign;
  }

  static Rational minor_det(std::span<const QVec> vectors, const std::vector<int>& idx) {
    size_t k = idx.size();
    if (k == 0) return Rational(1);
    std::vector<Rational> m(k * k);
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b) m[a * k + b] = vectors[a].at(idx[b]);
    // Fraction-free elimination is overkill at this size; do plain Gauss.
    Rational det(1);
    for (size_t col = 0; col < k; ++col) {
      size_t piv = col;
      while (piv < k && m[piv * k + col] == 0) ++piv;
      if (piv == k) return Rational(0);
      if (piv != col) {
        for (size_t b = 0; b < k; ++b) std::swap(m[piv * k + b], m[col * k + b]);
        det = -det;
      }
      det *= m[col * k + col];
      for (size_t r = col + 1; r < k; ++r) {
        if (m[r * k + col] == 0) continue;
        Rational f = m[r * k + col] / m[col * k + col];
        for (size_t b = col; b < k; ++b) m[r * k + b] -= f * m[col * k + b];
      }
    }
    return det;
  }

  ChartPtr chart_;
  int degree_ = 0;
  TermMap terms_;
  mutable ScalarExpr zero_cache_;
};

struct FormTag;
struct VectorTag;

/// Differential form with rational-function coefficients.
using Form = AltTensor<FormTag>;
/// Multivector field with rational-function coefficients.
using MultiVector = AltTensor<VectorTag>;

/// Exterior derivative.
Form ext_d(const Form& a);

/// Interior product iota(v1 ^ ... ^ vq) alpha = i_{vq} ... i_{v1} alpha,
/// extended bilinearly.
Form interior(const MultiVector& v, const Form& alpha);

/// Lie derivative along a multivector: L_v a = d i(v) a - (-1)^{deg v} i(v) da.
Form lie_derivative(const MultiVector& v, const Form& alpha);

/// Schouten bracket of multivector fields of degree >= 1.
MultiVector schouten(const MultiVector& u, const MultiVector& v);

/// Coordinate vector field.
MultiVector basis_vector(const ChartPtr& chart, int i);

/// Coordinate differential dx_i.
Form basis_form(const ChartPtr& chart, int i);

/// Application of a vector field to a function: v(f) = i_v df.
ScalarExpr apply_vector(const MultiVector& v, const ScalarExpr& f);

/// Parses a form expression over the chart. The grammar extends the scalar
/// expression grammar with differentials: `d` prefixed to a chart variable
/// names the corresponding coordinate differential (a chart variable whose own
/// name matches wins the tie). `*` and `^` both multiply (wedge); an integer
/// after `^` is a repeated product; `/` divides by a nonzero scalar factor.
/// Examples: "x*dy", "dy^dz", "x*dy^dz - 2*dz^dx", "1/(x^2+y^2)*dx".
Form parse_form(const ChartPtr& chart, std::string_view text);

/// Canonical printer; output re-parses to an equal form. Zero prints as "0",
/// degree-0 forms print as their scalar coefficient.
std::string form_to_string(const Form& a);

/// Canonical printer for multivector fields; basis vectors print as `d/dx`.
std::string mv_to_string(const MultiVector& v);

} // namespace plectic
