#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "plectic/error.hpp"

namespace plectic {

/// Exact rational scalar. All coefficient arithmetic in the library is exact.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

/// Parse "p", "-p", or "p/q" (q > 0 after normalization).
Rational rational_from_string(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d), nonnegative; gcd(0,x) = |x|.
Rational rat_gcd(const Rational& a, const Rational& b);

using QVec = std::vector<Rational>;

} // namespace plectic
