#pragma once

#include <functional>

namespace plectic {

/// Adaptive 61-point Gauss–Kronrod integral of f over [a, b].
/// Tolerances are far below the library's 1e-10 verification target.
double integrate(const std::function<double(double)>& f, double a, double b);

} // namespace plectic
