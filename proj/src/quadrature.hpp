#pragma once

#include <functional>

namespace nlqsl {

/// Adaptive Simpson integration of f over [a, b] to the given absolute
/// tolerance. Deterministic (fixed recursion rule, no randomness).
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol = 1e-11,
                          int max_depth = 48);

}  // namespace nlqsl
