#pragma once

#include <functional>

namespace hopfion {

/**
 * Brent's method on a bracketing interval [lo, hi] with f(lo) * f(hi) <= 0.
 * Combines bisection with inverse quadratic interpolation; always converges
 * for a continuous bracketed root.
 *
 * Throws std::invalid_argument if the interval does not bracket a sign change.
 */
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol_abs = 1e-13, int max_iter = 200);

/// Grow [lo, hi] to the right (doubling the width) until f changes sign.
/// Throws std::runtime_error if no sign change is found before hi_limit.
std::pair<double, double> expand_bracket_right(const std::function<double(double)>& f,
                                               double lo, double hi, double hi_limit = 1e3);

}  // namespace hopfion
