#pragma once

#include <functional>

namespace hopfion {

struct AdaptiveResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int subdivisions = 0;
};

/**
 * Globally adaptive Gauss-Kronrod (7, 15) integration on [lo, hi].
 *
 * The interval with the largest local error estimate is bisected until the
 * accumulated estimate drops below rel_tol * |value| or max_subdivisions is
 * reached. Accumulation order is fixed (intervals sorted by position), so the
 * result is bit-reproducible for a given tolerance.
 *
 * On non-convergence the partial value and estimate are still returned, with
 * converged = false; callers decide whether that is fatal.
 */
AdaptiveResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                      double lo, double hi, double rel_tol,
                                      int max_subdivisions = 200);

/**
 * Integral of f(eta) over (0, infinity) through the compactifying substitution
 * t = tanh(eta / 2), t in (0, 1). The Kronrod nodes are interior points, so f
 * is never evaluated at eta = 0 or at infinity.
 */
AdaptiveResult integrate_semi_infinite(const std::function<double(double)>& f_of_eta,
                                       double rel_tol, int max_subdivisions = 200);

}  // namespace hopfion
