#include "hopfion/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hopfion {

double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol_abs, int max_iter) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw std::invalid_argument("brent_root: interval does not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;

    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }

        const double m = 0.5 * (c - b);
        const double toler = 2.0 * tol_abs * std::max(std::abs(b), 1.0);
        if (std::abs(m) <= toler || fb == 0.0) return b;

        if (std::abs(e) < toler || std::abs(fa) <= std::abs(fb)) {
            d = m;
            e = m;
        } else {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < 3.0 * m * q - std::abs(toler * q) && p < std::abs(0.5 * e * q)) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        }

        a = b;
        fa = fb;
        if (std::abs(d) > toler)
            b += d;
        else
            b += (m > 0.0 ? toler : -toler);
        fb = f(b);
    }
    return b;
}

std::pair<double, double> expand_bracket_right(const std::function<double(double)>& f,
                                               double lo, double hi, double hi_limit) {
    double flo = f(lo);
    double width = hi - lo;
    while (hi <= hi_limit) {
        if (flo * f(hi) <= 0.0) return {lo, hi};
        width *= 2.0;
        hi = lo + width;
    }
    throw std::runtime_error("expand_bracket_right: no sign change up to the limit");
}

}  // namespace hopfion
