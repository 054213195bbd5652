#include "hopfion/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace hopfion {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Interval {
    double lo, hi;
    double value;   // Kronrod estimate
    double error;   // |Kronrod - Gauss|
};

Interval gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = f(center);
    double result_k = kWgk[7] * fc;
    double result_g = kWg[3] * fc;

    for (int j = 0; j < 7; ++j) {
        const double x = half * kXgk[j];
        const double fsum = f(center - x) + f(center + x);
        result_k += kWgk[j] * fsum;
        if (j % 2 == 1) result_g += kWg[j / 2] * fsum;
    }
    result_k *= half;
    result_g *= half;
    return Interval{lo, hi, result_k, std::abs(result_k - result_g)};
}

struct WorstFirst {
    bool operator()(const Interval& a, const Interval& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.lo > b.lo;  // deterministic tie-break
    }
};

}  // namespace

AdaptiveResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                      double lo, double hi, double rel_tol,
                                      int max_subdivisions) {
    std::priority_queue<Interval, std::vector<Interval>, WorstFirst> queue;
    queue.push(gk15(f, lo, hi));

    double total_value = queue.top().value;
    double total_error = queue.top().error;

    AdaptiveResult out;
    while (total_error > rel_tol * std::abs(total_value) && total_error > 0.0) {
        if (out.subdivisions >= max_subdivisions) break;
        const Interval worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Interval left = gk15(f, worst.lo, mid);
        const Interval right = gk15(f, mid, worst.hi);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++out.subdivisions;
    }

    // Re-accumulate in position order so the result does not depend on the
    // heap's internal layout.
    std::vector<Interval> intervals;
    intervals.reserve(queue.size());
    while (!queue.empty()) {
        intervals.push_back(queue.top());
        queue.pop();
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double value = 0.0, error = 0.0;
    for (const Interval& iv : intervals) {
        value += iv.value;
        error += iv.error;
    }

    out.value = value;
    out.error_estimate = error;
    out.converged = (error <= rel_tol * std::abs(value)) || error == 0.0;
    return out;
}

AdaptiveResult integrate_semi_infinite(const std::function<double(double)>& f_of_eta,
                                       double rel_tol, int max_subdivisions) {
    auto g = [&f_of_eta](double t) {
        const double eta = 2.0 * std::atanh(t);
        return f_of_eta(eta) * 2.0 / (1.0 - t * t);
    };
    return adaptive_gauss_kronrod(g, 0.0, 1.0, rel_tol, max_subdivisions);
}

}  // namespace hopfion
