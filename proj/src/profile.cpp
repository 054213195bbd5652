#include "hopfion/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hopfion/root_finding.hpp"

namespace hopfion {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

void require_nonnegative(double eta, const char* who) {
    if (!(eta >= 0.0))
        throw std::domain_error(std::string(who) + ": eta must be >= 0");
}

/// Distance from g to the nearest odd multiple of pi/2.
double distance_to_pole(double g) {
    const double j = std::round(g / kPi - 0.5);
    return std::abs(g - (j + 0.5) * kPi);
}

}  // namespace

namespace detail {

double winding_phase_raw(double eta, double abs_m, double abs_n, double half_turns) {
    const double c = abs_n / abs_m;
    const double s = std::sinh(eta);
    const double r = std::sqrt(c * c + s * s);
    return kHalfPi * half_turns * (abs_m + abs_n) * s * s /
           (r * (abs_m * r + abs_n * std::cosh(eta)));
}

double winding_phase_derivative_raw(double eta, double abs_m, double abs_n,
                                    double half_turns) {
    const double c = abs_n / abs_m;
    const double s = std::sinh(eta);
    const double w = c * c + s * s;
    return kHalfPi * half_turns * abs_n * (abs_m + abs_n) / (abs_m * abs_m) * s /
           (w * std::sqrt(w));
}

}  // namespace detail

double winding_phase(double eta, const SolitonConfig& cfg) {
    require_nonnegative(eta, "winding_phase");
    return detail::winding_phase_raw(eta, cfg.abs_m(), cfg.abs_n(), cfg.half_turns());
}

double winding_phase_derivative(double eta, const SolitonConfig& cfg) {
    require_nonnegative(eta, "winding_phase_derivative");
    return detail::winding_phase_derivative_raw(eta, cfg.abs_m(), cfg.abs_n(),
                                                cfg.half_turns());
}

double winding_phase_second_derivative(double eta, const SolitonConfig& cfg) {
    require_nonnegative(eta, "winding_phase_second_derivative");
    const double c = cfg.abs_n() / cfg.abs_m();
    const double s = std::sinh(eta);
    const double w = c * c + s * s;
    const double coeff = kHalfPi * cfg.half_turns() * cfg.abs_n() *
                         (cfg.abs_m() + cfg.abs_n()) / (cfg.abs_m() * cfg.abs_m());
    return coeff * std::cosh(eta) * (c * c - 2.0 * s * s) / (w * w * std::sqrt(w));
}

std::optional<double> profile_f(double eta, const SolitonConfig& cfg) {
    const double g = winding_phase(eta, cfg);
    if (distance_to_pole(g) < kPoleAngleTol) return std::nullopt;
    const double f = std::tan(g);
    if (std::abs(f) > kPoleMagnitude) return std::nullopt;
    return f;
}

std::optional<double> profile_derivative(double eta, const SolitonConfig& cfg) {
    const auto f = profile_f(eta, cfg);
    if (!f) return std::nullopt;
    return (1.0 + *f * *f) * winding_phase_derivative(eta, cfg);
}

double n3_component(double eta, const SolitonConfig& cfg) {
    const double n3 = -std::cos(2.0 * winding_phase(eta, cfg));
    return std::clamp(n3, -1.0, 1.0);
}

ProfileEval evaluate_profile(double eta, const SolitonConfig& cfg) {
    ProfileEval out;
    out.eta = eta;
    out.g = winding_phase(eta, cfg);
    out.f = profile_f(eta, cfg);
    out.f_prime = out.f ? std::optional<double>((1.0 + *out.f * *out.f) *
                                                winding_phase_derivative(eta, cfg))
                        : std::nullopt;
    out.n3 = n3_component(eta, cfg);
    out.at_pole = !out.f.has_value();
    return out;
}

double soliton_eta_closed_form(double target_g, const SolitonConfig& cfg) {
    const double g_sup = kHalfPi * cfg.half_turns();
    if (!(target_g > 0.0) || !(target_g < g_sup))
        throw std::domain_error("soliton_eta_closed_form: target outside (0, N pi/2)");
    const double am = cfg.abs_m(), an = cfg.abs_n();
    const double c = an / am;
    // Invert the bracket of the winding phase: h = cosh / sqrt(c^2 + sinh^2).
    const double h = (am - target_g * (am - an) / (kHalfPi * cfg.half_turns())) / an;
    const double sinh_sq = (1.0 - h * h * c * c) / (h * h - 1.0);
    return std::asinh(std::sqrt(sinh_sq));
}

SolitonPositions soliton_positions(const SolitonConfig& cfg) {
    SolitonPositions out;
    const int turns = cfg.half_turns();
    if (turns == 0) return out;  // vacuum: f identically zero, no boundaries

    out.zeros.push_back(0.0);
    double lo = 0.0;
    for (int j = 1; j < turns; ++j) {
        const double target = j * kHalfPi;
        auto shifted = [&cfg, target](double eta) {
            return winding_phase(eta, cfg) - target;
        };
        auto [blo, bhi] = expand_bracket_right(shifted, lo, lo + 1.0);
        const double eta_j = brent_root(shifted, blo, bhi);
        if (j % 2 == 1)
            out.poles.push_back(eta_j);
        else
            out.zeros.push_back(eta_j);
        lo = eta_j;
    }

    if (cfg.family == Family::Charged)
        out.innermost_pole_at_infinity = true;
    else
        out.innermost_zero_at_infinity = true;
    return out;
}

int flip_count(const SolitonConfig& cfg) {
    // n^3 crosses zero once per half turn of g (at g = pi/4 + j pi/2),
    // so counting sign changes over a dense grid recovers N exactly.
    const int samples = 4096;
    const double t_max = std::tanh(0.5 * kDefaultEtaMax);
    int count = 0;
    double prev = n3_component(0.0, cfg);
    for (int i = 1; i <= samples; ++i) {
        const double t = t_max * static_cast<double>(i) / samples;
        const double cur = n3_component(2.0 * std::atanh(t), cfg);
        if (prev != 0.0 && cur != 0.0 && (prev < 0.0) != (cur < 0.0)) ++count;
        if (cur != 0.0) prev = cur;
    }
    return count;
}

}  // namespace hopfion
