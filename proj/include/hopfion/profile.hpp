#pragma once

#include <optional>
#include <vector>

#include "hopfion/config.hpp"

namespace hopfion {

/// |g - (2j+1) pi/2| below this marks a pole of f = tan(g).
inline constexpr double kPoleAngleTol = 1e-9;
/// |f| above this is reported as a pole as well.
inline constexpr double kPoleMagnitude = 1e12;

/// Pointwise bundle of the profile quantities at one eta.
/// f and f_prime are empty at poles of tan; g and n3 are smooth everywhere.
struct ProfileEval {
    double eta;
    double g;
    std::optional<double> f;
    std::optional<double> f_prime;
    double n3;
    bool at_pole;
};

/**
 * Zeros and poles of f(eta), ordered by eta. Zeros and poles strictly
 * interleave; the first boundary point is the zero at eta = 0 (except for the
 * vacuum, which has neither). The outermost boundary point sits at
 * eta = infinity: a pole for the charged family, a zero for the neutral one,
 * and is flagged rather than listed.
 */
struct SolitonPositions {
    std::vector<double> zeros;   // finite eta with f = 0 (includes eta = 0)
    std::vector<double> poles;   // finite eta with f -> infinity
    bool innermost_pole_at_infinity = false;  // charged family
    bool innermost_zero_at_infinity = false;  // neutral family, k >= 1
};

/**
 * Winding phase g(eta): the argument of the tangent in the closed-form
 * profile, monotone from 0 to (pi/2) * N with N = 2l+1 or 2k.
 *
 * Evaluated in the cancellation-free form
 *   g = (pi/2) N (|m|+|n|) sinh^2(eta)
 *       / [ sqrt(c^2 + sinh^2) ( |m| sqrt(c^2 + sinh^2) + |n| cosh ) ],
 * c = |n|/|m|, which is exact at eta = 0 and valid for either sign of |m|-|n|.
 */
double winding_phase(double eta, const SolitonConfig& cfg);

/// g'(eta) = (pi/2) N |n| (|m|+|n|) / m^2 * sinh / (c^2 + sinh^2)^{3/2} >= 0.
double winding_phase_derivative(double eta, const SolitonConfig& cfg);

/// g''(eta), used by the equation-of-motion residual.
double winding_phase_second_derivative(double eta, const SolitonConfig& cfg);

/// f = tan(g); empty at poles.
std::optional<double> profile_f(double eta, const SolitonConfig& cfg);

/// f' = (1 + f^2) g'; empty at poles of f.
std::optional<double> profile_derivative(double eta, const SolitonConfig& cfg);

/// n^3 = -cos(2 g): smooth through the poles of f, equal to (f^2-1)/(f^2+1)
/// wherever f is finite.
double n3_component(double eta, const SolitonConfig& cfg);

ProfileEval evaluate_profile(double eta, const SolitonConfig& cfg);

/**
 * Positions of the soliton boundaries: zeros solve g = j*pi, poles solve
 * g = (2j+1)*pi/2. Found by bracketed root-finding on the monotone g and
 * cross-checkable against the closed form
 *   sinh^2(eta) = (1 - h^2 c^2) / (h^2 - 1),   c = |n|/|m|,
 * where h is the bracket value solving g (see soliton_eta_closed_form).
 */
SolitonPositions soliton_positions(const SolitonConfig& cfg);

/// Closed-form eta at which g(eta) = target (0 < target < N pi/2).
double soliton_eta_closed_form(double target_g, const SolitonConfig& cfg);

/// Number of full sweeps of n^3 between -1 and +1: 2l+1 or 2k.
int flip_count(const SolitonConfig& cfg);

namespace detail {

/// Winding phase with an arbitrary (not necessarily integral) number of half
/// turns; the public API wraps this with the config's integer count.
double winding_phase_raw(double eta, double abs_m, double abs_n, double half_turns);
double winding_phase_derivative_raw(double eta, double abs_m, double abs_n,
                                    double half_turns);

}  // namespace detail

}  // namespace hopfion
