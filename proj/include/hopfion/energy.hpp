#pragma once

#include <stdexcept>

#include "hopfion/config.hpp"
#include "hopfion/quadrature.hpp"

namespace hopfion {

/// Closed-form total, quadrature total, and their ratio for one configuration.
/// The scale a drops out of the energy; values are in the model's units.
struct EnergyReport {
    double closed_form;
    double quadrature;
    double ratio;  // quadrature / closed_form
    double abs_error_estimate;
    SolitonConfig config;
};

/// Thrown when the adaptive quadrature fails to reach the requested relative
/// tolerance; carries the partial value and its error estimate.
struct QuadratureFailure : std::runtime_error {
    double partial_value;
    double error_estimate;
    QuadratureFailure(const std::string& what, double value, double error)
        : std::runtime_error(what), partial_value(value), error_estimate(error) {}
};

/**
 * Angularly integrated energy density, so that E = integral over (0, inf) of
 * density(eta) deta. Evaluated in the pole-free reduced form
 *
 *   density = (2 pi)^2 * 8 * 2^{-3/4} * sinh(eta) * (m^2 + n^2/sinh^2)^{3/4}
 *             * g'(eta)^{3/2},
 *
 * which the dielectric weight sigma = (1 + f^2)^{3/2} / (2|f|)^{3/2} reduces
 * the raw T00 integrand to (the identity 1 - (n^3)^2 = 4 f^2 / (1+f^2)^2
 * cancels every f factor). Vanishes like O(eta) at the origin.
 * Throws std::domain_error for eta <= 0.
 */
double energy_density_eta(double eta, const SolitonConfig& cfg);

/// Adaptive quadrature of the density over (0, inf) via t = tanh(eta/2).
/// Returns {value, error_estimate}; throws QuadratureFailure on non-convergence.
std::pair<double, double> total_energy_quadrature(const SolitonConfig& cfg,
                                                  double rel_tol = 1e-10,
                                                  int max_subdivisions = 200);

/// Closed-form total E = (2 pi)^2 * 4 * 2^{1/4} * N^{3/2}
/// * sqrt(|m| |n| (|m| + |n|)), N = 2l+1 or 2k.
double total_energy_closed(const SolitonConfig& cfg);

EnergyReport energy_report(const SolitonConfig& cfg, double rel_tol = 1e-10);

}  // namespace hopfion
