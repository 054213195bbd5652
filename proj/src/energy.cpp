#include "hopfion/energy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hopfion/profile.hpp"

namespace hopfion {

namespace {

constexpr double kTwoPiSq = 4.0 * std::numbers::pi * std::numbers::pi;
const double kDensityPrefactor = kTwoPiSq * 8.0 * std::pow(2.0, -0.75);
const double kClosedPrefactor = kTwoPiSq * 4.0 * std::pow(2.0, 0.25);

}  // namespace

double energy_density_eta(double eta, const SolitonConfig& cfg) {
    if (!(eta > 0.0))
        throw std::domain_error("energy_density_eta: eta must be > 0 (limit at 0 is 0)");
    if (cfg.is_vacuum()) return 0.0;
    const double s = std::sinh(eta);
    const double m2 = cfg.abs_m() * cfg.abs_m();
    const double n2 = cfg.abs_n() * cfg.abs_n();
    const double gp = winding_phase_derivative(eta, cfg);
    return kDensityPrefactor * s * std::pow(m2 + n2 / (s * s), 0.75) * std::pow(gp, 1.5);
}

std::pair<double, double> total_energy_quadrature(const SolitonConfig& cfg,
                                                  double rel_tol,
                                                  int max_subdivisions) {
    if (!(rel_tol > 0.0))
        throw std::invalid_argument("total_energy_quadrature: rel_tol must be > 0");
    if (cfg.is_vacuum()) return {0.0, 0.0};

    const AdaptiveResult r = integrate_semi_infinite(
        [&cfg](double eta) { return energy_density_eta(eta, cfg); }, rel_tol,
        max_subdivisions);
    if (!r.converged) {
        std::ostringstream msg;
        msg << "total_energy_quadrature: no convergence after " << r.subdivisions
            << " subdivisions (partial value " << r.value << ", estimate "
            << r.error_estimate << ")";
        throw QuadratureFailure(msg.str(), r.value, r.error_estimate);
    }
    return {r.value, r.error_estimate};
}

double total_energy_closed(const SolitonConfig& cfg) {
    const double turns = cfg.half_turns();
    return kClosedPrefactor * std::pow(turns, 1.5) *
           std::sqrt(cfg.abs_m() * cfg.abs_n() * (cfg.abs_m() + cfg.abs_n()));
}

EnergyReport energy_report(const SolitonConfig& cfg, double rel_tol) {
    const auto [value, error] = total_energy_quadrature(cfg, rel_tol);
    const double closed = total_energy_closed(cfg);
    return EnergyReport{closed, value, closed != 0.0 ? value / closed : 0.0, error, cfg};
}

}  // namespace hopfion
