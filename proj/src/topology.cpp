#include "hopfion/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hopfion/profile.hpp"

namespace hopfion {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourPiSq = 4.0 * kPi * kPi;

struct Angles {
    double sin_g, cos_g, g, gp;
};

Angles profile_angles(double eta, const SolitonConfig& cfg) {
    const double g = winding_phase(eta, cfg);
    return Angles{std::sin(g), std::cos(g), g, winding_phase_derivative(eta, cfg)};
}

}  // namespace

PhiQuadruple phi_quadruple(const ToroidalPoint& p, const SolitonConfig& cfg) {
    const Angles ang = profile_angles(p.eta, cfg);
    const double mxi = cfg.m * p.xi;
    const double nphi = cfg.n * p.phi;
    return PhiQuadruple{ang.sin_g * std::cos(mxi), ang.sin_g * std::sin(mxi),
                        ang.cos_g * std::cos(nphi), -ang.cos_g * std::sin(nphi)};
}

SpinorZ spinor_z(const ToroidalPoint& p, const SolitonConfig& cfg) {
    const PhiQuadruple q = phi_quadruple(p, cfg);
    return SpinorZ{{q.phi1, q.phi2}, {q.phi3, q.phi4}};
}

Vec3 unit_field(const ToroidalPoint& p, const SolitonConfig& cfg) {
    const auto f = profile_f(p.eta, cfg);
    if (!f) return Vec3(0.0, 0.0, 1.0);  // pole of tan: the north pole
    const double arg = cfg.m * p.xi + cfg.n * p.phi;
    return u_to_n(ComplexField(*f * std::exp(std::complex<double>(0.0, arg))));
}

Vec3 unit_field_from_spinor(const SpinorZ& z) {
    const std::complex<double> cross = std::conj(z.z1) * z.z2;
    return Vec3(2.0 * cross.real(), -2.0 * cross.imag(),
                std::norm(z.z1) - std::norm(z.z2));
}

Vec3 abelian_potential(const ToroidalPoint& p, const SolitonConfig& cfg) {
    const ScaleFactors h = scale_factors(p, cfg.scale);  // throws on singular set
    const Angles ang = profile_angles(p.eta, cfg);
    const double sin_sq = ang.sin_g * ang.sin_g;
    return Vec3(0.0, -cfg.m * sin_sq / h.h_xi,
                cfg.n * (1.0 - sin_sq) / h.h_phi);
}

Vec3 magnetic_field(const ToroidalPoint& p, const SolitonConfig& cfg) {
    const ScaleFactors h = scale_factors(p, cfg.scale);
    const Angles ang = profile_angles(p.eta, cfg);
    // Covariant components depend on eta only, so the curl has two terms:
    //   B_xi  = -d_eta(A_phi,cov) / (h_eta h_phi),
    //   B_phi = +d_eta(A_xi,cov)  / (h_eta h_xi),
    // with d/deta sin^2(g) = sin(2g) g'.
    const double dsin_sq = 2.0 * ang.sin_g * ang.cos_g * ang.gp;
    return Vec3(0.0, cfg.n * dsin_sq / (h.h_eta * h.h_phi),
                -cfg.m * dsin_sq / (h.h_eta * h.h_xi));
}

GaugeField gauge_field(const ToroidalPoint& p, const SolitonConfig& cfg) {
    return GaugeField{abelian_potential(p, cfg), magnetic_field(p, cfg)};
}

double hopf_density(const ToroidalPoint& p, const SolitonConfig& cfg) {
    // A.B = -mn sin(2g) g' / (h_eta h_xi h_phi); written with g'/sinh so the
    // axis limit (eta -> 0) is finite instead of 0 * infinity.
    const double a = cfg.scale.a;
    const double q = std::cosh(p.eta) - std::cos(p.xi);
    if (q <= 0.0)
        throw std::domain_error("hopf_density: singular point eta = 0, xi = 0");
    const double s = std::sinh(p.eta);
    const double c = cfg.abs_n() / cfg.abs_m();
    const double w = c * c + s * s;
    // g' / sinh(eta), smooth down to the axis
    const double gp_over_s = 0.5 * kPi * cfg.half_turns() * cfg.abs_n() *
                             (cfg.abs_m() + cfg.abs_n()) /
                             (cfg.abs_m() * cfg.abs_m()) / (w * std::sqrt(w));
    const double g = winding_phase(p.eta, cfg);
    const double ab = -static_cast<double>(cfg.m) * cfg.n * std::sin(2.0 * g) *
                      gp_over_s * q * q * q / (a * a * a);
    return ab / kFourPiSq;
}

double hopf_index_numeric(const SolitonConfig& cfg, HopfGrid grid) {
    if (grid.n_eta < 64 || grid.n_xi < 64)
        throw std::invalid_argument("hopf_index_numeric: grid sides must be >= 64");
    if (cfg.is_vacuum()) return 0.0;

    // Q = (1/4 pi^2) * 2 pi * integral over (t, xi) of A.B h^3 (deta/dt),
    // midpoint rule in both directions (the integrand vanishes at t = 0, 1).
    const double dt = 1.0 / grid.n_eta;
    const double dxi = 2.0 * kPi / grid.n_xi;

    double sum = 0.0;
    for (int i = 0; i < grid.n_eta; ++i) {
        const double t = (i + 0.5) * dt;
        const double eta = 2.0 * std::atanh(t);
        const double jac = 2.0 / (1.0 - t * t);
        double row = 0.0;
        for (int j = 0; j < grid.n_xi; ++j) {
            const ToroidalPoint p(eta, (j + 0.5) * dxi, 0.0);
            const ScaleFactors h = scale_factors(p, cfg.scale);
            const GaugeField field = gauge_field(p, cfg);
            row += field.a.dot(field.b) * h.volume();
        }
        sum += row * jac;
    }
    return sum * dt * dxi * 2.0 * kPi / kFourPiSq;
}

BoundaryCharges hopf_index_boundary(const SolitonConfig& cfg) {
    BoundaryCharges out{0.0, {}};
    const int intervals = cfg.half_turns();  // boundary points minus one
    const double mn = static_cast<double>(cfg.m) * cfg.n;
    out.per_soliton.reserve(intervals);
    for (int i = 0; i < intervals; ++i) {
        // (nm/2) [n^3]_{eta_i}^{eta_{i+1}} with n^3 alternating -1, +1, ...
        const double charge = (i % 2 == 0) ? mn : -mn;
        out.per_soliton.push_back(charge);
        out.total += charge;
    }
    return out;
}

HopfReport hopf_report(const SolitonConfig& cfg, HopfGrid grid) {
    const double q_fine = hopf_index_numeric(cfg, grid);
    // Richardson companion at half resolution, floored at the smallest legal grid
    const HopfGrid coarse{std::max(64, grid.n_eta / 2), std::max(64, grid.n_xi / 2)};
    if (coarse.n_eta == grid.n_eta && coarse.n_xi == grid.n_xi)
        throw std::invalid_argument("hopf_report: grid too small for a Richardson pair");
    const double q_coarse = hopf_index_numeric(cfg, coarse);
    const BoundaryCharges boundary = hopf_index_boundary(cfg);
    return HopfReport{q_fine,
                      std::abs(q_fine - q_coarse),
                      boundary.total,
                      boundary.per_soliton,
                      grid,
                      cfg};
}

double hopf_index_cartesian(const SolitonConfig& cfg, double half_width,
                            int cells_per_axis, double eta_max) {
    if (cells_per_axis < 2)
        throw std::invalid_argument("hopf_index_cartesian: need at least 2 cells per axis");
    const double dx = 2.0 * half_width / cells_per_axis;
    double sum = 0.0;
    for (int i = 0; i < cells_per_axis; ++i) {
        const double x = -half_width + (i + 0.5) * dx;
        for (int j = 0; j < cells_per_axis; ++j) {
            const double y = -half_width + (j + 0.5) * dx;
            for (int k = 0; k < cells_per_axis; ++k) {
                const double z = -half_width + (k + 0.5) * dx;
                const ToroidalInverse inv =
                    cartesian_to_toroidal(Vec3(x, y, z), cfg.scale, eta_max);
                sum += hopf_density(inv.point, cfg);
            }
        }
    }
    return sum * dx * dx * dx;
}

}  // namespace hopfion
