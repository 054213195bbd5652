#pragma once

#include <Eigen/Core>
#include <complex>

#include "hopfion/config.hpp"

namespace hopfion {

using Vec3 = Eigen::Vector3d;

/**
 * Point in toroidal coordinates (eta, xi, phi).
 *
 * Surfaces of constant eta are nested tori around the focal ring rho = a,
 * z = 0; eta = 0 is the symmetry axis together with spatial infinity,
 * eta -> infinity is the ring itself. Both angles live on [0, 2*pi) and are
 * normalized once, on construction.
 */
struct ToroidalPoint {
    double eta = 0.0;
    double xi = 0.0;
    double phi = 0.0;

    ToroidalPoint() = default;
    ToroidalPoint(double eta_, double xi_, double phi_);
};

/// Metric scale factors of the orthogonal toroidal frame.
struct ScaleFactors {
    double h_eta;
    double h_xi;
    double h_phi;

    /// Jacobian density: dV = h_eta * h_xi * h_phi  deta dxi dphi.
    double volume() const { return h_eta * h_xi * h_phi; }
};

/// Value of the complex scalar u, with an explicit point-at-infinity marker
/// (the stereographic preimage of the north pole).
struct ComplexField {
    std::complex<double> value{0.0, 0.0};
    bool at_infinity = false;

    ComplexField() = default;
    ComplexField(std::complex<double> v) : value(v) {}
    static ComplexField infinity() {
        ComplexField u;
        u.at_infinity = true;
        return u;
    }
};

/// Result of the Cartesian -> toroidal inversion. eta is capped at the
/// requested eta_max near the focal ring; the cap is flagged, not fatal.
struct ToroidalInverse {
    ToroidalPoint point;
    bool eta_saturated = false;
};

/// x = (a/q) sinh(eta) cos(phi), y = (a/q) sinh(eta) sin(phi),
/// z = (a/q) sin(xi), q = cosh(eta) - cos(xi).
/// Throws std::domain_error for the single singular input eta = 0, xi = 0.
Vec3 toroidal_to_cartesian(const ToroidalPoint& p, const Scale& s);

/// Inverse of toroidal_to_cartesian. phi is set to 0 on the z-axis, where any
/// value is valid. Points at the focal ring saturate eta at eta_max.
ToroidalInverse cartesian_to_toroidal(const Vec3& x, const Scale& s,
                                      double eta_max = kDefaultEtaMax);

/// h_eta = h_xi = a/q, h_phi = (a/q) sinh(eta).
/// Throws std::domain_error at eta = 0, xi = 0.
ScaleFactors scale_factors(const ToroidalPoint& p, const Scale& s);

/// Stereographic projection onto the unit sphere:
/// n = (u + u*, -i(u - u*), |u|^2 - 1) / (1 + |u|^2); infinity -> (0, 0, 1).
Vec3 u_to_n(const ComplexField& u);

/// Inverse stereographic projection; n = (0, 0, 1) maps to the point at infinity.
ComplexField n_to_u(const Vec3& n);

}  // namespace hopfion
