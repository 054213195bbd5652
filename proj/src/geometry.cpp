#include "hopfion/geometry.hpp"

#include <cmath>
#include <numbers>

namespace hopfion {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    // fmod can land exactly on 2*pi after the correction
    if (w >= kTwoPi) w -= kTwoPi;
    return w;
}

}  // namespace

ToroidalPoint::ToroidalPoint(double eta_, double xi_, double phi_)
    : eta(eta_), xi(wrap_angle(xi_)), phi(wrap_angle(phi_)) {
    if (!(eta >= 0.0) || !std::isfinite(eta))
        throw std::invalid_argument("ToroidalPoint: eta must be finite and >= 0");
}

Vec3 toroidal_to_cartesian(const ToroidalPoint& p, const Scale& s) {
    const double q = std::cosh(p.eta) - std::cos(p.xi);
    if (q <= 0.0)
        throw std::domain_error("toroidal_to_cartesian: singular point eta = 0, xi = 0");
    const double rho = s.a * std::sinh(p.eta) / q;
    return Vec3(rho * std::cos(p.phi), rho * std::sin(p.phi), s.a * std::sin(p.xi) / q);
}

ToroidalInverse cartesian_to_toroidal(const Vec3& x, const Scale& s, double eta_max) {
    const double a = s.a;
    const double rho = std::hypot(x.x(), x.y());
    const double z = x.z();

    // Squared distances to the near and far generators of the focal ring in
    // the meridian half-plane.
    const double d1_sq = (rho + a) * (rho + a) + z * z;
    const double d2_sq = (rho - a) * (rho - a) + z * z;

    ToroidalInverse out;
    double eta;
    if (d2_sq <= 0.0) {
        eta = eta_max;
        out.eta_saturated = true;
    } else {
        eta = 0.5 * std::log(d1_sq / d2_sq);
        if (eta > eta_max) {
            eta = eta_max;
            out.eta_saturated = true;
        }
        if (eta < 0.0) eta = 0.0;  // rounding guard; the ratio is >= 1
    }

    double xi = std::atan2(2.0 * a * z, rho * rho + z * z - a * a);
    if (xi < 0.0) xi += kTwoPi;

    const double phi = (rho > 0.0) ? std::atan2(x.y(), x.x()) : 0.0;

    out.point = ToroidalPoint(eta, xi, phi);
    return out;
}

ScaleFactors scale_factors(const ToroidalPoint& p, const Scale& s) {
    const double q = std::cosh(p.eta) - std::cos(p.xi);
    if (q <= 0.0)
        throw std::domain_error("scale_factors: singular point eta = 0, xi = 0");
    const double h = s.a / q;
    return ScaleFactors{h, h, h * std::sinh(p.eta)};
}

Vec3 u_to_n(const ComplexField& u) {
    if (u.at_infinity) return Vec3(0.0, 0.0, 1.0);
    const double mag_sq = std::norm(u.value);
    if (mag_sq > 1e300) return Vec3(0.0, 0.0, 1.0);
    const double denom = 1.0 + mag_sq;
    return Vec3(2.0 * u.value.real() / denom, 2.0 * u.value.imag() / denom,
                (mag_sq - 1.0) / denom);
}

ComplexField n_to_u(const Vec3& n) {
    const double denom = 1.0 - n.z();
    if (denom <= 0.0) return ComplexField::infinity();
    return ComplexField(std::complex<double>(n.x() / denom, n.y() / denom));
}

}  // namespace hopfion
