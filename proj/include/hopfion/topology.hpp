#pragma once

#include <complex>
#include <vector>

#include "hopfion/config.hpp"
#include "hopfion/geometry.hpp"

namespace hopfion {

/**
 * Sign relating the two charge routes: the volume integral of A.B over the
 * right-handed (eta, xi, phi) frame returns -mn for the charged family, while
 * the telescoped boundary sum starts at +mn. One global orientation is fixed
 * here and asserted across all configurations:
 *   q_numeric = kOrientationSign * q_boundary.
 */
inline constexpr int kOrientationSign = -1;

/// Unit quadruple on S^3 built from the profile and the two winding angles.
struct PhiQuadruple {
    double phi1, phi2, phi3, phi4;
    double norm_sq() const {
        return phi1 * phi1 + phi2 * phi2 + phi3 * phi3 + phi4 * phi4;
    }
};

/// The same quadruple as a unit spinor: z1 = phi1 + i phi2, z2 = phi3 + i phi4.
struct SpinorZ {
    std::complex<double> z1, z2;
    double norm_sq() const { return std::norm(z1) + std::norm(z2); }
};

/// Abelian potential A and field B = curl A, physical (orthonormal-frame)
/// components in (eta, xi, phi) order, units 1/length.
struct GaugeField {
    Vec3 a;
    Vec3 b;
};

struct HopfGrid {
    int n_eta = 512;
    int n_xi = 512;
};

/// Total and per-soliton boundary-term charges (exact integers by telescoping).
struct BoundaryCharges {
    double total;
    std::vector<double> per_soliton;
};

struct HopfReport {
    double q_numeric;
    double q_numeric_error;  // Richardson estimate from the half-resolution grid
    double q_boundary;
    std::vector<double> per_soliton;
    HopfGrid grid;
    SolitonConfig config;
};

/// (Phi1, Phi2) = sin(g) (cos m xi, sin m xi),
/// (Phi3, Phi4) = cos(g) (cos n phi, -sin n phi).
/// Matches the f-form f/sqrt(f^2+1), 1/sqrt(f^2+1) up to the sign of cos(g),
/// and passes smoothly through the poles of f where (Phi1, Phi2) has magnitude 1.
PhiQuadruple phi_quadruple(const ToroidalPoint& p, const SolitonConfig& cfg);

SpinorZ spinor_z(const ToroidalPoint& p, const SolitonConfig& cfg);

/// Unit field from the ansatz u = f e^{i(m xi + n phi)} via the stereographic map.
Vec3 unit_field(const ToroidalPoint& p, const SolitonConfig& cfg);

/// Reconstruction n_i from the spinor bilinears. Pairs with the transposed
/// Pauli matrices (sigma_1, -sigma_2, sigma_3) so that it reproduces
/// unit_field exactly; the standard pairing flips the sign of n^2.
Vec3 unit_field_from_spinor(const SpinorZ& z);

/**
 * A_i = (i/2)(Z^dag d_i Z - d_i Z^dag Z) in the orthonormal frame:
 *   A_eta = 0,
 *   A_xi  = -m sin^2(g) / h_xi,
 *   A_phi =  n cos^2(g) / h_phi.
 * No additive gauge shift is applied to A_phi: shifting by a multiple of
 * grad(phi) is a large (multivalued) gauge transformation that changes the
 * A.B integral by a multiple of the B flux and destroys the charge.
 * A_phi therefore diverges on the axis while A.B stays finite there.
 * Throws std::domain_error on the coordinate singular set (eta = 0, xi = 0).
 */
Vec3 abelian_potential(const ToroidalPoint& p, const SolitonConfig& cfg);

/// B = curl A in orthogonal curvilinear coordinates, using the analytic
/// radial derivative d/deta sin^2(g) = sin(2g) g'. B_eta = 0 and all
/// components are independent of phi.
Vec3 magnetic_field(const ToroidalPoint& p, const SolitonConfig& cfg);

GaugeField gauge_field(const ToroidalPoint& p, const SolitonConfig& cfg);

/// Chern-Simons charge density A.B / (4 pi^2); finite everywhere, including
/// the axis and the focal ring. Safe at eta = 0 (returns the 0 limit).
double hopf_density(const ToroidalPoint& p, const SolitonConfig& cfg);

/**
 * Hopf index by composite midpoint quadrature of (1/4 pi^2) A.B over space,
 * reduced to the (t = tanh(eta/2), xi) rectangle by the phi-independence of
 * A.B. Grid sides must be >= 64.
 */
double hopf_index_numeric(const SolitonConfig& cfg, HopfGrid grid = HopfGrid{});

/**
 * Exact boundary-term charges: the per-interval charge
 * (nm/2) [(Phi1^2+Phi2^2)^2 - (Phi3^2+Phi4^2)^2] between consecutive soliton
 * boundaries telescopes to (nm/2) [n^3(eta_{i+1}) - n^3(eta_i)] = (-1)^i mn.
 * The total is mn for the charged family and 0 for the neutral one.
 */
BoundaryCharges hopf_index_boundary(const SolitonConfig& cfg);

/// Bundles the numeric and boundary routes with a Richardson error estimate
/// from the half-resolution grid.
HopfReport hopf_report(const SolitonConfig& cfg, HopfGrid grid = HopfGrid{});

/// Slow cross-check: midpoint sum of the charge density over a Cartesian box
/// [-half_width, half_width]^3 with cells_per_axis^3 cells.
double hopf_index_cartesian(const SolitonConfig& cfg, double half_width,
                            int cells_per_axis, double eta_max = kDefaultEtaMax);

}  // namespace hopfion
