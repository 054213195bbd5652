#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hopfion/config.hpp"
#include "hopfion/geometry.hpp"

namespace hopfion {

/// Uniform cell-centered Cartesian box [-half_width, half_width]^3.
struct BoxGrid {
    double half_width;
    int cells;

    double spacing() const { return 2.0 * half_width / cells; }
    double origin() const { return -half_width + 0.5 * spacing(); }
    Vec3 center(int i, int j, int k) const {
        const double d = spacing(), o = origin();
        return Vec3(o + i * d, o + j * d, o + k * d);
    }
    long total_points() const {
        return static_cast<long>(cells) * cells * cells;
    }
};

/// Pointwise field sample: unit vector, position-space energy density T00
/// (integrates to E over space) and Chern-Simons charge density
/// (integrates to the Hopf index).
struct FieldSample {
    Vec3 n;
    double energy_density;
    double hopf_density;
};

/// T00 at a Cartesian point, in the pole-free form
///   T00 = 8 * 2^{-3/4} (m^2 sinh^2 + n^2)^{3/4} (g'/sinh)^{3/2} q^3 / a^3,
/// smooth down to the axis. Equals the eta-density / ((2 pi)^2 h^3).
double energy_density_cartesian(const Vec3& x, const SolitonConfig& cfg,
                                double eta_max = kDefaultEtaMax);

FieldSample sample_field(const Vec3& x, const SolitonConfig& cfg,
                         double eta_max = kDefaultEtaMax);

/// All samples of a box grid in VTK point order (x fastest, then y, then z).
std::vector<FieldSample> sample_box(const BoxGrid& grid, const SolitonConfig& cfg,
                                    double eta_max = kDefaultEtaMax);

/**
 * Legacy-VTK ASCII STRUCTURED_POINTS dataset with point data
 *   VECTORS n double
 *   SCALARS energy_density double / SCALARS hopf_density double.
 * samples must be in VTK point order and of size grid.total_points().
 */
void write_vtk_structured_points(std::ostream& os, const BoxGrid& grid,
                                 const std::vector<FieldSample>& samples,
                                 const std::string& title);

/// Same data as CSV: x,y,z,nx,ny,nz,energy_density,hopf_density.
void write_field_csv(std::ostream& os, const BoxGrid& grid,
                     const std::vector<FieldSample>& samples);

}  // namespace hopfion
