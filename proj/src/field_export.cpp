#include "hopfion/field_export.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "hopfion/profile.hpp"
#include "hopfion/topology.hpp"

namespace hopfion {

namespace {

const double kT00Prefactor = 8.0 * std::pow(2.0, -0.75);

void write_double(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

}  // namespace

double energy_density_cartesian(const Vec3& x, const SolitonConfig& cfg,
                                double eta_max) {
    if (cfg.is_vacuum()) return 0.0;
    const ToroidalInverse inv = cartesian_to_toroidal(x, cfg.scale, eta_max);
    const double eta = inv.point.eta;
    const double s = std::sinh(eta);
    const double q = std::cosh(eta) - std::cos(inv.point.xi);
    const double am = cfg.abs_m(), an = cfg.abs_n();
    const double c = an / am;
    const double w = c * c + s * s;
    // g'/sinh stays finite on the axis
    const double gp_over_s = 0.5 * std::numbers::pi * cfg.half_turns() * an *
                             (am + an) / (am * am) / (w * std::sqrt(w));
    const double a3 = cfg.scale.a * cfg.scale.a * cfg.scale.a;
    return kT00Prefactor * std::pow(am * am * s * s + an * an, 0.75) *
           std::pow(gp_over_s, 1.5) * q * q * q / a3;
}

FieldSample sample_field(const Vec3& x, const SolitonConfig& cfg, double eta_max) {
    const ToroidalInverse inv = cartesian_to_toroidal(x, cfg.scale, eta_max);
    FieldSample out;
    out.n = unit_field(inv.point, cfg);
    out.energy_density = energy_density_cartesian(x, cfg, eta_max);
    out.hopf_density = hopf_density(inv.point, cfg);
    return out;
}

std::vector<FieldSample> sample_box(const BoxGrid& grid, const SolitonConfig& cfg,
                                    double eta_max) {
    std::vector<FieldSample> samples;
    samples.reserve(grid.total_points());
    for (int k = 0; k < grid.cells; ++k)
        for (int j = 0; j < grid.cells; ++j)
            for (int i = 0; i < grid.cells; ++i)
                samples.push_back(sample_field(grid.center(i, j, k), cfg, eta_max));
    return samples;
}

void write_vtk_structured_points(std::ostream& os, const BoxGrid& grid,
                                 const std::vector<FieldSample>& samples,
                                 const std::string& title) {
    if (samples.size() != static_cast<size_t>(grid.total_points()))
        throw std::invalid_argument("write_vtk_structured_points: sample count mismatch");

    os << "# vtk DataFile Version 3.0\n"
       << title << "\n"
       << "ASCII\n"
       << "DATASET STRUCTURED_POINTS\n"
       << "DIMENSIONS " << grid.cells << " " << grid.cells << " " << grid.cells << "\n";
    os << "ORIGIN ";
    write_double(os, grid.origin());
    os << " ";
    write_double(os, grid.origin());
    os << " ";
    write_double(os, grid.origin());
    os << "\nSPACING ";
    write_double(os, grid.spacing());
    os << " ";
    write_double(os, grid.spacing());
    os << " ";
    write_double(os, grid.spacing());
    os << "\nPOINT_DATA " << samples.size() << "\n";

    os << "VECTORS n double\n";
    for (const FieldSample& s : samples) {
        write_double(os, s.n.x());
        os << " ";
        write_double(os, s.n.y());
        os << " ";
        write_double(os, s.n.z());
        os << "\n";
    }

    os << "SCALARS energy_density double 1\nLOOKUP_TABLE default\n";
    for (const FieldSample& s : samples) {
        write_double(os, s.energy_density);
        os << "\n";
    }

    os << "SCALARS hopf_density double 1\nLOOKUP_TABLE default\n";
    for (const FieldSample& s : samples) {
        write_double(os, s.hopf_density);
        os << "\n";
    }
}

void write_field_csv(std::ostream& os, const BoxGrid& grid,
                     const std::vector<FieldSample>& samples) {
    if (samples.size() != static_cast<size_t>(grid.total_points()))
        throw std::invalid_argument("write_field_csv: sample count mismatch");
    os << "x,y,z,nx,ny,nz,energy_density,hopf_density\n";
    size_t idx = 0;
    for (int k = 0; k < grid.cells; ++k)
        for (int j = 0; j < grid.cells; ++j)
            for (int i = 0; i < grid.cells; ++i) {
                const Vec3 x = grid.center(i, j, k);
                const FieldSample& s = samples[idx++];
                const double cols[8] = {x.x(), x.y(), x.z(), s.n.x(),
                                        s.n.y(), s.n.z(), s.energy_density,
                                        s.hopf_density};
                for (int c = 0; c < 8; ++c) {
                    if (c) os << ",";
                    write_double(os, cols[c]);
                }
                os << "\n";
            }
}

}  // namespace hopfion
