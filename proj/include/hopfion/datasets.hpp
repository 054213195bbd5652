#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopfion/config.hpp"

namespace hopfion {

/// Pointwise profile table on a grid uniform in t = tanh(eta/2): one row per
/// eta with (eta, g, f-or-pole, n3).
struct ProfileTable {
    std::vector<double> eta;
    std::vector<double> g;
    std::vector<std::optional<double>> f;  // empty at poles of tan
    std::vector<double> n3;
};

/// A named family of curves over a shared eta grid (one column per curve).
struct CurveFamily {
    std::string eta_label = "eta";
    std::vector<std::string> labels;
    std::vector<double> eta;
    std::vector<std::vector<double>> columns;  // columns[c][row]
};

ProfileTable make_profile_table(const SolitonConfig& cfg, int rows,
                                double eta_max = kDefaultEtaMax);

std::vector<double> make_energy_density_column(const SolitonConfig& cfg, int rows,
                                               double eta_max = kDefaultEtaMax);

/// n^3(eta) for indices {0, 1, 2} of one family at fixed m, n.
CurveFamily make_n3_family(int m, int n, Family family, int rows,
                           double eta_max = kDefaultEtaMax);

/// Energy density deta-profile for indices {0, 1, 2} of one family.
CurveFamily make_energy_density_family(int m, int n, Family family, int rows,
                                       double eta_max = kDefaultEtaMax);

/// CSV with a header row, 17 significant digits, '\n' line ends. Poles in
/// profile tables are written as the literal token "pole".
void write_profile_csv(std::ostream& os, const ProfileTable& table);
void write_curve_family_csv(std::ostream& os, const CurveFamily& family);

/// Strict interior local maxima above `floor`; adjacent plateau values are
/// not double-counted.
int count_local_maxima(const std::vector<double>& values, double floor = 0.0);

/// Shared formatting helper: shortest 17-significant-digit decimal form.
std::string format_double(double v);

}  // namespace hopfion
