#include "hopfion/datasets.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hopfion/energy.hpp"
#include "hopfion/profile.hpp"

namespace hopfion {

namespace {

std::vector<double> eta_grid(int rows, double eta_max) {
    if (rows < 2) throw std::invalid_argument("dataset grids need at least 2 rows");
    const double t_max = std::tanh(0.5 * eta_max);
    std::vector<double> eta(rows);
    for (int i = 0; i < rows; ++i) {
        const double t = t_max * static_cast<double>(i) / (rows - 1);
        eta[i] = 2.0 * std::atanh(t);
    }
    return eta;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ProfileTable make_profile_table(const SolitonConfig& cfg, int rows, double eta_max) {
    ProfileTable table;
    table.eta = eta_grid(rows, eta_max);
    table.g.reserve(rows);
    table.f.reserve(rows);
    table.n3.reserve(rows);
    for (double e : table.eta) {
        const ProfileEval eval = evaluate_profile(e, cfg);
        table.g.push_back(eval.g);
        table.f.push_back(eval.f);
        table.n3.push_back(eval.n3);
    }
    return table;
}

std::vector<double> make_energy_density_column(const SolitonConfig& cfg, int rows,
                                               double eta_max) {
    const std::vector<double> grid = eta_grid(rows, eta_max);
    std::vector<double> density(grid.size());
    for (size_t i = 0; i < grid.size(); ++i)
        density[i] = grid[i] > 0.0 ? energy_density_eta(grid[i], cfg) : 0.0;
    return density;
}

CurveFamily make_n3_family(int m, int n, Family family, int rows, double eta_max) {
    CurveFamily fam;
    fam.eta = eta_grid(rows, eta_max);
    const char* prefix = family == Family::Charged ? "n3_l" : "n3_k";
    for (int index = 0; index <= 2; ++index) {
        const SolitonConfig cfg(m, n, family, index);
        fam.labels.push_back(prefix + std::to_string(index));
        std::vector<double> col(fam.eta.size());
        for (size_t i = 0; i < fam.eta.size(); ++i)
            col[i] = n3_component(fam.eta[i], cfg);
        fam.columns.push_back(std::move(col));
    }
    return fam;
}

CurveFamily make_energy_density_family(int m, int n, Family family, int rows,
                                       double eta_max) {
    CurveFamily fam;
    fam.eta = eta_grid(rows, eta_max);
    const char* prefix = family == Family::Charged ? "density_l" : "density_k";
    for (int index = 0; index <= 2; ++index) {
        const SolitonConfig cfg(m, n, family, index);
        fam.labels.push_back(prefix + std::to_string(index));
        fam.columns.push_back(make_energy_density_column(cfg, rows, eta_max));
    }
    return fam;
}

void write_profile_csv(std::ostream& os, const ProfileTable& table) {
    os << "eta,g,f,n3\n";
    for (size_t i = 0; i < table.eta.size(); ++i) {
        os << format_double(table.eta[i]) << "," << format_double(table.g[i]) << ",";
        if (table.f[i])
            os << format_double(*table.f[i]);
        else
            os << "pole";
        os << "," << format_double(table.n3[i]) << "\n";
    }
}

void write_curve_family_csv(std::ostream& os, const CurveFamily& family) {
    os << family.eta_label;
    for (const std::string& label : family.labels) os << "," << label;
    os << "\n";
    for (size_t i = 0; i < family.eta.size(); ++i) {
        os << format_double(family.eta[i]);
        for (const auto& col : family.columns) os << "," << format_double(col[i]);
        os << "\n";
    }
}

int count_local_maxima(const std::vector<double>& values, double floor) {
    int count = 0;
    for (size_t i = 1; i + 1 < values.size(); ++i) {
        if (values[i] <= floor) continue;
        if (values[i] > values[i - 1] && values[i] > values[i + 1]) ++count;
    }
    return count;
}

}  // namespace hopfion
