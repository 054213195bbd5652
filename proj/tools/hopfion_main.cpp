// Command-line front end: profile tables, energies, Hopf charges, solution
// verification, 3D field export and the standard figure datasets.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "hopfion/datasets.hpp"
#include "hopfion/energy.hpp"
#include "hopfion/field_export.hpp"
#include "hopfion/profile.hpp"
#include "hopfion/serialization.hpp"
#include "hopfion/topology.hpp"
#include "hopfion/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTolerance = 2;
constexpr int kExitIo = 3;

struct ConfigFlags {
    int m = 2;
    int n = 1;
    std::optional<int> charged;
    std::optional<int> neutral;
    double a = 1.0;
};

struct OutputFlags {
    std::string format = "csv";
    std::string out = "-";  // "-" = stdout
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
    cmd->add_option("--m", flags.m, "poloidal winding integer")->required();
    cmd->add_option("--n", flags.n, "azimuthal winding integer")->required();
    auto* charged = cmd->add_option("--charged", flags.charged,
                                    "charged family with nesting index L");
    auto* neutral = cmd->add_option("--neutral", flags.neutral,
                                    "neutral (sphaleron-like) family with index K");
    charged->excludes(neutral);
    neutral->excludes(charged);
    cmd->add_option("--a", flags.a, "length scale of the toroidal frame")
        ->default_val(1.0);
}

hopfion::SolitonConfig make_config(const ConfigFlags& flags) {
    if (flags.charged.has_value() == flags.neutral.has_value())
        throw std::invalid_argument("exactly one of --charged or --neutral is required");
    if (flags.charged)
        return hopfion::SolitonConfig::charged(flags.m, flags.n, *flags.charged,
                                               hopfion::Scale(flags.a));
    return hopfion::SolitonConfig::neutral(flags.m, flags.n, *flags.neutral,
                                           hopfion::Scale(flags.a));
}

// Write to --out, or stdout for "-". File I/O errors exit with kExitIo.
void emit(const OutputFlags& output, const std::string& text) {
    if (output.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(output.out, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open output file " + output.out);
    file << text;
    if (!file) throw std::ios_base::failure("write failed for " + output.out);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open output file " + path);
    file << text;
    if (!file) throw std::ios_base::failure("write failed for " + path);
}

std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string text = "key,value\n";
    for (const auto& [key, value] : rows) text += key + "," + value + "\n";
    return text;
}

std::string join(const std::vector<double>& values, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += hopfion::format_double(values[i]);
    }
    return out;
}

std::pair<int, int> parse_grid(const std::string& text) {
    int n_eta = 0, n_xi = 0;
    char sep = 0;
    std::istringstream in(text);
    if (!(in >> n_eta >> sep >> n_xi) || sep != 'x' || n_eta <= 0 || n_xi <= 0)
        throw std::invalid_argument("--grid expects the form NxM, e.g. 512x512");
    return {n_eta, n_xi};
}

int error_json(int code, const std::string& message) {
    json err{{"error", {{"code", code}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nested toroidal hopfions: profiles, energies, Hopf charges"};
    app.require_subcommand(1);

    // profile
    auto* profile = app.add_subcommand("profile", "profile table (eta, g, f, n3)");
    ConfigFlags profile_config;
    OutputFlags profile_out;
    bool figure = false;
    int profile_rows = 400;
    double profile_eta_max = hopfion::kDefaultEtaMax;
    add_config_flags(profile, profile_config);
    profile->add_option("--eta-max", profile_eta_max)->default_val(hopfion::kDefaultEtaMax);
    profile->add_option("--rows", profile_rows)->default_val(400);
    profile->add_option("--format", profile_out.format)
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    profile->add_option("--out", profile_out.out)->default_val("-");
    profile->add_flag("--figure", figure,
                      "emit the three-curve n3 dataset (indices 0,1,2) instead");

    // energy
    auto* energy = app.add_subcommand("energy", "energy report (closed form + quadrature)");
    ConfigFlags energy_config;
    OutputFlags energy_out;
    double energy_tol = 1e-10;
    std::string density_table;
    int energy_rows = 400;
    double energy_eta_max = hopfion::kDefaultEtaMax;
    add_config_flags(energy, energy_config);
    energy->add_option("--tol", energy_tol)->default_val(1e-10);
    energy->add_option("--rows", energy_rows)->default_val(400);
    energy->add_option("--eta-max", energy_eta_max)->default_val(hopfion::kDefaultEtaMax);
    energy->add_option("--density-table", density_table,
                       "also write the density-vs-eta table to this CSV file");
    energy->add_option("--format", energy_out.format)
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    energy->add_option("--out", energy_out.out)->default_val("-");

    // hopf
    auto* hopf = app.add_subcommand("hopf", "Hopf index (volume integral + boundary terms)");
    ConfigFlags hopf_config;
    OutputFlags hopf_out;
    std::string hopf_grid_text = "512x512";
    bool check_3d = false;
    double box_half = 5.0;
    int box_cells = 64;
    add_config_flags(hopf, hopf_config);
    hopf->add_option("--grid", hopf_grid_text, "quadrature grid, N_eta x N_xi")
        ->default_val("512x512");
    hopf->add_flag("--check-3d", check_3d,
                   "also run the slow Cartesian-box cross check");
    hopf->add_option("--box-half", box_half, "half width of the 3d box, units of a")
        ->default_val(5.0);
    hopf->add_option("--cells", box_cells, "cells per axis of the 3d box")
        ->default_val(64);
    hopf->add_option("--format", hopf_out.format)
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    hopf->add_option("--out", hopf_out.out)->default_val("-");

    // verify
    auto* verify = app.add_subcommand("verify", "equation-of-motion and first-integral checks");
    ConfigFlags verify_config;
    OutputFlags verify_out;
    int verify_samples = 50;
    int residual_points = 200;
    double verify_eta_max = hopfion::kDefaultEtaMax;
    add_config_flags(verify, verify_config);
    verify->add_option("--samples", verify_samples)->default_val(50);
    verify->add_option("--residual-points", residual_points)->default_val(200);
    verify->add_option("--eta-max", verify_eta_max)->default_val(hopfion::kDefaultEtaMax);
    verify->add_option("--format", verify_out.format)
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    verify->add_option("--out", verify_out.out)->default_val("-");

    // field
    auto* field = app.add_subcommand("field", "sample n, energy density and hopf density on a box");
    ConfigFlags field_config;
    OutputFlags field_out;
    double field_half = 3.0;
    int field_cells = 64;
    int field_max_cells = 512;
    double field_eta_max = hopfion::kDefaultEtaMax;
    add_config_flags(field, field_config);
    field->add_option("--box-half", field_half, "half width of the box, units of a")
        ->default_val(3.0);
    field->add_option("--cells", field_cells, "cells per axis")->default_val(64);
    field->add_option("--max-cells", field_max_cells, "refuse grids beyond this many cells per axis")
        ->default_val(512);
    field->add_option("--eta-max", field_eta_max)->default_val(hopfion::kDefaultEtaMax);
    field->add_option("--format", field_out.format)
        ->check(CLI::IsMember({"vtk", "csv"}))
        ->default_val("vtk");
    field->add_option("--out", field_out.out)->default_val("-");

    // figures
    auto* figures = app.add_subcommand(
        "figures", "write the four standard datasets (n3 and energy density, both families)");
    int fig_m = 2, fig_n = 1;
    int fig_rows = 400;
    double fig_eta_max = hopfion::kDefaultEtaMax;
    std::string out_dir = ".";
    figures->add_option("--m", fig_m)->default_val(2);
    figures->add_option("--n", fig_n)->default_val(1);
    figures->add_option("--rows", fig_rows)->default_val(400);
    figures->add_option("--eta-max", fig_eta_max)->default_val(hopfion::kDefaultEtaMax);
    figures->add_option("--out-dir", out_dir)->default_val(".");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::stringstream dump;
        const int rc = app.exit(e, dump, dump);
        (void)rc;
        return error_json(kExitUsage, dump.str());
    }

    try {
        if (profile->parsed()) {
            const hopfion::SolitonConfig cfg = make_config(profile_config);
            if (figure) {
                const hopfion::CurveFamily fam = hopfion::make_n3_family(
                    cfg.m, cfg.n, cfg.family, profile_rows, profile_eta_max);
                std::ostringstream text;
                hopfion::write_curve_family_csv(text, fam);
                emit(profile_out, text.str());
                return kExitOk;
            }
            const hopfion::ProfileTable table =
                hopfion::make_profile_table(cfg, profile_rows, profile_eta_max);
            if (profile_out.format == "json") {
                json rows_json = json::array();
                for (size_t i = 0; i < table.eta.size(); ++i) {
                    json row{{"eta", table.eta[i]}, {"g", table.g[i]}, {"n3", table.n3[i]}};
                    if (table.f[i])
                        row["f"] = *table.f[i];
                    else
                        row["f"] = nullptr;  // pole marker
                    rows_json.push_back(row);
                }
                emit(profile_out,
                     json{{"config", hopfion::to_json(cfg)}, {"rows", rows_json}}.dump(2) + "\n");
            } else {
                std::ostringstream text;
                hopfion::write_profile_csv(text, table);
                emit(profile_out, text.str());
            }
            return kExitOk;
        }

        if (energy->parsed()) {
            const hopfion::SolitonConfig cfg = make_config(energy_config);
            hopfion::EnergyReport report{0, 0, 0, 0, cfg};
            try {
                report = hopfion::energy_report(cfg, energy_tol);
            } catch (const hopfion::QuadratureFailure& failure) {
                return error_json(kExitTolerance, failure.what());
            }
            if (!density_table.empty()) {
                const hopfion::CurveFamily fam = hopfion::make_energy_density_family(
                    cfg.m, cfg.n, cfg.family, energy_rows, energy_eta_max);
                std::ostringstream text;
                hopfion::write_curve_family_csv(text, fam);
                write_file(density_table, text.str());
            }
            if (energy_out.format == "json") {
                emit(energy_out, hopfion::to_json(report).dump(2) + "\n");
            } else {
                emit(energy_out,
                     key_value_csv({{"closed_form", hopfion::format_double(report.closed_form)},
                                    {"quadrature", hopfion::format_double(report.quadrature)},
                                    {"ratio", hopfion::format_double(report.ratio)},
                                    {"abs_error_estimate",
                                     hopfion::format_double(report.abs_error_estimate)}}));
            }
            return kExitOk;
        }

        if (hopf->parsed()) {
            const hopfion::SolitonConfig cfg = make_config(hopf_config);
            const auto [n_eta, n_xi] = parse_grid(hopf_grid_text);
            const hopfion::HopfReport report =
                hopfion::hopf_report(cfg, hopfion::HopfGrid{n_eta, n_xi});
            std::optional<double> q3d;
            if (check_3d) {
                if (box_cells > 512)
                    throw std::invalid_argument("--cells is capped at 512");
                q3d = hopfion::hopf_index_cartesian(cfg, box_half * cfg.scale.a, box_cells);
            }
            json j = hopfion::to_json(report);
            if (q3d) j["q_cartesian"] = *q3d;
            if (hopf_out.format == "json") {
                emit(hopf_out, j.dump(2) + "\n");
            } else {
                std::vector<std::pair<std::string, std::string>> rows_kv = {
                    {"q_numeric", hopfion::format_double(report.q_numeric)},
                    {"q_numeric_error", hopfion::format_double(report.q_numeric_error)},
                    {"q_boundary", hopfion::format_double(report.q_boundary)},
                    {"per_soliton", join(report.per_soliton, ";")}};
                if (q3d) rows_kv.emplace_back("q_cartesian", hopfion::format_double(*q3d));
                emit(hopf_out, key_value_csv(rows_kv));
            }
            const double consistency =
                std::abs(report.q_numeric - hopfion::kOrientationSign * report.q_boundary);
            const double allowance = std::max(0.02 * std::abs(report.q_boundary), 0.02);
            if (consistency > allowance)
                return error_json(kExitTolerance,
                                  "numeric and boundary charges disagree beyond tolerance");
            return kExitOk;
        }

        if (verify->parsed()) {
            const hopfion::SolitonConfig cfg = make_config(verify_config);
            const hopfion::BoundaryCheckResult boundary =
                hopfion::boundary_check(cfg, verify_eta_max);
            json j{{"boundary", hopfion::to_json(boundary)}};
            bool ok = boundary.pass;
            std::vector<std::pair<std::string, std::string>> rows_kv = {
                {"boundary_pass", boundary.pass ? "true" : "false"}};
            if (!cfg.is_vacuum()) {
                // the residual and first-integral checks degenerate on the
                // vacuum (f = 0 identically), so only the asymptotics are
                // reported there
                const hopfion::ResidualReport residual =
                    hopfion::residual_scan(cfg, residual_points, 1e-3, 1.0, verify_eta_max);
                const hopfion::FirstIntegralReport first =
                    hopfion::first_integral(cfg, verify_samples, verify_eta_max);
                j["residual"] = hopfion::to_json(residual);
                j["first_integral"] = hopfion::to_json(first);
                ok = ok && residual.max_abs_residual < 1e-7 && first.constant;
                rows_kv.insert(rows_kv.begin(),
                               {"max_abs_residual",
                                hopfion::format_double(residual.max_abs_residual)});
                rows_kv.emplace_back("k1", hopfion::format_double(first.k1));
                rows_kv.emplace_back("k1_stddev", hopfion::format_double(first.k1_stddev));
                rows_kv.emplace_back("k2", hopfion::format_double(first.k2));
            }
            if (verify_out.format == "json") {
                emit(verify_out, j.dump(2) + "\n");
            } else {
                emit(verify_out, key_value_csv(rows_kv));
            }
            if (!ok)
                return error_json(kExitTolerance, "solution verification failed tolerance");
            return kExitOk;
        }

        if (field->parsed()) {
            const hopfion::SolitonConfig cfg = make_config(field_config);
            if (field_cells > field_max_cells)
                throw std::invalid_argument("grid too large: --cells exceeds --max-cells");
            if (field_cells < 2) throw std::invalid_argument("--cells must be at least 2");
            const hopfion::BoxGrid box{field_half * cfg.scale.a, field_cells};
            const auto samples = hopfion::sample_box(box, cfg, field_eta_max);
            std::ostringstream text;
            if (field_out.format == "vtk") {
                std::ostringstream title;
                title << "hopfion field m=" << cfg.m << " n=" << cfg.n << " "
                      << cfg.family_name() << " index=" << cfg.index;
                hopfion::write_vtk_structured_points(text, box, samples, title.str());
            } else {
                hopfion::write_field_csv(text, box, samples);
            }
            emit(field_out, text.str());
            return kExitOk;
        }

        if (figures->parsed()) {
            const int r = fig_rows;
            const std::string base = out_dir + "/";
            std::ostringstream n3_charged, density_charged, n3_neutral, density_neutral;
            hopfion::write_curve_family_csv(
                n3_charged, hopfion::make_n3_family(fig_m, fig_n, hopfion::Family::Charged,
                                                    r, fig_eta_max));
            hopfion::write_curve_family_csv(
                density_charged, hopfion::make_energy_density_family(
                                     fig_m, fig_n, hopfion::Family::Charged, r, fig_eta_max));
            hopfion::write_curve_family_csv(
                n3_neutral, hopfion::make_n3_family(fig_m, fig_n, hopfion::Family::Neutral,
                                                    r, fig_eta_max));
            hopfion::write_curve_family_csv(
                density_neutral, hopfion::make_energy_density_family(
                                     fig_m, fig_n, hopfion::Family::Neutral, r, fig_eta_max));
            write_file(base + "n3_charged.csv", n3_charged.str());
            write_file(base + "energy_density_charged.csv", density_charged.str());
            write_file(base + "n3_neutral.csv", n3_neutral.str());
            write_file(base + "energy_density_neutral.csv", density_neutral.str());
            return kExitOk;
        }
    } catch (const std::ios_base::failure& io) {
        return error_json(kExitIo, io.what());
    } catch (const std::invalid_argument& bad) {
        return error_json(kExitUsage, bad.what());
    } catch (const std::domain_error& bad) {
        return error_json(kExitUsage, bad.what());
    } catch (const std::exception& any) {
        return error_json(kExitTolerance, any.what());
    }
    return kExitUsage;
}
