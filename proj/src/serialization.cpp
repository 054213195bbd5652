#include "hopfion/serialization.hpp"

namespace hopfion {

using nlohmann::json;

json to_json(const SolitonConfig& cfg) {
    return json{{"m", cfg.m},
                {"n", cfg.n},
                {"family", cfg.family_name()},
                {"index", cfg.index},
                {"a", cfg.scale.a}};
}

json to_json(const EnergyReport& report) {
    return json{{"closed_form", report.closed_form},
                {"quadrature", report.quadrature},
                {"ratio", report.ratio},
                {"abs_error_estimate", report.abs_error_estimate},
                {"config", to_json(report.config)}};
}

json to_json(const HopfReport& report) {
    return json{{"q_numeric", report.q_numeric},
                {"q_numeric_error", report.q_numeric_error},
                {"q_boundary", report.q_boundary},
                {"per_soliton", report.per_soliton},
                {"grid", json{{"n_eta", report.grid.n_eta}, {"n_xi", report.grid.n_xi}}},
                {"config", to_json(report.config)}};
}

json to_json(const FirstIntegralReport& report) {
    return json{{"k1", report.k1},
                {"k1_stddev", report.k1_stddev},
                {"k2", report.k2},
                {"k2_stddev", report.k2_stddev},
                {"samples", report.samples},
                {"expected_k1", report.expected_k1},
                {"expected_k2", report.expected_k2},
                {"constant", report.constant}};
}

json to_json(const ResidualReport& report) {
    json windows = json::array();
    for (const auto& [lo, hi] : report.excluded_windows)
        windows.push_back(json::array({lo, hi}));
    return json{{"max_abs_residual", report.max_abs_residual},
                {"eta_grid", report.eta_grid},
                {"excluded_windows", windows}};
}

json to_json(const BoundaryCheckResult& result) {
    return json{{"n3_origin", result.n3_origin},
                {"n3_far", result.n3_far},
                {"expected_far", result.expected_far},
                {"pass", result.pass}};
}

}  // namespace hopfion
