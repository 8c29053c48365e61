#pragma once

#include <string>
#include <vector>

#include "parajc/errors.hpp"

namespace parajc {

/// Scenario ids understood by the runner.
inline const std::vector<std::string> scenario_ids = {
    "spectrum", "beats", "quietstate", "wigner", "fidelity-scan", "ramp-compare"};

/// One flat configuration covering every scenario. Parsed from a sectioned
/// key = value text; unknown sections or keys are rejected and the canonical
/// emission round-trips exactly.
struct ScenarioConfig {
    std::string id = "beats";

    // [system] — all rates in units of g
    std::string delta_mode = "crossing-i";   // fixed | crossing-i | crossing-ii
    double delta = 1.3660254037844386;       // used when delta_mode = fixed
    double g = 1.0;
    double G = 0.1;
    double kappa = 0.0;
    double gamma = 0.0;

    // [fock]
    int n_max = 10;

    // [time]
    double t_end = 150.0;
    double dt_out = 0.02;
    double dt_int = 0.005;
    int snapshot_stride = 0;

    // [spectrum]
    double delta_min = 0.5;
    double delta_max = 2.0;
    int delta_points = 301;

    // [phase_space]
    double extent = 3.0;
    double step = 0.05;
    bool binary_maps = false;

    // [sample] — quiet-spot sampling policy
    std::string sample_mode = "aligned";     // aligned | fixed
    double sample_time = 31.0;

    // [ramp_a], [ramp_b] — the two profiles compared by ramp-compare
    std::string ramp_a_kind = "constant";    // constant | linear | tanh
    double ramp_a_tau = 0.0;
    std::string ramp_b_kind = "tanh";
    double ramp_b_tau = 20.0;

    // [scan]
    std::vector<double> ratios = {5.0, 10.0, 20.0, 35.0};

    void validate() const;
};

/// Scenario defaults (id-specific tweaks applied on top of the struct defaults).
ScenarioConfig default_config(const std::string& scenario_id);

ScenarioConfig parse_config(const std::string& text);
std::string emit_config(const ScenarioConfig& config);

} // namespace parajc
