#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parajc/analysis.hpp"
#include "parajc/config.hpp"
#include "parajc/model.hpp"

namespace parajc {

struct RunManifest {
    std::string scenario;
    std::string config_echo;                                    // canonical config text
    std::vector<std::pair<std::string, std::string>> outputs;   // (file name, digest)
    std::string library_version;
    double duration_seconds = 0.0;
    nlohmann::json resolved;                                    // resolved run quantities

    nlohmann::json to_json() const;
};

/// Detuning used by a run: the configured value, or the refined center of the
/// requested avoided crossing (analytic crossing point when G = 0).
struct ResolvedDetuning {
    double delta = 0.0;
    std::optional<CrossingRecord> crossing;
};

ResolvedDetuning resolve_detuning(const ScenarioConfig& config);
ResolvedDetuning resolve_detuning(const ScenarioConfig& config, const SystemParams& params);

/// Runs one scenario, writes its dataset files plus manifest.json into out_dir.
RunManifest run_scenario(const ScenarioConfig& config, const std::filesystem::path& out_dir);

/// Evolution, beat extraction and quiet-spot sampling shared by the
/// quietstate, wigner and fidelity-scan scenarios.
struct QuietStateResult {
    SystemParams params;
    ResolvedDetuning detuning;
    BeatReport beats;
    TargetStates targets;
    QuietSample sample;
    QuantumState reduced;       // photon density matrix at the sampled instant
};

QuietStateResult compute_quiet_state(const ScenarioConfig& config);

} // namespace parajc
