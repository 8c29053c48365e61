#include "parajc/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "parajc/io.hpp"
#include "parajc/version.hpp"
#include "parajc/wigner.hpp"

namespace parajc {

namespace {

namespace fs = std::filesystem;

SystemParams params_from(const ScenarioConfig& c) {
    SystemParams p;
    p.g = c.g;
    p.G = c.G;
    p.kappa = c.kappa;
    p.gamma = c.gamma;
    return p;
}

RampKind ramp_kind_from(const std::string& kind) {
    if (kind == "constant") return RampKind::constant;
    if (kind == "linear") return RampKind::linear;
    return RampKind::tanh_on;
}

/// Output collector: writes files into out_dir and accumulates digests.
class Outputs {
public:
    explicit Outputs(fs::path dir) : dir_(std::move(dir)) {
        fs::create_directories(dir_);
    }

    fs::path path(const std::string& name) const { return dir_ / name; }

    template <typename WriteFn>
    void add(const std::string& name, WriteFn&& write) {
        write(path(name));
        files_.emplace_back(name, file_digest(path(name)));
    }

    void add_json(const std::string& name, const nlohmann::json& j) {
        add(name, [&](const fs::path& p) { write_text_file(p, j.dump(2) + "\n"); });
    }

    std::vector<std::pair<std::string, std::string>> files() const { return files_; }

private:
    fs::path dir_;
    std::vector<std::pair<std::string, std::string>> files_;
};

nlohmann::json crossing_json_or_null(const std::optional<CrossingRecord>& c) {
    return c ? crossing_to_json(*c) : nlohmann::json(nullptr);
}

TimeGrid grid_from(const ScenarioConfig& c) {
    TimeGrid grid;
    grid.t_end = c.t_end;
    grid.dt_out = c.dt_out;
    grid.dt_int = c.dt_int;
    grid.snapshot_stride = c.snapshot_stride;
    return grid;
}

void run_spectrum(const ScenarioConfig& c, Outputs& out, nlohmann::json& resolved) {
    const CompositeSpace space{FockSpace{c.n_max}};
    const SystemParams templ = params_from(c);
    std::vector<double> grid(static_cast<std::size_t>(c.delta_points));
    const double step = (c.delta_max - c.delta_min) / (c.delta_points - 1);
    for (int i = 0; i < c.delta_points; ++i) grid[static_cast<std::size_t>(i)] = c.delta_min + i * step;

    SpectrumSweep sweep = sweep_spectrum(templ, grid, space);
    sweep.crossings = find_avoided_crossings(sweep);

    out.add("spectrum.csv", [&](const fs::path& p) { write_spectrum_csv(p, sweep); });

    nlohmann::json crossings = nlohmann::json::array();
    for (const auto& rec : sweep.crossings) crossings.push_back(crossing_to_json(rec));
    nlohmann::json predictions = nlohmann::json::array();
    for (const auto& pred : predict_crossings(templ)) {
        predictions.push_back({{"pair", {pred.m, pred.n}},
                               {"label", pred.label},
                               {"delta_star", pred.delta_star},
                               {"first_order_gap", pred.gap}});
    }
    out.add_json("crossings.json", {{"crossings", crossings}, {"predictions", predictions}});
    resolved["n_crossings"] = sweep.crossings.size();
}

void run_beats(const ScenarioConfig& c, Outputs& out, nlohmann::json& resolved) {
    const CompositeSpace space{FockSpace{c.n_max}};
    SystemParams p = params_from(c);
    const ResolvedDetuning det = resolve_detuning(c, p);
    p.delta = det.delta;

    const QuantumState psi0 = basis_state(space, qubit_e, 0);
    const TimeSeries series = evolve_schrodinger(hamiltonian(p, space), psi0, grid_from(c));
    const BeatReport beats = extract_beats(series);

    out.add("timeseries.csv", [&](const fs::path& path) { write_timeseries_csv(path, series); });
    if (c.snapshot_stride > 0) {
        out.add("snapshots.bin", [&](const fs::path& path) {
            write_snapshots(path, out.path("snapshots.json"), series);
        });
        out.add("snapshots.json", [](const fs::path&) {});   // written above; record digest
    }
    out.add_json("beats.json", beat_report_to_json(beats));
    resolved["delta"] = det.delta;
    resolved["crossing"] = crossing_json_or_null(det.crossing);
}

void run_quietstate(const ScenarioConfig& c, Outputs& out, nlohmann::json& resolved) {
    const QuietStateResult q = compute_quiet_state(c);

    out.add("reduced_rho.csv",
            [&](const fs::path& p) { write_density_csv(p, q.reduced.density()); });

    const QuantumState cond_e = conditional_photon_state(q.sample.state, qubit_e);
    const QuantumState cond_g = conditional_photon_state(q.sample.state, qubit_g);
    const auto distribution = [](const QuantumState& s) {
        return Eigen::VectorXd(s.density().diagonal().real());
    };
    out.add("cond_e.csv",
            [&](const fs::path& p) { write_distribution_csv(p, distribution(cond_e)); });
    out.add("cond_g.csv",
            [&](const fs::path& p) { write_distribution_csv(p, distribution(cond_g)); });

    const EffectiveTwoQubit rho_prime = effective_two_qubit(q.sample.state, q.targets);
    const auto [ov_even, ov_odd] = target_overlaps(q.reduced, q.targets);
    nlohmann::json j = two_qubit_to_json(rho_prime);
    j["fidelity"] = subspace_fidelity(q.reduced, q.targets);
    j["even_overlap"] = ov_even;
    j["odd_overlap"] = ov_odd;
    j["concurrence"] = concurrence(rho_prime);
    j["phi"] = std::arg(rho_prime.rho(1, 2));   // <g,O| rho' |e,E>
    j["sample_time"] = q.sample.aligned_time;
    j["env_time"] = q.sample.env_time;
    j["delta"] = q.detuning.delta;
    out.add_json("rho_prime.json", j);

    resolved["delta"] = q.detuning.delta;
    resolved["crossing"] = crossing_json_or_null(q.detuning.crossing);
    resolved["sample_time"] = q.sample.aligned_time;
    resolved["beats"] = beat_report_to_json(q.beats);
}

void run_wigner(const ScenarioConfig& c, Outputs& out, nlohmann::json& resolved) {
    const QuietStateResult q = compute_quiet_state(c);
    const PhaseSpaceGrid grid{c.extent, c.step};
    const FockSpace fock{c.n_max};

    const QuantumState cond_e = conditional_photon_state(q.sample.state, qubit_e);
    const QuantumState cond_g = conditional_photon_state(q.sample.state, qubit_g);

    const WignerMap map_uncond = wigner_numeric(q.reduced, grid);
    const WignerMap map_cond_e = wigner_numeric(cond_e, grid);
    const WignerMap map_cond_g = wigner_numeric(cond_g, grid);
    const WignerMap map_even = wigner_even_analytic(grid);
    const WignerMap map_odd = wigner_odd_analytic(grid);
    const WignerMap map_exact_even =
        wigner_numeric(pure_state(Space::fock, q.targets.even), grid);
    const WignerMap map_exact_odd = wigner_numeric(pure_state(Space::fock, q.targets.odd), grid);
    const WignerMap map_vacuum = wigner_numeric(fock_basis_state(fock, 0), grid);

    const auto emit = [&](const std::string& stem, const WignerMap& map) {
        out.add(stem + ".csv", [&](const fs::path& p) { write_wigner_csv(p, map); });
        if (c.binary_maps)
            out.add(stem + ".bin", [&](const fs::path& p) {
                write_wigner_binary(p, out.path(stem + ".meta.json"), map);
            });
    };
    emit("wigner_uncond", map_uncond);
    emit("wigner_cond_e", map_cond_e);
    emit("wigner_cond_g", map_cond_g);
    emit("wigner_even_analytic", map_even);
    emit("wigner_odd_analytic", map_odd);

    const double disk = std::min(3.0, c.extent);
    nlohmann::json report;
    report["sup_diff_cond_e_vs_even"] = map_cond_e.max_abs_difference(map_even);
    report["sup_diff_cond_g_vs_odd"] = map_cond_g.max_abs_difference(map_odd);
    report["sup_diff_exact_even_disk"] = map_exact_even.max_abs_difference_in_disk(map_even, disk);
    report["sup_diff_exact_odd_disk"] = map_exact_odd.max_abs_difference_in_disk(map_odd, disk);
    report["w0_uncond"] = map_uncond.at_origin();
    report["w0_cond_e"] = map_cond_e.at_origin();
    report["w0_cond_g"] = map_cond_g.at_origin();
    report["w0_vacuum"] = map_vacuum.at_origin();
    report["negativity_uncond"] = negativity_to_json(negativity_report(map_uncond));
    report["negativity_cond_e"] = negativity_to_json(negativity_report(map_cond_e));
    report["negativity_cond_g"] = negativity_to_json(negativity_report(map_cond_g));
    report["negativity_even_analytic"] = negativity_to_json(negativity_report(map_even));
    out.add_json("wigner_report.json", report);

    resolved["delta"] = q.detuning.delta;
    resolved["sample_time"] = q.sample.aligned_time;
}

void run_fidelity_scan(const ScenarioConfig& c, Outputs& out, nlohmann::json& resolved) {
    nlohmann::json rows = nlohmann::json::array();
    std::string csv = "g_over_G,g,delta,sample_time,fidelity,concurrence,leakage\n";

    for (std::size_t i = 0; i < c.ratios.size(); ++i) {
        const double ratio = c.ratios[i];
        ScenarioConfig cr = c;
        cr.g = ratio * c.G;       // G is held fixed across the scan
        // per-run grid in absolute time: cover the beat, resolve the fast scale
        const double t2 = 2.0 * std::numbers::pi / ((std::sqrt(6.0) - std::sqrt(2.0)) * c.G);
        cr.t_end = 2.5 * t2;
        cr.dt_out = std::numbers::pi / (100.0 * cr.g);
        cr.dt_int = cr.dt_out;

        const QuietStateResult q = compute_quiet_state(cr);
        const EffectiveTwoQubit rho_prime = effective_two_qubit(q.sample.state, q.targets);
        const double fid = subspace_fidelity(q.reduced, q.targets);
        const double conc = concurrence(rho_prime);

        csv += format_g17(ratio) + "," + format_g17(cr.g) + "," + format_g17(q.detuning.delta) +
               "," + format_g17(q.sample.aligned_time) + "," + format_g17(fid) + "," +
               format_g17(conc) + "," + format_g17(rho_prime.leakage) + "\n";
        rows.push_back({{"g_over_G", ratio},
                        {"fidelity", fid},
                        {"concurrence", conc},
                        {"leakage", rho_prime.leakage}});

        if (i == 0 || i + 1 == c.ratios.size()) {
            nlohmann::json j = two_qubit_to_json(rho_prime);
            j["g_over_G"] = ratio;
            char name[64];
            std::snprintf(name, sizeof name, "rho_prime_gG%g.json", ratio);
            out.add_json(name, j);
        }
    }
    out.add("scan.csv", [&](const fs::path& p) { write_text_file(p, csv); });
    resolved["rows"] = rows;
}

void run_ramp_compare(const ScenarioConfig& c, Outputs& out, nlohmann::json& resolved) {
    const CompositeSpace space{FockSpace{c.n_max}};
    SystemParams p = params_from(c);
    const ResolvedDetuning det = resolve_detuning(c, p);
    p.delta = det.delta;
    const QuantumState psi0 = basis_state(space, qubit_e, 0);

    const auto run_one = [&](const std::string& kind, double tau, const std::string& tag) {
        RampProfile ramp;
        ramp.kind = ramp_kind_from(kind);
        ramp.G_final = c.G;
        ramp.tau_r = tau / c.g;   // config tau is in units of 1/g
        const TimeSeries series = evolve_ramped(p, ramp, psi0, grid_from(c), space);
        const BeatReport beats = extract_beats(series);
        out.add("timeseries_" + tag + ".csv",
                [&](const fs::path& path) { write_timeseries_csv(path, series); });
        out.add_json("beats_" + tag + ".json", beat_report_to_json(beats));
        return beats;
    };

    const BeatReport beats_a = run_one(c.ramp_a_kind, c.ramp_a_tau, "a");
    const BeatReport beats_b = run_one(c.ramp_b_kind, c.ramp_b_tau, "b");

    out.add_json("compare.json", {{"contrast_a", beats_a.contrast},
                                  {"contrast_b", beats_b.contrast},
                                  {"b_improves_on_a", beats_b.contrast >= beats_a.contrast}});
    resolved["delta"] = det.delta;
    resolved["crossing"] = crossing_json_or_null(det.crossing);
}

} // namespace

nlohmann::json RunManifest::to_json() const {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& [name, digest] : outputs)
        files.push_back({{"file", name}, {"digest", digest}});
    return {{"scenario", scenario},
            {"config", config_echo},
            {"outputs", files},
            {"library_version", library_version},
            {"duration_seconds", duration_seconds},
            {"resolved", resolved}};
}

ResolvedDetuning resolve_detuning(const ScenarioConfig& config) {
    return resolve_detuning(config, SystemParams{config.delta, config.g, config.G, config.kappa,
                                                 config.gamma});
}

ResolvedDetuning resolve_detuning(const ScenarioConfig& config, const SystemParams& params) {
    if (config.delta_mode == "fixed") return {config.delta, std::nullopt};

    const int pair_n = (config.delta_mode == "crossing-i") ? 2 : 4;
    CrossingPrediction pred;
    for (const auto& p : predict_crossings(params))
        if (p.m == 0 && p.n == pair_n) pred = p;

    const CompositeSpace space{FockSpace{config.n_max}};
    const std::optional<CrossingRecord> rec = locate_crossing(params, space, pred);
    if (rec) return {rec->delta_star, rec};
    return {pred.delta_star, std::nullopt};   // G = 0: the analytic crossing point
}

QuietStateResult compute_quiet_state(const ScenarioConfig& config) {
    QuietStateResult result;
    const CompositeSpace space{FockSpace{config.n_max}};
    result.params = params_from(config);
    result.detuning = resolve_detuning(config, result.params);
    result.params.delta = result.detuning.delta;

    const QuantumState psi0 = basis_state(space, qubit_e, 0);
    const Operator h = hamiltonian(result.params, space);
    const SchrodingerPropagator prop(h);
    const TimeSeries series = evolve_schrodinger(h, psi0, grid_from(config));
    result.beats = extract_beats(series);

    double base_time;
    if (config.sample_mode == "fixed") {
        base_time = config.sample_time;
    } else {
        if (result.beats.quiet_times.empty())
            throw NumericalGateError("no quiet spot detected for aligned sampling");
        base_time = result.beats.quiet_times.front();
    }

    const bool crossing_ii = (config.delta_mode == "crossing-ii");
    if (crossing_ii) {
        const Vector at_base = prop.state_at(psi0.vec, base_time);
        result.targets =
            crossing_ii_targets(space.fock, pure_state(Space::composite, at_base));
    } else {
        result.targets = crossing_i_targets(space.fock);
    }

    if (config.sample_mode == "fixed") {
        result.sample.env_time = base_time;
        result.sample.aligned_time = base_time;
        result.sample.state = pure_state(Space::composite, prop.state_at(psi0.vec, base_time));
    } else {
        result.sample =
            quiet_sample(prop, psi0, base_time, result.beats.fast_period, result.targets);
    }
    result.reduced = reduced_photon_state(result.sample.state);
    return result;
}

RunManifest run_scenario(const ScenarioConfig& config, const std::filesystem::path& out_dir) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();

    Outputs out(out_dir);
    nlohmann::json resolved;
    if (config.id == "spectrum") run_spectrum(config, out, resolved);
    else if (config.id == "beats") run_beats(config, out, resolved);
    else if (config.id == "quietstate") run_quietstate(config, out, resolved);
    else if (config.id == "wigner") run_wigner(config, out, resolved);
    else if (config.id == "fidelity-scan") run_fidelity_scan(config, out, resolved);
    else if (config.id == "ramp-compare") run_ramp_compare(config, out, resolved);
    else throw ConfigError("unknown scenario id '" + config.id + "'");

    RunManifest manifest;
    manifest.scenario = config.id;
    manifest.config_echo = emit_config(config);
    manifest.outputs = out.files();
    manifest.library_version = library_version;
    manifest.resolved = std::move(resolved);
    manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_text_file(out_dir / "manifest.json", manifest.to_json().dump(2) + "\n");
    return manifest;
}

} // namespace parajc
