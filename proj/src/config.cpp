#include "parajc/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "parajc/io.hpp"

namespace parajc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& section, const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("[" + section + "] " + key + ": cannot parse number '" + v + "'");
    return x;
}

int parse_int(const std::string& section, const std::string& key, const std::string& v) {
    char* end = nullptr;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("[" + section + "] " + key + ": cannot parse integer '" + v + "'");
    return static_cast<int>(x);
}

bool parse_bool(const std::string& section, const std::string& key, const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ConfigError("[" + section + "] " + key + ": expected true or false, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& section, const std::string& key,
                               const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(section, key, trim(item)));
    if (out.empty()) throw ConfigError("[" + section + "] " + key + ": empty list");
    return out;
}

void check_choice(const std::string& section, const std::string& key, const std::string& v,
                  std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (v == a) return;
    throw ConfigError("[" + section + "] " + key + ": invalid value '" + v + "'");
}

using Setter = std::function<void(ScenarioConfig&, const std::string&)>;

/// Schema: section -> key -> setter. Declared once; drives both parsing and
/// unknown-key rejection.
const std::map<std::string, std::map<std::string, Setter>>& schema() {
    static const std::map<std::string, std::map<std::string, Setter>> s = {
        {"scenario",
         {{"id", [](ScenarioConfig& c, const std::string& v) {
               if (std::find(scenario_ids.begin(), scenario_ids.end(), v) == scenario_ids.end())
                   throw ConfigError("unknown scenario id '" + v + "'");
               c.id = v;
           }}}},
        {"system",
         {{"delta_mode", [](ScenarioConfig& c, const std::string& v) {
               check_choice("system", "delta_mode", v, {"fixed", "crossing-i", "crossing-ii"});
               c.delta_mode = v;
           }},
          {"delta", [](ScenarioConfig& c, const std::string& v) { c.delta = parse_double("system", "delta", v); }},
          {"g", [](ScenarioConfig& c, const std::string& v) { c.g = parse_double("system", "g", v); }},
          {"G", [](ScenarioConfig& c, const std::string& v) { c.G = parse_double("system", "G", v); }},
          {"kappa", [](ScenarioConfig& c, const std::string& v) { c.kappa = parse_double("system", "kappa", v); }},
          {"gamma", [](ScenarioConfig& c, const std::string& v) { c.gamma = parse_double("system", "gamma", v); }}}},
        {"fock",
         {{"n_max", [](ScenarioConfig& c, const std::string& v) { c.n_max = parse_int("fock", "n_max", v); }}}},
        {"time",
         {{"t_end", [](ScenarioConfig& c, const std::string& v) { c.t_end = parse_double("time", "t_end", v); }},
          {"dt_out", [](ScenarioConfig& c, const std::string& v) { c.dt_out = parse_double("time", "dt_out", v); }},
          {"dt_int", [](ScenarioConfig& c, const std::string& v) { c.dt_int = parse_double("time", "dt_int", v); }},
          {"snapshot_stride", [](ScenarioConfig& c, const std::string& v) {
               c.snapshot_stride = parse_int("time", "snapshot_stride", v);
           }}}},
        {"spectrum",
         {{"delta_min", [](ScenarioConfig& c, const std::string& v) { c.delta_min = parse_double("spectrum", "delta_min", v); }},
          {"delta_max", [](ScenarioConfig& c, const std::string& v) { c.delta_max = parse_double("spectrum", "delta_max", v); }},
          {"delta_points", [](ScenarioConfig& c, const std::string& v) {
               c.delta_points = parse_int("spectrum", "delta_points", v);
           }}}},
        {"phase_space",
         {{"extent", [](ScenarioConfig& c, const std::string& v) { c.extent = parse_double("phase_space", "extent", v); }},
          {"step", [](ScenarioConfig& c, const std::string& v) { c.step = parse_double("phase_space", "step", v); }},
          {"binary_maps", [](ScenarioConfig& c, const std::string& v) {
               c.binary_maps = parse_bool("phase_space", "binary_maps", v);
           }}}},
        {"sample",
         {{"time_mode", [](ScenarioConfig& c, const std::string& v) {
               check_choice("sample", "time_mode", v, {"aligned", "fixed"});
               c.sample_mode = v;
           }},
          {"time", [](ScenarioConfig& c, const std::string& v) { c.sample_time = parse_double("sample", "time", v); }}}},
        {"ramp_a",
         {{"kind", [](ScenarioConfig& c, const std::string& v) {
               check_choice("ramp_a", "kind", v, {"constant", "linear", "tanh"});
               c.ramp_a_kind = v;
           }},
          {"tau_r", [](ScenarioConfig& c, const std::string& v) { c.ramp_a_tau = parse_double("ramp_a", "tau_r", v); }}}},
        {"ramp_b",
         {{"kind", [](ScenarioConfig& c, const std::string& v) {
               check_choice("ramp_b", "kind", v, {"constant", "linear", "tanh"});
               c.ramp_b_kind = v;
           }},
          {"tau_r", [](ScenarioConfig& c, const std::string& v) { c.ramp_b_tau = parse_double("ramp_b", "tau_r", v); }}}},
        {"scan",
         {{"ratios", [](ScenarioConfig& c, const std::string& v) { c.ratios = parse_list("scan", "ratios", v); }}}},
    };
    return s;
}

} // namespace

void ScenarioConfig::validate() const {
    if (std::find(scenario_ids.begin(), scenario_ids.end(), id) == scenario_ids.end())
        throw ConfigError("unknown scenario id '" + id + "'");
    if (!(g > 0.0)) throw ConfigError("[system] g must be positive");
    if (G < 0.0) throw ConfigError("[system] G must be >= 0");
    if (kappa < 0.0 || gamma < 0.0) throw ConfigError("[system] decay rates must be >= 0");
    if (n_max < 3) throw ConfigError("[fock] n_max must be at least 3");
    if (!(t_end > 0.0) || !(dt_out > 0.0) || !(dt_int > 0.0))
        throw ConfigError("[time] values must be positive");
    if (dt_int > dt_out) throw ConfigError("[time] dt_int must not exceed dt_out");
    if (snapshot_stride < 0) throw ConfigError("[time] snapshot_stride must be >= 0");
    if (!(delta_max > delta_min)) throw ConfigError("[spectrum] delta_max must exceed delta_min");
    if (delta_points < 3) throw ConfigError("[spectrum] grid needs at least 3 points");
    if (!(extent > 0.0) || !(step > 0.0) || step > extent)
        throw ConfigError("[phase_space] invalid grid");
    if (sample_time < 0.0) throw ConfigError("[sample] time must be >= 0");
    if (ramp_a_tau < 0.0 || ramp_b_tau < 0.0) throw ConfigError("ramp tau_r must be >= 0");
    if (ratios.empty()) throw ConfigError("[scan] ratios must be nonempty");
    for (double r : ratios)
        if (!(r > 0.0)) throw ConfigError("[scan] ratios must be positive");
}

ScenarioConfig default_config(const std::string& scenario_id) {
    ScenarioConfig c;
    if (std::find(scenario_ids.begin(), scenario_ids.end(), scenario_id) == scenario_ids.end())
        throw ConfigError("unknown scenario id '" + scenario_id + "'");
    c.id = scenario_id;
    if (scenario_id == "spectrum") {
        c.n_max = 10;
    } else if (scenario_id == "wigner") {
        c.snapshot_stride = 0;
    }
    return c;
}

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig config;
    std::istringstream in(text);
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (!schema().count(section))
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
        const auto& keys = schema().at(section);
        const auto it = keys.find(key);
        if (it == keys.end())
            throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
        it->second(config, value);
    }
    config.validate();
    return config;
}

std::string emit_config(const ScenarioConfig& c) {
    std::ostringstream out;
    const auto num = [](double v) { return format_g17(v); };
    out << "[scenario]\n";
    out << "id = " << c.id << "\n\n";
    out << "[system]\n";
    out << "delta_mode = " << c.delta_mode << "\n";
    out << "delta = " << num(c.delta) << "\n";
    out << "g = " << num(c.g) << "\n";
    out << "G = " << num(c.G) << "\n";
    out << "kappa = " << num(c.kappa) << "\n";
    out << "gamma = " << num(c.gamma) << "\n\n";
    out << "[fock]\n";
    out << "n_max = " << c.n_max << "\n\n";
    out << "[time]\n";
    out << "t_end = " << num(c.t_end) << "\n";
    out << "dt_out = " << num(c.dt_out) << "\n";
    out << "dt_int = " << num(c.dt_int) << "\n";
    out << "snapshot_stride = " << c.snapshot_stride << "\n\n";
    out << "[spectrum]\n";
    out << "delta_min = " << num(c.delta_min) << "\n";
    out << "delta_max = " << num(c.delta_max) << "\n";
    out << "delta_points = " << c.delta_points << "\n\n";
    out << "[phase_space]\n";
    out << "extent = " << num(c.extent) << "\n";
    out << "step = " << num(c.step) << "\n";
    out << "binary_maps = " << (c.binary_maps ? "true" : "false") << "\n\n";
    out << "[sample]\n";
    out << "time_mode = " << c.sample_mode << "\n";
    out << "time = " << num(c.sample_time) << "\n\n";
    out << "[ramp_a]\n";
    out << "kind = " << c.ramp_a_kind << "\n";
    out << "tau_r = " << num(c.ramp_a_tau) << "\n\n";
    out << "[ramp_b]\n";
    out << "kind = " << c.ramp_b_kind << "\n";
    out << "tau_r = " << num(c.ramp_b_tau) << "\n\n";
    out << "[scan]\n";
    out << "ratios = ";
    for (std::size_t i = 0; i < c.ratios.size(); ++i)
        out << (i ? "," : "") << num(c.ratios[i]);
    out << "\n";
    return out.str();
}

} // namespace parajc
