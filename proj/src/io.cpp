#include "parajc/io.hpp"

#include <bit>
#include <cstdio>
#include <fstream>

namespace parajc {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = {}) {
    std::ofstream out(path, mode);
    if (!out) throw ConfigError("cannot open output file " + path.string());
    return out;
}

void write_doubles_le(std::ofstream& out, const double* data, std::size_t count) {
    static_assert(std::endian::native == std::endian::little,
                  "binary sidecars assume a little-endian host");
    out.write(reinterpret_cast<const char*>(data),
              static_cast<std::streamsize>(count * sizeof(double)));
}

} // namespace

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file for digest: " + path.string());
    std::uint64_t hash = 1469598103934665603ull;
    char chunk[4096];
    while (in.read(chunk, sizeof chunk) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(chunk[i]);
            hash *= 1099511628211ull;
        }
        if (!in) break;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    open_out(path) << content;
}

void write_spectrum_csv(const std::filesystem::path& path, const SpectrumSweep& sweep) {
    auto out = open_out(path);
    out << "delta";
    for (int k = 0; k < sweep.branches.cols(); ++k) out << ",eig_" << k;
    out << "\n";
    for (std::size_t i = 0; i < sweep.delta_grid.size(); ++i) {
        out << format_g17(sweep.delta_grid[i]);
        for (int k = 0; k < sweep.branches.cols(); ++k)
            out << "," << format_g17(sweep.branches(static_cast<Eigen::Index>(i), k));
        out << "\n";
    }
}

nlohmann::json crossing_to_json(const CrossingRecord& record) {
    return {{"label", record.label},
            {"delta_star", record.delta_star},
            {"gap", record.gap},
            {"branches", {record.lower_branch, record.upper_branch}}};
}

void write_timeseries_csv(const std::filesystem::path& path, const TimeSeries& series) {
    auto out = open_out(path);
    out << "t,mean_n,P_e";
    for (int n = 0; n <= series.n_max; ++n) out << ",p" << n;
    out << "\n";
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        out << format_g17(series.times[i]) << "," << format_g17(series.mean_n[i]) << ","
            << format_g17(series.p_e[i]);
        for (int n = 0; n <= series.n_max; ++n)
            out << "," << format_g17(series.photon_populations(static_cast<Eigen::Index>(i), n));
        out << "\n";
    }
}

void write_snapshots(const std::filesystem::path& bin_path,
                     const std::filesystem::path& json_path, const TimeSeries& series) {
    auto bin = open_out(bin_path, std::ios::binary);
    bool pure = true;
    int dim = 0;
    for (const auto& snap : series.snapshots) {
        pure = snap.is_pure();
        dim = snap.dim();
        std::vector<double> interleaved;
        if (snap.is_pure()) {
            interleaved.reserve(2 * static_cast<std::size_t>(dim));
            for (int k = 0; k < dim; ++k) {
                interleaved.push_back(snap.vec(k).real());
                interleaved.push_back(snap.vec(k).imag());
            }
        } else {
            interleaved.reserve(2 * static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    interleaved.push_back(snap.rho(r, c).real());
                    interleaved.push_back(snap.rho(r, c).imag());
                }
        }
        write_doubles_le(bin, interleaved.data(), interleaved.size());
    }
    nlohmann::json desc = {{"format", "f64-le interleaved re/im, row-major"},
                           {"kind", pure ? "state-vector" : "density-matrix"},
                           {"dim", dim},
                           {"count", series.snapshots.size()},
                           {"times", series.snapshot_times}};
    write_text_file(json_path, desc.dump(2) + "\n");
}

void write_density_csv(const std::filesystem::path& path, const Matrix& rho) {
    auto out = open_out(path);
    out << "row";
    for (int c = 0; c < rho.cols(); ++c) out << ",re_" << c << ",im_" << c;
    out << "\n";
    for (int r = 0; r < rho.rows(); ++r) {
        out << r;
        for (int c = 0; c < rho.cols(); ++c)
            out << "," << format_g17(rho(r, c).real()) << "," << format_g17(rho(r, c).imag());
        out << "\n";
    }
}

void write_distribution_csv(const std::filesystem::path& path,
                            const Eigen::VectorXd& populations) {
    auto out = open_out(path);
    out << "n,p\n";
    for (int n = 0; n < populations.size(); ++n)
        out << n << "," << format_g17(populations(n)) << "\n";
}

void write_wigner_csv(const std::filesystem::path& path, const WignerMap& map) {
    auto out = open_out(path);
    out << "re_alpha,im_alpha,W\n";
    const std::vector<double> ax = map.grid.axis();
    for (int j = 0; j < map.values.rows(); ++j)
        for (int i = 0; i < map.values.cols(); ++i)
            out << format_g17(ax[static_cast<std::size_t>(i)]) << ","
                << format_g17(ax[static_cast<std::size_t>(j)]) << ","
                << format_g17(map.values(j, i)) << "\n";
}

void write_wigner_binary(const std::filesystem::path& bin_path,
                         const std::filesystem::path& json_path, const WignerMap& map) {
    auto bin = open_out(bin_path, std::ios::binary);
    for (int j = 0; j < map.values.rows(); ++j) {
        const Eigen::VectorXd row = map.values.row(j);
        write_doubles_le(bin, row.data(), static_cast<std::size_t>(row.size()));
    }
    nlohmann::json desc = {{"format", "f64-le row-major"},
                           {"rows", map.values.rows()},
                           {"cols", map.values.cols()},
                           {"extent", map.grid.extent},
                           {"step", map.grid.step},
                           {"source", map.source},
                           {"method", map.method},
                           {"grid_integral", map.grid_integral}};
    write_text_file(json_path, desc.dump(2) + "\n");
}

nlohmann::json beat_report_to_json(const BeatReport& report) {
    nlohmann::json j = {{"fast_period", report.fast_period},
                        {"modulation_depth", report.modulation_depth},
                        {"contrast", report.contrast},
                        {"quiet_times", report.quiet_times},
                        {"quiet_pe", report.quiet_pe}};
    if (report.slow_period)
        j["slow_period"] = *report.slow_period;
    else
        j["slow_period"] = nullptr;
    return j;
}

nlohmann::json negativity_to_json(const NegativityReport& report) {
    nlohmann::json regions = nlohmann::json::array();
    for (const auto& r : report.regions)
        regions.push_back({{"min_value", r.min_value},
                           {"re", r.re},
                           {"im", r.im},
                           {"cells", r.cells}});
    return {{"min_value", report.min_value},
            {"min_re", report.min_re},
            {"min_im", report.min_im},
            {"negative_mass", report.negative_mass},
            {"regions", regions}};
}

nlohmann::json two_qubit_to_json(const EffectiveTwoQubit& rho_prime) {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json re_row = nlohmann::json::array(), im_row = nlohmann::json::array();
        for (int c = 0; c < 4; ++c) {
            re_row.push_back(rho_prime.rho(r, c).real());
            im_row.push_back(rho_prime.rho(r, c).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    return {{"basis", {"g,even", "g,odd", "e,even", "e,odd"}},
            {"re", re},
            {"im", im},
            {"leakage", rho_prime.leakage}};
}

} // namespace parajc
