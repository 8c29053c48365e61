#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "parajc/analysis.hpp"
#include "parajc/model.hpp"
#include "parajc/wigner.hpp"

namespace parajc {

/// Fixed 17-significant-digit formatting; the one float format used in every
/// CSV so digests are stable.
std::string format_g17(double v);

/// FNV-1a 64-bit digest of a file's bytes, as a hex string.
std::string file_digest(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);

/// CSV: delta, eig_0 ... eig_{dim-1}.
void write_spectrum_csv(const std::filesystem::path& path, const SpectrumSweep& sweep);

nlohmann::json crossing_to_json(const CrossingRecord& record);

/// CSV: t, mean_n, P_e, p0 ... p_{n_max}.
void write_timeseries_csv(const std::filesystem::path& path, const TimeSeries& series);

/// Little-endian f64 snapshot sidecar, interleaved re/im, row-major, plus a
/// JSON descriptor of the layout.
void write_snapshots(const std::filesystem::path& bin_path,
                     const std::filesystem::path& json_path, const TimeSeries& series);

/// CSV of a complex matrix: row index, then re/im pairs in column order.
void write_density_csv(const std::filesystem::path& path, const Matrix& rho);

/// CSV: n, p.
void write_distribution_csv(const std::filesystem::path& path, const Eigen::VectorXd& populations);

/// CSV: re_alpha, im_alpha, W.
void write_wigner_csv(const std::filesystem::path& path, const WignerMap& map);

/// JSON header plus flat little-endian f64 payload (row-major).
void write_wigner_binary(const std::filesystem::path& bin_path,
                         const std::filesystem::path& json_path, const WignerMap& map);

nlohmann::json beat_report_to_json(const BeatReport& report);
nlohmann::json negativity_to_json(const NegativityReport& report);
nlohmann::json two_qubit_to_json(const EffectiveTwoQubit& rho_prime);

} // namespace parajc
