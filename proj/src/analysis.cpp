#include "parajc/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <unsupported/Eigen/FFT>

namespace parajc {

namespace {

constexpr double beat_depth_threshold = 0.25;

Vector normalized(Vector v) {
    const double n = v.norm();
    if (n <= 0.0) throw NumericalGateError("cannot normalize a zero vector");
    return v / n;
}

} // namespace

TargetStates crossing_i_targets(const FockSpace& space) {
    if (space.n_max < 3) throw DimensionError("crossing-I targets need n_max >= 3");
    const Complex i(0.0, 1.0);
    Vector even = Vector::Zero(space.dim());
    Vector odd = Vector::Zero(space.dim());
    even(0) = 1.0 / std::sqrt(2.0);
    even(2) = i / std::sqrt(2.0);
    odd(1) = 1.0 / std::sqrt(2.0);
    odd(3) = i / std::sqrt(2.0);
    return {std::move(even), std::move(odd), "I"};
}

TargetStates crossing_ii_targets(const FockSpace& space, const QuantumState& quiet_state) {
    if (space.n_max < 5) throw DimensionError("crossing-II targets need n_max >= 5");
    const Complex i(0.0, 1.0);
    Vector even = Vector::Zero(space.dim());
    even(0) = 1.0 / std::sqrt(2.0);
    even(4) = i / std::sqrt(2.0);

    // odd partner from the data: dominant eigenvector of the conditional-g state
    const QuantumState cond_g = conditional_photon_state(quiet_state, qubit_g);
    const EigenSystem es = eigh(cond_g.density());
    Vector odd = es.vectors.col(es.values.size() - 1);
    // fix the arbitrary eigenvector phase: make the largest component's phase match i^n
    Eigen::Index k_max = 0;
    odd.cwiseAbs().maxCoeff(&k_max);
    const Complex ref = std::pow(i, static_cast<double>(k_max % 4));
    odd *= ref * std::conj(odd(k_max)) / std::abs(odd(k_max));
    return {std::move(even), normalized(std::move(odd)), "II"};
}

QuantumState reduced_photon_state(const QuantumState& composite) {
    if (composite.space != Space::composite || composite.dim() % 2 != 0)
        throw DimensionError("reduced_photon_state expects a composite state");
    const int dim_f = composite.dim() / 2;
    Matrix rho_ph;
    if (composite.is_pure()) {
        const Vector g_blk = composite.vec.head(dim_f);
        const Vector e_blk = composite.vec.tail(dim_f);
        rho_ph = g_blk * g_blk.adjoint() + e_blk * e_blk.adjoint();
    } else {
        rho_ph = composite.rho.topLeftCorner(dim_f, dim_f) +
                 composite.rho.bottomRightCorner(dim_f, dim_f);
    }
    return density_state(Space::fock, std::move(rho_ph));
}

QuantumState conditional_photon_state(const QuantumState& composite, int outcome) {
    if (composite.space != Space::composite || composite.dim() % 2 != 0)
        throw DimensionError("conditional_photon_state expects a composite state");
    if (outcome != qubit_g && outcome != qubit_e)
        throw DimensionError("qubit outcome must be 0 (g) or 1 (e)");
    const int dim_f = composite.dim() / 2;
    if (composite.is_pure()) {
        const Vector blk = composite.vec.segment(outcome * dim_f, dim_f);
        const double p = blk.squaredNorm();
        if (p < 1e-12) throw NumericalGateError("conditional state: outcome probability < 1e-12");
        return pure_state(Space::fock, blk / std::sqrt(p));
    }
    const Matrix blk = composite.rho.block(outcome * dim_f, outcome * dim_f, dim_f, dim_f);
    const double p = blk.trace().real();
    if (p < 1e-12) throw NumericalGateError("conditional state: outcome probability < 1e-12");
    return density_state(Space::fock, blk / p);
}

double subspace_fidelity(const QuantumState& rho_ph, const TargetStates& targets) {
    if (rho_ph.space != Space::fock || rho_ph.dim() != targets.even.size())
        throw DimensionError("photon state / target dimension mismatch");
    const Matrix rho = rho_ph.density();
    const double f = (targets.even.dot(rho * targets.even) +
                      targets.odd.dot(rho * targets.odd)).real();
    return f;
}

std::pair<double, double> target_overlaps(const QuantumState& rho_ph,
                                          const TargetStates& targets) {
    const Matrix rho = rho_ph.density();
    return {targets.even.dot(rho * targets.even).real(),
            targets.odd.dot(rho * targets.odd).real()};
}

EffectiveTwoQubit effective_two_qubit(const QuantumState& composite,
                                      const TargetStates& targets) {
    if (composite.space != Space::composite || composite.dim() % 2 != 0)
        throw DimensionError("effective_two_qubit expects a composite state");
    const int dim_f = composite.dim() / 2;
    if (targets.even.size() != dim_f) throw DimensionError("target/state dimension mismatch");

    // basis order |g,E>, |g,O>, |e,E>, |e,O>
    std::array<Vector, 4> basis;
    for (int q = 0; q < 2; ++q) {
        for (int s = 0; s < 2; ++s) {
            Vector v = Vector::Zero(2 * dim_f);
            v.segment(q * dim_f, dim_f) = (s == 0) ? targets.even : targets.odd;
            basis[q * 2 + s] = std::move(v);
        }
    }
    const Matrix rho_full = composite.density();
    Eigen::Matrix4cd projected;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            projected(i, j) = basis[i].dot(rho_full * basis[j]);

    const double trace = projected.trace().real();
    if (trace < 1e-12)
        throw NumericalGateError("effective two-qubit projection has trace < 1e-12");
    EffectiveTwoQubit out;
    out.rho = projected / trace;
    out.leakage = 1.0 - trace;
    return out;
}

double concurrence(const EffectiveTwoQubit& rho_prime) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    // sigma_y (x) sigma_y in the {|00>,|01>,|10>,|11>} product order
    yy(0, 3) = -1.0; yy(1, 2) = 1.0; yy(2, 1) = 1.0; yy(3, 0) = -1.0;
    const Eigen::Matrix4cd rho_tilde = yy * rho_prime.rho.conjugate() * yy;
    const Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(rho_prime.rho * rho_tilde);
    if (es.info() != Eigen::Success) throw NumericalGateError("concurrence eigensolver failed");
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i)
        lambda[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

namespace {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// Hann-windowed, zero-padded magnitude spectrum peak in [f_min, f_max],
/// parabolically refined. Returns the peak frequency; amplitude through out.
double spectrum_peak(const std::vector<double>& x, double dt, double f_min, double f_max,
                     double* amplitude = nullptr) {
    const std::size_t n = x.size();
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    const std::size_t m = next_pow2(8 * n);
    std::vector<double> padded(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double w =
            0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(n - 1));
        padded[i] = (x[i] - mean) * w;
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spec;
    fft.fwd(spec, padded);

    const double df = 1.0 / (static_cast<double>(m) * dt);
    std::size_t k_lo = static_cast<std::size_t>(std::ceil(f_min / df));
    std::size_t k_hi = std::min(m / 2, static_cast<std::size_t>(std::floor(f_max / df)));
    k_lo = std::max<std::size_t>(k_lo, 1);
    if (k_lo >= k_hi) throw ConfigError("spectral band is empty; series too short");

    std::size_t k_best = k_lo;
    double best = -1.0;
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        const double a = std::abs(spec[k]);
        if (a > best) { best = a; k_best = k; }
    }
    double k_refined = static_cast<double>(k_best);
    if (k_best > 0 && k_best + 1 < spec.size()) {
        const double a = std::abs(spec[k_best - 1]);
        const double b = std::abs(spec[k_best]);
        const double c = std::abs(spec[k_best + 1]);
        const double denom = a - 2.0 * b + c;
        if (b > a && b > c && denom != 0.0)
            k_refined += 0.5 * (a - c) / denom;
    }
    if (amplitude) *amplitude = best;
    return k_refined * df;
}

/// Magnitude of the analytic signal of the band f > f_split.
std::vector<double> fast_band_envelope(const std::vector<double>& x, double dt, double f_split) {
    const std::size_t n = x.size();
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    const std::size_t m = next_pow2(2 * n);
    std::vector<std::complex<double>> buf(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) buf[i] = x[i] - mean;

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spec;
    fft.fwd(spec, buf);
    const double df = 1.0 / (static_cast<double>(m) * dt);
    for (std::size_t k = 0; k < m; ++k) {
        const double f = (k <= m / 2) ? k * df : -(static_cast<double>(m - k) * df);
        spec[k] = (f > f_split) ? 2.0 * spec[k] : 0.0;
    }
    std::vector<std::complex<double>> analytic;
    fft.inv(analytic, spec);
    std::vector<double> env(n);
    for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(analytic[i]);
    return env;
}

std::vector<double> moving_average(const std::vector<double>& x, int half_width) {
    if (half_width <= 0) return x;
    const int n = static_cast<int>(x.size());
    std::vector<double> out(x.size());
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - half_width);
        const int hi = std::min(n - 1, i + half_width);
        double acc = 0.0;
        for (int j = lo; j <= hi; ++j) acc += x[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc / (hi - lo + 1);
    }
    return out;
}

std::vector<double> gradient(const std::vector<double>& x, double dt) {
    const std::size_t n = x.size();
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) g[i] = (x[1] - x[0]) / dt;
        else if (i + 1 == n) g[i] = (x[n - 1] - x[n - 2]) / dt;
        else g[i] = (x[i + 1] - x[i - 1]) / (2.0 * dt);
    }
    return g;
}

} // namespace

BeatReport extract_beats(const TimeSeries& series) {
    const std::size_t n = series.times.size();
    if (n < 64) throw ConfigError("time series too short for beat extraction");
    const double dt = series.times[1] - series.times[0];
    const double span = series.times.back() - series.times.front();

    BeatReport report;
    const double f_floor = 3.0 / span;
    const double f_fast = spectrum_peak(series.p_e, dt, f_floor, 0.5 / dt);
    report.fast_period = 1.0 / f_fast;

    // envelope of the fast band of P_e: beat depth and contrast
    const std::vector<double> env = fast_band_envelope(series.p_e, dt, f_fast / 3.0);
    const std::size_t trim = std::max<std::size_t>(2, n / 50);
    double env_max = 0.0, env_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = trim; i + trim < n; ++i) {
        env_max = std::max(env_max, env[i]);
        env_min = std::min(env_min, env[i]);
    }
    report.contrast = env_max - env_min;
    report.modulation_depth = env_max > 0.0 ? (env_max - env_min) / env_max : 0.0;

    if (report.modulation_depth < beat_depth_threshold) return report;  // no beat present

    // quiet spots: minima of the smoothed fast-band envelope of d<a'a>/dt
    const std::vector<double> dn = gradient(series.mean_n, dt);
    std::vector<double> env_d = fast_band_envelope(dn, dt, f_fast / 3.0);
    env_d = moving_average(env_d, static_cast<int>(std::lround(report.fast_period / (2.0 * dt))));
    double envd_max = 0.0;
    for (std::size_t i = trim; i + trim < n; ++i) envd_max = std::max(envd_max, env_d[i]);
    const double floor_level = 0.4 * envd_max;
    const double min_separation = 4.0 * report.fast_period;

    double last_depth = std::numeric_limits<double>::infinity();
    for (std::size_t i = trim + 1; i + trim + 1 < n; ++i) {
        if (env_d[i] >= floor_level) continue;
        if (!(env_d[i] < env_d[i - 1] && env_d[i] <= env_d[i + 1])) continue;
        const double t = series.times[i];
        if (!report.quiet_times.empty() && t - report.quiet_times.back() < min_separation) {
            if (env_d[i] < last_depth) {   // deepest minimum of the cluster wins
                report.quiet_times.back() = t;
                report.quiet_pe.back() = series.p_e[i];
                last_depth = env_d[i];
            }
            continue;
        }
        report.quiet_times.push_back(t);
        report.quiet_pe.push_back(series.p_e[i]);
        last_depth = env_d[i];
    }

    if (report.quiet_times.empty())
        throw ConfigError("time series too short for beat extraction: beat present but no "
                          "quiet spot inside the series");

    // T2 from the dominant low-frequency envelope peak
    std::vector<double> env_trim(env.begin() + static_cast<long>(trim),
                                 env.end() - static_cast<long>(trim));
    const double f_slow = spectrum_peak(env_trim, dt, 0.8 / span, f_fast / 3.0);
    const double t2 = 1.0 / f_slow;
    if (span < 1.2 * t2)
        throw ConfigError("time series too short for beat extraction: span below 1.2 T2");
    report.slow_period = t2;
    return report;
}

QuietSample quiet_sample(const SchrodingerPropagator& prop, const QuantumState& psi0,
                         double quiet_time, double fast_period, const TargetStates& targets) {
    if (!psi0.is_pure()) throw DimensionError("quiet_sample expects a pure initial state");
    QuietSample out;
    out.env_time = quiet_time;

    const int n_probe = 400;
    double best_f = -1.0;
    for (int k = 0; k <= n_probe; ++k) {
        const double t = quiet_time + fast_period * (static_cast<double>(k) / n_probe - 0.5);
        if (t < 0.0) continue;
        const Vector psi = prop.state_at(psi0.vec, t);
        const double f =
            subspace_fidelity(reduced_photon_state(pure_state(Space::composite, psi)), targets);
        if (f > best_f) {
            best_f = f;
            out.aligned_time = t;
            out.state = pure_state(Space::composite, psi);
        }
    }
    return out;
}

} // namespace parajc
