#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parajc/dynamics.hpp"

namespace parajc {

/// Even/odd Fock target superpositions for one avoided crossing.
struct TargetStates {
    Vector even;
    Vector odd;
    std::string crossing_label;
};

/// Crossing-I targets (|0> + i|2>)/sqrt2 and (|1> + i|3>)/sqrt2.
TargetStates crossing_i_targets(const FockSpace& space);

/// Crossing-II targets: even fixed to (|0> + i|4>)/sqrt2; the odd partner is
/// read off the supplied quiet-spot state (principal component of the
/// conditional-g photon state).
TargetStates crossing_ii_targets(const FockSpace& space, const QuantumState& quiet_state);

/// Partial trace over the qubit. Always returns a density matrix on Fock space.
QuantumState reduced_photon_state(const QuantumState& composite);

/// Photon state conditioned on a qubit measurement outcome (qubit_g/qubit_e).
/// Throws NumericalGateError when the outcome probability is below 1e-12.
QuantumState conditional_photon_state(const QuantumState& composite, int outcome);

/// Population of the photon state in the two-dimensional target subspace,
/// Tr[rho (|even><even| + |odd><odd|)].
double subspace_fidelity(const QuantumState& rho_ph, const TargetStates& targets);

/// Phase-sensitive diagnostics <even|rho|even> and <odd|rho|odd>.
std::pair<double, double> target_overlaps(const QuantumState& rho_ph, const TargetStates& targets);

/// Full state projected onto {|g,E>, |g,O>, |e,E>, |e,O>} (that index order)
/// and renormalized.
struct EffectiveTwoQubit {
    Eigen::Matrix4cd rho;
    double leakage = 0.0;   // probability weight outside the projected subspace
};

/// Throws NumericalGateError when the projected trace is below 1e-12.
EffectiveTwoQubit effective_two_qubit(const QuantumState& composite, const TargetStates& targets);

/// Wootters concurrence of the reconstructed two-qubit state.
double concurrence(const EffectiveTwoQubit& rho_prime);

struct BeatReport {
    double fast_period = 0.0;                  // T1
    std::optional<double> slow_period;         // T2; absent when no beat is present
    double modulation_depth = 0.0;             // (env_max - env_min)/env_max of P_e fast band
    double contrast = 0.0;                     // env_max - env_min of the P_e fast band
    std::vector<double> quiet_times;
    std::vector<double> quiet_pe;
};

/// Spectral beat analysis of a time series: T1 from the dominant
/// high-frequency peak of P_e, T2 from the dominant low-frequency peak of the
/// fast-band envelope, quiet spots from envelope minima of d<a'a>/dt.
/// Throws ConfigError when a beat is present but the series is too short to
/// resolve it.
BeatReport extract_beats(const TimeSeries& series);

/// Quiet-spot state selection: the instant of maximal target-subspace fidelity
/// within half a fast period of a quiet time.
struct QuietSample {
    double env_time = 0.0;       // envelope minimum
    double aligned_time = 0.0;   // phase-aligned sampling instant
    QuantumState state;          // composite pure state at aligned_time
};

QuietSample quiet_sample(const SchrodingerPropagator& prop, const QuantumState& psi0,
                         double quiet_time, double fast_period, const TargetStates& targets);

} // namespace parajc
