#pragma once

#include <string>
#include <vector>

#include "parajc/linalg.hpp"
#include "parajc/model.hpp"

namespace parajc {

enum class RampKind { constant, linear, tanh_on };

/// Time profile of the parametric strength. Non-constant kinds start at
/// G(0) = 0 and reach G_final exactly at tau_r.
struct RampProfile {
    RampKind kind = RampKind::constant;
    double G_final = 0.0;
    double tau_r = 0.0;   // ramp duration, units of 1/g

    double value(double t) const;
};

/// Output grid and internal step, in units of 1/g.
struct TimeGrid {
    double t_end = 150.0;
    double dt_out = 0.02;
    double dt_int = 0.005;
    int snapshot_stride = 0;   // keep every k-th sampled state; 0 disables

    void validate() const;
    int n_samples() const;
};

/// Sampled observables of one evolution.
struct TimeSeries {
    int n_max = 0;
    std::vector<double> times;
    std::vector<double> mean_n;
    std::vector<double> p_e;
    Eigen::MatrixXd photon_populations;    // sample-major, column n
    std::vector<double> coherence_02;      // |<0| rho_ph |2>|
    std::vector<double> coherence_13;      // |<1| rho_ph |3>|
    std::vector<double> snapshot_times;
    std::vector<QuantumState> snapshots;
};

/// Exact constant-H propagation through the eigendecomposition of H.
class SchrodingerPropagator {
public:
    SchrodingerPropagator(const Operator& h);

    Vector state_at(const Vector& psi0, double t) const;
    const EigenSystem& eigensystem() const { return es_; }

private:
    EigenSystem es_;
};

/// psi(t) = exp(-iHt) psi0 sampled on the grid. Norm is gated at 1e-9.
TimeSeries evolve_schrodinger(const Operator& h, const QuantumState& psi0, const TimeGrid& grid);

/// Stepped propagation with G frozen at the midpoint of each internal step.
/// The internal step is refined (halved, up to 6 times) until the final-state
/// fidelity between successive refinements deviates from 1 by < 1e-8.
TimeSeries evolve_ramped(const SystemParams& templ, const RampProfile& ramp,
                         const QuantumState& psi0, const TimeGrid& grid,
                         const CompositeSpace& space);

/// Fixed-step RK4 master equation with cavity decay kappa D[a] and qubit decay
/// gamma D[sigma-]. The step is refined until trace drift stays below 1e-8.
TimeSeries evolve_lindblad(const SystemParams& p, const QuantumState& rho0, const TimeGrid& grid,
                           const CompositeSpace& space);

} // namespace parajc
