#include "parajc/dynamics.hpp"

#include <cmath>
#include <string>

namespace parajc {

namespace {

struct Observables {
    double mean_n = 0.0;
    double p_e = 0.0;
    Eigen::VectorXd populations;
    double c02 = 0.0;
    double c13 = 0.0;
};

/// Photon observables straight from the qubit-major block layout.
Observables observe_pure(const Vector& psi, int dim_f) {
    Observables o;
    o.populations.resize(dim_f);
    const auto g_blk = psi.head(dim_f);
    const auto e_blk = psi.tail(dim_f);
    for (int n = 0; n < dim_f; ++n) {
        o.populations[n] = std::norm(g_blk[n]) + std::norm(e_blk[n]);
        o.mean_n += n * o.populations[n];
    }
    o.p_e = e_blk.squaredNorm();
    if (dim_f > 2) o.c02 = std::abs(g_blk[0] * std::conj(g_blk[2]) + e_blk[0] * std::conj(e_blk[2]));
    if (dim_f > 3) o.c13 = std::abs(g_blk[1] * std::conj(g_blk[3]) + e_blk[1] * std::conj(e_blk[3]));
    return o;
}

Observables observe_density(const Matrix& rho, int dim_f) {
    Observables o;
    o.populations.resize(dim_f);
    for (int n = 0; n < dim_f; ++n) {
        o.populations[n] = (rho(n, n) + rho(dim_f + n, dim_f + n)).real();
        o.mean_n += n * o.populations[n];
    }
    o.p_e = rho.bottomRightCorner(dim_f, dim_f).trace().real();
    const auto ph = [&](int i, int j) { return rho(i, j) + rho(dim_f + i, dim_f + j); };
    if (dim_f > 2) o.c02 = std::abs(ph(0, 2));
    if (dim_f > 3) o.c13 = std::abs(ph(1, 3));
    return o;
}

void push_sample(TimeSeries& ts, double t, const Observables& o) {
    const auto i = static_cast<Eigen::Index>(ts.times.size());
    ts.times.push_back(t);
    ts.mean_n.push_back(o.mean_n);
    ts.p_e.push_back(o.p_e);
    ts.photon_populations.row(i) = o.populations.transpose();
    ts.coherence_02.push_back(o.c02);
    ts.coherence_13.push_back(o.c13);
}

TimeSeries make_series(int n_max, int n_samples) {
    TimeSeries ts;
    ts.n_max = n_max;
    ts.photon_populations.resize(n_samples, n_max + 1);
    ts.times.reserve(n_samples);
    ts.mean_n.reserve(n_samples);
    ts.p_e.reserve(n_samples);
    ts.coherence_02.reserve(n_samples);
    ts.coherence_13.reserve(n_samples);
    return ts;
}

} // namespace

double RampProfile::value(double t) const {
    if (kind == RampKind::constant || tau_r <= 0.0 || t >= tau_r) return G_final;
    if (t <= 0.0) return 0.0;
    if (kind == RampKind::linear) return G_final * t / tau_r;
    return G_final * std::tanh(3.0 * t / tau_r) / std::tanh(3.0);
}

void TimeGrid::validate() const {
    if (!(t_end > 0.0) || !(dt_out > 0.0) || !(dt_int > 0.0))
        throw ConfigError("time grid values must be positive");
    if (dt_int > dt_out) throw ConfigError("dt_int must not exceed dt_out");
    if (snapshot_stride < 0) throw ConfigError("snapshot_stride must be >= 0");
}

int TimeGrid::n_samples() const {
    return static_cast<int>(std::floor(t_end / dt_out + 0.5)) + 1;
}

SchrodingerPropagator::SchrodingerPropagator(const Operator& h) {
    const double herm = (h.mat - h.mat.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12)
        throw NumericalGateError("Hamiltonian not Hermitian: max deviation " +
                                 std::to_string(herm));
    es_ = eigh(h.mat);
}

Vector SchrodingerPropagator::state_at(const Vector& psi0, double t) const {
    const Vector c = es_.vectors.adjoint() * psi0;
    const Eigen::ArrayXcd phases =
        (Complex(0.0, -1.0) * es_.values.array().cast<Complex>() * t).exp();
    return es_.vectors * (phases * c.array()).matrix();
}

TimeSeries evolve_schrodinger(const Operator& h, const QuantumState& psi0, const TimeGrid& grid) {
    grid.validate();
    if (!psi0.is_pure()) throw DimensionError("evolve_schrodinger expects a pure state");
    if (psi0.dim() != h.dim()) throw DimensionError("state/Hamiltonian dimension mismatch");
    validate_state(psi0);

    const SchrodingerPropagator prop(h);
    const int dim_f = h.dim() / 2;
    const int n = grid.n_samples();
    TimeSeries ts = make_series(dim_f - 1, n);

    for (int i = 0; i < n; ++i) {
        const double t = i * grid.dt_out;
        const Vector psi = prop.state_at(psi0.vec, t);
        const double norm2 = psi.squaredNorm();
        if (std::abs(norm2 - 1.0) > 1e-9)
            throw NumericalGateError("norm drift " + std::to_string(norm2 - 1.0) +
                                     " at t=" + std::to_string(t));
        push_sample(ts, t, observe_pure(psi, dim_f));
        if (grid.snapshot_stride > 0 && i % grid.snapshot_stride == 0) {
            ts.snapshot_times.push_back(t);
            ts.snapshots.push_back(pure_state(psi0.space, psi));
        }
    }
    return ts;
}

namespace {

/// One full ramped trajectory at a fixed internal step; propagators are cached
/// per distinct midpoint G (the tail of any ramp is constant).
TimeSeries run_ramped(const SystemParams& templ, const RampProfile& ramp, const Vector& psi0,
                      const TimeGrid& grid, const CompositeSpace& space, double dt_int,
                      Vector* final_state) {
    const int dim_f = space.fock.dim();
    const int n = grid.n_samples();
    TimeSeries ts = make_series(space.fock.n_max, n);

    Vector psi = psi0;
    double t = 0.0;
    double cached_g = -1.0;
    Matrix cached_u;

    push_sample(ts, 0.0, observe_pure(psi, dim_f));
    if (grid.snapshot_stride > 0) {
        ts.snapshot_times.push_back(0.0);
        ts.snapshots.push_back(pure_state(Space::composite, psi));
    }

    for (int i = 1; i < n; ++i) {
        const double t_target = i * grid.dt_out;
        const int n_sub = std::max(1, static_cast<int>(std::floor((t_target - t) / dt_int + 0.5)));
        const double h = (t_target - t) / n_sub;
        for (int k = 0; k < n_sub; ++k) {
            const double g_mid = ramp.value(t + 0.5 * h);
            if (g_mid != cached_g) {
                SystemParams p = templ;
                p.G = g_mid;
                const EigenSystem es = eigh(hamiltonian(p, space).mat);
                const Eigen::ArrayXcd ph =
                    (Complex(0.0, -1.0) * es.values.array().cast<Complex>() * h).exp();
                cached_u = es.vectors * ph.matrix().asDiagonal() * es.vectors.adjoint();
                cached_g = g_mid;
            }
            psi = cached_u * psi;
            t += h;
        }
        const double norm2 = psi.squaredNorm();
        if (std::abs(norm2 - 1.0) > 1e-9)
            throw NumericalGateError("ramped evolution norm drift " + std::to_string(norm2 - 1.0));
        push_sample(ts, t_target, observe_pure(psi, dim_f));
        if (grid.snapshot_stride > 0 && i % grid.snapshot_stride == 0) {
            ts.snapshot_times.push_back(t_target);
            ts.snapshots.push_back(pure_state(Space::composite, psi));
        }
    }
    if (final_state) *final_state = psi;
    return ts;
}

} // namespace

TimeSeries evolve_ramped(const SystemParams& templ, const RampProfile& ramp,
                         const QuantumState& psi0, const TimeGrid& grid,
                         const CompositeSpace& space) {
    grid.validate();
    validate_params(templ);
    if (!psi0.is_pure()) throw DimensionError("evolve_ramped expects a pure state");
    if (psi0.dim() != space.dim()) throw DimensionError("state/space dimension mismatch");
    validate_state(psi0);

    // constant profiles propagate exactly; no step refinement needed
    const bool effectively_constant = (ramp.kind == RampKind::constant) || (ramp.tau_r <= 0.0);

    double dt = grid.dt_int;
    Vector final_state;
    TimeSeries ts = run_ramped(templ, ramp, psi0.vec, grid, space, dt, &final_state);
    if (effectively_constant) return ts;

    for (int refine = 0; refine < 6; ++refine) {
        Vector finer_state;
        TimeSeries finer = run_ramped(templ, ramp, psi0.vec, grid, space, dt / 2.0, &finer_state);
        const double fid = std::norm(final_state.dot(finer_state));
        if (std::abs(fid - 1.0) < 1e-8) return finer;
        dt /= 2.0;
        ts = std::move(finer);
        final_state = std::move(finer_state);
    }
    throw NumericalGateError("ramped evolution did not converge in step refinement");
}

namespace {

Matrix lindblad_rhs(const Matrix& rho, const Matrix& h, const Matrix& a_op, double kappa,
                    const Matrix& sm_op, double gamma) {
    const Complex i(0.0, 1.0);
    Matrix out = -i * (h * rho - rho * h);
    if (kappa > 0.0) {
        const Matrix ad_a = a_op.adjoint() * a_op;
        out += kappa * (a_op * rho * a_op.adjoint() - 0.5 * (ad_a * rho + rho * ad_a));
    }
    if (gamma > 0.0) {
        const Matrix sp_sm = sm_op.adjoint() * sm_op;
        out += gamma * (sm_op * rho * sm_op.adjoint() - 0.5 * (sp_sm * rho + rho * sp_sm));
    }
    return out;
}

bool run_lindblad(const SystemParams& p, const Matrix& rho0, const TimeGrid& grid,
                  const CompositeSpace& space, double dt_int, TimeSeries* out) {
    const int dim_f = space.fock.dim();
    const Matrix h = hamiltonian(p, space).mat;
    const Matrix a_op = tensor(qubit_identity(), annihilation(space.fock)).mat;
    const Matrix sm_op = tensor(qubit_ops().second, fock_identity(space.fock)).mat;

    const int n = grid.n_samples();
    TimeSeries ts = make_series(space.fock.n_max, n);

    Matrix rho = rho0;
    double t = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t_target = i * grid.dt_out;
        if (i > 0) {
            const int n_sub =
                std::max(1, static_cast<int>(std::floor((t_target - t) / dt_int + 0.5)));
            const double h_step = (t_target - t) / n_sub;
            for (int k = 0; k < n_sub; ++k) {
                const Matrix k1 = lindblad_rhs(rho, h, a_op, p.kappa, sm_op, p.gamma);
                const Matrix k2 =
                    lindblad_rhs(rho + 0.5 * h_step * k1, h, a_op, p.kappa, sm_op, p.gamma);
                const Matrix k3 =
                    lindblad_rhs(rho + 0.5 * h_step * k2, h, a_op, p.kappa, sm_op, p.gamma);
                const Matrix k4 = lindblad_rhs(rho + h_step * k3, h, a_op, p.kappa, sm_op, p.gamma);
                rho += (h_step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                t += h_step;
            }
        }
        if (std::abs(rho.trace().real() - 1.0) > 1e-8) return false;  // needs a finer step
        push_sample(ts, t_target, observe_density(rho, dim_f));
        if (grid.snapshot_stride > 0 && i % grid.snapshot_stride == 0) {
            ts.snapshot_times.push_back(t_target);
            ts.snapshots.push_back(density_state(Space::composite, rho));
        }
    }
    *out = std::move(ts);
    return true;
}

} // namespace

TimeSeries evolve_lindblad(const SystemParams& p, const QuantumState& rho0, const TimeGrid& grid,
                           const CompositeSpace& space) {
    grid.validate();
    validate_params(p);
    if (rho0.dim() != space.dim()) throw DimensionError("state/space dimension mismatch");
    validate_state(rho0);

    double dt = grid.dt_int;
    for (int refine = 0; refine <= 6; ++refine) {
        TimeSeries ts;
        if (run_lindblad(p, rho0.density(), grid, space, dt, &ts)) return ts;
        dt /= 2.0;
    }
    throw NumericalGateError("master equation trace drift exceeded 1e-8 at the finest step");
}

} // namespace parajc
