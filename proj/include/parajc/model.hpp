#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parajc/fock.hpp"

namespace parajc {

/// All rates in units of g; g itself sets the frequency scale (normally 1).
struct SystemParams {
    double delta = 0.0;
    double g     = 1.0;
    double G     = 0.0;
    double kappa = 0.0;
    double gamma = 0.0;
};

/// Throws ConfigError unless g > 0, G >= 0, kappa >= 0, gamma >= 0.
void validate_params(const SystemParams& p);

/// H = delta (a'a + s+s-) + g (a s+ + a' s-) + G (a^2 + a'^2) on the composite space.
Operator hamiltonian(const SystemParams& p, const CompositeSpace& space);

/// Jaynes-Cummings doublet |±,n> = (|e,n> ± |g,n+1>)/sqrt2,
/// energy (n+1) delta ± sqrt(n+1) g.
struct DressedState {
    int sign = +1;   // +1 or -1
    int n = 0;
    double energy = 0.0;
    Vector vector;   // on the composite space
};

DressedState dressed_state(int sign, int n, const SystemParams& p, const CompositeSpace& space);

/// Analytic crossing of the pair (+,m)/(-,n) plus its first-order parametric gap.
struct CrossingPrediction {
    int m = 0;
    int n = 0;
    double delta_star = 0.0;    // g (sqrt(m+1)+sqrt(n+1))/(n-m)
    double gap = 0.0;           // 2 |<+,m| G(a^2+a'^2) |-,n>|, 0 when not connected
    std::string label;          // "I", "II" or "other"
};

/// Enumerates pairs (+,m)/(-,n) with m < n <= max_photon whose dressed energies
/// cross at some delta > 0.
std::vector<CrossingPrediction> predict_crossings(const SystemParams& p, int max_photon = 6);

struct CrossingRecord {
    std::string label;        // "I", "II" or "other"
    double delta_star = 0.0;  // detuning of minimal gap
    double gap = 0.0;         // minimal eigenvalue separation
    int lower_branch = 0;     // sorted-eigenvalue indices of the pair at delta_star
    int upper_branch = 0;
};

struct SpectrumSweep {
    std::vector<double> delta_grid;
    Eigen::MatrixXd branches;            // one row per delta, ascending eigenvalues
    SystemParams params;                 // template; delta column comes from the grid
    CompositeSpace space;
    std::vector<CrossingRecord> crossings;
};

/// Full real spectrum at every grid detuning, rows sorted ascending.
/// Grid must be strictly increasing with at least 3 points.
SpectrumSweep sweep_spectrum(const SystemParams& templ, const std::vector<double>& delta_grid,
                             const CompositeSpace& space);

/// Locates interior local minima of every adjacent-branch gap, refines each
/// minimum by golden-section re-diagonalization to 1e-6 in delta, drops true
/// crossings (gap < 1e-9 g) and labels records matching predictions I/II.
std::vector<CrossingRecord> find_avoided_crossings(const SpectrumSweep& sweep);

/// Refined center of a predicted avoided crossing: golden-section minimum of
/// the adjacent-branch gap around the predicted detuning. Returns nullopt when
/// no avoided crossing forms (e.g. G = 0).
std::optional<CrossingRecord> locate_crossing(const SystemParams& p, const CompositeSpace& space,
                                              const CrossingPrediction& prediction);

} // namespace parajc
