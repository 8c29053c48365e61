#pragma once

#include <string>
#include <vector>

#include "parajc/fock.hpp"

namespace parajc {

/// Square phase-space grid, symmetric about the origin.
struct PhaseSpaceGrid {
    double extent = 3.0;   // Re(alpha), Im(alpha) in [-extent, extent]
    double step = 0.05;

    void validate() const;
    std::vector<double> axis() const;
    int points() const;
};

struct WignerMap {
    PhaseSpaceGrid grid;
    Eigen::MatrixXd values;     // values(row=j, col=i) = W(axis[i] + I axis[j])
    double grid_integral = 0.0; // sum W dA
    std::string source, method;

    double at_origin() const;
    double max_abs_difference(const WignerMap& other) const;
    /// Maximum |difference| restricted to |alpha| <= radius.
    double max_abs_difference_in_disk(const WignerMap& other, double radius) const;
};

/// Displaced-parity Wigner function W(alpha) = (2/pi) Tr[D(-a) rho D(a) P].
/// Displacement operators are exponentiated on a Fock space padded well past
/// the grid corners, which bounds the truncation bleed; the discrete
/// normalization is gated at 0.02 afterwards.
WignerMap wigner_numeric(const QuantumState& rho_ph, const PhaseSpaceGrid& grid);

/// Closed form for the crossing-I even target (|0> + i|2>)/sqrt2.
WignerMap wigner_even_analytic(const PhaseSpaceGrid& grid);

/// Closed form for the crossing-I odd target (|1> + i|3>)/sqrt2.
WignerMap wigner_odd_analytic(const PhaseSpaceGrid& grid);

struct NegativeRegion {
    double min_value = 0.0;
    double re = 0.0, im = 0.0;   // location of the region minimum
    int cells = 0;
};

struct NegativityReport {
    double min_value = 0.0;
    double min_re = 0.0, min_im = 0.0;
    double negative_mass = 0.0;               // integral of min(W, 0)
    std::vector<NegativeRegion> regions;      // connected, deeper than 1e-3 |min|
};

NegativityReport negativity_report(const WignerMap& map);

} // namespace parajc
