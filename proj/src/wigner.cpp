#include "parajc/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "parajc/linalg.hpp"

namespace parajc {

namespace {

constexpr double pi = std::numbers::pi;

/// Fock levels to add above the state so displacements up to the grid corners
/// stay inside the truncation (Poisson tail of the displaced state).
int padding_levels(double max_alpha_sq) {
    const double a = max_alpha_sq;
    return std::max(8, static_cast<int>(std::ceil(a + 7.0 * std::sqrt(a) + 12.0)));
}

WignerMap analytic_map(const PhaseSpaceGrid& grid, const std::string& source,
                       double (*w)(double, double)) {
    grid.validate();
    WignerMap map;
    map.grid = grid;
    map.source = source;
    map.method = "analytic";
    const std::vector<double> ax = grid.axis();
    const int n = grid.points();
    map.values.resize(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            map.values(j, i) = w(ax[static_cast<std::size_t>(i)], ax[static_cast<std::size_t>(j)]);
    map.grid_integral = map.values.sum() * grid.step * grid.step;
    return map;
}

double w_even(double x, double y) {
    const double s = x * x + y * y;
    const double b = 1.0 - 2.0 * s;
    return (2.0 / pi) * std::exp(-2.0 * s) * (b * b + 4.0 * std::sqrt(2.0) * x * y);
}

double w_odd(double x, double y) {
    const double s = x * x + y * y;
    const double b = 1.0 - 4.0 * s;
    return (1.0 / pi) * std::exp(-2.0 * s) *
           (-2.0 * b * b + 8.0 * s * s * (1.0 + 4.0 * s / 3.0) +
            8.0 * std::sqrt(6.0) * (4.0 * s / 3.0 - 1.0) * x * y);
}

} // namespace

void PhaseSpaceGrid::validate() const {
    if (!(extent > 0.0) || !(step > 0.0)) throw ConfigError("phase-space grid must be positive");
    if (step > extent) throw ConfigError("phase-space step exceeds the grid extent");
}

std::vector<double> PhaseSpaceGrid::axis() const {
    const int half = static_cast<int>(std::floor(extent / step + 0.5));
    std::vector<double> ax;
    ax.reserve(2 * static_cast<std::size_t>(half) + 1);
    for (int k = -half; k <= half; ++k) ax.push_back(k * step);
    return ax;
}

int PhaseSpaceGrid::points() const {
    return 2 * static_cast<int>(std::floor(extent / step + 0.5)) + 1;
}

double WignerMap::at_origin() const {
    const int mid = grid.points() / 2;
    return values(mid, mid);
}

double WignerMap::max_abs_difference(const WignerMap& other) const {
    if (values.rows() != other.values.rows() || values.cols() != other.values.cols())
        throw DimensionError("Wigner maps have different grids");
    return (values - other.values).cwiseAbs().maxCoeff();
}

double WignerMap::max_abs_difference_in_disk(const WignerMap& other, double radius) const {
    if (values.rows() != other.values.rows() || values.cols() != other.values.cols())
        throw DimensionError("Wigner maps have different grids");
    const std::vector<double> ax = grid.axis();
    double worst = 0.0;
    for (int j = 0; j < values.rows(); ++j)
        for (int i = 0; i < values.cols(); ++i) {
            const double x = ax[static_cast<std::size_t>(i)];
            const double y = ax[static_cast<std::size_t>(j)];
            if (x * x + y * y > radius * radius + 1e-12) continue;
            worst = std::max(worst, std::abs(values(j, i) - other.values(j, i)));
        }
    return worst;
}

WignerMap wigner_numeric(const QuantumState& rho_ph, const PhaseSpaceGrid& grid) {
    grid.validate();
    if (rho_ph.space != Space::fock) throw DimensionError("wigner_numeric expects a Fock state");
    const Matrix rho = rho_ph.density();
    const int n_state = static_cast<int>(rho.rows());

    double mean_n = 0.0;
    for (int k = 0; k < n_state; ++k) mean_n += k * rho(k, k).real();
    if (mean_n > grid.extent * grid.extent)
        throw ConfigError("phase-space grid too small: <n> exceeds extent^2");

    const double corner_sq = 2.0 * grid.extent * grid.extent;
    const int dim = n_state + padding_levels(corner_sq);
    const FockSpace padded{dim - 1};
    const Matrix a = annihilation(padded).mat;

    // D(r e^{i th}) = P(th) exp(irK) P(-th) with K = -i(a' - a); one
    // eigendecomposition serves the whole map.
    const Complex i_unit(0.0, 1.0);
    const EigenSystem K = eigh(Matrix(-i_unit * (a.adjoint() - a)));

    Eigen::VectorXd parity(dim);
    for (int k = 0; k < dim; ++k) parity(k) = (k % 2 == 0) ? 1.0 : -1.0;

    const std::vector<double> ax = grid.axis();
    const int n_pts = grid.points();

    WignerMap map;
    map.grid = grid;
    map.source = "numeric";
    map.method = "displaced-parity pad+" + std::to_string(dim - n_state);
    map.values.resize(n_pts, n_pts);

    const Matrix v_top = K.vectors.topRows(n_state);   // rows the trace needs
    Matrix m_rows(n_state, dim);
    Matrix b_block(n_state, n_state);

    for (int j = 0; j < n_pts; ++j) {
        const double y = ax[static_cast<std::size_t>(j)];
        for (int i = 0; i < n_pts; ++i) {
            const double x = ax[static_cast<std::size_t>(i)];
            const double r = std::hypot(x, y);
            const double theta = (r > 0.0) ? std::atan2(y, x) : 0.0;

            Eigen::VectorXcd exp_ir(dim);
            for (int k = 0; k < dim; ++k) exp_ir(k) = std::exp(i_unit * (r * K.values(k)));

            // rows 0..n_state-1 of D(alpha)
            m_rows.noalias() = v_top * exp_ir.asDiagonal() * K.vectors.adjoint();
            for (int row = 0; row < n_state; ++row)
                m_rows.row(row) *= std::exp(i_unit * (theta * static_cast<double>(row)));
            for (int col = 0; col < dim; ++col)
                m_rows.col(col) *= std::exp(-i_unit * (theta * static_cast<double>(col)));

            // top-left block of D P D'
            b_block.noalias() = m_rows * parity.asDiagonal() * m_rows.adjoint();
            const Complex tr = (rho.transpose().cwiseProduct(b_block)).sum();
            if (std::abs(tr.imag()) > 1e-10)
                throw NumericalGateError("Wigner trace has imaginary residue");
            map.values(j, i) = (2.0 / pi) * tr.real();
        }
    }
    map.grid_integral = map.values.sum() * grid.step * grid.step;
    if (std::abs(map.grid_integral - 1.0) > 0.02)
        throw NumericalGateError("Wigner normalization check failed: grid too small");
    return map;
}

WignerMap wigner_even_analytic(const PhaseSpaceGrid& grid) {
    return analytic_map(grid, "even-target", &w_even);
}

WignerMap wigner_odd_analytic(const PhaseSpaceGrid& grid) {
    return analytic_map(grid, "odd-target", &w_odd);
}

NegativityReport negativity_report(const WignerMap& map) {
    const auto& w = map.values;
    const std::vector<double> ax = map.grid.axis();
    const int n = static_cast<int>(w.rows());
    const double da = map.grid.step * map.grid.step;

    NegativityReport report;
    report.min_value = w.minCoeff();
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (w(j, i) == report.min_value) {
                report.min_re = ax[static_cast<std::size_t>(i)];
                report.min_im = ax[static_cast<std::size_t>(j)];
            }
            if (w(j, i) < 0.0) report.negative_mass += w(j, i) * da;
        }
    if (report.min_value >= -1e-9) return report;

    // connected components of {W < -eps}, 4-neighbour connectivity
    const double eps = std::max(1e-9, 1e-3 * std::abs(report.min_value));
    Eigen::MatrixXi label = Eigen::MatrixXi::Zero(n, n);
    int next_label = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (w(j, i) >= -eps || label(j, i) != 0) continue;
            ++next_label;
            NegativeRegion region;
            region.min_value = 0.0;
            std::vector<std::pair<int, int>> stack{{j, i}};
            label(j, i) = next_label;
            while (!stack.empty()) {
                const auto [r, c] = stack.back();
                stack.pop_back();
                ++region.cells;
                if (w(r, c) < region.min_value) {
                    region.min_value = w(r, c);
                    region.re = ax[static_cast<std::size_t>(c)];
                    region.im = ax[static_cast<std::size_t>(r)];
                }
                const int dr[] = {1, -1, 0, 0};
                const int dc[] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    const int rr = r + dr[d], cc = c + dc[d];
                    if (rr < 0 || rr >= n || cc < 0 || cc >= n) continue;
                    if (w(rr, cc) >= -eps || label(rr, cc) != 0) continue;
                    label(rr, cc) = next_label;
                    stack.emplace_back(rr, cc);
                }
            }
            report.regions.push_back(region);
        }
    }
    std::sort(report.regions.begin(), report.regions.end(),
              [](const auto& a, const auto& b) { return a.min_value < b.min_value; });
    return report;
}

} // namespace parajc
