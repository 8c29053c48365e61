#include "parajc/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "parajc/errors.hpp"

namespace parajc {

Eigen::VectorXd eigvalsh(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalGateError("Hermitian eigensolver failed to converge");
    return es.eigenvalues();
}

EigenSystem eigh(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success)
        throw NumericalGateError("Hermitian eigensolver failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double lo, double hi, double xtol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

} // namespace parajc
