#pragma once

#include <functional>
#include <utility>

#include <Eigen/Dense>

#include "parajc/fock.hpp"

namespace parajc {

struct EigenSystem {
    Eigen::VectorXd values;   // ascending
    Matrix vectors;           // columns
};

/// Eigenvalues of a Hermitian matrix, ascending. Throws NumericalGateError on
/// solver failure.
Eigen::VectorXd eigvalsh(const Matrix& m);

/// Eigenvalues and eigenvectors of a Hermitian matrix.
EigenSystem eigh(const Matrix& m);

/// Golden-section minimum of a unimodal function on [lo, hi] to an argument
/// tolerance xtol. Returns (x_min, f(x_min)).
std::pair<double, double> golden_min(const std::function<double(double)>& f,
                                     double lo, double hi, double xtol);

} // namespace parajc
