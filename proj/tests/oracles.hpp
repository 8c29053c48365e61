// Test-only reference implementations, independent of the library internals:
// naive index-loop constructions used to cross-check the fast paths.
#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace oracles {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Kronecker product by explicit index arithmetic.
inline Matrix kron_naive(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Partial trace over the qubit for a qubit-major composite density matrix,
/// summing <q,m| rho |q,n> elementwise.
inline Matrix partial_trace_qubit_naive(const Matrix& rho, int dim_f) {
    Matrix out = Matrix::Zero(dim_f, dim_f);
    for (int q = 0; q < 2; ++q)
        for (int m = 0; m < dim_f; ++m)
            for (int n = 0; n < dim_f; ++n)
                out(m, n) += rho(q * dim_f + m, q * dim_f + n);
    return out;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline Vector random_state(int dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(n(rng()), n(rng()));
    return v / v.norm();
}

inline Matrix random_density(int dim, int rank) {
    std::normal_distribution<double> n(0.0, 1.0);
    Matrix rho = Matrix::Zero(dim, dim);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    double total = 0.0;
    std::vector<double> w(static_cast<std::size_t>(rank));
    for (auto& x : w) { x = u(rng()); total += x; }
    for (int k = 0; k < rank; ++k) {
        const Vector v = random_state(dim);
        rho += (w[static_cast<std::size_t>(k)] / total) * (v * v.adjoint());
    }
    return rho;
}

/// Haar-ish random 2x2 unitary from a random Hermitian generator.
inline Eigen::Matrix2cd random_su2() {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Matrix2cd h;
    const double a = n(rng()), b = n(rng()), c = n(rng()), d = n(rng());
    h << Complex(a, 0), Complex(b, c), Complex(b, -c), Complex(d, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
    Eigen::Vector2cd phases;
    for (int i = 0; i < 2; ++i) phases(i) = std::exp(Complex(0.0, es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace oracles
