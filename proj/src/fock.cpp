#include "parajc/fock.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace parajc {

namespace {

void require_same_space(const Operator& a, const Operator& b) {
    if (a.space != b.space || a.mat.rows() != b.mat.rows() || a.mat.cols() != b.mat.cols())
        throw DimensionError("operator space/shape mismatch");
}

} // namespace

Operator operator*(const Operator& a, const Operator& b) {
    require_same_space(a, b);
    return {a.space, a.mat * b.mat};
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_space(a, b);
    return {a.space, a.mat + b.mat};
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_space(a, b);
    return {a.space, a.mat - b.mat};
}

Operator operator*(Complex scale, const Operator& a) { return {a.space, scale * a.mat}; }
Operator operator*(double scale, const Operator& a) { return {a.space, scale * a.mat}; }

QuantumState pure_state(Space space, Vector v) {
    QuantumState s;
    s.space = space;
    s.vec = std::move(v);
    return s;
}

QuantumState density_state(Space space, Matrix m) {
    QuantumState s;
    s.space = space;
    s.rho = std::move(m);
    return s;
}

void validate_state(const QuantumState& s) {
    if (s.is_pure()) {
        const double norm = s.vec.norm();
        if (std::abs(norm * norm - 1.0) > 1e-9)
            throw NumericalGateError("pure state norm^2 deviates from 1 by " +
                                     std::to_string(norm * norm - 1.0));
        return;
    }
    const double herm = (s.rho - s.rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-9)
        throw NumericalGateError("density matrix not Hermitian: max deviation " +
                                 std::to_string(herm));
    const double tr = s.rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-9)
        throw NumericalGateError("density matrix trace deviates from 1 by " +
                                 std::to_string(tr - 1.0));
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (s.rho + s.rho.adjoint()),
                                             Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
        throw NumericalGateError("density matrix has eigenvalue " +
                                 std::to_string(es.eigenvalues().minCoeff()));
}

Operator annihilation(const FockSpace& space) {
    if (!space.valid()) throw DimensionError("FockSpace needs n_max >= 1");
    Matrix a = Matrix::Zero(space.dim(), space.dim());
    for (int n = 1; n <= space.n_max; ++n)
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {Space::fock, std::move(a)};
}

Operator creation(const FockSpace& space) { return annihilation(space).adjoint(); }

Operator number_operator(const FockSpace& space) {
    Matrix n = Matrix::Zero(space.dim(), space.dim());
    for (int k = 0; k <= space.n_max; ++k) n(k, k) = static_cast<double>(k);
    return {Space::fock, std::move(n)};
}

Operator parity_operator(const FockSpace& space) {
    Matrix p = Matrix::Zero(space.dim(), space.dim());
    for (int k = 0; k <= space.n_max; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    return {Space::fock, std::move(p)};
}

Operator fock_identity(const FockSpace& space) {
    return {Space::fock, Matrix::Identity(space.dim(), space.dim())};
}

Operator qubit_identity() { return {Space::qubit, Matrix::Identity(2, 2)}; }

std::pair<Operator, Operator> qubit_ops() {
    Matrix sp = Matrix::Zero(2, 2);
    sp(qubit_e, qubit_g) = 1.0;
    Operator sigma_plus{Space::qubit, sp};
    return {sigma_plus, sigma_plus.adjoint()};
}

Operator tensor(const Operator& qubit_op, const Operator& fock_op) {
    if (qubit_op.space != Space::qubit || qubit_op.dim() != 2)
        throw DimensionError("tensor: first factor must be a 2x2 qubit operator");
    if (fock_op.space != Space::fock)
        throw DimensionError("tensor: second factor must be a Fock operator");
    const int df = fock_op.dim();
    Matrix out = Matrix::Zero(2 * df, 2 * df);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block(i * df, j * df, df, df) = qubit_op.mat(i, j) * fock_op.mat;
    return {Space::composite, std::move(out)};
}

QuantumState basis_state(const CompositeSpace& space, int qubit, int n) {
    if (qubit != qubit_g && qubit != qubit_e)
        throw DimensionError("qubit label must be 0 (g) or 1 (e)");
    if (n < 0 || n > space.fock.n_max)
        throw DimensionError("photon number " + std::to_string(n) +
                             " outside truncation n_max=" + std::to_string(space.fock.n_max));
    Vector v = Vector::Zero(space.dim());
    v(space.index(qubit, n)) = 1.0;
    return pure_state(Space::composite, std::move(v));
}

QuantumState fock_basis_state(const FockSpace& space, int n) {
    if (n < 0 || n > space.n_max)
        throw DimensionError("photon number " + std::to_string(n) +
                             " outside truncation n_max=" + std::to_string(space.n_max));
    Vector v = Vector::Zero(space.dim());
    v(n) = 1.0;
    return pure_state(Space::fock, std::move(v));
}

} // namespace parajc
