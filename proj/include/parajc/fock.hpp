#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "parajc/errors.hpp"

namespace parajc {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;

/// Which Hilbert space a matrix or vector lives on.
enum class Space { qubit, fock, composite };

/// Truncated bosonic Fock space |0> ... |n_max>.
struct FockSpace {
    int n_max = 10;

    int dim() const { return n_max + 1; }
    bool valid() const { return n_max >= 1; }
};

/// Qubit (x) Fock product space. Qubit basis order: index 0 = |g>, index 1 = |e>.
/// Product basis ordering is qubit-major: index(q, n) = q*(n_max+1) + n,
/// so a composite vector is the |g> block followed by the |e> block.
struct CompositeSpace {
    FockSpace fock;

    int dim() const { return 2 * fock.dim(); }
    int index(int qubit, int n) const { return qubit * fock.dim() + n; }
};

inline constexpr int qubit_g = 0;
inline constexpr int qubit_e = 1;

/// Dense complex matrix tagged with the space it acts on.
struct Operator {
    Space space = Space::fock;
    Matrix mat;

    int dim() const { return static_cast<int>(mat.rows()); }
    Operator adjoint() const { return {space, mat.adjoint()}; }
};

Operator operator*(const Operator& a, const Operator& b);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(Complex scale, const Operator& a);
Operator operator*(double scale, const Operator& a);

/// Pure state vector or density matrix on a tagged space.
struct QuantumState {
    Space space = Space::composite;
    Vector vec;  // nonempty for pure states
    Matrix rho;  // nonempty for density matrices

    bool is_pure() const { return vec.size() > 0; }
    int dim() const { return is_pure() ? static_cast<int>(vec.size())
                                       : static_cast<int>(rho.rows()); }
    /// Density-matrix view (|psi><psi| for pure states).
    Matrix density() const { return is_pure() ? Matrix(vec * vec.adjoint()) : rho; }
};

QuantumState pure_state(Space space, Vector v);
QuantumState density_state(Space space, Matrix m);

/// Throws NumericalGateError if the state violates its invariants
/// (pure: unit norm to 1e-9; density: Hermitian/trace-one to 1e-9,
/// eigenvalues >= -1e-9).
void validate_state(const QuantumState& s);

/// Annihilation operator: <n-1|a|n> = sqrt(n). Standard truncation at n_max.
Operator annihilation(const FockSpace& space);
Operator creation(const FockSpace& space);
Operator number_operator(const FockSpace& space);
/// Photon-number parity diag((-1)^n).
Operator parity_operator(const FockSpace& space);
Operator fock_identity(const FockSpace& space);
Operator qubit_identity();

/// (sigma_plus, sigma_minus) with sigma_plus = |e><g|.
std::pair<Operator, Operator> qubit_ops();

/// Kronecker product qubit_op (x) fock_op, consistent with index(q, n) ordering.
/// Throws DimensionError on mismatched space tags or shapes.
Operator tensor(const Operator& qubit_op, const Operator& fock_op);

/// Product basis vector |q, n>.
QuantumState basis_state(const CompositeSpace& space, int qubit, int n);
/// Fock basis vector |n>.
QuantumState fock_basis_state(const FockSpace& space, int n);

} // namespace parajc
