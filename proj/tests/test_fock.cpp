#include <doctest.h>

#include "parajc/fock.hpp"
#include "oracles.hpp"

using namespace parajc;

TEST_CASE("annihilation operator matrix elements") {
    SUBCASE("n_max = 1 is the 2x2 lowering matrix") {
        const Operator a = annihilation(FockSpace{1});
        CHECK(a.mat(0, 1).real() == doctest::Approx(1.0));
        CHECK(std::abs(a.mat(0, 0)) == 0.0);
        CHECK(std::abs(a.mat(1, 0)) == 0.0);
        CHECK(std::abs(a.mat(1, 1)) == 0.0);
    }
    SUBCASE("<2|a|3> = sqrt(3)") {
        const Operator a = annihilation(FockSpace{3});
        CHECK(a.mat(2, 3).real() == doctest::Approx(std::sqrt(3.0)));
    }
    SUBCASE("number operator diagonal") {
        const FockSpace f{3};
        const Matrix n = (creation(f) * annihilation(f)).mat;
        for (int k = 0; k <= 3; ++k) CHECK(n(k, k).real() == doctest::Approx(k));
        CHECK((n - number_operator(f).mat).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    }
    SUBCASE("truncation row: a|n_max> = sqrt(n_max)|n_max-1>") {
        const Operator a = annihilation(FockSpace{5});
        CHECK(a.mat(4, 5).real() == doctest::Approx(std::sqrt(5.0)));
    }
    SUBCASE("invalid space rejected") {
        CHECK_THROWS_AS(annihilation(FockSpace{0}), DimensionError);
    }
}

TEST_CASE("creation is the exact adjoint") {
    const FockSpace f{7};
    const Matrix a = annihilation(f).mat;
    const Matrix ad = creation(f).mat;
    CHECK((ad - a.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("commutator [a, a'] is identity on the untruncated block") {
    const FockSpace f{6};
    const Matrix a = annihilation(f).mat;
    const Matrix comm = a * a.adjoint() - a.adjoint() * a;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(std::abs(comm(i, j) - (i == j ? 1.0 : 0.0)) < 1e-14);
    // standard truncation artifact on the last diagonal entry
    CHECK(comm(6, 6).real() == doctest::Approx(-6.0));
}

TEST_CASE("qubit operators") {
    const auto [sp, sm] = qubit_ops();
    SUBCASE("sigma+ |g> = |e>") {
        Vector g = Vector::Zero(2); g(qubit_g) = 1.0;
        const Vector e = sp.mat * g;
        CHECK(std::abs(e(qubit_e) - 1.0) < 1e-15);
        CHECK(std::abs(e(qubit_g)) < 1e-15);
    }
    SUBCASE("sigma+ sigma- = |e><e|") {
        const Matrix proj = (sp * sm).mat;
        CHECK(proj(qubit_e, qubit_e).real() == doctest::Approx(1.0));
        CHECK(std::abs(proj(qubit_g, qubit_g)) < 1e-15);
    }
    SUBCASE("sigma- |g> = 0") {
        Vector g = Vector::Zero(2); g(qubit_g) = 1.0;
        CHECK((sm.mat * g).norm() == doctest::Approx(0.0));
    }
}

TEST_CASE("tensor product ordering and algebra") {
    const FockSpace f{5};
    const CompositeSpace cs{f};
    SUBCASE("index(e,3) = 9 for n_max=5") { CHECK(cs.index(qubit_e, 3) == 9); }
    SUBCASE("I (x) n is diagonal in photon number") {
        const Operator num = tensor(qubit_identity(), number_operator(f));
        const QuantumState e2 = basis_state(cs, qubit_e, 2);
        const Vector out = num.mat * e2.vec;
        CHECK((out - 2.0 * e2.vec).norm() < 1e-15);
    }
    SUBCASE("sigma+ (x) I flips |g,1> to |e,1>") {
        const Operator flip = tensor(qubit_ops().first, fock_identity(f));
        const Vector out = flip.mat * basis_state(cs, qubit_g, 1).vec;
        CHECK((out - basis_state(cs, qubit_e, 1).vec).norm() < 1e-15);
    }
    SUBCASE("matches the naive Kronecker product") {
        const Operator a = annihilation(f);
        const auto sp = qubit_ops().first;
        const Matrix expect = oracles::kron_naive(sp.mat, a.mat);
        CHECK((tensor(sp, a).mat - expect).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("mixed-product property with random factors") {
        for (int trial = 0; trial < 5; ++trial) {
            Matrix qa = Matrix::Random(2, 2), qb = Matrix::Random(2, 2);
            Matrix fa = Matrix::Random(f.dim(), f.dim()), fb = Matrix::Random(f.dim(), f.dim());
            const Operator lhs = tensor({Space::qubit, qa}, {Space::fock, fa}) *
                                 tensor({Space::qubit, qb}, {Space::fock, fb});
            const Operator rhs = tensor({Space::qubit, qa * qb}, {Space::fock, fa * fb});
            CHECK((lhs.mat - rhs.mat).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("space-tag mismatch throws") {
        CHECK_THROWS_AS(tensor(annihilation(f), annihilation(f)), DimensionError);
    }
}

TEST_CASE("basis states") {
    const CompositeSpace cs{FockSpace{5}};
    SUBCASE("|e,0> sits at index 6") {
        const QuantumState s = basis_state(cs, qubit_e, 0);
        CHECK(std::abs(s.vec(6) - 1.0) < 1e-15);
        CHECK(s.vec.norm() == doctest::Approx(1.0));
    }
    SUBCASE("norm and orthogonality") {
        CHECK(basis_state(cs, qubit_g, 3).vec.norm() == doctest::Approx(1.0));
        const Complex ov = basis_state(cs, qubit_e, 0).vec.dot(basis_state(cs, qubit_g, 0).vec);
        CHECK(std::abs(ov) == 0.0);
    }
    SUBCASE("number expectation of |q,n> is exactly n") {
        const Operator num = tensor(qubit_identity(), number_operator(cs.fock));
        for (int q = 0; q < 2; ++q)
            for (int n = 0; n <= 5; ++n) {
                const Vector v = basis_state(cs, q, n).vec;
                CHECK(v.dot(num.mat * v).real() == doctest::Approx(n));
            }
    }
    SUBCASE("photon number out of range throws") {
        CHECK_THROWS_AS(basis_state(cs, qubit_e, 6), DimensionError);
    }
}

TEST_CASE("state validation gates") {
    const CompositeSpace cs{FockSpace{3}};
    SUBCASE("normalized pure state passes") {
        CHECK_NOTHROW(validate_state(basis_state(cs, qubit_g, 1)));
    }
    SUBCASE("unnormalized pure state fails") {
        QuantumState s = basis_state(cs, qubit_g, 1);
        s.vec *= 1.001;
        CHECK_THROWS_AS(validate_state(s), NumericalGateError);
    }
    SUBCASE("valid random density passes") {
        const QuantumState s = density_state(Space::fock, oracles::random_density(4, 3));
        CHECK_NOTHROW(validate_state(s));
    }
    SUBCASE("negative eigenvalue fails") {
        Matrix bad = Matrix::Zero(2, 2);
        bad(0, 0) = 1.5; bad(1, 1) = -0.5;
        CHECK_THROWS_AS(validate_state(density_state(Space::fock, bad)), NumericalGateError);
    }
}
