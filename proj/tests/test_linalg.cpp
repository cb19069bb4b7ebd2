#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "test_helpers.hpp"
#include "xxring/linalg.hpp"
#include "xxring/ring.hpp"

using namespace xxring;
using xxtest::bits_ket;
using xxtest::make_rng;
using xxtest::random_density;
using xxtest::random_hermitian;
using xxtest::random_matrix;

TEST_SUITE("numkernel") {

TEST_CASE("matrix storage is bit-exact") {
  auto gen = make_rng(11);
  const ComplexMatrix m = random_matrix(gen, 3, 5);
  const ComplexMatrix copy(3, 5, m.entries());
  for (std::size_t i = 0; i < m.entries().size(); ++i) {
    CHECK(copy.entries()[i] == m.entries()[i]);
  }
}

TEST_CASE("kron identities") {
  CHECK(max_abs_diff(kron(pauli_id(), pauli_id()), ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix zid = kron(pauli_z(), pauli_id());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx expect = (i == j) ? cplx{i < 2 ? 1.0 : -1.0, 0.0} : cplx{0.0, 0.0};
      CHECK(zid(i, j) == expect);
    }
  }

  // X (x) X flips both qubits: |00> -> |11>.
  const ComplexVector flipped = kron(pauli_x(), pauli_x()) * bits_ket({0, 0});
  CHECK(std::abs(inner(bits_ket({1, 1}), flipped) - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("kron mixed-product property") {
  auto gen = make_rng(23);
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix a = random_matrix(gen, 2, 3);
    const ComplexMatrix c = random_matrix(gen, 3, 2);
    const ComplexMatrix b = random_matrix(gen, 2, 2);
    const ComplexMatrix d = random_matrix(gen, 2, 2);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) <= 1e-12);
  }
}

TEST_CASE("dagger") {
  CHECK(max_abs_diff(dagger(pauli_y()), pauli_y()) == 0.0);

  auto gen = make_rng(5);
  const ComplexMatrix a = random_matrix(gen, 4, 4);
  CHECK(max_abs_diff(dagger(dagger(a)), a) == 0.0);

  ComplexMatrix column(2, 1);
  column(0, 0) = cplx{1.0, 2.0};
  column(1, 0) = cplx{3.0, -4.0};
  const ComplexMatrix row = dagger(column);
  CHECK(row.rows() == 1);
  CHECK(row.cols() == 2);
  CHECK(row(0, 0) == cplx{1.0, -2.0});
  CHECK(row(0, 1) == cplx{3.0, 4.0});
}

TEST_CASE("partial trace of product and mixed states") {
  const ComplexMatrix proj000 = outer(basis_vector(8, 0));
  const ComplexMatrix reduced = partial_trace(proj000, {2, 2, 2}, {0, 1});
  CHECK(max_abs_diff(reduced, outer(basis_vector(4, 0))) <= 1e-15);

  ComplexMatrix mixed8 = ComplexMatrix::identity(8);
  mixed8 *= cplx{0.125, 0.0};
  ComplexMatrix mixed4 = ComplexMatrix::identity(4);
  mixed4 *= cplx{0.25, 0.0};
  CHECK(max_abs_diff(partial_trace(mixed8, {2, 2, 2}, {0, 1}), mixed4) <= 1e-15);
}

TEST_CASE("partial trace respects the ring's cyclic symmetry") {
  const ComplexMatrix chi = thermal_state({1.0, 0.0, 1.0});
  const ComplexMatrix ab = partial_trace(chi, {2, 2, 2}, {0, 1});
  const ComplexMatrix bc = partial_trace(chi, {2, 2, 2}, {1, 2});
  const ComplexMatrix ac = partial_trace(chi, {2, 2, 2}, {0, 2});
  CHECK(max_abs_diff(ab, bc) <= 1e-12);
  CHECK(max_abs_diff(ab, ac) <= 1e-12);
}

TEST_CASE("partial trace preserves trace and validates dims") {
  auto gen = make_rng(37);
  const ComplexMatrix rho = random_density(gen, 8);
  const ComplexMatrix reduced = partial_trace(rho, {2, 4}, {1});
  CHECK(std::abs(trace(reduced) - trace(rho)) <= 1e-12);

  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2, 2}, {3}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2, 2}, {1, 1}), std::invalid_argument);
}

TEST_CASE("hermitian_eig on Pauli matrices") {
  const HermitianEig ez = hermitian_eig(pauli_z());
  CHECK(ez.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(ez.eigenvalues[1] == doctest::Approx(-1.0));
  CHECK(std::abs(inner(ez.eigenvector(0), basis_vector(2, 0))) == doctest::Approx(1.0));
  CHECK(std::abs(inner(ez.eigenvector(1), basis_vector(2, 1))) == doctest::Approx(1.0));

  const HermitianEig ex = hermitian_eig(pauli_x());
  CHECK(ex.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(ex.eigenvalues[1] == doctest::Approx(-1.0));
  ComplexVector plus(2), minus(2);
  plus[0] = plus[1] = 1.0 / std::sqrt(2.0);
  minus[0] = 1.0 / std::sqrt(2.0);
  minus[1] = -minus[0];
  CHECK(std::abs(inner(ex.eigenvector(0), plus)) == doctest::Approx(1.0));
  CHECK(std::abs(inner(ex.eigenvector(1), minus)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reproduces the analytic eigenvalue multiset") {
  const HermitianEig eig = hermitian_eig(build_hamiltonian({1.0, 0.0, 1.0}));
  const double expected[] = {2.0, 2.0, 0.0, 0.0, -1.0, -1.0, -1.0, -1.0};
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(eig.eigenvalues[k] == doctest::Approx(expected[k]).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eig reconstruction, orthonormality, determinism") {
  auto gen = make_rng(101);
  for (std::size_t n : {2, 4, 8}) {
    const ComplexMatrix a = random_hermitian(gen, n);
    const HermitianEig eig = hermitian_eig(a);

    ComplexMatrix rebuilt(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      rebuilt += cplx{eig.eigenvalues[k], 0.0} * outer(eig.eigenvector(k));
    }
    CHECK(max_abs_diff(rebuilt, a) <= 1e-9 * frobenius_norm(a));

    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        const cplx overlap = inner(eig.eigenvector(k), eig.eigenvector(l));
        CHECK(std::abs(overlap - (k == l ? cplx{1.0, 0.0} : cplx{0.0, 0.0})) <= 1e-10);
      }
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      CHECK(eig.eigenvalues[k] >= eig.eigenvalues[k + 1]);
    }

    const HermitianEig again = hermitian_eig(a);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(eig.eigenvalues[k] == again.eigenvalues[k]);  // bitwise
    }
    CHECK(max_abs_diff(eig.eigenvectors, again.eigenvectors) == 0.0);
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix a(2, 2);
  a(0, 1) = cplx{1.0, 0.0};
  CHECK_THROWS_AS(hermitian_eig(a), std::invalid_argument);
}

TEST_CASE("validate_density") {
  ComplexMatrix mixed8 = ComplexMatrix::identity(8);
  mixed8 *= cplx{0.125, 0.0};
  CHECK(validate_density(mixed8, 1e-12));

  CHECK_FALSE(validate_density(pauli_x(), 1e-10));  // traceless

  const ComplexMatrix chi = thermal_state({-1.0, 0.5, 1.0 / 0.7});
  CHECK(validate_density(chi, 1e-10));

  // Negative eigenvalue beyond tolerance.
  ComplexMatrix neg = ComplexMatrix::identity(2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_FALSE(validate_density(neg, 1e-10));
}

}  // TEST_SUITE
