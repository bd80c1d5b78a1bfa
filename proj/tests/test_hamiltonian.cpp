#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nhchain/errors.hpp"
#include "nhchain/hamiltonian.hpp"
#include "oracle.hpp"

using namespace nhchain;

TEST_CASE("two-site Hamiltonian matches the explicit 4x4 matrix") {
  for (double j : {0.0, 0.1, 0.3, 0.7})
    for (double h : {0.0, 0.05, 0.2})
      for (double theta : {0.0, 0.3, std::numbers::pi / 4, 2.0}) {
        const ChainParams p{2, j, 1.0, h, theta};
        const DenseMatrix diff = build_hamiltonian(p).to_dense() - oracle::two_site_matrix(j, 1.0, h, theta);
        CHECK(diff.cwiseAbs().maxCoeff() < 1e-15);
      }
}

TEST_CASE("Hamiltonian matches the Kronecker reference for N <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const ChainParams p{n, 0.23, 0.8, 0.17, 1.1};
    const DenseMatrix diff = build_hamiltonian(p).to_dense() - oracle::hamiltonian(n, 0.23, 0.8, 0.17, 1.1);
    CHECK(diff.cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("trace is fixed by the loss term alone") {
  for (int n = 2; n <= 8; ++n) {
    const ChainParams p{n, 0.4, 1.3, 0.2, 0.7};
    const Complex tr = build_hamiltonian(p).to_dense().trace();
    const Complex expected(0.0, -(1.3 / 2) * n * std::ldexp(1.0, n - 1));
    CHECK(std::abs(tr - expected) < 1e-12);
  }
}

TEST_CASE("Hermitian without loss") {
  const ChainParams p{4, 0.35, 0.0, 0.2, 0.9};
  const SparseOperator h = build_hamiltonian(p);
  CHECK(h == h.adjoint());
}

TEST_CASE("the angle is 2 pi periodic") {
  const ChainParams a{3, 0.2, 1.0, 0.1, 0.5};
  ChainParams b = a;
  b.angle += 2 * std::numbers::pi;
  const DenseMatrix diff = build_hamiltonian(a).to_dense() - build_hamiltonian(b).to_dense();
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-15);
  CHECK(b.reported_angle() == doctest::Approx(0.5));
}

TEST_CASE("chain and field terms add up to the full Hamiltonian") {
  const ChainParams p{4, 0.2, 1.0, 0.1, 0.3};
  CHECK(build_hamiltonian(p) == op_add(build_lossy_chain(p), build_field_term(p)));
  ChainParams zero = p;
  zero.field = 0.0;
  CHECK(build_field_term(zero).nnz() == 0);
}

TEST_CASE("the all-down state is untouched by the loss term") {
  const ChainParams p{3, 0.0, 1.0, 0.0, 0.0};
  const StateVector ddd = basis_state("ddd");
  CHECK(op_matvec(build_hamiltonian(p), ddd).norm() == doctest::Approx(0.0));
  const StateVector uuu = basis_state("uuu");
  CHECK(op_matvec(build_hamiltonian(p), uuu).isApprox(Complex(0, -1.5) * uuu));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((ChainParams{1, 0.1, 1.0, 0.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((ChainParams{25, 0.1, 1.0, 0.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((ChainParams{3, -0.1, 1.0, 0.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((ChainParams{3, 0.1, -1.0, 0.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((ChainParams{3, 0.1, 1.0, -0.2, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((ChainParams{3, 0.1, 1.0, 0.0, NAN}.validate()), DomainError);
  CHECK_NOTHROW((ChainParams{3, 0.1, 0.0, 0.0, 0.0}.validate()));
}
