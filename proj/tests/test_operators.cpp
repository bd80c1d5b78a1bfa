#include <doctest.h>

#include <random>

#include "nhchain/errors.hpp"
#include "nhchain/operators.hpp"
#include "oracle.hpp"

using namespace nhchain;

namespace {

const PauliLabel kAllLabels[] = {PauliLabel::X, PauliLabel::Y, PauliLabel::Z,
                                 PauliLabel::Plus, PauliLabel::Minus, PauliLabel::Identity};

oracle::Mat oracle_pauli(PauliLabel l) {
  switch (l) {
    case PauliLabel::X: return oracle::sx();
    case PauliLabel::Y: return oracle::sy();
    case PauliLabel::Z: return oracle::sz();
    case PauliLabel::Plus: return oracle::sp();
    case PauliLabel::Minus: return oracle::sm();
    case PauliLabel::Identity: return oracle::id2();
  }
  return {};
}

StateVector random_vector(Eigen::Index n, std::mt19937_64& gen) {
  std::normal_distribution<double> d;
  StateVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(d(gen), d(gen));
  return v;
}

}  // namespace

TEST_CASE("pauli matrices in the (up, down) basis") {
  CHECK(pauli(PauliLabel::Z).isApprox(Mat2(Eigen::Vector2cd(1.0, -1.0).asDiagonal())));
  Mat2 plus;
  plus << 0, 1, 0, 0;
  CHECK(pauli(PauliLabel::Plus) == plus);
  CHECK((pauli(PauliLabel::X) * pauli(PauliLabel::X)).isIdentity());
  const Complex i{0, 1};
  CHECK(pauli(PauliLabel::Plus).isApprox((pauli(PauliLabel::X) + i * pauli(PauliLabel::Y)) / 2.0));
  CHECK(pauli(PauliLabel::Minus).isApprox((pauli(PauliLabel::X) - i * pauli(PauliLabel::Y)) / 2.0));
}

TEST_CASE("embed places site 1 in the most significant slot") {
  CHECK(embed(pauli(PauliLabel::Z), 1, 2).to_dense() ==
        DenseMatrix(Eigen::Vector4cd(1, 1, -1, -1).asDiagonal()));
  CHECK(embed(pauli(PauliLabel::Z), 2, 2).to_dense() ==
        DenseMatrix(Eigen::Vector4cd(1, -1, 1, -1).asDiagonal()));
  CHECK(embed(pauli(PauliLabel::X), 1, 1).to_dense() == DenseMatrix(pauli(PauliLabel::X)));
}

TEST_CASE("embed matches the brute-force Kronecker product for N <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (int site = 1; site <= n; ++site)
      for (PauliLabel l : kAllLabels) {
        const SparseOperator op = embed(pauli(l), site, n);
        CHECK(op.to_dense() == oracle::site_op(oracle_pauli(l), site, n));
        CHECK(op.nnz() <= (std::size_t{2} << (n - 1)));
      }
}

TEST_CASE("operators on distinct sites commute") {
  for (int n = 2; n <= 4; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (a == b) continue;
        for (PauliLabel la : kAllLabels)
          for (PauliLabel lb : {PauliLabel::X, PauliLabel::Y, PauliLabel::Plus}) {
            const DenseMatrix A = embed(pauli(la), a, n).to_dense();
            const DenseMatrix B = embed(pauli(lb), b, n).to_dense();
            CHECK((A * B - B * A).norm() == doctest::Approx(0.0));
          }
      }
}

TEST_CASE("embed rejects sites outside the chain") {
  CHECK_THROWS_AS(embed(pauli(PauliLabel::X), 0, 3), DomainError);
  CHECK_THROWS_AS(embed(pauli(PauliLabel::X), 4, 3), DomainError);
}

TEST_CASE("operator arithmetic") {
  const SparseOperator z1 = embed(pauli(PauliLabel::Z), 1, 2);
  const SparseOperator z2 = embed(pauli(PauliLabel::Z), 2, 2);
  const StateVector dd = basis_state("dd");
  CHECK(op_matvec(op_add(z1, z2), dd).isApprox(-2.0 * dd));

  const StateVector v = StateVector::Random(8);
  const Complex i{0, 1};
  CHECK(op_matvec(op_scale(i, SparseOperator::identity(8)), v).isApprox(i * v));

  CHECK(op_matvec(embed(pauli(PauliLabel::Plus), 1, 2), dd) == basis_state("ud"));

  // Canonical storage: the sum of an operator and its negation is empty.
  CHECK(op_add(z1, op_scale(-1.0, z1)).nnz() == 0);
  CHECK(op_add(z1, z2) == op_add(z2, z1));

  CHECK_THROWS_AS(op_add(z1, SparseOperator::identity(8)), DomainError);
  CHECK_THROWS_AS(op_matvec(z1, StateVector::Zero(8)), DomainError);
}

TEST_CASE("from_triplets sums duplicates and rejects out-of-range entries") {
  const auto op = SparseOperator::from_triplets(3, {{1, 2, 1.0}, {0, 0, 2.0}, {1, 2, Complex(0, 1)}});
  CHECK(op.nnz() == 2);
  CHECK(op.coeff(1, 2) == Complex(1, 1));
  CHECK(op.coeff(2, 2) == Complex(0, 0));
  CHECK_THROWS_AS(SparseOperator::from_triplets(2, {{2, 0, 1.0}}), DomainError);
}

TEST_CASE("matvec agrees with dense multiplication and is linear") {
  std::mt19937_64 gen(11);
  for (int n = 1; n <= 4; ++n) {
    const SparseOperator a =
        op_add(op_scale(Complex(0.3, -0.2), embed(pauli(PauliLabel::Y), 1, n)),
               op_mul(embed(pauli(PauliLabel::Plus), n, n), embed(pauli(PauliLabel::X), 1, n)));
    const DenseMatrix d = a.to_dense();
    for (int trial = 0; trial < 20; ++trial) {
      const StateVector u = random_vector(d.rows(), gen);
      const StateVector w = random_vector(d.rows(), gen);
      const Complex alpha(0.7, -1.1), beta(-0.4, 0.25);
      CHECK((op_matvec(a, u) - d * u).norm() < 1e-13);
      const StateVector lhs = op_matvec(a, alpha * u + beta * w);
      const StateVector rhs = alpha * op_matvec(a, u) + beta * op_matvec(a, w);
      CHECK((lhs - rhs).norm() < 1e-12);
    }
  }
}

TEST_CASE("adjoint and norm") {
  const SparseOperator a = op_scale(Complex(0, 2), embed(pauli(PauliLabel::Plus), 1, 2));
  CHECK(a.adjoint().to_dense() == a.to_dense().adjoint());
  CHECK(a.norm_inf() == doctest::Approx(2.0));
}
