#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "loccert/linalg.hpp"
#include "support/test_support.hpp"

using namespace loccert;
using loccert::testkit::ket;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

TEST(FrobeniusNorm, ZeroMatrixIsZero) {
  EXPECT_EQ(frobenius_norm(ComplexMatrix::Zero(3, 3)), 0.0);
}

TEST(FrobeniusNorm, IdentityIsSqrtDim) {
  for (int d : {1, 2, 5, 9}) {
    EXPECT_NEAR(frobenius_norm(ComplexMatrix::Identity(d, d)), std::sqrt(d), 1e-14);
  }
}

TEST(FrobeniusNorm, PauliX) {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  EXPECT_NEAR(frobenius_norm(x), std::numbers::sqrt2, 1e-15);
}

TEST(FrobeniusNorm, EntrywiseOracle) {
  std::mt19937_64 rng(7);
  const ComplexMatrix m = testkit::random_matrix(rng, 3, 5);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) sum += std::norm(m(i, j));
  }
  EXPECT_NEAR(frobenius_norm(m), std::sqrt(sum), 1e-12);
}

TEST(Tensor, ZeroZero) {
  const Ket v = tensor(basis_ket(2, 0), basis_ket(2, 0));
  EXPECT_TRUE(v.isApprox(ket({1, 0, 0, 0})));
}

TEST(Tensor, OnePlus) {
  const Ket plus = ket({kInvSqrt2, kInvSqrt2});
  const Ket v = tensor(basis_ket(2, 1), plus);
  EXPECT_TRUE(v.isApprox(ket({0, 0, kInvSqrt2, kInvSqrt2})));
}

TEST(Tensor, ThreeQutritsGiveDim27) {
  std::mt19937_64 rng(1);
  std::vector<Ket> kets{testkit::random_ket(rng, 3), testkit::random_ket(rng, 3),
                        testkit::random_ket(rng, 3)};
  const Ket v = tensor(std::span<const Ket>(kets));
  EXPECT_EQ(v.size(), 27);
  EXPECT_TRUE(v.isApprox(testkit::kron_oracle(kets), 1e-14));
}

TEST(Tensor, FirstPartySlowest) {
  const Ket v = tensor(basis_ket(2, 1), basis_ket(3, 2));
  EXPECT_EQ(v(1 * 3 + 2), Complex(1.0));
}

TEST(Tensor, EmptyListThrows) {
  std::vector<Ket> none;
  EXPECT_THROW((void)tensor(std::span<const Ket>(none)), std::invalid_argument);
  std::vector<ComplexMatrix> no_ops;
  EXPECT_THROW((void)tensor(std::span<const ComplexMatrix>(no_ops)), std::invalid_argument);
}

TEST(Kron, ActsFactorwise) {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = testkit::random_matrix(rng, 2, 2);
  const ComplexMatrix b = testkit::random_matrix(rng, 3, 3);
  const Ket x = testkit::random_ket(rng, 2);
  const Ket y = testkit::random_ket(rng, 3);
  EXPECT_TRUE((kron(a, b) * tensor(x, y)).isApprox(tensor(Ket(a * x), Ket(b * y)), 1e-12));
}

TEST(Inner, Basics) {
  EXPECT_EQ(inner(basis_ket(2, 0), basis_ket(2, 1)), Complex(0.0));
  const Ket plus = ket({kInvSqrt2, kInvSqrt2});
  EXPECT_NEAR(std::abs(inner(plus, basis_ket(2, 0)) - kInvSqrt2), 0.0, 1e-15);
}

TEST(Inner, OneTwoPlusMinusOrthogonal) {
  // |1+2>, |1-2> in one-based labels on a qutrit.
  const Ket p = ket({0, kInvSqrt2, kInvSqrt2});
  const Ket m = ket({0, kInvSqrt2, -kInvSqrt2});
  EXPECT_NEAR(std::abs(inner(p, m)), 0.0, 1e-15);
}

TEST(Inner, ConjugateLinearInFirst) {
  std::mt19937_64 rng(5);
  const Ket a = testkit::random_ket(rng, 4);
  const Ket b = testkit::random_ket(rng, 4);
  const Complex c(0.3, -1.2);
  EXPECT_NEAR(std::abs(inner(Ket(c * a), b) - std::conj(c) * inner(a, b)), 0.0, 1e-14);
  EXPECT_NEAR(inner(a, a).imag(), 0.0, 1e-15);
  EXPECT_GT(inner(a, a).real(), 0.0);
}

TEST(Inner, DimensionMismatchThrows) {
  EXPECT_THROW((void)inner(basis_ket(2, 0), basis_ket(3, 0)), std::invalid_argument);
}

TEST(Dyad, MismatchedSidesThrow) {
  EXPECT_THROW(Dyad(basis_ket(2, 0), basis_ket(3, 0)), std::invalid_argument);
}

TEST(Dyad, MatrixAndTrace) {
  const Dyad d(basis_ket(3, 0), basis_ket(3, 2));
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(0, 2) = 1.0;
  EXPECT_TRUE(d.matrix().isApprox(expected));
  EXPECT_EQ(d.trace(), Complex(0.0));
}

TEST(NumericalRank, EmptyIsZero) {
  std::vector<ComplexMatrix> none;
  EXPECT_EQ(numerical_rank(std::span<const ComplexMatrix>(none)), 0u);
}

TEST(NumericalRank, QubitOffDiagonalDyads) {
  std::vector<Dyad> d{Dyad(basis_ket(2, 0), basis_ket(2, 1)), Dyad(basis_ket(2, 1), basis_ket(2, 0))};
  EXPECT_EQ(numerical_rank(std::span<const Dyad>(d)), 2u);
}

TEST(NumericalRank, RotatedDominoFirstPartyDyads) {
  const double t2 = std::numbers::pi / 4;
  const double t4 = std::numbers::pi / 4;
  const Ket e0 = basis_ket(3, 0), e1 = basis_ket(3, 1), e2 = basis_ket(3, 2);
  const Ket a = std::sin(t4) * e1 - std::cos(t4) * e2;
  const Ket b = std::sin(t2) * e0 - std::cos(t2) * e1;
  const Ket c = std::cos(t2) * e0 + std::sin(t2) * e1;
  const Ket f = std::cos(t4) * e1 + std::sin(t4) * e2;
  std::vector<Dyad> d{Dyad(e0, a), Dyad(a, e0), Dyad(e2, b), Dyad(b, e2),
                      Dyad(e0, e2), Dyad(e2, e0), Dyad(c, b), Dyad(f, a)};
  EXPECT_EQ(numerical_rank(std::span<const Dyad>(d)), 8u);
}

TEST(NumericalRank, DimensionMismatchThrows) {
  std::vector<ComplexMatrix> ms{ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)};
  EXPECT_THROW((void)numerical_rank(std::span<const ComplexMatrix>(ms)), std::invalid_argument);
}

TEST(NumericalRank, NonPositiveToleranceThrows) {
  std::vector<ComplexMatrix> ms{ComplexMatrix::Identity(2, 2)};
  EXPECT_THROW((void)numerical_rank(std::span<const ComplexMatrix>(ms), 0.0), std::invalid_argument);
}

TEST(NumericalRank, AllZeroInputsHaveRankZero) {
  std::vector<ComplexMatrix> ms{ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)};
  EXPECT_EQ(numerical_rank(std::span<const ComplexMatrix>(ms)), 0u);
}

TEST(NumericalRank, KetsMatchGramSchmidtOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Ket> kets;
    std::vector<ComplexMatrix> as_matrices;
    const std::size_t base = 1 + trial % 4;
    for (std::size_t k = 0; k < base; ++k) kets.push_back(testkit::random_ket(rng, 5));
    // A dependent combination.
    kets.push_back(kets[0] * Complex(0.5, 1.0) + kets.back());
    for (const auto& k : kets) as_matrices.push_back(k);
    EXPECT_EQ(numerical_rank(std::span<const Ket>(kets)), testkit::rank_oracle(as_matrices));
  }
}

}  // namespace
