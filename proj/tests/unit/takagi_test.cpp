#include "antilinear/takagi.hpp"

#include <gtest/gtest.h>

#include "antilinear/delta_example.hpp"
#include "antilinear/error.hpp"
#include "antilinear/operator.hpp"
#include "test_support.hpp"

namespace antilinear {
namespace {

using testing::Rng;

double reconstruction_error(const CMatrix& a, const TakagiFactorization& t) {
  return (t.u * t.sigma.asDiagonal() * t.u.transpose() - a).norm();
}

double unitarity_error(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())).norm();
}

TEST(Takagi, Diagonal) {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  const auto t = takagi(a);
  EXPECT_NEAR(t.sigma[0], 2.0, 1e-14);
  EXPECT_NEAR(t.sigma[1], 1.0, 1e-14);
  EXPECT_LE(reconstruction_error(a, t), 1e-12);
  EXPECT_NEAR(std::abs(t.u(1, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(t.u(0, 1)), 1.0, 1e-12);
}

TEST(Takagi, Swap) {
  CMatrix a(2, 2);
  a << 0.0, 1.0, 1.0, 0.0;
  const auto t = takagi(a);
  EXPECT_NEAR(t.sigma[0], 1.0, 1e-14);
  EXPECT_NEAR(t.sigma[1], 1.0, 1e-14);
  EXPECT_LE(reconstruction_error(a, t), 1e-12);
  EXPECT_LE(unitarity_error(t.u), 1e-12);
}

TEST(Takagi, RejectsAsymmetric) {
  CMatrix a(2, 2);
  a << 0.0, 1.0, 2.0, 0.0;
  EXPECT_THROW(takagi(a), ValidationError);
}

TEST(Takagi, RandomSymmetric) {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix a = testing::random_symmetric(rng, testing::uniform_int(rng, 1, 20));
    const auto t = takagi(a);
    EXPECT_LE(reconstruction_error(a, t), 1e-8 * a.norm());
    EXPECT_LE(unitarity_error(t.u), 1e-10);
    const RVector sv = Eigen::JacobiSVD<CMatrix>(a).singularValues();
    EXPECT_LE((t.sigma - sv).norm(), 1e-10 * (1.0 + sv[0]));
  }
}

// Degenerate clusters: A = V D V^T with repeated entries of D and a random unitary V.
TEST(Takagi, DegenerateClusters) {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = testing::uniform_int(rng, 2, 10);
    const CMatrix v = Eigen::HouseholderQR<CMatrix>(testing::random_symmetric(rng, n) +
                                                    CMatrix::Identity(n, n) * testing::random_complex(rng))
                          .householderQ();
    RVector d(n);
    for (Index i = 0; i < n; ++i) d[i] = static_cast<double>(1 + testing::uniform_int(rng, 0, 2));
    if (trial % 5 == 0) d.setConstant(1.5);
    if (trial % 7 == 0) d[0] = 0.0;
    const CMatrix a = v * d.asDiagonal() * v.transpose();
    const auto t = takagi(a);
    EXPECT_LE(reconstruction_error(a, t), 1e-8 * (1.0 + a.norm()));
    EXPECT_LE(unitarity_error(t.u), 1e-10);
  }
}

TEST(Takagi, SigmaMatchesModulusSpectrum) {
  const auto op = delta::build_truncated_J(2.0, 200);
  const auto t = takagi(op.matrix());
  const auto spec = modulus_spectrum(op);
  const Index n = op.dim();
  for (Index i = 0; i < n; ++i) EXPECT_NEAR(t.sigma[i], spec.eigenvalues[n - 1 - i], 1e-8);
  EXPECT_LE(reconstruction_error(op.matrix(), t), 1e-8 * op.matrix().norm());
}

}  // namespace
}  // namespace antilinear
