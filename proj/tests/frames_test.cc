#include "igc/frames.h"

#include <cmath>
#include <numbers>

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include "test_support.h"

namespace igc::frames {
namespace {

constexpr double kPi = std::numbers::pi;

// Elevation about z after azimuth about y, built from elementary rotations.
Mat3 composed_rotation(double psi, double theta) {
  return (Eigen::AngleAxisd(-theta, Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(-psi, Eigen::Vector3d::UnitY()))
      .toRotationMatrix();
}

double orthogonality_error(const Mat3& m) {
  return (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
}

TEST(VelocityDcm, ZeroAnglesGiveIdentity) {
  EXPECT_EQ(velocity_dcm({0.0, 0.0}), Mat3::Identity());
}

TEST(VelocityDcm, VerticalVelocityRows) {
  const Mat3 l = velocity_dcm({kPi / 2.0, 0.0});
  Mat3 expected;
  expected << 0, 1, 0, -1, 0, 0, 0, 0, 1;
  EXPECT_LT((l - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(VelocityDcm, MatchesElementaryRotations) {
  testing::Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const double theta = rng.uniform(-1.5, 1.5), psi = rng.uniform(-kPi, kPi);
    EXPECT_LT((velocity_dcm({theta, psi}) - composed_rotation(psi, theta))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-14);
  }
}

TEST(VelocityDcm, OrthogonalOverRandomAngles) {
  testing::Rng rng(1);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    worst = std::max(worst, orthogonality_error(velocity_dcm(
                                {rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)})));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(LosDcm, QuarterTurnAzimuthGivesIdentity) {
  EXPECT_LT((los_dcm({0.0, kPi / 2.0}) - Mat3::Identity()).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(LosDcm, ZeroAnglesEqualVelocityTemplateAtMinusQuarterTurn) {
  EXPECT_EQ(los_dcm({0.0, 0.0}), velocity_dcm({0.0, -kPi / 2.0}));
}

TEST(LosDcm, OrthogonalOverRandomAngles) {
  testing::Rng rng(2);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    worst = std::max(worst, orthogonality_error(los_dcm(
                                {rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)})));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(UnitVectors, AreFirstRowsOfTheFrames) {
  testing::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const LosAngles los{rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)};
    const VelocityAngles vel{rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)};
    EXPECT_LT((los_unit_vector(los) - los_dcm(los).row(0).transpose()).norm(),
              1e-15);
    EXPECT_LT(
        (velocity_unit_vector(vel) - velocity_dcm(vel).row(0).transpose()).norm(),
        1e-15);
  }
}

TEST(ProjectionMatrix, AlignedVelocityHasUnitDeterminant) {
  testing::Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const LosAngles los{rng.uniform(-1.2, 1.2), rng.uniform(-kPi, kPi)};
    const VelocityAngles vel{los.theta_l, los.phi_l - kPi / 2.0};
    EXPECT_NEAR(std::abs(projection_matrix(los, vel).determinant()), 1.0, 1e-12);
  }
}

TEST(ProjectionMatrix, PerpendicularVelocityIsSingular) {
  testing::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const LosAngles los{rng.uniform(-0.7, 0.7), rng.uniform(-kPi, kPi)};
    const double theta_v = rng.uniform(-0.7, 0.7);
    // cos(theta_l) cos(theta_v) sin(phi_l - psi_v) = -sin(theta_l) sin(theta_v)
    const double s = -std::tan(los.theta_l) * std::tan(theta_v);
    const VelocityAngles vel{theta_v, los.phi_l - std::asin(s)};
    ASSERT_NEAR(los_unit_vector(los).dot(velocity_unit_vector(vel)), 0.0, 1e-14);
    EXPECT_NEAR(projection_matrix(los, vel).determinant(), 0.0, 1e-12);
  }
}

TEST(ProjectionMatrix, EqualsBlockOfComposedTransform) {
  testing::Rng rng(6);
  for (int i = 0; i < 10000; ++i) {
    const LosAngles los{rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)};
    const VelocityAngles vel{rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)};
    const Mat3 c = composed_rotation(los.phi_l - kPi / 2.0, los.theta_l) *
                   composed_rotation(vel.psi_v, vel.theta_v).transpose();
    Mat2 expected;
    expected << c(1, 1), c(1, 2), -c(2, 1), -c(2, 2);
    ASSERT_LT((projection_matrix(los, vel) - expected).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(ProjectionMatrix, DeterminantMagnitudeIsLosVelocityCosine) {
  testing::Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const LosAngles los{rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)};
    const VelocityAngles vel{rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)};
    ASSERT_NEAR(std::abs(projection_matrix(los, vel).determinant()),
                std::abs(los_velocity_cosine(los, vel)), 1e-9);
  }
}

TEST(AccelVelocityToLos, ZeroAccelerationMapsToZero) {
  EXPECT_EQ(accel_velocity_to_los(Vec3::Zero(), {0.3, 0.2}, {0.1, -0.4}),
            Vec3::Zero());
}

TEST(AccelVelocityToLos, AlignedFramesFlipOnlyTheAzimuthComponent) {
  const LosAngles los{0.0, 0.7};
  const VelocityAngles vel{0.0, 0.7 - kPi / 2.0};
  const Vec3 a(3.0, -5.0, 7.0);
  EXPECT_LT((accel_velocity_to_los(a, los, vel) - Vec3(3.0, -5.0, -7.0)).norm(),
            1e-14);
}

TEST(AccelVelocityToLos, LateralPartMatchesProjectionMatrix) {
  testing::Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const LosAngles los{rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)};
    const VelocityAngles vel{rng.uniform(-1.5, 1.5), rng.uniform(-kPi, kPi)};
    const Vec2 lateral = rng.vector<2>(-100.0, 100.0);
    const Vec3 out =
        accel_velocity_to_los(Vec3(0.0, lateral.x(), lateral.y()), los, vel);
    EXPECT_LT((out.tail<2>() - projection_matrix(los, vel) * lateral).norm(),
              1e-9);
  }
}

TEST(LosVelocityCosine, AlignedIsOneAndAntiparallelIsMinusOne) {
  const LosAngles los{0.4, -1.1};
  EXPECT_NEAR(los_velocity_cosine(los, {0.4, -1.1 - kPi / 2.0}), 1.0, 1e-15);
  EXPECT_NEAR(los_velocity_cosine(los, {-0.4, -1.1 + kPi / 2.0}), -1.0, 1e-15);
}

}  // namespace
}  // namespace igc::frames
