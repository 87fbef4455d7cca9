#include "igc/airframe.h"

#include <cmath>

#include <gtest/gtest.h>

#include "test_support.h"

namespace igc::airframe {
namespace {

TEST(AeroConfig, DynamicPressureIsHalfRhoVSquared) {
  AeroConfig cfg;
  cfg.air_density = 1.2;
  cfg.speed = 300.0;
  EXPECT_EQ(cfg.dynamic_pressure(), 0.5 * 1.2 * 300.0 * 300.0);
}

TEST(AeroConfig, ZeroControlEffectivenessIsRejected) {
  AeroConfig cfg;
  cfg.mx_delta_x = 0.0;
  try {
    cfg.validate();
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "pursuer.mx_delta_x");
  }
}

TEST(AeroConfig, NonPositiveMassIsRejected) {
  AeroConfig cfg;
  cfg.mass = -1.0;
  EXPECT_THROW(cfg.validate(), ValidationError);
}

TEST(F1, VanishesAtZeroIncidence) {
  EXPECT_EQ(f1(Vec3(0.3, 0.0, 0.0), AeroConfig{}), Vec3::Zero());
}

TEST(F1, AngleOfAttackRow) {
  const Vec3 f = f1(Vec3(0.0, 0.01, 0.0), AeroConfig{});
  EXPECT_EQ(f.x(), 0.0);
  EXPECT_NEAR(f.y(), -0.060333327777805555, 1e-15);
  EXPECT_EQ(f.z(), 0.0);
}

TEST(F1, SideslipRow) {
  const Vec3 f = f1(Vec3(0.0, 0.0, 0.01), AeroConfig{});
  EXPECT_NEAR(f.z(), -0.060333327777805555, 1e-15);
  EXPECT_EQ(f.y(), 0.0);
}

TEST(G1, ZeroAnglesGivePermutationWithDeterminantMinusOne) {
  const Mat3 g = g1(0.0, Vec3::Zero());
  Mat3 expected;
  expected << 1, 0, 0, 0, 0, 1, 0, 1, 0;
  EXPECT_EQ(g, expected);
  EXPECT_EQ(g.determinant(), -1.0);
}

TEST(G1, SmallAngleDeterminant) {
  const double det = g1(0.05, Vec3(0.0, 0.05, 0.05)).determinant();
  EXPECT_NEAR(det, -1.0012513034084614, 1e-14);
  EXPECT_GE(det, -1.1);
  EXPECT_LE(det, -0.9);
}

TEST(G1, DeterminantBoundedAwayFromZeroOnTheFlightDomain) {
  const int n = 13;
  double smallest = 1e9;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const double a = -0.3 + 0.6 * i / (n - 1);
          const double b = -0.3 + 0.6 * j / (n - 1);
          const double p = -0.3 + 0.6 * k / (n - 1);
          const double gamma = -3.0 + 6.0 * l / (n - 1);
          smallest = std::min(smallest,
                              std::abs(g1(p, Vec3(gamma, a, b)).determinant()));
        }
      }
    }
  }
  EXPECT_GT(smallest, 0.5);
}

TEST(G1, NearVerticalPitchIsIllConditioned) {
  EXPECT_GT(condition_number(g1(std::numbers::pi / 2.0 - 1e-8, Vec3::Zero())),
            kConditionGate);
}

TEST(F2, ZeroStateGivesZero) {
  EXPECT_EQ(f2(Vec3::Zero(), Vec3::Zero(), AeroConfig{}), Vec3::Zero());
}

TEST(F2, GyroscopicRollTerm) {
  AeroConfig cfg;
  const Vec3 f = f2(Vec3::Zero(), Vec3(0.0, 1.0, 1.0), cfg);
  EXPECT_EQ(f, Vec3((cfg.jz - cfg.jy) / cfg.jx, 0.0, 0.0));
}

TEST(F2, FullState) {
  const Vec3 f = f2(Vec3(0.2, 0.05, -0.03), Vec3(0.4, -0.2, 0.3), AeroConfig{});
  EXPECT_NEAR(f.x(), 0.0, 1e-15);
  EXPECT_NEAR(f.y(), 5.2824, 1e-12);
  EXPECT_NEAR(f.z(), -9.0784, 1e-12);
}

TEST(G2, UnitParametersGiveIdentity) {
  AeroConfig cfg;
  cfg.air_density = 2.0;
  cfg.speed = 1.0;
  cfg.ref_area = cfg.ref_length = 1.0;
  cfg.jx = cfg.jy = cfg.jz = 1.0;
  cfg.mx_delta_x = cfg.my_delta_y = cfg.mz_delta_z = 1.0;
  EXPECT_EQ(g2(cfg), Mat3::Identity());
}

TEST(G2, NominalDiagonal) {
  const Mat3 g = g2(AeroConfig{});
  EXPECT_NEAR(g(0, 0), -1800.0, 1e-10);
  EXPECT_NEAR(g(1, 1), -144.0, 1e-12);
  EXPECT_NEAR(g(2, 2), -144.0, 1e-12);
  EXPECT_EQ(g(0, 1), 0.0);
  EXPECT_EQ(g(2, 0), 0.0);
}

TEST(LiftSideAccels, ZeroIncidenceGivesZeroInBothModes) {
  const AeroConfig cfg;
  EXPECT_EQ(lift_side_accels(0, 0, 0, 0, cfg, AeroMode::kTrig), Vec2::Zero());
  EXPECT_EQ(lift_side_accels(0, 0, 0, 0, cfg, AeroMode::kLinear), Vec2::Zero());
}

TEST(LiftSideAccels, SmallAnglesAgreeBetweenModes) {
  const AeroConfig cfg;
  const Vec2 trig = lift_side_accels(0.01, 0.01, 0, 0, cfg, AeroMode::kTrig);
  const Vec2 lin = lift_side_accels(0.01, 0.01, 0, 0, cfg, AeroMode::kLinear);
  EXPECT_LT((trig - lin).norm(), 1e-4 * lin.norm());
}

TEST(LiftSideAccels, LargeAngleDiffersMeasurably) {
  const AeroConfig cfg;
  const Vec2 trig = lift_side_accels(0.3, 0.0, 0, 0, cfg, AeroMode::kTrig);
  const Vec2 lin = lift_side_accels(0.3, 0.0, 0, 0, cfg, AeroMode::kLinear);
  EXPECT_NEAR(trig.x(), 1085.9104041332268, 1e-9);
  EXPECT_NEAR(lin.x(), 1086.0, 1e-9);
}

TEST(LiftSideAccels, LinearModeIsTheMatrixForm) {
  testing::Rng rng(21);
  const AeroConfig cfg;
  const double q = cfg.dynamic_pressure(), s = cfg.ref_area;
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(-0.3, 0.3), b = rng.uniform(-0.3, 0.3);
    const double dy = rng.uniform(-50, 50), dz = rng.uniform(-50, 50);
    const Vec2 expected =
        Vec2(cfg.thrust + q * s * cfg.lift_slope, -cfg.thrust + q * s * cfg.side_slope)
                .asDiagonal() *
            Vec2(a, b) / cfg.mass +
        Vec2(dy, dz) / cfg.mass;
    EXPECT_LT((lift_side_accels(a, b, dy, dz, cfg, AeroMode::kLinear) - expected)
                  .norm(),
              1e-12 * expected.norm() + 1e-15);
  }
}

TEST(AttitudeDerivatives, ZeroStateIsAtRest) {
  const auto d = attitude_derivatives({}, Vec3::Zero(), Vec3::Zero(),
                                      Vec3::Zero(), AeroConfig{});
  EXPECT_EQ(d.x1_dot, Vec3::Zero());
  EXPECT_EQ(d.x2_dot, Vec3::Zero());
  EXPECT_EQ(d.pitch_dot, 0.0);
}

TEST(AttitudeDerivatives, PitchRateFromYawAxisAtZeroRoll) {
  AttitudeState s;
  s.x2 = Vec3(0.0, 0.0, 0.1);
  EXPECT_EQ(attitude_derivatives(s, Vec3::Zero(), Vec3::Zero(), Vec3::Zero(),
                                 AeroConfig{})
                .pitch_dot,
            0.1);
}

TEST(AttitudeDerivatives, RecomposesFromPieces) {
  testing::Rng rng(22);
  const AeroConfig cfg;
  for (int i = 0; i < 200; ++i) {
    const AttitudeState s = rng.attitude();
    const Vec3 u = rng.vector<3>(-0.2, 0.2);
    const Vec3 d1 = rng.vector<3>(-0.1, 0.1), d2 = rng.vector<3>(-1, 1);
    const auto d = attitude_derivatives(s, u, d1, d2, cfg);
    const Vec3 x1_dot = f1(s.x1, cfg) + g1(s.pitch, s.x1) * s.x2 + d1;
    const Vec3 x2_dot = f2(s.x1, s.x2, cfg) + g2(cfg) * u + d2;
    EXPECT_LT((d.x1_dot - x1_dot).norm(), 1e-12);
    EXPECT_LT((d.x2_dot - x2_dot).norm(), 1e-12);
    EXPECT_EQ(d.pitch_dot, s.x2.y() * std::sin(s.gamma()) +
                               s.x2.z() * std::cos(s.gamma()));
  }
}

TEST(AttitudeDerivatives, IsMemoryless) {
  testing::Rng rng(23);
  const AttitudeState s = rng.attitude();
  const Vec3 u = rng.vector<3>(-0.2, 0.2);
  const auto a = attitude_derivatives(s, u, Vec3::Zero(), Vec3::Zero(), AeroConfig{});
  const auto b = attitude_derivatives(s, u, Vec3::Zero(), Vec3::Zero(), AeroConfig{});
  EXPECT_EQ(a.x1_dot, b.x1_dot);
  EXPECT_EQ(a.x2_dot, b.x2_dot);
  EXPECT_EQ(a.pitch_dot, b.pitch_dot);
}

TEST(AttitudeDerivatives, GuardBandBreachesThrow) {
  AttitudeState s;
  s.x1.z() = 1.2;
  EXPECT_THROW(attitude_derivatives(s, Vec3::Zero(), Vec3::Zero(), Vec3::Zero(),
                                    AeroConfig{}),
               GuardError);
  s.x1.z() = 0.0;
  s.pitch = -1.25;
  EXPECT_THROW(attitude_derivatives(s, Vec3::Zero(), Vec3::Zero(), Vec3::Zero(),
                                    AeroConfig{}),
               GuardError);
}

}  // namespace
}  // namespace igc::airframe
