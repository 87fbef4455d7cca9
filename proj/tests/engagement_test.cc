#include "igc/engagement.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.h"

namespace igc::engagement {
namespace {

constexpr double kPi = std::numbers::pi;

EngagementState example_state(double theta_l) {
  EngagementState s;
  s.r = 3000.0;
  s.vr = -300.0;
  s.theta_l = theta_l;
  s.x01 = 0.01;
  s.x02 = -0.02;
  return s;
}

TEST(F0, ZeroLosRateGivesZero) {
  EngagementState s;
  s.theta_l = 0.4;
  EXPECT_EQ(f0(s), Vec2::Zero());
}

TEST(F0, LevelLos) {
  const Vec2 f = f0(example_state(0.0));
  EXPECT_NEAR(f.x(), 0.002, 1e-17);
  EXPECT_NEAR(f.y(), -0.004, 1e-17);
}

TEST(F0, ElevatedLosAddsCrossTerms) {
  const Vec2 f = f0(example_state(0.1));
  EXPECT_NEAR(f.x(), 0.0019598661311658197, 1e-17);
  EXPECT_NEAR(f.y(), -0.00402006693441709, 1e-17);
}

TEST(F0, RangeAtOrBelowFloorThrows) {
  EngagementState s = example_state(0.0);
  s.r = 100.0;
  EXPECT_THROW(f0(s, 100.0), GuardError);
  s.r = 0.0;
  EXPECT_THROW(f0(s), GuardError);
}

TEST(F0, CrossTermsAreOrthogonalToLosRate) {
  testing::Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    EngagementState s = rng.engagement();
    EngagementState level = s;
    level.theta_l = 0.0;
    const Vec2 cross = f0(s) - f0(level);
    EXPECT_NEAR(cross.dot(s.x0()), 0.0, 1e-15);
  }
}

airframe::AeroConfig slope_config() {
  airframe::AeroConfig cfg;
  cfg.thrust = 0.0;
  cfg.air_density = 2.0;
  cfg.speed = 100.0;  // q = 1e4
  cfg.ref_area = 0.5;
  cfg.lift_slope = 40.0;
  cfg.side_slope = -40.0;
  return cfg;
}

TEST(G0, IdentityProjectionExample) {
  EngagementState s;
  s.r = 1000.0;
  s.phi_l = 0.3;
  s.psi_v = 0.3 + kPi / 2.0;
  ASSERT_LT((frames::projection_matrix(s.los(), s.vel()) - Mat2::Identity())
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
  const airframe::AeroConfig cfg = slope_config();
  ASSERT_EQ(cfg.force_slopes(), Vec2(2e5, -2e5));
  const Mat2 g = g0(s, cfg);
  EXPECT_NEAR(g(0, 0), -2.0, 1e-14);
  EXPECT_NEAR(g(1, 1), 2.0, 1e-14);
  EXPECT_NEAR(g(0, 1), 0.0, 1e-14);
  EXPECT_NEAR(g(1, 0), 0.0, 1e-14);
}

TEST(G0, PerpendicularVelocityIsSingular) {
  EngagementState s;
  s.phi_l = 0.5;
  s.psi_v = 0.5;  // velocity perpendicular to the LOS
  EXPECT_NEAR(g0_matrix(s, airframe::AeroConfig{}).determinant(), 0.0, 1e-15);
  try {
    g0(s, airframe::AeroConfig{});
    FAIL() << "expected SingularityError";
  } catch (const SingularityError& e) {
    EXPECT_EQ(e.stage(), "g0");
  }
}

TEST(G0, DoublingRangeHalvesEveryEntry) {
  testing::Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    EngagementState s = rng.engagement();
    const Mat2 a = g0(s, airframe::AeroConfig{});
    s.r *= 2.0;
    const Mat2 b = g0(s, airframe::AeroConfig{});
    EXPECT_LT((b - 0.5 * a).cwiseAbs().maxCoeff(), 1e-15 * a.norm());
  }
}

TEST(RelativeDerivatives, StaticGeometryIsAtRest) {
  EngagementState s;
  s.vr = 0.0;
  s.theta_l = 0.2;
  const auto d = relative_derivatives(s, Vec3::Zero(), Vec3::Zero());
  EXPECT_EQ(d.r_dot, 0.0);
  EXPECT_EQ(d.vr_dot, 0.0);
  EXPECT_EQ(d.theta_l_dot, 0.0);
  EXPECT_EQ(d.phi_l_dot, 0.0);
  EXPECT_EQ(d.x01_dot, 0.0);
  EXPECT_EQ(d.x02_dot, 0.0);
}

TEST(RelativeDerivatives, ElevationAccelerationDifference) {
  EngagementState s;
  s.r = 1000.0;
  const auto d = relative_derivatives(s, Vec3(0.0, 2.0, 0.0), Vec3(0.0, 3.0, 0.0));
  EXPECT_NEAR(d.x01_dot, 1e-3, 1e-18);
  EXPECT_EQ(d.x02_dot, 0.0);
}

TEST(RelativeDerivatives, KinematicRates) {
  EngagementState s = example_state(0.3);
  const auto d = relative_derivatives(s, Vec3::Zero(), Vec3::Zero());
  EXPECT_EQ(d.r_dot, s.vr);
  EXPECT_EQ(d.theta_l_dot, s.x01);
  EXPECT_NEAR(d.phi_l_dot, s.x02 / std::cos(0.3), 1e-17);
}

TEST(RelativeDerivatives, QuietAccelerationsReduceToF0) {
  testing::Rng rng(33);
  for (int i = 0; i < 1000; ++i) {
    const EngagementState s = rng.engagement();
    const auto d = relative_derivatives(s, Vec3::Zero(), Vec3::Zero());
    EXPECT_LT((d.x0_dot() - f0(s)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(RelativeDerivatives, LinearAeroAccelerationsMatchGuidanceModel) {
  testing::Rng rng(34);
  const airframe::AeroConfig cfg;
  for (int i = 0; i < 1000; ++i) {
    const EngagementState s = rng.engagement();
    const Vec2 ab = rng.vector<2>(-0.2, 0.2);
    const Vec2 force = rng.vector<2>(-500.0, 500.0);
    const Vec3 ae = rng.vector<3>(-50.0, 50.0);
    const Vec2 lateral = airframe::lift_side_accels(
        ab.x(), ab.y(), force.x(), force.y(), cfg, airframe::AeroMode::kLinear);
    const Vec3 ap =
        frames::accel_velocity_to_los(Vec3(0.0, lateral.x(), lateral.y()),
                                      s.los(), s.vel());
    const Mat2 m = frames::projection_matrix(s.los(), s.vel());
    const Vec2 d0 = -m * force / cfg.mass + ae.tail<2>();
    const Vec2 model = f0(s) + g0(s, cfg) * ab + d0 / s.r;
    const auto d = relative_derivatives(s, ap, ae);
    EXPECT_LT((d.x0_dot() - model).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(RelativeDerivatives, LevelLosDecouplesTheRateChannels) {
  testing::Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    EngagementState s = rng.engagement();
    s.theta_l = 0.0;
    EngagementState t = s;
    t.x02 = rng.uniform(-0.1, 0.1);
    EXPECT_EQ(relative_derivatives(s, Vec3::Zero(), Vec3::Zero()).x01_dot,
              relative_derivatives(t, Vec3::Zero(), Vec3::Zero()).x01_dot);
    EngagementState u = s;
    u.x01 = rng.uniform(-0.1, 0.1);
    EXPECT_NEAR(relative_derivatives(s, Vec3::Zero(), Vec3::Zero()).x02_dot,
                relative_derivatives(u, Vec3::Zero(), Vec3::Zero()).x02_dot,
                1e-18);
  }
}

TEST(VelocityAngleDerivatives, Examples) {
  const airframe::AeroConfig cfg;
  EXPECT_EQ(velocity_angle_derivatives(0, 0, cfg, 0.0), Vec2::Zero());
  EXPECT_EQ(velocity_angle_derivatives(6, 0, cfg, 0.0).x(), 0.01);
  EXPECT_EQ(velocity_angle_derivatives(0, 6, cfg, 0.0).y(), -0.01);
  EXPECT_THROW(velocity_angle_derivatives(0, 0, cfg, 1.3), GuardError);
}

TEST(EvaderAccel, Kinds) {
  EvaderModel m;
  m.amplitude = Vec3(0, 3, -3);
  EXPECT_EQ(evader_accel(m, 7.0), Vec3(0, 3, -3));

  m.kind = EvaderKind::kWeave;
  m.amplitude = Vec3(0, 3, 0);
  m.frequency = kPi;
  EXPECT_LT((evader_accel(m, 0.5) - Vec3(0, 3, 0)).norm(), 1e-15);

  m.kind = EvaderKind::kStep;
  m.step_time = 2.0;
  EXPECT_EQ(evader_accel(m, 1.9), Vec3::Zero());
  EXPECT_EQ(evader_accel(m, 2.0), Vec3(0, 3, 0));
}

TEST(EvaderAccel, BoundedByAmplitude) {
  testing::Rng rng(36);
  for (auto kind : {EvaderKind::kConstant, EvaderKind::kStep, EvaderKind::kWeave}) {
    EvaderModel m{kind, rng.vector<3>(-10, 10), rng.uniform(0, 5),
                  rng.uniform(-3, 3), rng.uniform(0, 3)};
    for (int k = 0; k <= 1000; ++k) {
      const Vec3 a = evader_accel(m, 0.01 * k);
      for (int j = 0; j < 3; ++j) {
        EXPECT_LE(std::abs(a(j)), std::abs(m.amplitude(j)));
      }
    }
  }
}

}  // namespace
}  // namespace igc::engagement
