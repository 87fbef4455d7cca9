#pragma once

#include <cmath>

#include "igc/airframe.h"
#include "igc/frames.h"
#include "igc/types.h"

namespace igc::engagement {

// Shared guard on LOS and velocity elevation [rad].
inline constexpr double kElevationGuard = 1.2;

// Relative geometry in spherical LOS coordinates plus the pursuer velocity
// direction. x01 = d(theta_l)/dt, x02 = d(phi_l)/dt * cos(theta_l).
struct EngagementState {
  double r = 4000.0;   // [m]
  double vr = -800.0;  // [m/s]
  double theta_l = 0.0;
  double phi_l = 0.0;
  double x01 = 0.0;  // [rad/s]
  double x02 = 0.0;  // [rad/s]
  double theta_v = 0.0;
  double psi_v = 0.0;

  frames::LosAngles los() const { return {theta_l, phi_l}; }
  frames::VelocityAngles vel() const { return {theta_v, psi_v}; }
  Vec2 x0() const { return {x01, x02}; }

  bool operator==(const EngagementState&) const = default;
};

struct RelativeDerivative {
  double r_dot;
  double vr_dot;
  double theta_l_dot;
  double phi_l_dot;
  double x01_dot;
  double x02_dot;

  Vec2 x0_dot() const { return {x01_dot, x02_dot}; }
};

enum class EvaderKind { kConstant, kStep, kWeave };

// Evader acceleration, given directly in LOS components (a_r, a_theta_l,
// a_phi_l) [m/s^2].
struct EvaderModel {
  EvaderKind kind = EvaderKind::kConstant;
  Vec3 amplitude = Vec3::Zero();
  double frequency = 0.0;  // [rad/s], weave
  double phase = 0.0;      // [rad], weave
  double step_time = 0.0;  // [s], step

  bool operator==(const EvaderModel&) const = default;
};

enum class SignalKind { kZero, kConstant, kSinusoid };

// Deterministic bounded signal: amplitude * sin(frequency * t + phase) for
// sinusoids, amplitude for constants.
template <int N>
struct SignalGenerator {
  using Vector = Eigen::Matrix<double, N, 1>;

  SignalKind kind = SignalKind::kZero;
  Vector amplitude = Vector::Zero();
  double frequency = 0.0;
  double phase = 0.0;

  Vector operator()(double t) const {
    switch (kind) {
      case SignalKind::kZero:
        return Vector::Zero();
      case SignalKind::kConstant:
        return amplitude;
      case SignalKind::kSinusoid:
        return amplitude * std::sin(frequency * t + phase);
    }
    return Vector::Zero();
  }

  // Supremum of the norm over all t.
  double norm_bound() const {
    return kind == SignalKind::kZero ? 0.0 : amplitude.norm();
  }

  bool operator==(const SignalGenerator&) const = default;
};

struct DisturbanceModel {
  SignalGenerator<2> force;  // (d_y, d_z) [N]
  SignalGenerator<3> d1;     // attitude-angle channel [rad/s]
  SignalGenerator<3> d2;     // body-rate channel [rad/s^2]

  bool operator==(const DisturbanceModel&) const = default;
};

// Guidance drift term. Throws GuardError unless r > r_min and
// |theta_l| < kElevationGuard.
Vec2 f0(const EngagementState& state, double r_min = 0.0);

// -M / (m r) * diag(P + qS c_y^alpha, -P + qS c_z^beta), no conditioning
// check.
Mat2 g0_matrix(const EngagementState& state, const airframe::AeroConfig& cfg);

// As g0_matrix, but throws SingularityError("g0") when the condition number
// exceeds kConditionGate (velocity near-perpendicular to the LOS).
Mat2 g0(const EngagementState& state, const airframe::AeroConfig& cfg,
        double r_min = 0.0);

// Spherical relative kinematics driven by pursuer and evader accelerations in
// LOS components. Integrated from the second-order range/elevation/azimuth
// equations, not from f0.
RelativeDerivative relative_derivatives(const EngagementState& state,
                                        const Vec3& pursuer_accel_los,
                                        const Vec3& evader_accel_los,
                                        double r_min = 0.0);

// (d theta_v/dt, d psi_v/dt) from velocity-frame accelerations.
Vec2 velocity_angle_derivatives(double a_theta, double a_psi,
                                const airframe::AeroConfig& cfg,
                                double theta_v,
                                double guard = kElevationGuard);

Vec3 evader_accel(const EvaderModel& model, double t);

}  // namespace igc::engagement
