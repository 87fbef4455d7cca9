#include "igc/engagement.h"

#include <sstream>

#include "igc/linalg.h"

namespace igc::engagement {
namespace {

void check_geometry(const EngagementState& s, double r_min) {
  if (!(s.r > r_min) || !std::isfinite(s.r)) {
    std::ostringstream msg;
    msg << "range guard breached: r = " << s.r << " m (r_min " << r_min << ")";
    throw GuardError(msg.str());
  }
  if (!(std::abs(s.theta_l) < kElevationGuard)) {
    std::ostringstream msg;
    msg << "LOS elevation guard breached: theta_l = " << s.theta_l;
    throw GuardError(msg.str());
  }
}

}  // namespace

Vec2 f0(const EngagementState& s, double r_min) {
  check_geometry(s, r_min);
  const double rate = 2.0 * s.vr / s.r;
  const double t = std::tan(s.theta_l);
  return {-rate * s.x01 - s.x02 * s.x02 * t,
          -rate * s.x02 + s.x01 * s.x02 * t};
}

Mat2 g0_matrix(const EngagementState& s, const airframe::AeroConfig& cfg) {
  const Mat2 m = frames::projection_matrix(s.los(), s.vel());
  return -m * cfg.force_slopes().asDiagonal() / (cfg.mass * s.r);
}

Mat2 g0(const EngagementState& s, const airframe::AeroConfig& cfg,
        double r_min) {
  check_geometry(s, r_min);
  Mat2 g = g0_matrix(s, cfg);
  const double cond = condition_number(g);
  if (!(cond <= kConditionGate)) throw SingularityError("g0", cond);
  return g;
}

RelativeDerivative relative_derivatives(const EngagementState& s,
                                        const Vec3& ap, const Vec3& ae,
                                        double r_min) {
  check_geometry(s, r_min);
  const double ct = std::cos(s.theta_l), st = std::sin(s.theta_l);
  const double theta_dot = s.x01;
  const double phi_dot = s.x02 / ct;

  const double r_ddot = s.r * phi_dot * phi_dot * ct * ct +
                        s.r * theta_dot * theta_dot + ae.x() - ap.x();
  const double theta_ddot = (-2.0 * s.vr * theta_dot -
                             s.r * phi_dot * phi_dot * ct * st + ae.y() - ap.y()) /
                            s.r;
  const double phi_ddot = -2.0 * s.vr * phi_dot / s.r +
                          2.0 * phi_dot * theta_dot * std::tan(s.theta_l) +
                          (ae.z() - ap.z()) / (s.r * ct);

  RelativeDerivative d;
  d.r_dot = s.vr;
  d.vr_dot = r_ddot;
  d.theta_l_dot = theta_dot;
  d.phi_l_dot = phi_dot;
  d.x01_dot = theta_ddot;
  // x02 = phi_dot * cos(theta_l)
  d.x02_dot = phi_ddot * ct - phi_dot * st * theta_dot;
  return d;
}

Vec2 velocity_angle_derivatives(double a_theta, double a_psi,
                                const airframe::AeroConfig& cfg,
                                double theta_v, double guard) {
  if (!(std::abs(theta_v) < guard)) {
    std::ostringstream msg;
    msg << "velocity elevation guard breached: theta_v = " << theta_v;
    throw GuardError(msg.str());
  }
  return {a_theta / cfg.speed, -a_psi / (cfg.speed * std::cos(theta_v))};
}

Vec3 evader_accel(const EvaderModel& model, double t) {
  switch (model.kind) {
    case EvaderKind::kConstant:
      return model.amplitude;
    case EvaderKind::kStep:
      return t < model.step_time ? Vec3::Zero() : model.amplitude;
    case EvaderKind::kWeave:
      return model.amplitude * std::sin(model.frequency * t + model.phase);
  }
  return Vec3::Zero();
}

}  // namespace igc::engagement
