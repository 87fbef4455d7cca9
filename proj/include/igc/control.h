#pragma once

#include <optional>
#include <string>

#include "igc/airframe.h"
#include "igc/engagement.h"
#include "igc/linalg.h"
#include "igc/types.h"

namespace igc::control {

struct Gains {
  double k0 = 2.0;
  double k1 = 10.0;
  double k2 = 20.0;
  double delta0 = 1.0;
  double delta1 = 0.1;
  double delta2 = 0.05;

  // Throws ValidationError naming "gains.<field>" unless all are > 0.
  void validate() const;

  bool operator==(const Gains&) const = default;
};

// Total feedback rate k + 1 / (2 delta^2) of one ISS stage.
inline double feedback_rate(double k, double delta) {
  return k + 1.0 / (2.0 * delta * delta);
}

// u = g^-1 (-f - k x - x / (2 delta^2)). Renders the closed loop
// x' = f + g u + d input-to-state stable with respect to d.
template <int N>
Eigen::Matrix<double, N, 1> iss_control(
    const Eigen::Matrix<double, N, 1>& f, const Eigen::Matrix<double, N, N>& g,
    const Eigen::Matrix<double, N, 1>& x, double k, double delta,
    const std::string& stage = "iss_control") {
  const double cond = condition_number(g);
  if (!(cond <= kConditionGate)) throw SingularityError(stage, cond);
  const Eigen::Matrix<double, N, 1> rhs = -f - feedback_rate(k, delta) * x;
  return g.fullPivLu().solve(rhs);
}

// Angle-of-attack / sideslip command
//   x1# = g0^-1 (2 vr / r - 1 / (2 delta0^2) - k0) x0.
// The tan(theta_l) cross-coupling in f0 is orthogonal to x0 and is left
// uncancelled.
Vec2 alpha_beta_command(const engagement::EngagementState& state,
                        const Mat2& g0, const Gains& gains);

// Body-rate command x2* = g1^-1 (-f1 - eta1 / (2 delta1^2) - k1 eta1) with
// eta1 = x1 - x1_cmd. Uses current values only.
Vec3 rate_command(const Vec3& x1, const Vec3& x1_cmd, const Mat3& g1,
                  const Vec3& f1, const Gains& gains);

// Fin command u = g2^-1 (-f2 - eta2 / (2 delta2^2) - k2 eta2) with
// eta2 = x2 - x2_cmd.
Vec3 fin_command(const Vec3& x1, const Vec3& x2, const Vec3& x2_cmd,
                 const airframe::AeroConfig& cfg, const Gains& gains);

struct IgcDiagnostics {
  Vec2 x1_sharp_cmd = Vec2::Zero();  // (alpha, beta) command [rad]
  Vec3 x1_cmd = Vec3::Zero();        // (0, alpha, beta) command [rad]
  Vec3 x2_cmd = Vec3::Zero();        // body-rate command [rad/s]
  Vec3 eta1 = Vec3::Zero();
  Vec3 eta2 = Vec3::Zero();
  Mat2 g0 = Mat2::Zero();
  Mat3 g1 = Mat3::Zero();
  double cond_g0 = 0.0;
  double cond_g1 = 0.0;
  Vec3 u_unsaturated = Vec3::Zero();
  bool saturated = false;
};

struct IgcOutput {
  airframe::FinDeflections u = Vec3::Zero();
  IgcDiagnostics diag;
};

struct IgcOptions {
  std::optional<double> fin_limit;  // symmetric |delta_i| clamp [rad]
  double r_min = 0.0;
};

// One evaluation of the composite law: alpha/beta command, eta1, rate
// command, eta2, fin command. Pure; SingularityError::stage() names the
// failing stage.
IgcOutput igc_step(const engagement::EngagementState& eng,
                   const airframe::AttitudeState& att,
                   const airframe::AeroConfig& cfg, const Gains& gains,
                   const IgcOptions& options = {});

}  // namespace igc::control
