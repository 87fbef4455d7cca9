#include "igc/frames.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace igc::frames {

Mat3 rotation_template(double psi, double theta) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(psi), sp = std::sin(psi);
  Mat3 l;
  // clang-format off
  l <<  ct * cp, st, -ct * sp,
       -st * cp, ct,  st * sp,
        sp,      0.0, cp;
  // clang-format on
  return l;
}

Mat3 velocity_dcm(const VelocityAngles& angles) {
  return rotation_template(angles.psi_v, angles.theta_v);
}

Mat3 los_dcm(const LosAngles& angles) {
  return rotation_template(angles.phi_l - std::numbers::pi / 2.0,
                           angles.theta_l);
}

Mat3 velocity_to_los(const LosAngles& los, const VelocityAngles& vel) {
  // Inverse of a rotation is its transpose.
  return los_dcm(los) * velocity_dcm(vel).transpose();
}

Mat2 projection_matrix(const LosAngles& los, const VelocityAngles& vel) {
  const double stl = std::sin(los.theta_l), ctl = std::cos(los.theta_l);
  const double stv = std::sin(vel.theta_v), ctv = std::cos(vel.theta_v);
  const double dphi = los.phi_l - vel.psi_v;
  const double s = std::sin(dphi), c = std::cos(dphi);
  Mat2 m;
  // clang-format off
  m << stl * stv * s + ctl * ctv, -stl * c,
       -stv * c,                  -s;
  // clang-format on
  return m;
}

Vec3 accel_velocity_to_los(const Vec3& accel, const LosAngles& los,
                           const VelocityAngles& vel) {
  Vec3 out = velocity_to_los(los, vel) * accel;
  out.z() = -out.z();
  return out;
}

Vec3 los_unit_vector(const LosAngles& los) {
  const double ct = std::cos(los.theta_l);
  return {ct * std::sin(los.phi_l), std::sin(los.theta_l),
          ct * std::cos(los.phi_l)};
}

Vec3 velocity_unit_vector(const VelocityAngles& vel) {
  const double ct = std::cos(vel.theta_v);
  return {ct * std::cos(vel.psi_v), std::sin(vel.theta_v),
          -ct * std::sin(vel.psi_v)};
}

double los_velocity_cosine(const LosAngles& los, const VelocityAngles& vel) {
  const double c = los_unit_vector(los).dot(velocity_unit_vector(vel));
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace igc::frames
