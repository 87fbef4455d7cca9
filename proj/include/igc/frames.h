#pragma once

#include "igc/types.h"

// Ground, pursuer-velocity and line-of-sight frames.
//
// The ground frame has its y axis up. A direction with elevation `theta` and
// azimuth `psi` has ground components (cos theta cos psi, sin theta,
// -cos theta sin psi); the LOS direction with elevation theta_l and azimuth
// phi_l is (cos theta_l sin phi_l, sin theta_l, cos theta_l cos phi_l), i.e.
// the same template evaluated at psi = phi_l - pi/2.
namespace igc::frames {

struct VelocityAngles {
  double theta_v = 0.0;  // elevation [rad]
  double psi_v = 0.0;    // azimuth [rad]
};

struct LosAngles {
  double theta_l = 0.0;  // elevation [rad]
  double phi_l = 0.0;    // azimuth [rad]
};

// Ground -> frame rotation L(psi, theta). Row 0 is the frame's x axis.
Mat3 rotation_template(double psi, double theta);

// Ground -> pursuer velocity frame, L(psi_v, theta_v).
Mat3 velocity_dcm(const VelocityAngles& angles);

// Ground -> LOS frame, L(phi_l - pi/2, theta_l).
Mat3 los_dcm(const LosAngles& angles);

// Velocity-frame -> LOS-frame composition los_dcm * velocity_dcm^T.
Mat3 velocity_to_los(const LosAngles& los, const VelocityAngles& vel);

// Maps velocity-frame (a_theta, a_psi) to LOS-frame (a_theta_l, a_phi_l).
// Singular when the velocity is perpendicular to the LOS.
Mat2 projection_matrix(const LosAngles& los, const VelocityAngles& vel);

// Pursuer acceleration (a_v, a_theta, a_psi) in LOS components
// (a_r, a_theta_l, a_phi_l). The azimuth channel is sign-flipped relative to
// the LOS frame's third axis, which points along decreasing phi_l.
Vec3 accel_velocity_to_los(const Vec3& accel, const LosAngles& los,
                           const VelocityAngles& vel);

Vec3 los_unit_vector(const LosAngles& los);
Vec3 velocity_unit_vector(const VelocityAngles& vel);

// Cosine of the angle between LOS and pursuer velocity. Equals det M up to
// sign (|det M| == |cosine|).
double los_velocity_cosine(const LosAngles& los, const VelocityAngles& vel);

}  // namespace igc::frames
