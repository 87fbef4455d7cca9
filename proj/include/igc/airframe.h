#pragma once

#include "igc/types.h"

namespace igc::airframe {

// Mass, thrust, aerodynamic and inertia constants of the pursuer. Speed is
// held constant, so the dynamic pressure is a constant of the configuration.
struct AeroConfig {
  double mass = 100.0;        // [kg]
  double thrust = 2000.0;     // [N]
  double speed = 600.0;       // [m/s]
  double air_density = 1.0;   // [kg/m^3]
  double ref_area = 0.05;     // [m^2]
  double ref_length = 2.0;    // [m]
  double lift_slope = 40.0;   // c_y^alpha [1/rad]
  double side_slope = -40.0;  // c_z^beta [1/rad]
  double mx_delta_x = -0.1;   // rolling moment vs aileron [1/rad]
  double my_beta = -0.5;      // yawing moment vs sideslip [1/rad]
  double my_delta_y = -0.4;   // yawing moment vs rudder [1/rad]
  double mz_alpha = -0.5;     // pitching moment vs angle of attack [1/rad]
  double mz_delta_z = -0.4;   // pitching moment vs elevator [1/rad]
  double jx = 1.0;            // [kg m^2]
  double jy = 50.0;
  double jz = 50.0;

  double dynamic_pressure() const {
    return 0.5 * air_density * speed * speed;
  }

  // diag(P + qS c_y^alpha, -P + qS c_z^beta): force per unit (alpha, beta).
  Vec2 force_slopes() const;

  // Throws ValidationError naming "pursuer.<field>".
  void validate() const;

  bool operator==(const AeroConfig&) const = default;
};

enum class AeroMode { kTrig, kLinear };

struct AttitudeState {
  Vec3 x1 = Vec3::Zero();  // (gamma, alpha, beta) [rad]
  Vec3 x2 = Vec3::Zero();  // (omega_x, omega_y, omega_z) [rad/s]
  double pitch = 0.0;      // [rad]

  double gamma() const { return x1.x(); }
  double alpha() const { return x1.y(); }
  double beta() const { return x1.z(); }
};

// (delta_x, delta_y, delta_z): aileron, rudder, elevator [rad].
using FinDeflections = Vec3;

struct AttitudeDerivative {
  Vec3 x1_dot;
  Vec3 x2_dot;
  double pitch_dot;
};

// |beta| and |pitch| beyond this abort the simulation.
inline constexpr double kAttitudeGuard = 1.2;

Vec3 f1(const Vec3& x1, const AeroConfig& cfg);
Mat3 g1(double pitch, const Vec3& x1);
Vec3 f2(const Vec3& x1, const Vec3& x2, const AeroConfig& cfg);
Mat3 g2(const AeroConfig& cfg);

// Velocity-frame (a_theta, a_psi) [m/s^2] including force uncertainties
// d_y, d_z [N].
Vec2 lift_side_accels(double alpha, double beta, double d_y, double d_z,
                      const AeroConfig& cfg, AeroMode mode);

double pitch_rate(const AttitudeState& state);

// Throws GuardError when |beta| or |pitch| reaches `guard`.
AttitudeDerivative attitude_derivatives(const AttitudeState& state,
                                        const FinDeflections& u,
                                        const Vec3& d1, const Vec3& d2,
                                        const AeroConfig& cfg,
                                        double guard = kAttitudeGuard);

}  // namespace igc::airframe
