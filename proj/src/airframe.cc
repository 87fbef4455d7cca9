#include "igc/airframe.h"

#include <cmath>
#include <sstream>

namespace igc::airframe {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string("pursuer.") + name,
                          "must be finite and > 0");
  }
}

void require_nonzero(double v, const char* name) {
  if (v == 0.0 || !std::isfinite(v)) {
    throw ValidationError(std::string("pursuer.") + name,
                          "must be finite and nonzero (control effectiveness)");
  }
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ValidationError(std::string("pursuer.") + name, "must be finite");
  }
}

}  // namespace

Vec2 AeroConfig::force_slopes() const {
  const double qs = dynamic_pressure() * ref_area;
  return {thrust + qs * lift_slope, -thrust + qs * side_slope};
}

void AeroConfig::validate() const {
  require_positive(mass, "mass");
  require_positive(speed, "speed");
  require_positive(air_density, "air_density");
  require_positive(ref_area, "ref_area");
  require_positive(ref_length, "ref_length");
  require_positive(jx, "jx");
  require_positive(jy, "jy");
  require_positive(jz, "jz");
  require_finite(thrust, "thrust");
  require_finite(lift_slope, "lift_slope");
  require_finite(side_slope, "side_slope");
  require_finite(my_beta, "my_beta");
  require_finite(mz_alpha, "mz_alpha");
  require_nonzero(mx_delta_x, "mx_delta_x");
  require_nonzero(my_delta_y, "my_delta_y");
  require_nonzero(mz_delta_z, "mz_delta_z");
}

Vec3 f1(const Vec3& x1, const AeroConfig& cfg) {
  const double alpha = x1.y(), beta = x1.z();
  const double q = cfg.dynamic_pressure();
  const double mv = cfg.mass * cfg.speed;
  return {0.0,
          -(cfg.thrust * std::sin(alpha) + q * cfg.ref_area * cfg.lift_slope * alpha) /
              (mv * std::cos(beta)),
          (q * cfg.ref_area * cfg.side_slope * beta -
           cfg.thrust * std::cos(alpha) * std::sin(beta)) /
              mv};
}

Mat3 g1(double pitch, const Vec3& x1) {
  const double gamma = x1.x(), alpha = x1.y(), beta = x1.z();
  const double tp = std::tan(pitch), tb = std::tan(beta);
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  Mat3 g;
  // clang-format off
  g << 1.0,      -tp * std::cos(gamma), tp * std::sin(gamma),
       -tb * ca,  sa * tb,              1.0,
       sa,        ca,                   0.0;
  // clang-format on
  return g;
}

Vec3 f2(const Vec3& x1, const Vec3& x2, const AeroConfig& cfg) {
  const double qsl = cfg.dynamic_pressure() * cfg.ref_area * cfg.ref_length;
  const double wx = x2.x(), wy = x2.y(), wz = x2.z();
  return {(cfg.jz - cfg.jy) / cfg.jx * wy * wz,
          qsl * cfg.my_beta * x1.z() / cfg.jy + (cfg.jx - cfg.jz) / cfg.jy * wx * wz,
          qsl * cfg.mz_alpha * x1.y() / cfg.jz + (cfg.jy - cfg.jx) / cfg.jz * wx * wy};
}

Mat3 g2(const AeroConfig& cfg) {
  const double qsl = cfg.dynamic_pressure() * cfg.ref_area * cfg.ref_length;
  return Vec3(qsl * cfg.mx_delta_x / cfg.jx, qsl * cfg.my_delta_y / cfg.jy,
              qsl * cfg.mz_delta_z / cfg.jz)
      .asDiagonal();
}

Vec2 lift_side_accels(double alpha, double beta, double d_y, double d_z,
                      const AeroConfig& cfg, AeroMode mode) {
  if (mode == AeroMode::kLinear) {
    return cfg.force_slopes().cwiseProduct(Vec2(alpha, beta)) / cfg.mass +
           Vec2(d_y, d_z) / cfg.mass;
  }
  const double qs = cfg.dynamic_pressure() * cfg.ref_area;
  const double lift = qs * cfg.lift_slope * alpha + d_y;
  const double side = qs * cfg.side_slope * beta + d_z;
  return Vec2(cfg.thrust * std::sin(alpha) + lift,
              -cfg.thrust * std::cos(alpha) * std::sin(beta) + side) /
         cfg.mass;
}

double pitch_rate(const AttitudeState& state) {
  return state.x2.y() * std::sin(state.gamma()) +
         state.x2.z() * std::cos(state.gamma());
}

AttitudeDerivative attitude_derivatives(const AttitudeState& state,
                                        const FinDeflections& u,
                                        const Vec3& d1, const Vec3& d2,
                                        const AeroConfig& cfg, double guard) {
  if (std::abs(state.beta()) >= guard || std::abs(state.pitch) >= guard ||
      !std::isfinite(state.beta()) || !std::isfinite(state.pitch)) {
    std::ostringstream msg;
    msg << "attitude guard breached: beta = " << state.beta()
        << " rad, pitch = " << state.pitch << " rad (limit " << guard << ")";
    throw GuardError(msg.str());
  }
  AttitudeDerivative d;
  d.x1_dot = f1(state.x1, cfg) + g1(state.pitch, state.x1) * state.x2 + d1;
  d.x2_dot = f2(state.x1, state.x2, cfg) + g2(cfg) * u + d2;
  d.pitch_dot = pitch_rate(state);
  return d;
}

}  // namespace igc::airframe
