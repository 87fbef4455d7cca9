#include "igc/control.h"

#include <algorithm>
#include <cmath>

namespace igc::control {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string("gains.") + name,
                          "must be finite and > 0");
  }
}

}  // namespace

void Gains::validate() const {
  require_positive(k0, "k0");
  require_positive(k1, "k1");
  require_positive(k2, "k2");
  require_positive(delta0, "delta0");
  require_positive(delta1, "delta1");
  require_positive(delta2, "delta2");
}

Vec2 alpha_beta_command(const engagement::EngagementState& state,
                        const Mat2& g0, const Gains& gains) {
  const double cond = condition_number(g0);
  if (!(cond <= kConditionGate)) {
    throw SingularityError("alpha_beta_command", cond);
  }
  const double scale = 2.0 * state.vr / state.r -
                       1.0 / (2.0 * gains.delta0 * gains.delta0) - gains.k0;
  return g0.fullPivLu().solve(scale * state.x0());
}

Vec3 rate_command(const Vec3& x1, const Vec3& x1_cmd, const Mat3& g1,
                  const Vec3& f1, const Gains& gains) {
  return iss_control<3>(f1, g1, x1 - x1_cmd, gains.k1, gains.delta1,
                        "rate_command");
}

Vec3 fin_command(const Vec3& x1, const Vec3& x2, const Vec3& x2_cmd,
                 const airframe::AeroConfig& cfg, const Gains& gains) {
  // g2 is diagonal and nonzero by configuration.
  const Vec3 f2 = airframe::f2(x1, x2, cfg);
  const Vec3 g2 = airframe::g2(cfg).diagonal();
  const Vec3 eta2 = x2 - x2_cmd;
  return (-f2 - feedback_rate(gains.k2, gains.delta2) * eta2).cwiseQuotient(g2);
}

IgcOutput igc_step(const engagement::EngagementState& eng,
                   const airframe::AttitudeState& att,
                   const airframe::AeroConfig& cfg, const Gains& gains,
                   const IgcOptions& options) {
  IgcOutput out;
  IgcDiagnostics& diag = out.diag;

  if (!(eng.r > options.r_min) || !std::isfinite(eng.r)) {
    throw GuardError("igc_step: range at or below r_min");
  }
  diag.g0 = engagement::g0_matrix(eng, cfg);
  diag.cond_g0 = condition_number(diag.g0);
  diag.x1_sharp_cmd = alpha_beta_command(eng, diag.g0, gains);
  diag.x1_cmd = Vec3(0.0, diag.x1_sharp_cmd.x(), diag.x1_sharp_cmd.y());
  diag.eta1 = att.x1 - diag.x1_cmd;

  diag.g1 = airframe::g1(att.pitch, att.x1);
  diag.cond_g1 = condition_number(diag.g1);
  diag.x2_cmd =
      rate_command(att.x1, diag.x1_cmd, diag.g1, airframe::f1(att.x1, cfg), gains);
  diag.eta2 = att.x2 - diag.x2_cmd;

  diag.u_unsaturated = fin_command(att.x1, att.x2, diag.x2_cmd, cfg, gains);
  out.u = diag.u_unsaturated;
  if (options.fin_limit) {
    const double lim = *options.fin_limit;
    out.u = diag.u_unsaturated.cwiseMax(-lim).cwiseMin(lim);
    diag.saturated = out.u != diag.u_unsaturated;
  }
  return out;
}

}  // namespace igc::control
