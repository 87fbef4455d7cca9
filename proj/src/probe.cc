#include "igc/probe.h"

#include <algorithm>
#include <cmath>

namespace igc::analysis {
namespace {

using engagement::EngagementState;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Vec12 = Eigen::Matrix<double, 12, 1>;

EngagementState unpack(const Eigen::Ref<const Eigen::VectorXd>& v) {
  return {v(0), v(1), v(2), v(3), v(4), v(5), v(6), v(7)};
}

Vec8 pack(const EngagementState& e) {
  Vec8 v;
  v << e.r, e.vr, e.theta_l, e.phi_l, e.x01, e.x02, e.theta_v, e.psi_v;
  return v;
}

// Engagement derivative driven by the linear force model at (alpha, beta),
// with a quiet evader.
Vec8 engagement_rates(const EngagementState& e, const Vec2& alpha_beta,
                      const sim::Scenario& sc) {
  const Vec2 a = airframe::lift_side_accels(alpha_beta.x(), alpha_beta.y(), 0.0,
                                            0.0, sc.cfg,
                                            airframe::AeroMode::kLinear);
  const Vec3 ap =
      frames::accel_velocity_to_los(Vec3(0.0, a.x(), a.y()), e.los(), e.vel());
  const auto rel = engagement::relative_derivatives(e, ap, Vec3::Zero());
  const Vec2 vd = engagement::velocity_angle_derivatives(a.x(), a.y(), sc.cfg,
                                                         e.theta_v, sc.guard_angle);
  Vec8 d;
  d << rel.r_dot, rel.vr_dot, rel.theta_l_dot, rel.phi_l_dot, rel.x01_dot,
      rel.x02_dot, vd.x(), vd.y();
  return d;
}

Vec2 sharp_command(const EngagementState& e, const sim::Scenario& sc) {
  return control::alpha_beta_command(e, engagement::g0(e, sc.cfg), sc.gains);
}

double floor_range(const sim::Scenario& sc) {
  return std::max(sc.r_min, sc.r_intercept);
}

// Integrates `deriv` from x, sampling `output` at every step until the range
// (state component 0) reaches the floor or t_max elapses.
template <typename Vector, typename Deriv, typename Output>
std::vector<Eigen::VectorXd> trace(const sim::Scenario& sc, Vector x,
                                   Deriv deriv, Output output) {
  std::vector<Eigen::VectorXd> out;
  const double floor = floor_range(sc);
  const auto steps = static_cast<long long>(std::floor(sc.t_max / sc.dt + 1e-9));
  for (long long k = 0; k <= steps; ++k) {
    out.push_back(output(x));
    if (x(0) <= floor) break;
    try {
      x = sim::rk4_step(deriv, x, static_cast<double>(k) * sc.dt, sc.dt);
    } catch (const Error&) {
      break;
    }
  }
  return out;
}

// sup_k || d/dt (a_k - b_k) || over the common prefix.
double sup_derivative_gap(const std::vector<Eigen::VectorXd>& a,
                          const std::vector<Eigen::VectorXd>& b, double dt) {
  const std::size_t n = std::min(a.size(), b.size());
  if (n < 2) return 0.0;
  std::vector<Eigen::VectorXd> gap(n);
  for (std::size_t k = 0; k < n; ++k) gap[k] = a[k] - b[k];
  double sup = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::VectorXd d;
    if (k == 0) {
      d = (gap[1] - gap[0]) / dt;
    } else if (k == n - 1) {
      d = (gap[n - 1] - gap[n - 2]) / dt;
    } else {
      d = (gap[k + 1] - gap[k - 1]) / (2.0 * dt);
    }
    sup = std::max(sup, d.norm());
  }
  return sup;
}

}  // namespace

double probe_gamma0y(const sim::Scenario& sc, double amplitude) {
  sc.validate();
  auto run = [&](const Vec2& y1) {
    auto deriv = [&](double, const Vec8& x) {
      const EngagementState e = unpack(x);
      Vec8 d = engagement_rates(e, sharp_command(e, sc), sc);
      d.segment<2>(4) += y1;
      return d;
    };
    auto output = [&](const Vec8& x) -> Eigen::VectorXd {
      return sharp_command(unpack(x), sc);
    };
    return trace(sc, pack(sc.initial.engagement), deriv, output);
  };
  const auto base = run(Vec2::Zero());
  double gain = 0.0;
  for (int j = 0; j < 2; ++j) {
    const auto forced = run(amplitude * Vec2::Unit(j));
    gain = std::max(gain, sup_derivative_gap(forced, base, sc.dt) / amplitude);
  }
  return gain;
}

double probe_gamma2y(const sim::Scenario& sc, double amplitude) {
  sc.validate();
  const sim::FullState start = sim::align_attitude_to_commands(sc);

  // x = (engagement, gamma, alpha, beta, pitch).
  auto rate_cmd = [&](const Vec12& x) {
    const EngagementState e = unpack(x.head<8>());
    const Vec3 x1 = x.segment<3>(8);
    const Vec2 ab = sharp_command(e, sc);
    const Vec3 x1_cmd(0.0, ab.x(), ab.y());
    const Mat3 g1 = airframe::g1(x(11), x1);
    return control::rate_command(x1, x1_cmd, g1, airframe::f1(x1, sc.cfg),
                                 sc.gains);
  };
  auto run = [&](const Vec3& y3) {
    auto deriv = [&](double, const Vec12& x) {
      const EngagementState e = unpack(x.head<8>());
      const Vec3 x1 = x.segment<3>(8);
      const double pitch = x(11);
      const Mat3 g1 = airframe::g1(pitch, x1);
      const Vec3 x2 = rate_cmd(x) + g1.fullPivLu().solve(y3);
      airframe::AttitudeState att{x1, x2, pitch};
      Vec12 d;
      d.head<8>() = engagement_rates(e, x1.tail<2>(), sc);
      d.segment<3>(8) = airframe::f1(x1, sc.cfg) + g1 * x2;
      d(11) = airframe::pitch_rate(att);
      return d;
    };
    auto output = [&](const Vec12& x) -> Eigen::VectorXd { return rate_cmd(x); };
    Vec12 x;
    x << pack(start.engagement), start.attitude.x1, start.attitude.pitch;
    return trace(sc, x, deriv, output);
  };
  const auto base = run(Vec3::Zero());
  double gain = 0.0;
  for (int j = 0; j < 3; ++j) {
    const auto forced = run(amplitude * Vec3::Unit(j));
    gain = std::max(gain, sup_derivative_gap(forced, base, sc.dt) / amplitude);
  }
  return gain;
}

}  // namespace igc::analysis
