#include "igc/sim.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <thread>

#include "igc/analysis.h"

namespace igc::sim {

using airframe::AttitudeState;
using engagement::EngagementState;

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kIntercept:
      return "intercept";
    case Outcome::kMiss:
      return "miss";
    case Outcome::kGuardBreach:
      return "guard-breach";
    case Outcome::kTimeout:
      return "timeout";
  }
  return "unknown";
}

FullState::Vector FullState::to_vector() const {
  const auto& e = engagement;
  const auto& a = attitude;
  Vector v;
  v << e.r, e.vr, e.theta_l, e.phi_l, e.x01, e.x02, e.theta_v, e.psi_v,
      a.x1.x(), a.x1.y(), a.x1.z(), a.x2.x(), a.x2.y(), a.x2.z(), a.pitch;
  return v;
}

FullState FullState::from_vector(const Vector& v, double t) {
  FullState s;
  s.engagement = {v(0), v(1), v(2), v(3), v(4), v(5), v(6), v(7)};
  s.attitude.x1 = v.segment<3>(8);
  s.attitude.x2 = v.segment<3>(11);
  s.attitude.pitch = v(14);
  s.t = t;
  return s;
}

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ValidationError(field, what);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void Scenario::validate() const {
  cfg.validate();
  gains.validate();
  require(finite_positive(dt), "sim.dt", "must be finite and > 0");
  require(std::isfinite(t_max) && t_max >= 0.0, "sim.t_max",
          "must be finite and >= 0");
  require(finite_positive(r_intercept), "sim.r_intercept",
          "must be finite and > 0");
  require(finite_positive(r_min), "sim.r_min", "must be finite and > 0");
  require(std::isfinite(r_max), "sim.r_max", "must be finite");
  require(r_min < initial.engagement.r, "initial.r", "must exceed sim.r_min");
  require(initial.engagement.r < r_max, "initial.r",
          "must be below sim.r_max");
  require(std::isfinite(divergence_factor) && divergence_factor > 1.0,
          "sim.divergence_factor", "must be finite and > 1");
  require(finite_positive(guard_angle) && guard_angle < std::numbers::pi / 2,
          "sim.guard_angle", "must lie in (0, pi/2)");
  require(finite_positive(attitude_bound) && attitude_bound < std::numbers::pi / 2,
          "sim.attitude_bound", "must lie in (0, pi/2)");
  if (fin_limit) {
    require(finite_positive(*fin_limit), "sim.fin_limit",
            "must be finite and > 0");
  }
  const auto& e = initial.engagement;
  require(std::abs(e.theta_l) < guard_angle, "initial.theta_l",
          "must satisfy |theta_l| < sim.guard_angle");
  require(std::abs(e.theta_v) < guard_angle, "initial.theta_v",
          "must satisfy |theta_v| < sim.guard_angle");
  require(std::abs(initial.attitude.beta()) < guard_angle, "initial.beta",
          "must satisfy |beta| < sim.guard_angle");
  require(std::abs(initial.attitude.pitch) < guard_angle, "initial.pitch",
          "must satisfy |pitch| < sim.guard_angle");
  require(initial.to_vector().allFinite(), "initial", "values must be finite");
  require(evader.amplitude.allFinite() && std::isfinite(evader.frequency) &&
              std::isfinite(evader.phase) && std::isfinite(evader.step_time),
          "evader", "values must be finite");
  const auto& d = disturbances;
  require(d.force.amplitude.allFinite() && std::isfinite(d.force.frequency) &&
              std::isfinite(d.force.phase),
          "disturbance.force", "values must be finite");
  require(d.d1.amplitude.allFinite() && std::isfinite(d.d1.frequency) &&
              std::isfinite(d.d1.phase),
          "disturbance.d1", "values must be finite");
  require(d.d2.amplitude.allFinite() && std::isfinite(d.d2.frequency) &&
              std::isfinite(d.d2.phase),
          "disturbance.d2", "values must be finite");
}

control::IgcOptions igc_options(const Scenario& sc) {
  control::IgcOptions opt;
  opt.fin_limit = sc.fin_limit;
  return opt;
}

PlantSignals plant_signals(const FullState& s, const Scenario& sc) {
  const EngagementState& e = s.engagement;
  const AttitudeState& a = s.attitude;
  PlantSignals p;
  p.force_disturbance = sc.disturbances.force(s.t);
  p.d1 = sc.disturbances.d1(s.t);
  p.d2 = sc.disturbances.d2(s.t);
  p.accel_velocity =
      airframe::lift_side_accels(a.alpha(), a.beta(), p.force_disturbance.x(),
                                 p.force_disturbance.y(), sc.cfg, sc.plant_mode);
  p.pursuer_accel_los = frames::accel_velocity_to_los(
      Vec3(0.0, p.accel_velocity.x(), p.accel_velocity.y()), e.los(), e.vel());
  p.evader_accel_los = engagement::evader_accel(sc.evader, s.t);
  p.relative = engagement::relative_derivatives(e, p.pursuer_accel_los,
                                                p.evader_accel_los);
  const Vec2 model = engagement::f0(e) +
                     engagement::g0_matrix(e, sc.cfg) * Vec2(a.alpha(), a.beta());
  p.d0 = e.r * (p.relative.x0_dot() - model);
  return p;
}

FullState::Vector closed_loop_derivative(const FullState& s,
                                         const Scenario& sc, const Vec3& u) {
  const PlantSignals p = plant_signals(s, sc);
  const auto att = airframe::attitude_derivatives(s.attitude, u, p.d1, p.d2,
                                                  sc.cfg, sc.guard_angle);
  const Vec2 vel_dot = engagement::velocity_angle_derivatives(
      p.accel_velocity.x(), p.accel_velocity.y(), sc.cfg,
      s.engagement.theta_v, sc.guard_angle);
  const auto& rel = p.relative;
  FullState::Vector d;
  d << rel.r_dot, rel.vr_dot, rel.theta_l_dot, rel.phi_l_dot, rel.x01_dot,
      rel.x02_dot, vel_dot.x(), vel_dot.y(), att.x1_dot, att.x2_dot,
      att.pitch_dot;
  return d;
}

FullState::Vector closed_loop_derivative(const FullState& s,
                                         const Scenario& sc) {
  const auto out = control::igc_step(s.engagement, s.attitude, sc.cfg,
                                     sc.gains, igc_options(sc));
  return closed_loop_derivative(s, sc, out.u);
}

FullState align_attitude_to_commands(const Scenario& sc) {
  FullState s = sc.initial;
  const Mat2 g0 = engagement::g0(s.engagement, sc.cfg);
  const Vec2 ab = control::alpha_beta_command(s.engagement, g0, sc.gains);
  s.attitude.x1 = Vec3(0.0, ab.x(), ab.y());
  const Mat3 g1 = airframe::g1(s.attitude.pitch, s.attitude.x1);
  s.attitude.x2 = control::rate_command(s.attitude.x1, s.attitude.x1, g1,
                                        airframe::f1(s.attitude.x1, sc.cfg),
                                        sc.gains);
  return s;
}

namespace {

// Breach message for the current state, or empty.
std::string guard_breach(const FullState& s, const Scenario& sc) {
  std::ostringstream msg;
  const auto& e = s.engagement;
  const auto& a = s.attitude;
  if (!s.to_vector().allFinite()) {
    msg << "non-finite state";
  } else if (std::abs(a.beta()) >= sc.guard_angle) {
    msg << "|beta| = " << std::abs(a.beta()) << " rad reached the guard band";
  } else if (std::abs(a.pitch) >= sc.guard_angle) {
    msg << "|pitch| = " << std::abs(a.pitch) << " rad reached the guard band";
  } else if (std::abs(e.theta_l) >= sc.guard_angle) {
    msg << "|theta_l| = " << std::abs(e.theta_l)
        << " rad reached the guard band";
  } else if (std::abs(e.theta_v) >= sc.guard_angle) {
    msg << "|theta_v| = " << std::abs(e.theta_v)
        << " rad reached the guard band";
  } else if (e.r >= sc.r_max) {
    msg << "range " << e.r << " m reached r_max";
  } else {
    return {};
  }
  return msg.str();
}

LogRow make_row(const FullState& s, const control::IgcOutput& ctl, const PlantSignals& p) {
  LogRow row;
  row.t = s.t;
  row.state = s;
  row.u = ctl.u;
  row.diag = ctl.diag;
  row.d0 = p.d0;
  row.d1 = p.d1;
  row.d2 = p.d2;
  row.evader = p.evader_accel_los;
  row.norm_x0 = s.engagement.x0().norm();
  row.norm_eta1 = ctl.diag.eta1.norm();
  row.norm_eta2 = ctl.diag.eta2.norm();
  return row;
}

double closest_approach(const EngagementState& e) {
  if (e.vr >= 0.0) return e.r;
  const double vt2 = e.r * e.r * (e.x01 * e.x01 + e.x02 * e.x02);
  return e.r * std::sqrt(vt2 / (e.vr * e.vr + vt2));
}

void summarize(RunResult& result) {
  auto& rows = result.log.rows;
  auto& sum = result.summary;
  sum.rows = rows.size();
  if (rows.empty()) return;
  sum.final_r = rows.back().state.engagement.r;
  sum.flight_time = rows.back().t;
  const double t_cut = 0.8 * sum.flight_time;
  sum.post_transient_sup_x0 = 0.0;
  const LogRow* closest = &rows.front();
  for (const auto& row : rows) {
    if (row.t >= t_cut - 1e-12) {
      sum.post_transient_sup_x0 = std::max(sum.post_transient_sup_x0, row.norm_x0);
    }
    if (row.state.engagement.r < closest->state.engagement.r) closest = &row;
  }
  sum.miss_distance = closest_approach(closest->state.engagement);
}

}  // namespace

RunResult run(const Scenario& sc, const RunOptions& options) {
  sc.validate();
  RunResult result;
  result.log.dt = sc.dt;
  auto& rows = result.log.rows;
  auto& sum = result.summary;

  FullState s = sc.on_command_manifold ? align_attitude_to_commands(sc)
                                       : sc.initial;
  s.t = 0.0;
  const double r0 = s.engagement.r;
  // Tolerance absorbs floating error in t_max / dt.
  const auto max_steps =
      static_cast<long long>(std::floor(sc.t_max / sc.dt + 1e-9));
  const auto opts = igc_options(sc);

  std::optional<Outcome> outcome;
  for (long long k = 0;; ++k) {
    s.t = static_cast<double>(k) * sc.dt;
    const auto& e = s.engagement;
    std::string breach = guard_breach(s, sc);
    if (e.r <= sc.r_intercept) {
      outcome = Outcome::kIntercept;
    } else if (e.r > sc.divergence_factor * r0 && e.vr > 0.0) {
      outcome = Outcome::kMiss;
      sum.message = "range diverged";
    } else if (!breach.empty()) {
      outcome = Outcome::kGuardBreach;
      sum.message = breach;
    } else if (k >= max_steps) {
      outcome = Outcome::kTimeout;
    }

    control::IgcOutput ctl;
    PlantSignals p;
    try {
      ctl = control::igc_step(e, s.attitude, sc.cfg, sc.gains, opts);
      p = plant_signals(s, sc);
    } catch (const Error& err) {
      if (!outcome) {
        outcome = Outcome::kGuardBreach;
        std::ostringstream msg;
        msg << "t = " << s.t << " s: " << err.what();
        sum.message = msg.str();
      }
      const double nan = std::nan("");
      ctl.u.setConstant(nan);
    }
    rows.push_back(make_row(s, ctl, p));
    if (outcome) break;

    try {
      const double t = s.t;
      FullState::Vector x = s.to_vector();
      auto deriv = [&](double tt, const FullState::Vector& xx) {
        const FullState stage = FullState::from_vector(xx, tt);
        if (sc.control_hold == ControlHold::kContinuous) {
          return closed_loop_derivative(stage, sc);
        }
        return closed_loop_derivative(stage, sc, ctl.u);
      };
      x = rk4_step(deriv, x, t, sc.dt);
      s = FullState::from_vector(x, t + sc.dt);
    } catch (const Error& err) {
      std::ostringstream msg;
      msg << "t = " << s.t << " s: " << err.what();
      sum.message = msg.str();
      sum.outcome = Outcome::kGuardBreach;
      outcome = Outcome::kGuardBreach;
      break;
    }
  }
  sum.outcome = *outcome;
  summarize(result);

  if (options.audit && rows.size() >= 3 && sum.outcome != Outcome::kGuardBreach) {
    const auto audit = analysis::bound_audit(result.log, sc.gains, sc.cfg,
                                             sc.r_min, options.audit_slack);
    sum.audit = audit.counts();
  }
  return result;
}

std::vector<SweepPoint> sweep(const Scenario& sc,
                              const std::vector<control::Gains>& grid,
                              const RunOptions& options) {
  if (grid.empty()) throw ValidationError("grid", "must not be empty");
  std::vector<SweepPoint> points(grid.size());
  auto run_point = [&](std::size_t i) {
    SweepPoint& pt = points[i];
    pt.gains = grid[i];
    try {
      Scenario local = sc;
      local.gains = grid[i];
      pt.summary = run(local, options).summary;
    } catch (const std::exception& e) {
      pt.error = e.what();
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < grid.size(); begin += workers) {
    const std::size_t end = std::min(grid.size(), begin + workers);
    std::vector<std::future<void>> batch;
    for (std::size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, run_point, i));
    }
    for (auto& f : batch) f.get();
  }
  return points;
}

}  // namespace igc::sim
