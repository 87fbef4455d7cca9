#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "igc/sim_log.h"

namespace igc::sim {

enum class ControlHold {
  kZeroOrderHold,  // fin command computed once per step
  kContinuous,     // recomputed at every Runge-Kutta stage
};

struct Scenario {
  airframe::AeroConfig cfg;
  control::Gains gains;
  FullState initial;
  // Replace the initial attitude by the commanded one (eta1 = eta2 = 0).
  bool on_command_manifold = false;
  engagement::EvaderModel evader;
  engagement::DisturbanceModel disturbances;
  double dt = 1e-3;
  double t_max = 20.0;
  double r_intercept = 1.0;
  // Range interval [r_min, r_max] assumed by the stability analysis.
  double r_min = 500.0;
  double r_max = 10000.0;
  airframe::AeroMode plant_mode = airframe::AeroMode::kTrig;
  std::optional<double> fin_limit;
  double divergence_factor = 1.5;
  ControlHold control_hold = ControlHold::kZeroOrderHold;
  double guard_angle = airframe::kAttitudeGuard;
  // |alpha|, |beta|, |pitch| bound of the flight domain used for ||g1||.
  double attitude_bound = 0.3;

  // Throws ValidationError with the field path of the first violation.
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

// Intermediate plant quantities at one instant.
struct PlantSignals {
  Vec2 accel_velocity = Vec2::Zero();  // (a_theta, a_psi)
  Vec3 pursuer_accel_los = Vec3::Zero();
  Vec3 evader_accel_los = Vec3::Zero();
  Vec2 force_disturbance = Vec2::Zero();
  Vec3 d1 = Vec3::Zero();
  Vec3 d2 = Vec3::Zero();
  engagement::RelativeDerivative relative{};
  Vec2 d0 = Vec2::Zero();
};

PlantSignals plant_signals(const FullState& s, const Scenario& sc);

// Derivative of all 15 states with the fin command held at `u`.
FullState::Vector closed_loop_derivative(const FullState& s,
                                         const Scenario& sc, const Vec3& u);

// As above with u from igc_step at `s`.
FullState::Vector closed_loop_derivative(const FullState& s,
                                         const Scenario& sc);

// Classical fourth-order Runge-Kutta step of x' = f(t, x). Throws
// NumericalError on a non-finite stage derivative.
template <typename Vector, typename F>
Vector rk4_step(F&& f, const Vector& x, double t, double dt) {
  auto checked = [&](double tt, const Vector& xx) {
    Vector d = f(tt, xx);
    if (!d.allFinite()) throw NumericalError("rk4_step: non-finite derivative");
    return d;
  };
  const Vector k1 = checked(t, x);
  const Vector k2 = checked(t + 0.5 * dt, x + 0.5 * dt * k1);
  const Vector k3 = checked(t + 0.5 * dt, x + 0.5 * dt * k2);
  const Vector k4 = checked(t + dt, x + dt * k3);
  return x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Initial state with gamma = 0, (alpha, beta) = x1#* and body rates = x2*.
FullState align_attitude_to_commands(const Scenario& sc);

control::IgcOptions igc_options(const Scenario& sc);

struct RunOptions {
  bool audit = false;
  double audit_slack = 0.05;
};

struct RunResult {
  SimLog log;
  SimSummary summary;
};

// Validates the scenario (throws ValidationError) and integrates until
// intercept, miss, guard breach or timeout.
RunResult run(const Scenario& sc, const RunOptions& options = {});

struct SweepPoint {
  control::Gains gains;
  std::optional<SimSummary> summary;
  std::string error;
};

// One run per gain set, sharing initial conditions and disturbances. Points
// run concurrently; a failing point records its error and the sweep goes on.
std::vector<SweepPoint> sweep(const Scenario& sc,
                              const std::vector<control::Gains>& grid,
                              const RunOptions& options = {});

}  // namespace igc::sim
