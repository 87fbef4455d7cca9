#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igc/airframe.h"
#include "igc/control.h"
#include "igc/engagement.h"

namespace igc::sim {

// Closed-loop state: 8 engagement values, 7 attitude values, and time.
struct FullState {
  static constexpr int kSize = 15;
  using Vector = Eigen::Matrix<double, kSize, 1>;

  engagement::EngagementState engagement;
  airframe::AttitudeState attitude;
  double t = 0.0;

  // Order: r, vr, theta_l, phi_l, x01, x02, theta_v, psi_v, gamma, alpha,
  // beta, wx, wy, wz, pitch.
  Vector to_vector() const;
  static FullState from_vector(const Vector& v, double t);

  bool operator==(const FullState& o) const {
    return engagement == o.engagement && attitude.x1 == o.attitude.x1 &&
           attitude.x2 == o.attitude.x2 && attitude.pitch == o.attitude.pitch &&
           t == o.t;
  }
};

struct LogRow {
  double t = 0.0;
  FullState state;
  airframe::FinDeflections u = Vec3::Zero();
  control::IgcDiagnostics diag;
  // Effective guidance disturbance r * (x0' - f0 - g0 (alpha, beta)): force
  // uncertainty, evader acceleration and plant/model aerodynamic mismatch.
  Vec2 d0 = Vec2::Zero();
  Vec3 d1 = Vec3::Zero();
  Vec3 d2 = Vec3::Zero();
  Vec3 evader = Vec3::Zero();
  double norm_x0 = 0.0;
  double norm_eta1 = 0.0;
  double norm_eta2 = 0.0;
};

// Uniform-step time series; rows[k].t == k * dt.
struct SimLog {
  double dt = 0.0;
  std::vector<LogRow> rows;
};

enum class Outcome { kIntercept, kMiss, kGuardBreach, kTimeout };

const char* to_string(Outcome outcome);

struct AuditCounts {
  int x0 = 0;
  int eta1 = 0;
  int eta2 = 0;
  // Smallest (bound - measured) / bound after the initial sample.
  double worst_margin_x0 = 0.0;
  double worst_margin_eta1 = 0.0;
  double worst_margin_eta2 = 0.0;

  int total() const { return x0 + eta1 + eta2; }
};

struct SimSummary {
  Outcome outcome = Outcome::kTimeout;
  double final_r = 0.0;
  double flight_time = 0.0;
  // sup ||x0|| over the final 20% of the flight.
  double post_transient_sup_x0 = 0.0;
  // Straight-line closest approach predicted from the minimum-range sample.
  double miss_distance = 0.0;
  std::size_t rows = 0;
  std::string message;
  std::optional<AuditCounts> audit;
};

}  // namespace igc::sim
