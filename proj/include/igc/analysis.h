#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igc/airframe.h"
#include "igc/control.h"
#include "igc/sim_log.h"

namespace igc::analysis {

// ISS estimate of a stage closed with iss_control:
//   e^{-kt} |x(0)| + delta / sqrt(2k) * sqrt(1 - e^{-2kt}) * d_sup.
double iss_bound(double t, double x0_norm, double k, double delta,
                 double d_sup);

// Tracking-error estimate for eta1 / eta2, with the disturbance suprema of
// the channel already summed into `combined_disturbance_sup`.
double eta_bound(double t, double eta0_norm, double k, double delta,
                 double combined_disturbance_sup);

// LOS-rate estimate. The guidance disturbance enters as d0 / r, so its
// supremum is scaled by 1 / r_min; y1 = g0 eta1# enters unscaled.
double x0_bound(double t, double x0_norm_initial, const control::Gains& gains,
                double r_min, double d0_sup, double y1_sup);

// Linear class-K gain s -> coefficient * s.
struct LinearGain {
  double coefficient = 0.0;
};

struct LinearGains {
  LinearGain gamma_1y, gamma_1u;  // eta1 loop: ||g0|| delta1 / sqrt(2 k1)
  LinearGain gamma_3y, gamma_3u;  // eta2 loop: ||g1|| delta2 / sqrt(2 k2)
};

LinearGains linear_gains(const control::Gains& gains, double g0_norm,
                         double g1_norm);

struct SmallGainResult {
  bool pass = false;
  double margin = 0.0;  // 1 - product
};

// Loop condition for linear gains: the product of the two coefficients is
// below one.
SmallGainResult small_gain_check(LinearGain a, LinearGain b);

double spectral_norm(const Eigen::MatrixXd& m);

// Upper bound of ||g0|| over r in [r_min, r_max] with ||M|| <= 1.
double worst_case_g0_norm(const airframe::AeroConfig& cfg, double r_min);

// Largest ||g1|| over |alpha|, |beta|, |pitch| <= bound and any roll angle,
// by grid scan.
double worst_case_g1_norm(double attitude_bound, int points_per_axis = 13);

enum class GainSource { kMissing, kSupplied, kEstimated };

const char* to_string(GainSource source);

struct LoopCheck {
  double product = 0.0;
  double margin = 0.0;
  bool pass = false;
  bool checked = false;
};

struct GainCertificate {
  double g0_norm = 0.0;
  double g1_norm = 0.0;
  LinearGains explicit_gains;
  std::optional<double> gamma_0y_est;
  std::optional<double> gamma_2y_est;
  GainSource gamma_0y_source = GainSource::kMissing;
  GainSource gamma_2y_source = GainSource::kMissing;
  LoopCheck loop_eta1;  // gamma_1y * gamma_0y
  LoopCheck loop_eta2;  // gamma_3y * gamma_2y

  bool any_failed() const {
    return (loop_eta1.checked && !loop_eta1.pass) ||
           (loop_eta2.checked && !loop_eta2.pass);
  }
  bool complete() const { return loop_eta1.checked && loop_eta2.checked; }
  bool pass() const { return complete() && !any_failed(); }
};

GainCertificate make_certificate(const control::Gains& gains, double g0_norm,
                                 double g1_norm,
                                 std::optional<double> gamma_0y,
                                 GainSource gamma_0y_source,
                                 std::optional<double> gamma_2y,
                                 GainSource gamma_2y_source);

std::string format_certificate(const GainCertificate& cert);

struct BoundSample {
  double t = 0.0;
  double measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - measured
};

using BoundTrace = std::vector<BoundSample>;

struct AuditResult {
  BoundTrace x0;
  BoundTrace eta1;
  BoundTrace eta2;
  int violations_x0 = 0;
  int violations_eta1 = 0;
  int violations_eta2 = 0;

  int violations() const {
    return violations_x0 + violations_eta1 + violations_eta2;
  }
  sim::AuditCounts counts() const;
};

// Checks ||x0||, ||eta1||, ||eta2|| against their ISS estimates along a log.
// Command derivatives come from central differences (one-sided at the ends),
// disturbance suprema accumulate causally, and a sample violates when
// measured > bound * (1 + slack). Throws Error on fewer than 3 rows or
// non-uniform timestamps.
AuditResult bound_audit(const sim::SimLog& log, const control::Gains& gains,
                        const airframe::AeroConfig& cfg, double r_min,
                        double slack = 0.05);

}  // namespace igc::analysis
