#include "igc/analysis.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace igc::analysis {

double iss_bound(double t, double x0_norm, double k, double delta,
                 double d_sup) {
  const double decay = std::exp(-k * t);
  // -expm1(-2kt) == 1 - e^{-2kt} without cancellation at small t.
  const double rise = std::sqrt(-std::expm1(-2.0 * k * t));
  return decay * x0_norm + delta / std::sqrt(2.0 * k) * rise * d_sup;
}

double eta_bound(double t, double eta0_norm, double k, double delta,
                 double combined_disturbance_sup) {
  return iss_bound(t, eta0_norm, k, delta, combined_disturbance_sup);
}

double x0_bound(double t, double x0_norm_initial, const control::Gains& gains,
                double r_min, double d0_sup, double y1_sup) {
  return iss_bound(t, x0_norm_initial, gains.k0, gains.delta0,
                        d0_sup / r_min + y1_sup);
}

LinearGains linear_gains(const control::Gains& gains, double g0_norm,
                         double g1_norm) {
  const double c1 = g0_norm * gains.delta1 / std::sqrt(2.0 * gains.k1);
  const double c3 = g1_norm * gains.delta2 / std::sqrt(2.0 * gains.k2);
  return {{c1}, {c1}, {c3}, {c3}};
}

SmallGainResult small_gain_check(LinearGain a, LinearGain b) {
  const double product = a.coefficient * b.coefficient;
  return {product < 1.0, 1.0 - product};
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

double worst_case_g0_norm(const airframe::AeroConfig& cfg, double r_min) {
  return cfg.force_slopes().cwiseAbs().maxCoeff() / (cfg.mass * r_min);
}

double worst_case_g1_norm(double attitude_bound, int n) {
  double worst = 0.0;
  auto grid = [n](double lo, double hi, int i) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  const double b = attitude_bound;
  for (int ig = 0; ig < n; ++ig) {
    const double gamma = grid(-std::numbers::pi, std::numbers::pi, ig);
    for (int ia = 0; ia < n; ++ia) {
      for (int ib = 0; ib < n; ++ib) {
        for (int ip = 0; ip < n; ++ip) {
          const Vec3 x1(gamma, grid(-b, b, ia), grid(-b, b, ib));
          const Mat3 g = airframe::g1(grid(-b, b, ip), x1);
          worst = std::max(worst, spectral_norm(g));
        }
      }
    }
  }
  return worst;
}

const char* to_string(GainSource source) {
  switch (source) {
    case GainSource::kMissing:
      return "missing";
    case GainSource::kSupplied:
      return "supplied";
    case GainSource::kEstimated:
      return "estimated";
  }
  return "unknown";
}

namespace {

LoopCheck check_loop(LinearGain explicit_gain, std::optional<double> other) {
  LoopCheck loop;
  if (!other) return loop;
  const auto r = small_gain_check(explicit_gain, {*other});
  loop.checked = true;
  loop.product = explicit_gain.coefficient * *other;
  loop.margin = r.margin;
  loop.pass = r.pass;
  return loop;
}

}  // namespace

GainCertificate make_certificate(const control::Gains& gains, double g0_norm,
                                 double g1_norm,
                                 std::optional<double> gamma_0y,
                                 GainSource gamma_0y_source,
                                 std::optional<double> gamma_2y,
                                 GainSource gamma_2y_source) {
  GainCertificate cert;
  cert.g0_norm = g0_norm;
  cert.g1_norm = g1_norm;
  cert.explicit_gains = linear_gains(gains, g0_norm, g1_norm);
  cert.gamma_0y_est = gamma_0y;
  cert.gamma_2y_est = gamma_2y;
  cert.gamma_0y_source = gamma_0y ? gamma_0y_source : GainSource::kMissing;
  cert.gamma_2y_source = gamma_2y ? gamma_2y_source : GainSource::kMissing;
  cert.loop_eta1 = check_loop(cert.explicit_gains.gamma_1y, gamma_0y);
  cert.loop_eta2 = check_loop(cert.explicit_gains.gamma_3y, gamma_2y);
  return cert;
}

std::string format_certificate(const GainCertificate& c) {
  std::ostringstream out;
  out.precision(17);
  out << "g0_norm      " << c.g0_norm << "\n"
      << "g1_norm      " << c.g1_norm << "\n"
      << "gamma_1y     " << c.explicit_gains.gamma_1y.coefficient
      << " (explicit)\n"
      << "gamma_1u     " << c.explicit_gains.gamma_1u.coefficient
      << " (explicit)\n"
      << "gamma_3y     " << c.explicit_gains.gamma_3y.coefficient
      << " (explicit)\n"
      << "gamma_3u     " << c.explicit_gains.gamma_3u.coefficient
      << " (explicit)\n";
  auto loop = [&](const char* name, const char* other,
                  const std::optional<double>& est, GainSource src,
                  const LoopCheck& l) {
    out << other << "     ";
    if (est) {
      out << *est << " (" << to_string(src) << ")\n";
    } else {
      out << "- (missing)\n";
    }
    out << name << "  ";
    if (l.checked) {
      out << "product " << l.product << " margin " << l.margin << " "
          << (l.pass ? "PASS" : "FAIL") << "\n";
    } else {
      out << "inconclusive\n";
    }
  };
  loop("loop_eta1", "gamma_0y", c.gamma_0y_est, c.gamma_0y_source, c.loop_eta1);
  loop("loop_eta2", "gamma_2y", c.gamma_2y_est, c.gamma_2y_source, c.loop_eta2);
  out << "certificate  "
      << (c.any_failed() ? "FAIL" : (c.complete() ? "PASS" : "INCONCLUSIVE"))
      << "\n";
  return out.str();
}

sim::AuditCounts AuditResult::counts() const {
  sim::AuditCounts c;
  c.x0 = violations_x0;
  c.eta1 = violations_eta1;
  c.eta2 = violations_eta2;
  // The first sample has bound == measured by construction; skip it.
  auto worst = [](const BoundTrace& tr) {
    double m = 1.0;
    for (std::size_t k = 1; k < tr.size(); ++k) {
      if (tr[k].bound > 0.0) m = std::min(m, tr[k].margin / tr[k].bound);
    }
    return m;
  };
  c.worst_margin_x0 = worst(x0);
  c.worst_margin_eta1 = worst(eta1);
  c.worst_margin_eta2 = worst(eta2);
  return c;
}

namespace {

// Finite-difference derivative of a sampled vector signal.
template <typename Get>
auto derivative_at(const std::vector<sim::LogRow>& rows, std::size_t k,
                   double dt, Get get) {
  const std::size_t n = rows.size();
  if (k == 0) return ((get(rows[1]) - get(rows[0])) / dt).eval();
  if (k == n - 1) return ((get(rows[n - 1]) - get(rows[n - 2])) / dt).eval();
  return ((get(rows[k + 1]) - get(rows[k - 1])) / (2.0 * dt)).eval();
}

constexpr double kAbsoluteTolerance = 1e-12;

}  // namespace

AuditResult bound_audit(const sim::SimLog& log, const control::Gains& gains,
                        const airframe::AeroConfig& /*cfg*/, double r_min,
                        double slack) {
  const auto& rows = log.rows;
  if (rows.size() < 3) throw Error("bound_audit: log needs at least 3 rows");
  const double dt = log.dt;
  if (!(dt > 0.0)) throw Error("bound_audit: log step must be > 0");
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (std::abs(rows[k].t - rows[k - 1].t - dt) > 1e-9) {
      throw Error("bound_audit: non-uniform timestamps");
    }
  }

  AuditResult res;
  const double t0 = rows.front().t;
  const double x0_init = rows.front().norm_x0;
  const double eta1_init = rows.front().norm_eta1;
  const double eta2_init = rows.front().norm_eta2;

  double sup_d0 = 0.0, sup_y1 = 0.0;
  double sup_d1 = 0.0, sup_y0 = 0.0, sup_y3 = 0.0;
  double sup_d2 = 0.0, sup_y2 = 0.0;
  double r_floor = r_min;

  auto record = [slack](BoundTrace& trace, int& violations, double t,
                        double measured, double bound) {
    trace.push_back({t, measured, bound, bound - measured});
    if (measured > bound * (1.0 + slack) + kAbsoluteTolerance) ++violations;
  };

  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    const double t = row.t - t0;
    const auto& dg = row.diag;
    r_floor = std::min(r_floor, row.state.engagement.r);

    const Vec3 y0 = -derivative_at(rows, k, dt, [](const sim::LogRow& r) {
      return r.diag.x1_cmd;
    });
    const Vec3 y2 = -derivative_at(rows, k, dt, [](const sim::LogRow& r) {
      return r.diag.x2_cmd;
    });
    const Vec2 eta1_sharp = dg.eta1.tail<2>();

    sup_d0 = std::max(sup_d0, row.d0.norm());
    sup_y1 = std::max(sup_y1, (dg.g0 * eta1_sharp).norm());
    sup_d1 = std::max(sup_d1, row.d1.norm());
    sup_y0 = std::max(sup_y0, y0.norm());
    sup_y3 = std::max(sup_y3, (dg.g1 * dg.eta2).norm());
    sup_d2 = std::max(sup_d2, row.d2.norm());
    sup_y2 = std::max(sup_y2, y2.norm());

    record(res.x0, res.violations_x0, t, row.norm_x0,
           x0_bound(t, x0_init, gains, r_floor, sup_d0, sup_y1));
    record(res.eta1, res.violations_eta1, t, row.norm_eta1,
           eta_bound(t, eta1_init, gains.k1, gains.delta1,
                     sup_d1 + sup_y0 + sup_y3));
    record(res.eta2, res.violations_eta2, t, row.norm_eta2,
           eta_bound(t, eta2_init, gains.k2, gains.delta2, sup_d2 + sup_y2));
  }
  return res;
}

}  // namespace igc::analysis
