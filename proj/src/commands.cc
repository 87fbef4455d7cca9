#include "igc/commands.h"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "igc/analysis.h"
#include "igc/csv_log.h"
#include "igc/probe.h"
#include "igc/scenario_io.h"
#include "json.hpp"

namespace igc::cli {
namespace {

int exit_code(sim::Outcome outcome) {
  switch (outcome) {
    case sim::Outcome::kIntercept:
      return kExitOk;
    case sim::Outcome::kMiss:
    case sim::Outcome::kTimeout:
      return kExitNegative;
    case sim::Outcome::kGuardBreach:
      return kExitError;
  }
  return kExitError;
}

void print_summary(std::ostream& out, const sim::SimSummary& s) {
  out << "outcome                " << sim::to_string(s.outcome) << "\n"
      << "final_r                " << format_number(s.final_r) << "\n"
      << "flight_time            " << format_number(s.flight_time) << "\n"
      << "post_transient_sup_x0  " << format_number(s.post_transient_sup_x0)
      << "\n"
      << "miss_distance          " << format_number(s.miss_distance) << "\n"
      << "rows                   " << s.rows << "\n";
  if (!s.message.empty()) out << "message                " << s.message << "\n";
  if (s.audit) {
    const auto& a = *s.audit;
    out << "audit_violations       x0 " << a.x0 << " eta1 " << a.eta1
        << " eta2 " << a.eta2 << "\n"
        << "audit_worst_margin     x0 " << format_number(a.worst_margin_x0)
        << " eta1 " << format_number(a.worst_margin_eta1) << " eta2 "
        << format_number(a.worst_margin_eta2) << "\n";
  }
}

nlohmann::json summary_json(const sim::SimSummary& s) {
  nlohmann::json j = {{"outcome", sim::to_string(s.outcome)},
                      {"final_r", s.final_r},
                      {"flight_time", s.flight_time},
                      {"post_transient_sup_x0", s.post_transient_sup_x0},
                      {"miss_distance", s.miss_distance},
                      {"rows", s.rows},
                      {"message", s.message}};
  if (s.audit) {
    const auto& a = *s.audit;
    j["audit"] = {{"violations_x0", a.x0},
                  {"violations_eta1", a.eta1},
                  {"violations_eta2", a.eta2},
                  {"worst_margin_x0", a.worst_margin_x0},
                  {"worst_margin_eta1", a.worst_margin_eta1},
                  {"worst_margin_eta2", a.worst_margin_eta2}};
  }
  return j;
}

double* gain_field(control::Gains& g, const std::string& name) {
  static const std::map<std::string, double control::Gains::*> fields = {
      {"k0", &control::Gains::k0},         {"k1", &control::Gains::k1},
      {"k2", &control::Gains::k2},         {"delta0", &control::Gains::delta0},
      {"delta1", &control::Gains::delta1}, {"delta2", &control::Gains::delta2}};
  const auto it = fields.find(name);
  return it == fields.end() ? nullptr : &(g.*(it->second));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string::npos ? std::string::npos
                                                            : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

}  // namespace

std::vector<control::Gains> parse_grid(const std::vector<std::string>& specs,
                                       const control::Gains& base) {
  if (specs.empty()) throw ValidationError("grid", "no grid specification");
  std::vector<control::Gains> grid = {base};
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("grid", "expected name=v1,v2,... in '" + spec + "'");
    }
    const auto names = split(spec.substr(0, eq), ':');
    for (const auto& name : names) {
      control::Gains probe;
      if (!gain_field(probe, name)) {
        throw ValidationError("grid", "unknown gain '" + name + "' in '" +
                                          spec + "'");
      }
    }
    std::vector<double> values;
    const std::string list = spec.substr(eq + 1);
    if (list.empty()) {
      throw ValidationError("grid", "no values in '" + spec + "'");
    }
    for (const auto& item : split(list, ',')) {
      double v;
      if (!parse_number(item, v)) {
        throw ValidationError("grid", "bad value '" + item + "' in '" + spec +
                                          "'");
      }
      values.push_back(v);
    }
    std::vector<control::Gains> next;
    for (const auto& g : grid) {
      for (double v : values) {
        control::Gains point = g;
        for (const auto& name : names) *gain_field(point, name) = v;
        next.push_back(point);
      }
    }
    grid = std::move(next);
  }
  return grid;
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const auto sc = parse_scenario(args.scenario);
    sim::RunOptions options;
    options.audit = args.audit;
    const auto result = sim::run(sc, options);

    std::ofstream csv(args.out_csv, std::ios::binary);
    if (!csv) throw Error("cannot write '" + args.out_csv + "'");
    write_csv_log(csv, result.log);
    if (!csv.flush()) throw Error("write failed for '" + args.out_csv + "'");

    print_summary(out, result.summary);
    if (args.summary_json) {
      std::ofstream js(*args.summary_json);
      if (!js) throw Error("cannot write '" + *args.summary_json + "'");
      js << summary_json(result.summary).dump(2) << "\n";
    }
    return exit_code(result.summary.outcome);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const auto sc = parse_scenario(args.scenario);
    const auto grid = parse_grid(args.grid, sc.gains);
    const auto points = sim::sweep(sc, grid);

    std::ofstream table(args.out_table, std::ios::binary);
    if (!table) throw Error("cannot write '" + args.out_table + "'");
    table << "k0,k1,k2,delta0,delta1,delta2,outcome,final_r,flight_time,"
             "post_transient_sup_x0,miss_distance,error\n";
    for (const auto& p : points) {
      const auto& g = p.gains;
      table << format_number(g.k0) << ',' << format_number(g.k1) << ','
            << format_number(g.k2) << ',' << format_number(g.delta0) << ','
            << format_number(g.delta1) << ',' << format_number(g.delta2) << ',';
      if (p.summary) {
        const auto& s = *p.summary;
        table << sim::to_string(s.outcome) << ',' << format_number(s.final_r)
              << ',' << format_number(s.flight_time) << ','
              << format_number(s.post_transient_sup_x0) << ','
              << format_number(s.miss_distance) << ",\n";
      } else {
        std::string msg = p.error;
        for (char& c : msg) {
          if (c == ',' || c == '\n') c = ';';
        }
        table << "error,,,,," << msg << "\n";
      }
    }
    out << "wrote " << points.size() << " grid points to " << args.out_table
        << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_check_gains(const CheckGainsArgs& args, std::ostream& out,
                    std::ostream& err) {
  try {
    const auto sc = parse_scenario(args.scenario);
    const double g0 =
        args.g0_norm ? *args.g0_norm : analysis::worst_case_g0_norm(sc.cfg, sc.r_min);
    const double g1 = args.g1_norm ? *args.g1_norm
                                   : analysis::worst_case_g1_norm(sc.attitude_bound);

    auto source = [&](const std::optional<double>& given) {
      return given ? analysis::GainSource::kSupplied
                   : analysis::GainSource::kEstimated;
    };
    std::optional<double> gamma0y = args.gamma0y;
    std::optional<double> gamma2y = args.gamma2y;
    const auto src0 = source(gamma0y);
    const auto src2 = source(gamma2y);
    if (args.probe && !gamma0y) gamma0y = analysis::probe_gamma0y(sc);
    if (args.probe && !gamma2y) gamma2y = analysis::probe_gamma2y(sc);

    const auto cert =
        analysis::make_certificate(sc.gains, g0, g1, gamma0y, src0, gamma2y, src2);
    out << analysis::format_certificate(cert);
    if (cert.any_failed()) return kExitNegative;
    if (!cert.complete()) return kExitInconclusive;
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace igc::cli
