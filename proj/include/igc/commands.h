#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "igc/control.h"

namespace igc::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;            // intercept / certificate pass
inline constexpr int kExitError = 1;         // bad input, guard breach
inline constexpr int kExitNegative = 2;      // miss / timeout / loop fails
inline constexpr int kExitInconclusive = 3;  // certificate lacks estimates

struct RunArgs {
  std::string scenario;
  std::string out_csv;
  bool audit = false;
  std::optional<std::string> summary_json;
};

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);

struct SweepArgs {
  std::string scenario;
  std::vector<std::string> grid;
  std::string out_table;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);

struct CheckGainsArgs {
  std::string scenario;
  std::optional<double> g0_norm;
  std::optional<double> g1_norm;
  std::optional<double> gamma0y;
  std::optional<double> gamma2y;
  // Estimate missing gamma_0y / gamma_2y by simulation probing.
  bool probe = false;
};

int cmd_check_gains(const CheckGainsArgs& args, std::ostream& out,
                    std::ostream& err);

// Expands grid specs into gain sets. Each spec is "name=v1,v2,..." with name
// in {k0, k1, k2, delta0, delta1, delta2}; "k1:k2=5,10" sets the listed
// gains together. Several specs form a Cartesian product. Throws
// ValidationError("grid", ...) on malformed or empty input.
std::vector<control::Gains> parse_grid(const std::vector<std::string>& specs,
                                       const control::Gains& base);

}  // namespace igc::cli
