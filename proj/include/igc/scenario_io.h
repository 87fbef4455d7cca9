#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "igc/sim.h"

// Sectioned key-value scenario files:
//
//   # comment
//   [pursuer]
//   mass = 100
//   [initial]
//   r = 4000
//   ...
//
// Sections: pursuer, initial, gains, evader, disturbance, sim. Vectors are
// comma-separated. Unknown sections or keys are rejected.
namespace igc::cli {

class ParseError : public Error {
 public:
  ParseError(std::string source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

class UnknownKeyError : public ParseError {
 public:
  UnknownKeyError(std::string source, int line, std::string section,
                  std::string key)
      : ParseError(std::move(source), line,
                   "unknown key '" + key + "' in section [" + section + "]"),
        section_(std::move(section)),
        key_(std::move(key)) {}

  const std::string& section() const { return section_; }
  const std::string& key() const { return key_; }

 private:
  std::string section_;
  std::string key_;
};

// Throws ParseError / UnknownKeyError / ValidationError; a missing file is
// reported as Error naming the path.
sim::Scenario parse_scenario(const std::filesystem::path& path);

sim::Scenario parse_scenario_text(std::string_view text,
                                  const std::string& source = "<text>");

// Full scenario at 17 significant digits; parse_scenario_text inverts it.
std::string serialize_scenario(const sim::Scenario& sc);

// Decimal number with optional exponent; rejects trailing junk and non-finite
// values.
bool parse_number(std::string_view text, double& value);

std::string format_number(double value);

}  // namespace igc::cli
