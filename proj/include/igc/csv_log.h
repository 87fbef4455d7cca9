#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "igc/sim_log.h"

namespace igc::cli {

inline constexpr std::size_t kCsvColumns = 27;

const std::array<const char*, kCsvColumns>& csv_header();

std::array<double, kCsvColumns> csv_values(const sim::LogRow& row);

// Header line plus one LF-terminated row per sample, 17 significant digits.
void write_csv_log(std::ostream& out, const sim::SimLog& log);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::array<double, kCsvColumns>> rows;
};

// Throws Error on a malformed header, wrong column count or bad number.
CsvTable read_csv_log(std::istream& in);

}  // namespace igc::cli
