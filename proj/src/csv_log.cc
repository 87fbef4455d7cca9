#include "igc/csv_log.h"

#include <istream>
#include <limits>
#include <ostream>

#include "igc/scenario_io.h"

namespace igc::cli {

const std::array<const char*, kCsvColumns>& csv_header() {
  static const std::array<const char*, kCsvColumns> header = {
      "t",         "r",         "vr",        "theta_l",   "phi_l",
      "x01",       "x02",       "theta_v",   "psi_v",     "gamma",
      "alpha",     "beta",      "wx",        "wy",        "wz",
      "pitch",     "dx",        "dy_fin",    "dz_fin",    "alpha_cmd",
      "beta_cmd",  "wx_cmd",    "wy_cmd",    "wz_cmd",    "norm_x0",
      "norm_eta1", "norm_eta2"};
  return header;
}

std::array<double, kCsvColumns> csv_values(const sim::LogRow& row) {
  std::array<double, kCsvColumns> v{};
  v[0] = row.t;
  const auto state = row.state.to_vector();
  for (int i = 0; i < sim::FullState::kSize; ++i) v[1 + i] = state(i);
  for (int i = 0; i < 3; ++i) v[16 + i] = row.u(i);
  v[19] = row.diag.x1_sharp_cmd.x();
  v[20] = row.diag.x1_sharp_cmd.y();
  for (int i = 0; i < 3; ++i) v[21 + i] = row.diag.x2_cmd(i);
  v[24] = row.norm_x0;
  v[25] = row.norm_eta1;
  v[26] = row.norm_eta2;
  return v;
}

void write_csv_log(std::ostream& out, const sim::SimLog& log) {
  std::string line;
  for (std::size_t i = 0; i < kCsvColumns; ++i) {
    if (i) line += ',';
    line += csv_header()[i];
  }
  out << line << '\n';
  for (const auto& row : log.rows) {
    line.clear();
    const auto values = csv_values(row);
    for (std::size_t i = 0; i < kCsvColumns; ++i) {
      if (i) line += ',';
      line += format_number(values[i]);
    }
    out << line << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    cells.push_back(line.substr(pos, comma == std::string::npos
                                         ? std::string::npos
                                         : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return cells;
}

// Non-finite values (NaN controls after a failed evaluation) are written by
// printf as "nan" / "inf"; accept them back.
bool parse_cell(const std::string& cell, double& value) {
  if (parse_number(cell, value)) return true;
  if (cell == "nan" || cell == "-nan") {
    value = std::numeric_limits<double>::quiet_NaN();
    return true;
  }
  if (cell == "inf" || cell == "-inf") {
    value = cell[0] == '-' ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    return true;
  }
  return false;
}

}  // namespace

CsvTable read_csv_log(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw Error("csv: missing header");
  table.header = split(line);
  if (table.header.size() != kCsvColumns) {
    throw Error("csv: header has " + std::to_string(table.header.size()) +
                " columns, expected " + std::to_string(kCsvColumns));
  }
  for (std::size_t i = 0; i < kCsvColumns; ++i) {
    if (table.header[i] != csv_header()[i]) {
      throw Error("csv: unexpected header column '" + table.header[i] + "'");
    }
  }
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto cells = split(line);
    if (cells.size() != kCsvColumns) {
      throw Error("csv: line " + std::to_string(line_no) + " has " +
                  std::to_string(cells.size()) + " columns");
    }
    std::array<double, kCsvColumns> row{};
    for (std::size_t i = 0; i < kCsvColumns; ++i) {
      if (!parse_cell(cells[i], row[i])) {
        throw Error("csv: line " + std::to_string(line_no) +
                    ": bad number '" + cells[i] + "'");
      }
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace igc::cli
