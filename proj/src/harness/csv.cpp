#include "parbb/harness/csv.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "parbb/errors.hpp"

namespace parbb::harness {
namespace {

// Problem and mode labels never contain separators; reject rather than quote.
const std::string& plain(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") != std::string::npos)
    throw ConfigError("CSV cell '" + cell + "' contains a separator");
  return cell;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

template <class T>
T parse_integer(const std::string& cell, std::string_view column) {
  T value{};
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw ConfigError("bad value '" + cell + "' in column " + std::string(column));
  return value;
}

double parse_double(const std::string& cell) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used == cell.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("bad value '" + cell + "' in column best_fitness");
}

}  // namespace

void write_csv_header(std::ostream& out) {
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) out << (i ? "," : "") << kCsvColumns[i];
  out << '\n';
}

void write_csv_row(std::ostream& out, const CsvRow& row) {
  std::ostringstream fitness;
  fitness << std::setprecision(17) << row.best_fitness;
  out << row.run_id << ',' << plain(row.problem) << ',' << row.n << ',' << row.lambda << ',' << plain(row.algo)
      << ',' << plain(row.p_mode) << ',' << row.seed << ',' << row.evaluations << ',' << row.generations << ','
      << (row.hit_target ? "true" : "false") << ',';
  if (row.first_hit_evaluation) out << *row.first_hit_evaluation;
  out << ',' << fitness.str() << '\n';
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("CSV input is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line);
  if (header.size() != kCsvColumns.size()) throw ConfigError("CSV header has the wrong number of columns");
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] != kCsvColumns[i]) throw ConfigError("unexpected CSV column '" + header[i] + "'");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c = split(line);
    if (c.size() != kCsvColumns.size())
      throw ConfigError("CSV row has " + std::to_string(c.size()) + " cells: " + line);
    CsvRow r;
    r.run_id = parse_integer<std::uint64_t>(c[0], kCsvColumns[0]);
    r.problem = c[1];
    r.n = parse_integer<std::size_t>(c[2], kCsvColumns[2]);
    r.lambda = parse_integer<std::size_t>(c[3], kCsvColumns[3]);
    r.algo = c[4];
    r.p_mode = c[5];
    r.seed = parse_integer<std::uint64_t>(c[6], kCsvColumns[6]);
    r.evaluations = parse_integer<std::uint64_t>(c[7], kCsvColumns[7]);
    r.generations = parse_integer<std::uint64_t>(c[8], kCsvColumns[8]);
    if (c[9] != "true" && c[9] != "false") throw ConfigError("bad hit_target value '" + c[9] + "'");
    r.hit_target = c[9] == "true";
    if (!c[10].empty()) r.first_hit_evaluation = parse_integer<std::uint64_t>(c[10], kCsvColumns[10]);
    r.best_fitness = parse_double(c[11]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<CsvRow> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_csv(in);
}

void append_csv_file(const std::string& path, const std::vector<CsvRow>& rows) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  if (fresh) write_csv_header(out);
  for (const auto& r : rows) write_csv_row(out, r);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace parbb::harness
