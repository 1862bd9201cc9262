#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parbb::harness {

/// One run as written to the results table.
struct CsvRow {
  std::uint64_t run_id = 0;
  std::string problem;
  std::size_t n = 0;
  std::size_t lambda = 0;
  std::string algo;
  std::string p_mode;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t generations = 0;
  bool hit_target = false;
  /// Empty cell when the run never hit the target.
  std::optional<std::uint64_t> first_hit_evaluation;
  double best_fitness = 0.0;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

inline constexpr std::array<std::string_view, 12> kCsvColumns = {
    "run_id", "problem", "n",           "lambda",    "algo",                 "p_mode",
    "seed",   "evaluations", "generations", "hit_target", "first_hit_evaluation", "best_fitness"};

void write_csv_header(std::ostream& out);
/// Fitness values are written with 17 significant digits so they read back exactly.
void write_csv_row(std::ostream& out, const CsvRow& row);

/// ConfigError on a malformed table (wrong header, wrong cell count, bad numbers).
std::vector<CsvRow> read_csv(std::istream& in);
/// IoError if the file cannot be opened.
std::vector<CsvRow> read_csv_file(const std::string& path);

/// Appends rows to path, writing the header first when the file is new or empty.
void append_csv_file(const std::string& path, const std::vector<CsvRow>& rows);

}  // namespace parbb::harness
