#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "parbb/harness/csv.hpp"
#include "parbb/one_plus_lambda.hpp"

namespace parbb::harness {

struct ExperimentSpec {
  nlohmann::json objective;
  /// n comes from the objective and lambda from the lambda list; the other
  /// fields apply to every run. The per-run seed replaces algorithm.seed.
  AlgoConfig algorithm;
  /// Budget for every lambda; default_budget(n, lambda) when absent.
  std::optional<std::uint64_t> budget;
  /// Alternative to budget: lambda * (max_generations + 1) evaluations.
  std::optional<std::uint64_t> max_generations;
  std::size_t repetitions = 1;
  std::vector<std::size_t> lambdas;
  nlohmann::json target = {{"kind", "global-optima"}};
  std::vector<std::string> bounds;
  double delta = 0.5;
  std::uint64_t master_seed = 0;
  /// CSV file the rows are appended to; none when empty.
  std::string output;
  /// 0 means default_worker_count().
  std::size_t workers = 0;

  /// ConfigError for invalid specs (including unknown bound ids).
  void validate() const;
};

/// {"objective": {...}, "algorithm": {...}, "repetitions": R, "lambdas": [...],
///  "target": {...}, "bounds": [...], "delta": 0.5, "seed": S, "output": "runs.csv",
///  "budget": B, "max_generations": G}
ExperimentSpec experiment_spec_from_json(const nlohmann::json& j);

struct LambdaSummary {
  std::size_t lambda = 0;
  std::size_t runs = 0;
  double hit_rate = 0.0;
  double mean_evaluations = 0.0;
  double median_evaluations = 0.0;
  double min_evaluations = 0.0;
  double max_evaluations = 0.0;
  double mean_generations = 0.0;
  double median_generations = 0.0;
  double min_generations = 0.0;
  double max_generations = 0.0;
  std::map<std::string, double> bounds;
  /// mean_evaluations / bound value.
  std::map<std::string, double> ratios;
};

struct SweepSummary {
  std::string problem;
  std::size_t n = 0;
  std::string algorithm;
  std::string p_mode;
  std::uint64_t master_seed = 0;
  std::size_t repetitions = 0;
  std::vector<LambdaSummary> rows;
  /// Spearman correlation of mean generations against lambda (two or more lambdas).
  std::optional<double> generations_rho;
  std::optional<double> evaluations_rho;
};

nlohmann::json to_json(const SweepSummary& summary);

struct ExperimentResult {
  SweepSummary summary;
  std::vector<CsvRow> rows;
};

/// R runs per lambda with seeds derive_seed(master, {lambda index, rep}).
/// Results do not depend on the worker count. Rows are appended to
/// spec.output when set.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// run_experiment with the Spearman trend statistics filled in.
SweepSummary sweep_cutoff(const ExperimentSpec& spec);

/// Spearman rank correlation with average ranks for ties. DomainError for
/// mismatched or short inputs.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

/// Summary statistics of a set of rows sharing one lambda.
LambdaSummary summarise(std::size_t lambda, const std::vector<CsvRow>& rows);

}  // namespace parbb::harness
