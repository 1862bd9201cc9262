#include "parbb/harness/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parbb/config_json.hpp"
#include "parbb/errors.hpp"
#include "parbb/harness/objective_factory.hpp"
#include "parbb/parallel.hpp"
#include "parbb/rng.hpp"
#include "parbb/theory/bounds.hpp"

namespace parbb::harness {

void ExperimentSpec::validate() const {
  if (repetitions < 1) throw ConfigError("repetitions must be at least 1");
  if (lambdas.empty()) throw ConfigError("lambda list is empty");
  for (const auto l : lambdas)
    if (l < 1) throw ConfigError("every lambda must be at least 1");
  for (const auto& id : bounds) theory::find_bound(id);
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  if (budget && max_generations) throw ConfigError("give either budget or max_generations, not both");
  if (budget)
    for (const auto l : lambdas)
      if (*budget < l) throw ConfigError("budget is smaller than lambda = " + std::to_string(l));
}

ExperimentSpec experiment_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("experiment spec must be a JSON object");
  ExperimentSpec spec;
  try {
    spec.objective = j.at("objective");
    const Objective obj = make_objective(spec.objective);
    spec.lambdas = j.contains("lambdas") ? j.at("lambdas").get<std::vector<std::size_t>>()
                                         : std::vector<std::size_t>{1};
    nlohmann::json algo = j.value("algorithm", nlohmann::json::object());
    if (!algo.is_object()) throw ConfigError("\"algorithm\" must be a JSON object");
    if (algo.contains("lambda") && !j.contains("lambdas"))
      spec.lambdas = {algo.at("lambda").get<std::size_t>()};
    if (j.contains("budget")) spec.budget = j.at("budget").get<std::uint64_t>();
    if (algo.contains("budget")) spec.budget = algo.at("budget").get<std::uint64_t>();
    if (j.contains("max_generations")) spec.max_generations = j.at("max_generations").get<std::uint64_t>();
    algo.erase("budget");
    algo["n"] = obj.n();
    algo["lambda"] = 1;
    spec.algorithm = algo_config_from_json(algo);
    spec.repetitions = j.value("repetitions", std::size_t{1});
    if (j.contains("target")) spec.target = j.at("target");
    spec.bounds = j.value("bounds", std::vector<std::string>{});
    spec.delta = j.value("delta", 0.5);
    spec.master_seed = j.at("seed").get<std::uint64_t>();
    spec.output = j.value("output", std::string());
    spec.workers = j.value("workers", std::size_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed experiment spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("Spearman correlation needs two equal-length series");
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
      const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / static_cast<double>(rx.size());
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / static_cast<double>(ry.size());
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

}  // namespace

LambdaSummary summarise(std::size_t lambda, const std::vector<CsvRow>& rows) {
  LambdaSummary s;
  s.lambda = lambda;
  s.runs = rows.size();
  if (rows.empty()) return s;
  std::vector<double> evals;
  std::vector<double> gens;
  std::size_t hits = 0;
  for (const auto& r : rows) {
    evals.push_back(static_cast<double>(r.evaluations));
    gens.push_back(static_cast<double>(r.generations));
    hits += r.hit_target ? 1 : 0;
  }
  const double count = static_cast<double>(rows.size());
  s.hit_rate = static_cast<double>(hits) / count;
  s.mean_evaluations = std::accumulate(evals.begin(), evals.end(), 0.0) / count;
  s.median_evaluations = median(evals);
  s.min_evaluations = *std::min_element(evals.begin(), evals.end());
  s.max_evaluations = *std::max_element(evals.begin(), evals.end());
  s.mean_generations = std::accumulate(gens.begin(), gens.end(), 0.0) / count;
  s.median_generations = median(gens);
  s.min_generations = *std::min_element(gens.begin(), gens.end());
  s.max_generations = *std::max_element(gens.begin(), gens.end());
  return s;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const Objective obj = make_objective(spec.objective);
  const std::optional<TargetSet> target = make_target(obj, spec.target);
  const std::size_t reps = spec.repetitions;
  const std::size_t total = spec.lambdas.size() * reps;
  std::vector<CsvRow> rows(total);
  const std::size_t workers = spec.workers ? spec.workers : default_worker_count();

  AlgoConfig base = spec.algorithm;
  base.n = obj.n();
  parallel_for(total, workers, [&](std::size_t index) {
    const std::size_t li = index / reps;
    const std::size_t rep = index % reps;
    AlgoConfig cfg = base;
    cfg.lambda = spec.lambdas[li];
    if (spec.max_generations)
      cfg.budget = cfg.lambda * (*spec.max_generations + 1);
    else
      cfg.budget = spec.budget ? *spec.budget : default_budget(cfg.n, cfg.lambda);
    cfg.seed = derive_seed(spec.master_seed, {li, rep});
    Rng rng(cfg.seed);
    const RunRecord rec = run_algorithm(cfg, obj, rng, target);
    CsvRow& row = rows[index];
    row.run_id = index;
    row.problem = obj.name();
    row.n = cfg.n;
    row.lambda = cfg.lambda;
    row.algo = to_string(cfg.algorithm);
    row.p_mode = p_mode_label(cfg, obj);
    row.seed = cfg.seed;
    row.evaluations = rec.evaluations;
    row.generations = rec.generations;
    row.hit_target = rec.hit_target;
    row.first_hit_evaluation = rec.first_hit_evaluation;
    row.best_fitness = rec.best_fitness;
  });

  ExperimentResult result;
  SweepSummary& summary = result.summary;
  summary.problem = obj.name();
  summary.n = obj.n();
  summary.algorithm = to_string(base.algorithm);
  summary.p_mode = p_mode_label(base, obj);
  summary.master_seed = spec.master_seed;
  summary.repetitions = reps;
  for (std::size_t li = 0; li < spec.lambdas.size(); ++li) {
    std::vector<CsvRow> slice(rows.begin() + static_cast<std::ptrdiff_t>(li * reps),
                              rows.begin() + static_cast<std::ptrdiff_t>((li + 1) * reps));
    LambdaSummary s = summarise(spec.lambdas[li], slice);
    for (const auto& id : spec.bounds) {
      const auto& bound = theory::find_bound(id);
      try {
        const double value = bound.evaluate({static_cast<double>(obj.n()), static_cast<double>(s.lambda), spec.delta});
        s.bounds[id] = value;
        s.ratios[id] = s.mean_evaluations / value;
      } catch (const DomainError&) {
        // bound undefined at this (n, lambda); left out of the row
      }
    }
    summary.rows.push_back(std::move(s));
  }
  result.rows = std::move(rows);
  if (!spec.output.empty()) append_csv_file(spec.output, result.rows);
  return result;
}

SweepSummary sweep_cutoff(const ExperimentSpec& spec) {
  SweepSummary summary = run_experiment(spec).summary;
  if (summary.rows.size() >= 2) {
    std::vector<double> lambdas, gens, evals;
    for (const auto& r : summary.rows) {
      lambdas.push_back(static_cast<double>(r.lambda));
      gens.push_back(r.mean_generations);
      evals.push_back(r.mean_evaluations);
    }
    summary.generations_rho = spearman_rho(lambdas, gens);
    summary.evaluations_rho = spearman_rho(lambdas, evals);
  }
  return summary;
}

nlohmann::json to_json(const SweepSummary& summary) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : summary.rows) {
    rows.push_back({{"lambda", r.lambda},
                    {"runs", r.runs},
                    {"hit_rate", r.hit_rate},
                    {"mean_evaluations", r.mean_evaluations},
                    {"median_evaluations", r.median_evaluations},
                    {"min_evaluations", r.min_evaluations},
                    {"max_evaluations", r.max_evaluations},
                    {"mean_generations", r.mean_generations},
                    {"median_generations", r.median_generations},
                    {"min_generations", r.min_generations},
                    {"max_generations", r.max_generations},
                    {"bounds", r.bounds},
                    {"ratios", r.ratios}});
  }
  nlohmann::json j{{"problem", summary.problem},         {"n", summary.n},
                   {"algorithm", summary.algorithm},     {"p_mode", summary.p_mode},
                   {"master_seed", summary.master_seed}, {"repetitions", summary.repetitions},
                   {"rows", std::move(rows)}};
  if (summary.generations_rho) j["generations_spearman_rho"] = *summary.generations_rho;
  if (summary.evaluations_rho) j["evaluations_spearman_rho"] = *summary.evaluations_rho;
  return j;
}

}  // namespace parbb::harness
