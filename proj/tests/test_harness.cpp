#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "parbb/config_json.hpp"
#include "parbb/errors.hpp"
#include "parbb/harness/cli.hpp"
#include "parbb/harness/csv.hpp"
#include "parbb/harness/experiment.hpp"
#include "parbb/harness/lower_bound_check.hpp"
#include "parbb/harness/objective_factory.hpp"

using namespace parbb;
using namespace parbb::harness;
using nlohmann::json;

namespace {

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "parbb_tests";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::filesystem::remove(p);
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "parbb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

CsvRow sample_row(std::uint64_t id, bool hit) {
  CsvRow r;
  r.run_id = id;
  r.problem = "onemax";
  r.n = 500;
  r.lambda = 64;
  r.algo = "one-plus-lambda-fixed";
  r.p_mode = "1/n";
  r.seed = 1234567890123ULL + id;
  r.evaluations = 64 * (id + 1);
  r.generations = id;
  r.hit_target = hit;
  if (hit) r.first_hit_evaluation = 64 * id + 5;
  r.best_fitness = 0.1 * static_cast<double>(id) + 1.0 / 3.0;
  return r;
}

json onemax_spec(std::size_t n, std::vector<std::size_t> lambdas, std::size_t reps, std::uint64_t seed) {
  return {{"objective", {{"name", "onemax"}, {"n", n}}},
          {"algorithm", {{"algorithm", "one-plus-lambda-fixed"}}},
          {"lambdas", lambdas},
          {"repetitions", reps},
          {"seed", seed}};
}

}  // namespace

TEST(Factory, BuildsEveryName) {
  const json knapsack{{"weights", {2, 3, 4}}, {"values", {3, 4, 5}}, {"capacity", 5}};
  for (const auto& name : objective_names()) {
    json d{{"name", name}, {"n", 8}, {"seed", 3}};
    if (name == "jump") d["k"] = 2;
    if (name == "cliff") d["d"] = 2;
    if (name == "knapsack-hard") d["n"] = 7;
    if (name == "knapsack") d = {{"name", name}, {"instance", knapsack}};
    if (name == "planted-3sat") d["m"] = 30;
    if (name == "nearest-peak" || name == "weighted-nearest-peak") d["peaks"] = 3;
    if (name == "monotone-poly") d["monomials"] = 5;
    const auto obj = make_objective(d);
    EXPECT_EQ(obj.name().empty(), false) << name;
    EXPECT_NO_THROW(obj.global_optima()) << name;
  }
}

TEST(Factory, Errors) {
  EXPECT_THROW(make_objective(json{{"name", "sphere"}, {"n", 5}}), ConfigError);
  EXPECT_THROW(make_objective(json{{"name", "jump"}, {"n", 5}}), ConfigError);
  EXPECT_THROW(make_objective(json{{"name", "jump"}, {"n", 5}, {"k", 9}}), ConfigError);
  EXPECT_THROW(make_objective(json{{"name", "hiff"}, {"n", 6}}), ConfigError);
  EXPECT_THROW(make_objective(json{{"n", 6}}), ConfigError);
  EXPECT_THROW(make_objective(json{{"name", "onemax"}, {"n", -3}}), ConfigError);
  const auto obj = make_objective(json{{"name", "onemax"}, {"n", 30}});
  EXPECT_THROW(make_target(obj, json{{"kind", "nearby"}}), ConfigError);
  EXPECT_FALSE(make_target(obj, json{{"kind", "none"}}));
  const auto w = make_target(obj, json{{"kind", "within-distance"}, {"d", 2}});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->radius(), 2u);
  const auto big = make_objective(json{{"name", "partition"}, {"n", 30}, {"seed", 1}});
  EXPECT_THROW(make_target(big, json{{"kind", "global-optima"}}), ConfigError);
}

TEST(Csv, RoundTrip) {
  std::vector<CsvRow> rows;
  for (std::uint64_t i = 0; i < 20; ++i) rows.push_back(sample_row(i, i % 3 != 0));
  rows[4].best_fitness = -1e-300;
  rows[5].best_fitness = 12345678.123456789;
  std::stringstream ss;
  write_csv_header(ss);
  for (const auto& r : rows) write_csv_row(ss, r);
  EXPECT_EQ(read_csv(ss), rows);
}

TEST(Csv, Schema) {
  std::stringstream ss;
  write_csv_header(ss);
  EXPECT_EQ(ss.str(),
            "run_id,problem,n,lambda,algo,p_mode,seed,evaluations,generations,hit_target,first_hit_evaluation,"
            "best_fitness\n");
  std::stringstream row;
  write_csv_row(row, sample_row(3, false));
  EXPECT_NE(row.str().find(",false,,"), std::string::npos);
}

TEST(Csv, RejectsMalformedTables) {
  std::stringstream bad_header("run,problem\n");
  EXPECT_THROW(read_csv(bad_header), ConfigError);
  std::stringstream ss;
  write_csv_header(ss);
  ss << "1,onemax,10,1,rls,single-bit,1,5,4,maybe,,3\n";
  EXPECT_THROW(read_csv(ss), ConfigError);
  std::stringstream short_row;
  write_csv_header(short_row);
  short_row << "1,onemax,10\n";
  EXPECT_THROW(read_csv(short_row), ConfigError);
  EXPECT_THROW(read_csv_file("/nonexistent/dir/file.csv"), IoError);
  CsvRow comma = sample_row(1, true);
  comma.problem = "a,b";
  std::stringstream sink;
  EXPECT_THROW(write_csv_row(sink, comma), ConfigError);
}

TEST(Csv, AppendWritesHeaderOnce) {
  const auto path = temp_path("append.csv");
  append_csv_file(path, {sample_row(0, true)});
  append_csv_file(path, {sample_row(1, false), sample_row(2, true)});
  const auto rows = read_csv_file(path);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1], sample_row(1, false));
}

TEST(Experiment, SpecValidation) {
  auto j = onemax_spec(10, {1, 2}, 1, 5);
  EXPECT_NO_THROW(experiment_spec_from_json(j));
  j["repetitions"] = 0;
  EXPECT_THROW(experiment_spec_from_json(j), ConfigError);
  j = onemax_spec(10, {1, 0}, 1, 5);
  EXPECT_THROW(experiment_spec_from_json(j), ConfigError);
  j = onemax_spec(10, {1}, 1, 5);
  j["bounds"] = {"lb-unique", "no-such-bound"};
  EXPECT_THROW(experiment_spec_from_json(j), ConfigError);
  j = onemax_spec(10, {1}, 1, 5);
  j["algorithm"]["algorithm"] = "annealing";
  EXPECT_THROW(experiment_spec_from_json(j), ConfigError);
  j = onemax_spec(10, {8}, 1, 5);
  j["budget"] = 4;
  EXPECT_THROW(experiment_spec_from_json(j), ConfigError);
  j = onemax_spec(10, {1}, 1, 5);
  j.erase("seed");
  EXPECT_THROW(experiment_spec_from_json(j), ConfigError);
}

TEST(Experiment, InitialBatchHitRate) {
  auto j = onemax_spec(10, {1024}, 300, 77);
  j["max_generations"] = 0;
  const auto result = run_experiment(experiment_spec_from_json(j));
  const double exact = 1.0 - std::pow(1.0 - std::ldexp(1.0, -10), 1024);
  const auto& row = result.summary.rows.at(0);
  EXPECT_EQ(row.max_evaluations, 1024.0);
  EXPECT_EQ(row.max_generations, 0.0);
  // 4 standard errors of a proportion over 300 runs
  EXPECT_NEAR(row.hit_rate, exact, 4 * std::sqrt(exact * (1 - exact) / 300));
  for (const auto& r : result.rows) EXPECT_EQ(r.hit_target, r.first_hit_evaluation.has_value());
}

TEST(Experiment, DeterministicAcrossWorkerCounts) {
  auto j = onemax_spec(40, {1, 4, 16}, 6, 9);
  j["bounds"] = {"lb-unique"};
  std::vector<std::string> outputs;
  for (std::size_t workers : {1u, 3u, 1u}) {
    j["workers"] = workers;
    j["output"] = temp_path("det_" + std::to_string(outputs.size()) + ".csv");
    run_experiment(experiment_spec_from_json(j));
    outputs.push_back(slurp(j["output"]));
  }
  EXPECT_FALSE(outputs[0].empty());
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_EQ(outputs[0], outputs[2]);
}

TEST(Experiment, SeedsAndRunIds) {
  const auto spec = experiment_spec_from_json(onemax_spec(20, {1, 8}, 3, 4));
  const auto result = run_experiment(spec);
  ASSERT_EQ(result.rows.size(), 6u);
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    EXPECT_EQ(result.rows[i].run_id, i);
    EXPECT_EQ(result.rows[i].seed, derive_seed(4, {i / 3, i % 3}));
  }
  // the lambda = 1 column is a plain sequential run with the derived seed
  AlgoConfig cfg = spec.algorithm;
  cfg.n = 20;
  cfg.lambda = 1;
  cfg.budget = default_budget(20, 1);
  cfg.seed = derive_seed(4, {0, 1});
  Rng rng(cfg.seed);
  const auto obj = make_objective(spec.objective);
  const auto rec = run_algorithm(cfg, obj, rng, obj.global_optima());
  EXPECT_EQ(result.rows[1].evaluations, rec.evaluations);
  EXPECT_EQ(result.rows[1].first_hit_evaluation, rec.first_hit_evaluation);
}

TEST(Experiment, SummaryInvariants) {
  auto j = onemax_spec(30, {1, 3, 9}, 7, 2);
  j["bounds"] = {"lb-unique", "adaptive-ub"};
  j["max_generations"] = 60;
  const auto result = run_experiment(experiment_spec_from_json(j));
  for (const auto& row : result.summary.rows) {
    EXPECT_LE(row.min_evaluations, row.median_evaluations);
    EXPECT_LE(row.median_evaluations, row.max_evaluations);
    EXPECT_LE(row.min_generations, row.median_generations);
    EXPECT_LE(row.median_generations, row.max_generations);
    EXPECT_GE(row.hit_rate, 0.0);
    EXPECT_LE(row.hit_rate, 1.0);
    EXPECT_TRUE(row.bounds.count("lb-unique"));
    EXPECT_DOUBLE_EQ(row.ratios.at("lb-unique"), row.mean_evaluations / row.bounds.at("lb-unique"));
  }
  // adaptive-ub is undefined at lambda = 1
  EXPECT_FALSE(result.summary.rows[0].bounds.count("adaptive-ub"));
  EXPECT_TRUE(result.summary.rows[1].bounds.count("adaptive-ub"));
  const auto js = to_json(result.summary);
  EXPECT_EQ(js.at("master_seed"), 2);
}

TEST(Spearman, KnownValues) {
  EXPECT_DOUBLE_EQ(spearman_rho({1, 2, 3, 4}, {10, 20, 30, 40}), 1.0);
  EXPECT_DOUBLE_EQ(spearman_rho({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0);
  EXPECT_NEAR(spearman_rho({1, 2, 3, 4, 5}, {5, 6, 7, 8, 7}), 0.8207826816681233, 1e-12);
  EXPECT_NEAR(spearman_rho({1, 2, 2, 3, 10, 4}, {3, 1, 4, 1, 5, 9}), 0.5441176470588235, 1e-12);
  EXPECT_THROW(spearman_rho({1}, {1}), DomainError);
  EXPECT_THROW(spearman_rho({1, 2}, {1}), DomainError);
}

TEST(Sweep, GenerationsFallWithLambda) {
  auto j = onemax_spec(100, {1, 2, 4, 8, 16, 32}, 10, 3);
  j["algorithm"]["algorithm"] = "one-plus-lambda-adaptive";
  const auto summary = sweep_cutoff(experiment_spec_from_json(j));
  ASSERT_TRUE(summary.generations_rho);
  EXPECT_LT(*summary.generations_rho, 0.0);
  // below the cut-off the total work stays within a small factor of lambda = 1
  const double base = summary.rows[0].mean_evaluations;
  EXPECT_LT(summary.rows[1].mean_evaluations, 2.0 * base);
  EXPECT_LT(summary.rows[2].mean_evaluations, 2.0 * base);
}

TEST(LowerBound, ThresholdAndViolations) {
  const auto& bound = theory::find_bound("lb-lambda-term");
  EXPECT_NEAR(bound.evaluate({500, 64, 0.5}), 128.24, 0.01);
  std::vector<CsvRow> rows;
  for (std::uint64_t i = 0; i < 5; ++i) rows.push_back(sample_row(i, i != 2));
  // first hits 5, 69, -, 197, 261 against a threshold of about 128
  auto report = check_lower_bound(rows, bound);
  EXPECT_EQ(report.checked, 4u);
  EXPECT_EQ(report.violation_count, 2u);
  EXPECT_FALSE(report.pass);
  report = check_lower_bound(rows, bound, 0.0);
  EXPECT_EQ(report.violation_count, 0u);
  EXPECT_TRUE(report.pass);
  EXPECT_THROW(check_lower_bound(rows, theory::find_bound("hcy")), ConfigError);
  EXPECT_THROW(check_lower_bound(rows, bound, -1.0), ConfigError);
  EXPECT_EQ(to_json(report).at("pass"), true);
}

TEST(LowerBound, RlsRespectsCouponThreshold) {
  auto j = onemax_spec(500, {1}, 60, 8);
  j["algorithm"]["algorithm"] = "rls";
  const auto result = run_experiment(experiment_spec_from_json(j));
  const auto report = check_lower_bound(result.rows, theory::find_bound("lb-nlogn"), 1.0, 0.5);
  EXPECT_EQ(report.checked, 60u);
  EXPECT_EQ(report.violation_count, 0u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  EXPECT_EQ(cli({"verify", "--lemma", "nonsense", "--n", "10"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--lemma", "multibit", "--n", "1000"}).code, kExitUsage);
  EXPECT_EQ(cli({"bounds", "--id", "lb-unique"}).code, kExitUsage);
  EXPECT_EQ(cli({"bounds", "--id", "lb-unique", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"run", "--objective", "onemax", "--n", "10"}).code, kExitUsage);
  EXPECT_EQ(cli({"run", "--spec", "/nonexistent.json"}).code, kExitFailed);
}

TEST(Cli, VerifyAndBounds) {
  const auto v = cli({"verify", "--lemma", "improve-prob", "--n", "128"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(json::parse(v.out).at("pass"), true);
  const auto b = cli({"bounds", "--id", "lb-unique", "--n", "1000", "--lambda", "1", "--delta", "0.1"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_NEAR(json::parse(b.out).at("value").get<double>(), 6217.0, 0.05);
  EXPECT_NEAR(json::parse(b.out).at("value").get<double>(), 0.9 * 1000 * std::log(1000.0), 1e-9);
  const auto list = cli({"bounds", "--list"});
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_EQ(json::parse(list.out).size(), theory::bound_registry().size());
}

TEST(Cli, RunSweepAndCheck) {
  const auto csv = temp_path("cli_runs.csv");
  const std::vector<std::string> args{"run", "--objective", "onemax", "--n", "60", "--lambda", "4", "--reps", "5",
                                      "--seed", "11", "--output", csv, "--bounds", "lb-unique"};
  const auto first = cli(args);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  const auto csv_first = slurp(csv);
  std::filesystem::remove(csv);
  const auto second = cli(args);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(csv_first, slurp(csv));
  EXPECT_EQ(json::parse(first.out).at("master_seed"), 11);

  const auto sweep = cli({"sweep", "--objective", "{\"name\": \"jump\", \"k\": 2}", "--n", "20", "--lambdas", "1,4,16",
                          "--reps", "3", "--seed", "2", "--algorithm", "one-plus-lambda-adaptive"});
  ASSERT_EQ(sweep.code, kExitOk) << sweep.err;
  EXPECT_EQ(json::parse(sweep.out).at("rows").size(), 3u);
  EXPECT_TRUE(json::parse(sweep.out).contains("generations_spearman_rho"));

  const auto ok = cli({"check", "--csv", csv, "--bound", "lb-unique", "--safety", "0"});
  EXPECT_EQ(ok.code, kExitOk);
  const auto fail = cli({"check", "--csv", csv, "--bound", "lb-unique", "--safety", "100"});
  EXPECT_EQ(fail.code, kExitFailed);
  EXPECT_EQ(cli({"check", "--csv", csv, "--bound", "cutoff-LO"}).code, kExitUsage);

  const auto spec_path = temp_path("spec.json");
  std::ofstream(spec_path) << onemax_spec(30, {2}, 2, 5).dump();
  EXPECT_EQ(cli({"run", "--spec", spec_path}).code, kExitOk);
  const auto with_param = cli({"run", "--objective", "cliff", "--n", "12", "--param", "d=3", "--seed", "1",
                               "--lambda", "2", "--max-generations", "50"});
  EXPECT_EQ(with_param.code, kExitOk) << with_param.err;
  const auto near = cli({"run", "--objective", "onemax", "--n", "40", "--seed", "3", "--reps", "4", "--target",
                         "{\"kind\": \"within-distance\", \"d\": 40}", "--max-generations", "0"});
  ASSERT_EQ(near.code, kExitOk) << near.err;
  // every point lies within distance n of the optimum
  EXPECT_EQ(json::parse(near.out).at("rows").at(0).at("hit_rate"), 1.0);
  EXPECT_EQ(cli({"run", "--objective", "onemax", "--n", "40", "--seed", "3", "--target", "{\"kind\": 3}"}).code,
            kExitUsage);
}
