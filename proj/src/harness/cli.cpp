#include "parbb/harness/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parbb/errors.hpp"
#include "parbb/harness/csv.hpp"
#include "parbb/harness/experiment.hpp"
#include "parbb/harness/lower_bound_check.hpp"
#include "parbb/theory/bounds.hpp"
#include "parbb/theory/lemmas.hpp"

namespace parbb::harness {
namespace {

using nlohmann::json;

struct RunOptions {
  std::string spec_file;
  std::string objective;
  std::size_t n = 0;
  std::vector<std::string> params;
  std::string algorithm = "one-plus-lambda-fixed";
  std::vector<std::size_t> lambdas;
  std::string p;
  std::size_t repetitions = 1;
  std::uint64_t budget = 0;
  std::uint64_t max_generations = 0;
  std::uint64_t seed = 0;
  std::string target = "global-optima";
  std::vector<std::string> bounds;
  double delta = 0.5;
  std::string output;
  std::size_t workers = 0;
  bool mirrored = false;
};

void add_run_options(CLI::App& cmd, RunOptions& o, bool sweep) {
  cmd.add_option("--spec", o.spec_file, "experiment spec (JSON file); other flags are then ignored");
  cmd.add_option("--objective", o.objective, "objective name, or an inline JSON descriptor");
  cmd.add_option("--n", o.n, "dimension");
  cmd.add_option("--param", o.params, "extra descriptor entry key=value (repeatable)");
  cmd.add_option("--algorithm", o.algorithm, "one-plus-lambda-fixed, one-plus-lambda-adaptive, rls or generic-parallel");
  cmd.add_option(sweep ? "--lambdas" : "--lambda", o.lambdas, "offspring population size(s)")->delimiter(',');
  cmd.add_option("--p", o.p, "fixed mutation probability, e.g. 0.01 or 1/n");
  cmd.add_option("--reps", o.repetitions, "repetitions per lambda");
  cmd.add_option("--budget", o.budget, "evaluation budget per run");
  cmd.add_option("--max-generations", o.max_generations, "generation budget per run (alternative to --budget)");
  cmd.add_option("--seed", o.seed, "master seed");
  cmd.add_option("--target", o.target, "global-optima, local-optima, none, or an inline JSON target");
  cmd.add_option("--bounds", o.bounds, "bound ids to overlay")->delimiter(',');
  cmd.add_option("--delta", o.delta, "delta for bounds that take one");
  cmd.add_option("--output", o.output, "CSV file the runs are appended to");
  cmd.add_option("--workers", o.workers, "worker threads (default: PARBB_WORKERS or hardware)");
  cmd.add_flag("--mirrored", o.mirrored, "generic framework: also query complements for free");
}

json param_value(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return text;
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

ExperimentSpec spec_from_options(const RunOptions& o, CLI::App& cmd) {
  if (!o.spec_file.empty()) return experiment_spec_from_json(read_json_file(o.spec_file));
  if (o.objective.empty()) throw ConfigError("give --spec or --objective");
  if (cmd.count("--seed") == 0) throw ConfigError("the master seed must be given explicitly (--seed)");
  json descriptor;
  if (!o.objective.empty() && o.objective.front() == '{') {
    descriptor = param_value(o.objective);
    if (!descriptor.is_object()) throw ConfigError("--objective is not a valid JSON object");
  } else {
    descriptor["name"] = o.objective;
  }
  if (cmd.count("--n")) descriptor["n"] = o.n;
  for (const auto& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects key=value, got '" + kv + "'");
    descriptor[kv.substr(0, eq)] = param_value(kv.substr(eq + 1));
  }
  json target{{"kind", o.target}};
  if (!o.target.empty() && o.target.front() == '{') {
    target = param_value(o.target);
    if (!target.is_object()) throw ConfigError("--target is not a valid JSON object");
  }
  json algo{{"algorithm", o.algorithm}, {"mirrored", o.mirrored}};
  if (!o.p.empty()) algo["p"] = param_value(o.p);
  json j{{"objective", descriptor},
         {"algorithm", algo},
         {"repetitions", o.repetitions},
         {"lambdas", o.lambdas.empty() ? std::vector<std::size_t>{1} : o.lambdas},
         {"target", target},
         {"bounds", o.bounds},
         {"delta", o.delta},
         {"seed", o.seed},
         {"output", o.output},
         {"workers", o.workers}};
  if (cmd.count("--budget")) j["budget"] = o.budget;
  if (cmd.count("--max-generations")) j["max_generations"] = o.max_generations;
  return experiment_spec_from_json(j);
}

theory::LemmaReport run_lemma(const std::string& lemma, std::size_t n, const std::vector<std::size_t>& lambdas,
                              std::uint64_t seed) {
  if (lemma == "hypergeom-tail") return theory::verify_hypergeom_tail(n);
  if (lemma == "improve-prob") return theory::verify_improve_prob(n);
  if (lemma == "chvatal") return theory::verify_chvatal(n);
  if (lemma == "multibit") return theory::verify_multibit_progress(n);
  if (lemma == "mgf")
    return lambdas.empty() ? theory::verify_mgf_bound(n) : theory::verify_mgf_bound(n, lambdas);
  if (lemma == "mgf-max")
    return lambdas.empty() ? theory::verify_mgf_max(n, {1, 64, 4096}, 100, 10000, seed)
                           : theory::verify_mgf_max(n, lambdas, 100, 10000, seed);
  if (lemma == "coupon") return theory::verify_coupon(n);
  return theory::verify_delta_symmetry(n);
}

json bound_json(const theory::BoundSpec& b) {
  return {{"id", b.id},
          {"formula", b.formula},
          {"asymptotic_only", b.asymptotic_only},
          {"uses_lambda", b.uses_lambda},
          {"uses_delta", b.uses_delta},
          {"constants", b.constants}};
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"parallel unbiased black-box experiments and bound checks", "parbb"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "run an experiment and print its summary");
  add_run_options(*run, run_opts, false);

  RunOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "sweep lambda and report the trend statistics");
  add_run_options(*sweep, sweep_opts, true);

  std::string lemma;
  std::size_t verify_n = 0;
  std::vector<std::size_t> verify_lambdas;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "check a progress or tail inequality on its grid");
  verify->add_option("--lemma", lemma, "inequality to check")
      ->required()
      ->check(CLI::IsMember({"hypergeom-tail", "improve-prob", "chvatal", "multibit", "mgf", "mgf-max", "coupon",
                             "delta-symmetry"}));
  verify->add_option("--n", verify_n, "dimension")->required();
  verify->add_option("--lambdas", verify_lambdas, "lambda values for the series checks")->delimiter(',');
  verify->add_option("--seed", verify_seed, "seed of the Monte-Carlo part");

  std::string bound_id;
  double bound_n = 0.0;
  double bound_lambda = 1.0;
  double bound_delta = 0.5;
  bool list_bounds = false;
  auto* bounds = app.add_subcommand("bounds", "evaluate a runtime bound");
  bounds->add_option("--id", bound_id, "bound id");
  bounds->add_option("--n", bound_n, "dimension");
  bounds->add_option("--lambda", bound_lambda, "offspring population size");
  bounds->add_option("--delta", bound_delta, "delta in (0, 1)");
  bounds->add_flag("--list", list_bounds, "list the known bounds");

  std::string csv_path;
  std::string check_bound;
  double safety = 1.0;
  double check_delta = 0.5;
  auto* check = app.add_subcommand("check", "compare recorded first hits against a lower bound");
  check->add_option("--csv", csv_path, "results table")->required();
  check->add_option("--bound", check_bound, "bound id")->required();
  check->add_option("--safety", safety, "multiplier applied to the bound");
  check->add_option("--delta", check_delta, "delta for bounds that take one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*run || *sweep) {
      const bool is_sweep = static_cast<bool>(*sweep);
      const ExperimentSpec spec = spec_from_options(is_sweep ? sweep_opts : run_opts, is_sweep ? *sweep : *run);
      const SweepSummary summary = is_sweep ? sweep_cutoff(spec) : run_experiment(spec).summary;
      print(out, to_json(summary));
      return kExitOk;
    }
    if (*verify) {
      const theory::LemmaReport report = run_lemma(lemma, verify_n, verify_lambdas, verify_seed);
      print(out, theory::to_json(report));
      return report.pass ? kExitOk : kExitFailed;
    }
    if (*bounds) {
      if (list_bounds) {
        json all = json::array();
        for (const auto& b : theory::bound_registry()) all.push_back(bound_json(b));
        print(out, all);
        return kExitOk;
      }
      if (bound_id.empty() || bounds->count("--n") == 0) throw ConfigError("bounds needs --id and --n");
      const auto& b = theory::find_bound(bound_id);
      json j = bound_json(b);
      j["n"] = bound_n;
      j["lambda"] = bound_lambda;
      j["delta"] = bound_delta;
      j["value"] = b.evaluate({bound_n, bound_lambda, bound_delta});
      print(out, j);
      return kExitOk;
    }
    if (*check) {
      const auto rows = read_csv_file(csv_path);
      const LowerBoundReport report = check_lower_bound(rows, theory::find_bound(check_bound), safety, check_delta);
      print(out, to_json(report));
      return report.pass ? kExitOk : kExitFailed;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace parbb::harness
