// Copyright 2026 The authorsgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end: worked-example tables, game analysis, dynamics
// simulation, counterexample construction, and experiment suites.
//
// Exit codes: 0 success, 1 other failure, 2 validation error,
// 3 budget exhaustion.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "authorsgame/authorsgame.hpp"

namespace {

using namespace authorsgame;

constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// "1,2,3" -> 0-based indices, each checked against `limit`.
std::vector<std::size_t> parse_index_list(const std::string& text,
                                          std::size_t limit, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw ValidationError(std::string(what) + ": \"" + item +
                            "\" is not an integer");
    }
    if (pos != item.size() || v < 1 || static_cast<std::size_t>(v) > limit) {
      throw ValidationError(std::string(what) + ": \"" + item +
                            "\" must be in 1.." + std::to_string(limit));
    }
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

// kind[:param], e.g. identity, power:8, exponential:2, constant:1.
ScoreFunction parse_score(const std::string& spec) {
  json j;
  const auto colon = spec.find(':');
  j["kind"] = spec.substr(0, colon);
  if (colon != std::string::npos) {
    const std::string p = spec.substr(colon + 1);
    try {
      std::size_t pos = 0;
      j["param"] = std::stod(p, &pos);
      if (pos != p.size()) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw ValidationError("score parameter \"" + p + "\" is not a number");
    }
  }
  return score_from_json(j);
}

struct Options {
  bool example_json = false;

  std::string game_path;
  std::uint64_t budget = kDefaultProfileBudget;
  bool skip_potential = false;

  std::string init;
  std::string scheduler = "first-deviator";
  std::string rule = "better";
  std::string order;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 0;

  std::string theorem;
  std::string f = "identity";
  std::optional<double> alpha;
  std::optional<double> beta;
  double x1 = 1.0;

  std::string config_path;
  std::string out_prefix = "suite_report";
};

int cmd_example(const Options& o) {
  const WorkedExampleTables fig = reproduce_figure1();
  if (o.example_json) {
    json out{{"exposure", bimatrix_to_json(fig.exposure)},
             {"action", bimatrix_to_json(fig.action)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "Exposure-targeted utilities (u1,u2)\n"
            << format_bimatrix(fig.exposure) << "\n"
            << "Action-targeted utilities (u1,u2)\n"
            << format_bimatrix(fig.action);
  return 0;
}

int cmd_analyze(const Options& o) {
  const Game game = game_from_json(read_json_file(o.game_path));
  AnalysisOptions options;
  options.budget = o.budget;
  options.potential = !o.skip_potential;
  std::cout << analysis_to_json(analyze_game(game, options)).dump(2) << "\n";
  return 0;
}

int cmd_simulate(const Options& o) {
  const Game game = game_from_json(read_json_file(o.game_path));
  const std::size_t n = game.num_authors();
  StrategyProfile init =
      o.init.empty() ? StrategyProfile(n, 0)
                     : parse_index_list(o.init, game.num_topics(), "--init");
  game.validate(init);

  const ResponseRule rule =
      o.rule == "best" ? ResponseRule::kBest : ResponseRule::kBetter;
  Scheduler sched;
  if (o.scheduler == "first-deviator") {
    sched = Scheduler::first_deviator(rule);
  } else if (o.scheduler == "round-robin") {
    std::vector<Author> order;
    if (!o.order.empty()) order = parse_index_list(o.order, n, "--order");
    sched = Scheduler::round_robin(std::move(order), rule);
  } else {
    sched = Scheduler::random(o.seed, rule);
  }
  const std::uint64_t max_steps =
      o.max_steps ? o.max_steps : default_step_budget(n, game.num_topics());

  const DynamicsOutcome outcome = run_dynamics(game, init, sched, max_steps);
  std::cout << trajectory_to_jsonl(outcome.trajectory);
  json summary{{"outcome", to_string(outcome.kind)},
               {"steps", outcome.steps_taken()},
               {"terminal", profile_to_json(outcome.profile())}};
  if (outcome.repeated_profile_index) {
    summary["repeated_profile_index"] = *outcome.repeated_profile_index + 1;
  }
  if (outcome.inconclusive_repeat_step) {
    summary["first_revisit_step"] = *outcome.inconclusive_repeat_step + 1;
  }
  std::cerr << summary.dump() << "\n";
  return outcome.kind == DynamicsOutcome::Kind::kBudgetExhausted ? kExitBudget
                                                                 : 0;
}

int cmd_counterexample(const Options& o) {
  const ScoreFunction f = parse_score(o.f);
  CounterexampleBundle bundle = [&] {
    if (o.theorem == "thm3") return build_thm3_game(f);
    if (o.theorem == "thm4") {
      if (!o.alpha) throw ValidationError("thm4 needs --alpha");
      return build_thm4_game(f, *o.alpha);
    }
    if (!o.alpha || !o.beta) throw ValidationError("thm5 needs --alpha and --beta");
    return build_thm5_game(f, *o.alpha, *o.beta, o.x1);
  }();
  std::cout << bundle_to_json(bundle).dump(2) << "\n";
  return 0;
}

int cmd_suite(const Options& o) {
  const ExperimentConfig config = config_from_json(read_json_file(o.config_path));
  const ExperimentReport report = run_experiment_suite(config);
  write_text_file(o.out_prefix + ".csv", to_csv(report));
  write_text_file(o.out_prefix + ".json", report_to_json(report).dump(2) + "\n");
  std::cout << report_to_json(report)["aggregate"].dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Authors games: utilities, dynamics, and improvement analysis"};
  app.require_subcommand(1);
  Options o;

  auto* example = app.add_subcommand("example", "Print the worked-example bimatrices");
  example->add_flag("--json", o.example_json, "Emit exact rationals as JSON");

  auto* analyze = app.add_subcommand("analyze", "FIP, PNE and potential report");
  analyze->add_option("game", o.game_path, "Game JSON file")->required();
  analyze->add_option("--budget", o.budget, "Maximum number of profiles");
  analyze->add_flag("--no-potential", o.skip_potential,
                    "Skip the exact-potential check");

  auto* simulate = app.add_subcommand("simulate", "Run better-response dynamics");
  simulate->add_option("game", o.game_path, "Game JSON file")->required();
  simulate->add_option("--init", o.init,
                       "Initial profile, 1-based topics, e.g. 1,2 (default all 1)");
  simulate->add_option("--scheduler", o.scheduler, "Who moves next")
      ->check(CLI::IsMember({"first-deviator", "round-robin", "random"}));
  simulate->add_option("--rule", o.rule, "Response rule")
      ->check(CLI::IsMember({"better", "best"}));
  simulate->add_option("--order", o.order,
                       "Round-robin author order, 1-based, e.g. 2,1,3");
  simulate->add_option("--seed", o.seed, "Seed for the random scheduler");
  simulate->add_option("--max-steps", o.max_steps,
                       "Step budget (default m^n * n * m)")
      ->check(CLI::PositiveNumber);

  auto* counter = app.add_subcommand("counterexample",
                                     "Build a scoring-mediator improvement cycle");
  counter->add_option("theorem", o.theorem, "Construction")
      ->required()
      ->check(CLI::IsMember({"thm3", "thm4", "thm5"}));
  counter->add_option("--f", o.f,
                      "Score function kind[:param]: identity, constant[:v], "
                      "power:p, exponential[:s], exp_minus_one");
  counter->add_option("--alpha", o.alpha, "alpha (thm4, thm5)");
  counter->add_option("--beta", o.beta, "beta (thm5)");
  counter->add_option("--x1", o.x1, "Top quality x1 in (0,1] (thm5)");

  auto* suite = app.add_subcommand("suite", "Run a seeded experiment suite");
  suite->add_option("config", o.config_path, "Suite config JSON")->required();
  suite->add_option("--out", o.out_prefix,
                    "Output prefix for <prefix>.csv and <prefix>.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*example) return cmd_example(o);
    if (*analyze) return cmd_analyze(o);
    if (*simulate) return cmd_simulate(o);
    if (*counter) return cmd_counterexample(o);
    if (*suite) return cmd_suite(o);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
