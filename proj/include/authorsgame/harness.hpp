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

#ifndef AUTHORSGAME_HARNESS_HPP_
#define AUTHORSGAME_HARNESS_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "authorsgame/analysis.hpp"
#include "authorsgame/dynamics.hpp"
#include "authorsgame/errors.hpp"
#include "authorsgame/game.hpp"

namespace authorsgame {

struct RandomGameOptions {
  bool generic_quality = false;  // all n*m qualities distinct
  bool sorted_demand = true;     // D non-increasing in topic index
  bool strictly_decreasing_demand = false;
  std::int64_t denominator_bound = 1000;
  Mediator mediator = Mediator::prp();
  UtilityScheme scheme = UtilityScheme::kExposure;
};

// Qualities are k/bound with k uniform in [0, bound]; demand weights are
// positive integers in [1, bound], normalized exactly. Same seed, same game.
inline Game generate_random_game(std::uint64_t seed, std::size_t n,
                                 std::size_t m,
                                 const RandomGameOptions& options = {}) {
  if (n == 0 || m == 0) throw ValidationError("need n >= 1 and m >= 1");
  const std::int64_t bound = options.denominator_bound;
  if (bound < 1) throw ValidationError("denominator bound must be >= 1");
  if (options.generic_quality &&
      static_cast<std::uint64_t>(bound) + 1 < n * m) {
    throw ValidationError("denominator bound too small for distinct qualities");
  }
  if (options.strictly_decreasing_demand &&
      static_cast<std::uint64_t>(bound) < m) {
    throw ValidationError("denominator bound too small for distinct demand");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> quality_draw(0, bound);
  std::uniform_int_distribution<std::int64_t> weight_draw(1, bound);

  std::set<std::int64_t> used;
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(m));
  for (auto& row : q) {
    for (auto& entry : row) {
      std::int64_t k = quality_draw(rng);
      if (options.generic_quality) {
        while (used.count(k)) k = quality_draw(rng);
        used.insert(k);
      }
      entry = Rational(k, bound);
    }
  }

  std::vector<std::int64_t> weights(m);
  std::set<std::int64_t> used_weights;
  std::int64_t total = 0;
  for (auto& w : weights) {
    w = weight_draw(rng);
    if (options.strictly_decreasing_demand) {
      while (used_weights.count(w)) w = weight_draw(rng);
      used_weights.insert(w);
    }
    total += w;
  }
  if (options.sorted_demand || options.strictly_decreasing_demand) {
    std::sort(weights.begin(), weights.end(), std::greater<>());
  }
  std::vector<Rational> d;
  for (auto w : weights) d.emplace_back(w, total);

  return Game(TopicDistribution(std::move(d)), QualityMatrix(std::move(q)),
              options.mediator, options.scheme);
}

// Two authors, three topics, D = (0.5, 0.3, 0.2), PRP.
inline Game worked_example_game(UtilityScheme scheme) {
  return Game(
      TopicDistribution({Rational(1, 2), Rational(3, 10), Rational(1, 5)}),
      QualityMatrix({{Rational(1, 10), Rational(2, 5), Rational(4, 5)},
                     {Rational(9, 10), Rational(2, 5), Rational(1, 5)}}),
      Mediator::prp(), scheme);
}

// cell[r][c] = (u_1, u_2) at profile (r, c).
using Bimatrix = std::array<std::array<std::pair<Rational, Rational>, 3>, 3>;

struct WorkedExampleTables {
  Bimatrix exposure;
  Bimatrix action;
};

inline WorkedExampleTables reproduce_figure1() {
  WorkedExampleTables fig;
  for (UtilityScheme scheme :
       {UtilityScheme::kExposure, UtilityScheme::kAction}) {
    const Game game = worked_example_game(scheme);
    Bimatrix& table =
        scheme == UtilityScheme::kExposure ? fig.exposure : fig.action;
    for (Topic r = 0; r < 3; ++r) {
      for (Topic c = 0; c < 3; ++c) {
        const auto u = utility_vector(game, {r, c});
        table[r][c] = {u[0], u[1]};
      }
    }
  }
  return fig;
}

inline std::string format_bimatrix(const Bimatrix& table) {
  std::ostringstream out;
  out << "          topic 1        topic 2        topic 3\n";
  for (std::size_t r = 0; r < 3; ++r) {
    out << "topic " << r + 1 << " ";
    for (std::size_t c = 0; c < 3; ++c) {
      std::ostringstream cell;
      cell << to_double(table[r][c].first) << "," << to_double(table[r][c].second);
      std::string s = cell.str();
      s.resize(std::max<std::size_t>(s.size(), 14), ' ');
      out << " " << s;
    }
    out << "\n";
  }
  return out.str();
}

// Exposure/PRP games with n = m, strictly decreasing D and distinct
// qualities: topics in order of demand go to the best remaining author.
inline StrategyProfile greedy_assignment_pne(const Game& game) {
  const std::size_t n = game.num_authors();
  const std::size_t m = game.num_topics();
  if (game.scheme() != UtilityScheme::kExposure ||
      game.mediator().kind() != Mediator::Kind::kPrp) {
    throw ValidationError("greedy assignment needs PRP and exposure utility");
  }
  if (n != m) throw ValidationError("greedy assignment needs n = m");
  for (Topic k = 0; k + 1 < m; ++k) {
    if (!(game.demand()[k] > game.demand()[k + 1])) {
      throw ValidationError("greedy assignment needs strictly decreasing D");
    }
  }
  std::vector<Rational> all;
  for (const auto& row : game.quality().rows()) {
    all.insert(all.end(), row.begin(), row.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw ValidationError("greedy assignment needs a generic quality matrix");
  }
  StrategyProfile a(n);
  std::vector<bool> assigned(n, false);
  for (Topic k = 0; k < m; ++k) {
    std::optional<Author> pick;
    for (Author j = 0; j < n; ++j) {
      if (assigned[j]) continue;
      if (!pick || game.quality()(j, k) > game.quality()(*pick, k)) pick = j;
    }
    assigned[*pick] = true;
    a[*pick] = k;
  }
  return a;
}

enum class Check { kFip, kPne, kPotential, kDynamics };

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::size_t games = 0;
  std::pair<std::size_t, std::size_t> n_range{2, 3};
  std::pair<std::size_t, std::size_t> m_range{2, 3};
  Mediator mediator = Mediator::prp();
  UtilityScheme scheme = UtilityScheme::kExposure;
  std::set<Check> checks{Check::kFip};
  std::uint64_t budget = kDefaultProfileBudget;
  bool generic_quality = false;
  bool sorted_demand = true;
  std::int64_t denominator_bound = 1000;
  // Share of games drawn with qualities in {0, 1/4, ..., 1} (frequent ties).
  double tie_rich_fraction = 0.0;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

struct GameOutcome {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string mediator;
  std::string scheme;
  bool tie_rich = false;
  bool budget_exceeded = false;
  std::optional<bool> fip;
  std::vector<StrategyProfile> cycle;
  std::optional<std::size_t> pne_count;
  std::optional<std::uint64_t> max_path_len;
  std::optional<bool> potential_exists;
  std::optional<std::uint64_t> steps_to_converge;
  std::optional<std::string> dynamics_outcome;
};

struct ExperimentAggregate {
  std::size_t games = 0;
  std::size_t budget_exceeded = 0;
  std::size_t fip_checked = 0;
  double fip_rate = 0;
  std::size_t potential_checked = 0;
  double potential_failure_rate = 0;
  std::size_t dynamics_runs = 0;
  std::size_t converged_runs = 0;  // convergence statistics cover these
  double mean_convergence_steps = 0;
  std::uint64_t max_convergence_steps = 0;
  std::size_t cycle_witnesses = 0;
};

struct ExperimentReport {
  std::string generator = "uniform k/bound qualities; positive integer demand weights";
  std::vector<GameOutcome> outcomes;
  ExperimentAggregate aggregate;
};

// SplitMix64 step: decorrelates per-game seeds derived from one suite seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::int64_t kTieRichBound = 4;

inline GameOutcome run_single_experiment(const ExperimentConfig& config,
                                         std::size_t index) {
  GameOutcome out;
  out.seed = mix_seed(config.seed + index);
  std::mt19937_64 rng(out.seed);
  std::uniform_int_distribution<std::size_t> n_draw(config.n_range.first,
                                                    config.n_range.second);
  std::uniform_int_distribution<std::size_t> m_draw(config.m_range.first,
                                                    config.m_range.second);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  out.n = n_draw(rng);
  out.m = m_draw(rng);
  out.tie_rich = unit(rng) < config.tie_rich_fraction;
  out.mediator = config.mediator.name();
  out.scheme = to_string(config.scheme);

  RandomGameOptions options;
  options.mediator = config.mediator;
  options.scheme = config.scheme;
  options.sorted_demand = config.sorted_demand;
  options.generic_quality = config.generic_quality && !out.tie_rich;
  options.denominator_bound =
      out.tie_rich ? kTieRichBound : config.denominator_bound;
  const Game game = generate_random_game(rng(), out.n, out.m, options);

  try {
    const PayoffTable table(game, config.budget);
    const ImprovementGraph graph(table);
    const auto& checks = config.checks;
    if (checks.count(Check::kFip)) {
      FipResult fip = has_fip(graph);
      out.fip = fip.fip;
      out.cycle = std::move(fip.cycle);
      if (fip.fip) out.max_path_len = longest_improvement_path(graph);
    }
    if (checks.count(Check::kPne)) out.pne_count = enumerate_pne(graph).size();
    if (checks.count(Check::kPotential)) {
      out.potential_exists =
          exact_potential_check(table, game.mediator().is_scoring())
              .has_exact_potential;
    }
    if (checks.count(Check::kDynamics)) {
      const auto outcome =
          run_dynamics(table, StrategyProfile(out.n, 0),
                       Scheduler::first_deviator(),
                       default_step_budget(out.n, out.m));
      out.dynamics_outcome = to_string(outcome.kind);
      if (outcome.converged()) out.steps_to_converge = outcome.steps_taken();
    }
  } catch (const BudgetExceeded&) {
    out.budget_exceeded = true;
  }
  return out;
}

inline ExperimentAggregate aggregate(const std::vector<GameOutcome>& outcomes) {
  ExperimentAggregate agg;
  agg.games = outcomes.size();
  std::size_t fip_true = 0;
  std::size_t potential_missing = 0;
  std::uint64_t step_total = 0;
  for (const auto& o : outcomes) {
    agg.budget_exceeded += o.budget_exceeded ? 1 : 0;
    if (o.fip) {
      ++agg.fip_checked;
      fip_true += *o.fip ? 1 : 0;
      agg.cycle_witnesses += o.cycle.empty() ? 0 : 1;
    }
    if (o.potential_exists) {
      ++agg.potential_checked;
      potential_missing += *o.potential_exists ? 0 : 1;
    }
    if (o.dynamics_outcome) ++agg.dynamics_runs;
    if (o.steps_to_converge) {
      ++agg.converged_runs;
      step_total += *o.steps_to_converge;
      agg.max_convergence_steps =
          std::max(agg.max_convergence_steps, *o.steps_to_converge);
    }
  }
  if (agg.fip_checked) {
    agg.fip_rate = static_cast<double>(fip_true) / agg.fip_checked;
  }
  if (agg.potential_checked) {
    agg.potential_failure_rate =
        static_cast<double>(potential_missing) / agg.potential_checked;
  }
  if (agg.converged_runs) {
    agg.mean_convergence_steps =
        static_cast<double>(step_total) / agg.converged_runs;
  }
  return agg;
}

// Games are independent; workers fill fixed slots so the report does not
// depend on scheduling.
inline ExperimentReport run_experiment_suite(const ExperimentConfig& config) {
  if (config.n_range.first < 1 || config.n_range.first > config.n_range.second ||
      config.m_range.first < 1 || config.m_range.first > config.m_range.second) {
    throw ValidationError("n_range and m_range must be non-empty with lo >= 1");
  }
  ExperimentReport report;
  report.outcomes.resize(config.games);
  std::size_t workers = config.threads ? config.threads
                                       : std::thread::hardware_concurrency();
  workers = std::max<std::size_t>(1, std::min(workers, config.games));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.games; i = next++) {
      report.outcomes[i] = run_single_experiment(config, i);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  report.aggregate = aggregate(report.outcomes);
  return report;
}

inline std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "seed,n,m,mediator,scheme,fip,pne_count,max_path_len,"
         "potential_exists,steps_to_converge\n";
  auto opt = [](const auto& v) {
    std::ostringstream s;
    if (v) s << *v;
    return s.str();
  };
  auto opt_bool = [](const std::optional<bool>& v) -> std::string {
    return v ? (*v ? "true" : "false") : "";
  };
  for (const auto& o : report.outcomes) {
    out << o.seed << "," << o.n << "," << o.m << "," << o.mediator << ","
        << o.scheme << "," << opt_bool(o.fip) << "," << opt(o.pne_count)
        << "," << opt(o.max_path_len) << "," << opt_bool(o.potential_exists)
        << "," << opt(o.steps_to_converge) << "\n";
  }
  return out.str();
}

}  // namespace authorsgame

#endif  // AUTHORSGAME_HARNESS_HPP_
