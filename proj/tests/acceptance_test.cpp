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


// Acceptance checks: one PASS/FAIL line per criterion; non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "authorsgame/authorsgame.hpp"

namespace {

using namespace authorsgame;

Rational R(const char* s) { return parse_rational(s); }

StrategyProfile P(std::initializer_list<Topic> topics) {
  StrategyProfile a;
  for (Topic t : topics) a.push_back(t - 1);
  return a;
}

std::string show(const StrategyProfile& a) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i] + 1;
  out << ")";
  return out.str();
}

// Collects the first few failure messages of one criterion.
struct Result {
  bool ok = true;
  std::vector<std::string> notes;
  std::string summary;

  void fail(const std::string& why) {
    ok = false;
    if (notes.size() < 5) notes.push_back(why);
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::vector<std::vector<Author>> all_orders(std::size_t n) {
  std::vector<Author> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<Author>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// First-deviator plus round-robin over every author order, each with the
// better and the best response rule.
std::vector<Scheduler> deterministic_schedulers(std::size_t n) {
  std::vector<Scheduler> out;
  for (ResponseRule rule : {ResponseRule::kBetter, ResponseRule::kBest}) {
    out.push_back(Scheduler::first_deviator(rule));
    for (auto& order : all_orders(n)) {
      out.push_back(Scheduler::round_robin(order, rule));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Result criterion1() {
  Result r;
  const WorkedExampleTables fig = reproduce_figure1();
  const char* ex[3][3][2] = {{{"0", "0.5"}, {"0.5", "0.3"}, {"0.5", "0.2"}},
                             {{"0.3", "0.5"}, {"0.15", "0.15"}, {"0.3", "0.2"}},
                             {{"0.2", "0.5"}, {"0.2", "0.3"}, {"0.2", "0"}}};
  const char* ac[3][3][2] = {
      {{"0", "0.45"}, {"0.05", "0.12"}, {"0.05", "0.04"}},
      {{"0.12", "0.45"}, {"0.06", "0.06"}, {"0.12", "0.04"}},
      {{"0.16", "0.45"}, {"0.16", "0.12"}, {"0.16", "0"}}};
  int cells = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto& e = fig.exposure[i][j];
      const auto& a = fig.action[i][j];
      const std::string where =
          " cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      r.expect(e.first == R(ex[i][j][0]) && e.second == R(ex[i][j][1]),
               "exposure" + where);
      r.expect(a.first == R(ac[i][j][0]) && a.second == R(ac[i][j][1]),
               "action" + where);
      cells += 2;
    }
  }
  r.summary = std::to_string(cells) + " cells exact";
  return r;
}

Result criterion2() {
  Result r;
  const auto ex = enumerate_pne(worked_example_game(UtilityScheme::kExposure));
  const auto ac = enumerate_pne(worked_example_game(UtilityScheme::kAction));
  r.expect(std::find(ex.begin(), ex.end(), P({2, 1})) != ex.end(),
           "(2,1) missing from exposure equilibria");
  r.expect(ac == std::vector<StrategyProfile>{P({3, 1})},
           "action equilibria differ from [(3,1)]");
  std::string list;
  for (const auto& a : ex) list += show(a);
  r.summary = "exposure PNE " + list + ", action PNE " +
              (ac.empty() ? std::string("none") : show(ac.front()));
  return r;
}

Result criterion3() {
  Result r;
  Subgame witness;  // authors 1, 2 over topics {1, 2}; author 3 on topic 2
  witness.row_author = 0;
  witness.col_author = 1;
  witness.base = P({1, 1, 2});
  std::string summary;
  for (auto [scheme, expected] :
       {std::pair{UtilityScheme::kExposure, R("0.75")},
        std::pair{UtilityScheme::kAction, R("0.25")}}) {
    const Game g(TopicDistribution({R("1/2"), R("1/2")}),
                 QualityMatrix({{R("0.3"), R("0.4")},
                                {R("0.5"), R("0.7")},
                                {R("0.1"), R("0.4")}}),
                 Mediator::prp(), scheme);
    const Rational residual = subgame_residual(g, witness);
    const PotentialReport report = exact_potential_check(g);
    r.expect(residual == expected, to_string(scheme) + " residual " +
                                       to_string(residual));
    r.expect(!report.has_exact_potential,
             to_string(scheme) + " reported an exact potential");
    summary += to_string(scheme) + " residual " + to_string(residual) + "; ";
  }
  r.summary = summary + "no exact potential";
  return r;
}

struct PrpSweep {
  std::size_t games = 0;
  std::size_t tie_rich = 0;
  std::size_t runs = 0;
  std::size_t distinct_trajectories = 0;
  std::size_t invariant_steps = 0;
  std::size_t invariant_not_applicable = 0;
  std::size_t invariant_failures = 0;
  Result fip;
  Result invariants;
};

// Criteria 4 and 9 share the same games and trajectories.
PrpSweep prp_sweep() {
  PrpSweep s;
  constexpr std::size_t kGamesPerScheme = 200;
  for (UtilityScheme scheme :
       {UtilityScheme::kExposure, UtilityScheme::kAction}) {
    for (std::size_t i = 0; i < kGamesPerScheme; ++i) {
      const std::uint64_t seed = mix_seed(0xACCE57 + i);
      const std::size_t n = 2 + seed % 3;
      const std::size_t m = 2 + (seed >> 8) % 3;
      const bool tie_rich = i % 2 == 0;
      RandomGameOptions opt;
      opt.scheme = scheme;
      opt.generic_quality = !tie_rich;
      opt.denominator_bound = tie_rich ? kTieRichBound : 1000;
      const Game game = generate_random_game(seed, n, m, opt);
      ++s.games;
      s.tie_rich += tie_rich ? 1 : 0;
      const std::string label =
          to_string(scheme) + " game " + std::to_string(i);

      const PayoffTable table(game);
      const ImprovementGraph graph(table);
      if (!has_fip(graph).fip) s.fip.fail(label + " has an improvement cycle");

      const std::uint64_t budget = default_step_budget(n, m);
      const auto schedulers = deterministic_schedulers(n);
      std::set<std::vector<std::uint64_t>> seen;
      for (std::uint64_t idx = 0; idx < table.space().size(); ++idx) {
        const StrategyProfile init = table.space().profile(idx);
        for (const Scheduler& sched : schedulers) {
          const DynamicsOutcome out = run_dynamics(table, init, sched, budget);
          ++s.runs;
          if (!out.converged() || !is_pne(table, out.profile())) {
            s.fip.fail(label + " from " + show(init) + " ended " +
                       to_string(out.kind));
            continue;
          }
          std::vector<std::uint64_t> key{idx};
          for (const Step& st : out.trajectory.steps) {
            key.push_back(st.mover * m + st.to);
          }
          if (!seen.insert(std::move(key)).second) continue;
          ++s.distinct_trajectories;
          const PathInvariantReport rep =
              path_invariant_report(game, out.trajectory);
          s.invariant_steps += rep.steps.size();
          s.invariant_not_applicable += rep.not_applicable();
          s.invariant_failures += rep.failures();
          if (!rep.passed()) {
            s.invariants.fail(label + " trajectory from " + show(init));
          }
        }
      }
    }
  }
  return s;
}

Result criterion5() {
  Result r;
  std::size_t profiles = 0;
  constexpr std::size_t kGames = 60;
  for (std::size_t i = 0; i < kGames; ++i) {
    const std::uint64_t seed = mix_seed(0x5EED5 + i);
    const std::size_t n = 1 + seed % 4;
    const std::size_t m = 1 + (seed >> 8) % 4;
    RandomGameOptions opt;
    opt.mediator = Mediator::rand();
    opt.denominator_bound = i % 2 ? kTieRichBound : 1000;
    const Game game = generate_random_game(seed, n, m, opt);
    const Game reduced = rand_to_prp_reduction(game);
    const ProfileSpace space(game);
    for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
      const StrategyProfile a = space.profile(idx);
      r.expect(utility_vector(game, a) == utility_vector(reduced, a),
               "game " + std::to_string(i) + " differs at " + show(a));
      ++profiles;
    }
    r.expect(has_fip(game).fip, "game " + std::to_string(i) + " has a cycle");
  }
  r.summary = std::to_string(kGames) + " games, " + std::to_string(profiles) +
              " profiles identical, all FIP";
  return r;
}

std::string describe_cycle(const CycleCheck& c) {
  std::ostringstream out;
  out.precision(3);
  out << "min relative gain "
      << *std::min_element(c.relative_gains.begin(), c.relative_gains.end());
  return out.str();
}

void check_bundle(Result& r, const CounterexampleBundle& b) {
  const CycleCheck check = verify_improvement_cycle(b.game, b.cycle);
  r.expect(check.ok, "cycle does not verify");
  r.expect(check.relative_gains.size() == 6, "cycle is not 6 steps");
  for (double g : check.relative_gains) {
    r.expect(g > kCycleMargin, "gain below 1e-12 relative");
  }
  const FipResult fip = has_fip(b.game);
  r.expect(!fip.fip, "graph search finds no cycle");
  const std::set<StrategyProfile> found(fip.cycle.begin(), fip.cycle.end());
  const std::set<StrategyProfile> built(b.cycle.begin(), b.cycle.end() - 1);
  r.expect(found == built, "graph cycle visits different profiles");
  if (!check.relative_gains.empty()) r.summary = describe_cycle(check);
}

Result criterion6() {
  Result r;
  const CounterexampleBundle b = build_thm3_game(ScoreFunction::identity());
  check_bundle(r, b);
  r.expect(b.params.x1 == 1 && b.params.x2 == R("1/2") &&
               b.params.x3 == R("1/10"),
           "qualities differ from (1, 1/2, 1/10)");
  r.expect(b.params.epsilon == R("1/64"), "epsilon " + to_string(b.params.epsilon));
  r.expect(b.game.demand().weights() ==
               std::vector<Rational>{R("64/125"), R("31/125"), R("30/125")},
           "demand differs from (64/125, 31/125, 30/125)");
  r.summary = "eps " + to_string(b.params.epsilon) + ", D (" +
              to_string(b.game.demand()[0]) + ", " +
              to_string(b.game.demand()[1]) + ", " +
              to_string(b.game.demand()[2]) + "), " + r.summary;
  return r;
}

Result criterion7() {
  Result r;
  const CounterexampleBundle b = build_thm4_game(ScoreFunction::power(8), 2);
  check_bundle(r, b);
  r.expect(b.game.scheme() == UtilityScheme::kAction, "not action-targeted");
  bool rejected = false;
  try {
    build_thm4_game(ScoreFunction::identity(), 2);
  } catch (const ValidationError&) {
    rejected = true;
  }
  r.expect(rejected, "identity f at alpha 2 was not rejected");
  std::ostringstream out;
  out.precision(4);
  out << "x2 " << to_double(b.params.x2) << ", x3 " << to_double(b.params.x3)
      << ", " << r.summary << ", identity rejected";
  r.summary = out.str();
  return r;
}

Result criterion8() {
  Result r;
  const CounterexampleBundle b = build_thm5_game(ScoreFunction::identity(), 1, 1);
  check_bundle(r, b);
  r.expect(std::abs(to_double(b.params.x2) - 0.2) <= 1e-9, "x2 off");
  r.expect(std::abs(to_double(b.params.x3) - 1.0 / 11) <= 1e-9, "x3 off");
  r.summary = "x2 " + to_string(b.params.x2) + ", x3 " +
              to_string(b.params.x3) + ", " + r.summary;
  return r;
}

Result criterion10() {
  Result r;
  constexpr std::size_t kGames = 120;
  std::size_t runs = 0;
  std::size_t longest = 0;
  for (std::size_t i = 0; i < kGames; ++i) {
    const std::uint64_t seed = mix_seed(0x6E1D + i);
    const std::size_t n = 1 + i % 4;
    RandomGameOptions opt;
    opt.generic_quality = true;
    opt.strictly_decreasing_demand = true;
    const Game game = generate_random_game(seed, n, n, opt);
    const std::string label = "game " + std::to_string(i);
    const PayoffTable table(game);
    const auto pne = enumerate_pne(ImprovementGraph(table));
    const StrategyProfile greedy = greedy_assignment_pne(game);
    r.expect(pne.size() == 1, label + " has " + std::to_string(pne.size()) +
                                  " equilibria");
    r.expect(!pne.empty() && pne.front() == greedy,
             label + " greedy " + show(greedy) + " is not the equilibrium");
    for (std::uint64_t idx = 0; idx < table.space().size(); ++idx) {
      const StrategyProfile init = table.space().profile(idx);
      for (const auto& order : all_orders(n)) {
        const auto out = run_dynamics(
            table, init, Scheduler::round_robin(order, ResponseRule::kBest),
            n * n);
        ++runs;
        longest = std::max(longest, out.steps_taken());
        r.expect(out.converged() && out.profile() == greedy,
                 label + " from " + show(init) + " " + to_string(out.kind));
      }
    }
  }
  r.summary = std::to_string(kGames) + " games, " + std::to_string(runs) +
              " round-robin best-response runs, longest " +
              std::to_string(longest) + " steps";
  return r;
}

int report(int id, const char* title, const std::function<Result()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = check();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::printf("[%s] criterion %2d: %s -- %s (%.2f s)\n", r.ok ? "PASS" : "FAIL",
              id, title, r.summary.c_str(), secs);
  for (const auto& note : r.notes) std::printf("         %s\n", note.c_str());
  std::fflush(stdout);
  return r.ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += report(1, "worked-example bimatrices", criterion1);
  failures += report(2, "worked-example equilibria", criterion2);
  failures += report(3, "no exact potential (3-author game)", criterion3);

  PrpSweep sweep;
  double sweep_secs = 0;
  failures += report(4, "PRP games have FIP; dynamics converge", [&] {
    const auto start = std::chrono::steady_clock::now();
    sweep = prp_sweep();
    sweep_secs = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    Result r = sweep.fip;
    r.summary = std::to_string(sweep.games) + " games (" +
                std::to_string(sweep.tie_rich) + " tie-rich), " +
                std::to_string(sweep.runs) + " deterministic runs";
    if (sweep_secs >= 300) r.fail("runtime above 5 minutes");
    return r;
  });
  failures += report(5, "RAND to PRP reduction", criterion5);
  failures += report(6, "exposure scoring cycle (identity f)", criterion6);
  failures += report(7, "action scoring cycle (f = x^8, alpha = 2)", criterion7);
  failures += report(8, "linear-bound scoring cycle (identity f)", criterion8);
  failures += report(9, "path invariants on PRP trajectories", [&] {
    Result r = sweep.invariants;
    r.expect(sweep.distinct_trajectories > 0, "no trajectories recorded");
    r.summary = std::to_string(sweep.distinct_trajectories) +
                " distinct trajectories, " +
                std::to_string(sweep.invariant_steps) + " steps, " +
                std::to_string(sweep.invariant_not_applicable) +
                " bound checks not applicable, " +
                std::to_string(sweep.invariant_failures) + " failures";
    return r;
  });
  failures += report(10, "greedy assignment and round-robin convergence",
                     criterion10);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS",
              failures);
  return failures ? 1 : 0;
}
