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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "authorsgame/analysis.hpp"
#include "authorsgame/harness.hpp"
#include "test_util.hpp"

namespace authorsgame {
namespace {

using testing::make_game;
using testing::P;
using testing::R;

TEST(RandomGameTest, SameSeedSameGame) {
  const Game a = generate_random_game(42, 3, 4, {});
  const Game b = generate_random_game(42, 3, 4, {});
  EXPECT_EQ(a.quality().rows(), b.quality().rows());
  EXPECT_EQ(a.demand().weights(), b.demand().weights());
  const Game c = generate_random_game(43, 3, 4, {});
  EXPECT_NE(a.quality().rows(), c.quality().rows());
}

TEST(RandomGameTest, DemandIsExactlyNormalizedAndSorted) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Game g = generate_random_game(seed, 3, 3, {});
    Rational total = 0;
    for (const Rational& w : g.demand().weights()) {
      EXPECT_GT(w, 0);
      total += w;
    }
    EXPECT_EQ(total, 1);
    EXPECT_TRUE(std::is_sorted(g.demand().weights().rbegin(),
                               g.demand().weights().rend()));
  }
}

TEST(RandomGameTest, GenericQualitiesAreDistinct) {
  RandomGameOptions opt;
  opt.generic_quality = true;
  opt.denominator_bound = 12;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Game g = generate_random_game(seed, 3, 4, opt);
    std::set<Rational> seen;
    for (const auto& row : g.quality().rows()) seen.insert(row.begin(), row.end());
    EXPECT_EQ(seen.size(), 12u);
  }
  opt.denominator_bound = 10;
  EXPECT_THROW(generate_random_game(0, 3, 4, opt), ValidationError);
}

TEST(RandomGameTest, StrictlyDecreasingDemand) {
  RandomGameOptions opt;
  opt.strictly_decreasing_demand = true;
  opt.denominator_bound = 5;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Game g = generate_random_game(seed, 2, 4, opt);
    const auto& w = g.demand().weights();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) EXPECT_GT(w[k], w[k + 1]);
  }
}

TEST(RandomGameTest, UnsortedDemandKeepsDrawOrder) {
  RandomGameOptions opt;
  opt.sorted_demand = false;
  bool any_unsorted = false;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Game g = generate_random_game(seed, 1, 4, opt);
    const auto& w = g.demand().weights();
    any_unsorted = any_unsorted || !std::is_sorted(w.rbegin(), w.rend());
  }
  EXPECT_TRUE(any_unsorted);
}

TEST(RandomGameTest, RejectsEmptyDimensions) {
  EXPECT_THROW(generate_random_game(0, 0, 2, {}), ValidationError);
  EXPECT_THROW(generate_random_game(0, 2, 0, {}), ValidationError);
}

std::pair<Rational, Rational> cell(const std::string& a, const std::string& b) {
  return {R(a), R(b)};
}

TEST(WorkedExampleTest, ExposureTable) {
  const Bimatrix expected{{
      {cell("0", "0.5"), cell("0.5", "0.3"), cell("0.5", "0.2")},
      {cell("0.3", "0.5"), cell("0.15", "0.15"), cell("0.3", "0.2")},
      {cell("0.2", "0.5"), cell("0.2", "0.3"), cell("0.2", "0")},
  }};
  EXPECT_EQ(reproduce_figure1().exposure, expected);
}

TEST(WorkedExampleTest, ActionTable) {
  const Bimatrix expected{{
      {cell("0", "0.45"), cell("0.05", "0.12"), cell("0.05", "0.04")},
      {cell("0.12", "0.45"), cell("0.06", "0.06"), cell("0.12", "0.04")},
      {cell("0.16", "0.45"), cell("0.16", "0.12"), cell("0.16", "0")},
  }};
  EXPECT_EQ(reproduce_figure1().action, expected);
}

TEST(WorkedExampleTest, FormattingShowsEveryCell) {
  const std::string text = format_bimatrix(reproduce_figure1().exposure);
  EXPECT_NE(text.find("0.15,0.15"), std::string::npos);
  EXPECT_NE(text.find("0,0.5"), std::string::npos);
}

TEST(GreedyTest, TwoByTwoExample) {
  const Game g = make_game({"3/5", "2/5"}, {{"0.9", "0.2"}, {"0.8", "0.7"}});
  EXPECT_EQ(greedy_assignment_pne(g), P({1, 2}));
  EXPECT_EQ(enumerate_pne(g), (std::vector<StrategyProfile>{P({1, 2})}));
}

TEST(GreedyTest, SingleAuthor) {
  EXPECT_EQ(greedy_assignment_pne(make_game({"1"}, {{"0.3"}})), P({1}));
}

TEST(GreedyTest, RejectsViolatedPreconditions) {
  EXPECT_THROW(greedy_assignment_pne(make_game({"1/2", "1/2"},
                                               {{"0.9", "0.2"}, {"0.8", "0.7"}})),
               ValidationError);
  EXPECT_THROW(greedy_assignment_pne(make_game({"3/5", "2/5"},
                                               {{"0.9", "0.2"}, {"0.9", "0.7"}})),
               ValidationError);
  EXPECT_THROW(greedy_assignment_pne(make_game({"3/5", "2/5"}, {{"0.9", "0.2"}})),
               ValidationError);
  EXPECT_THROW(greedy_assignment_pne(make_game(
                   {"3/5", "2/5"}, {{"0.9", "0.2"}, {"0.8", "0.7"}},
                   Mediator::prp(), UtilityScheme::kAction)),
               ValidationError);
}

TEST(GreedyTest, EquivariantUnderAuthorPermutation) {
  RandomGameOptions opt;
  opt.generic_quality = true;
  opt.strictly_decreasing_demand = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Game g = generate_random_game(seed, 4, 4, opt);
    const StrategyProfile a = greedy_assignment_pne(g);
    std::vector<std::size_t> perm{2, 0, 3, 1};  // new author perm[j] is old j
    std::vector<std::vector<Rational>> q(4);
    for (Author j = 0; j < 4; ++j) q[perm[j]] = g.quality().rows()[j];
    const Game h(g.demand(), QualityMatrix(q), g.mediator(), g.scheme());
    const StrategyProfile b = greedy_assignment_pne(h);
    for (Author j = 0; j < 4; ++j) EXPECT_EQ(b[perm[j]], a[j]);
  }
}

TEST(GreedyTest, MatchesUniqueEquilibrium) {
  RandomGameOptions opt;
  opt.generic_quality = true;
  opt.strictly_decreasing_demand = true;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const Game g = generate_random_game(seed, n, n, opt);
    const auto pne = enumerate_pne(g);
    ASSERT_EQ(pne.size(), 1u) << seed;
    EXPECT_EQ(greedy_assignment_pne(g), pne.front());
  }
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.seed = 11;
  c.games = 30;
  c.n_range = {2, 3};
  c.m_range = {2, 3};
  c.checks = {Check::kFip, Check::kPne, Check::kPotential, Check::kDynamics};
  c.tie_rich_fraction = 0.5;
  return c;
}

TEST(SuiteTest, PrpGamesAllHaveFip) {
  const ExperimentReport r = run_experiment_suite(small_config());
  EXPECT_EQ(r.outcomes.size(), 30u);
  EXPECT_EQ(r.aggregate.games, 30u);
  EXPECT_EQ(r.aggregate.fip_checked, 30u);
  EXPECT_DOUBLE_EQ(r.aggregate.fip_rate, 1.0);
  EXPECT_EQ(r.aggregate.cycle_witnesses, 0u);
  EXPECT_EQ(r.aggregate.dynamics_runs, 30u);
  EXPECT_EQ(r.aggregate.converged_runs, 30u);
  for (const auto& o : r.outcomes) {
    EXPECT_TRUE(o.pne_count.has_value());
    EXPECT_GE(*o.pne_count, 1u);
    EXPECT_EQ(o.dynamics_outcome, std::optional<std::string>("converged_pne"));
    EXPECT_LE(*o.steps_to_converge, *o.max_path_len);
  }
}

TEST(SuiteTest, RandExposureGamesAllHaveFip) {
  ExperimentConfig c = small_config();
  c.mediator = Mediator::rand();
  c.checks = {Check::kFip};
  EXPECT_DOUBLE_EQ(run_experiment_suite(c).aggregate.fip_rate, 1.0);
}

TEST(SuiteTest, DeterministicAcrossThreadCounts) {
  ExperimentConfig c = small_config();
  c.threads = 1;
  const std::string one = to_csv(run_experiment_suite(c));
  c.threads = 4;
  const std::string four = to_csv(run_experiment_suite(c));
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, to_csv(run_experiment_suite(c)));
}

TEST(SuiteTest, EmptySuite) {
  ExperimentConfig c = small_config();
  c.games = 0;
  const ExperimentReport r = run_experiment_suite(c);
  EXPECT_TRUE(r.outcomes.empty());
  EXPECT_EQ(r.aggregate.games, 0u);
  EXPECT_EQ(to_csv(r),
            "seed,n,m,mediator,scheme,fip,pne_count,max_path_len,"
            "potential_exists,steps_to_converge\n");
}

TEST(SuiteTest, BudgetOverrunIsRecordedNotFatal) {
  ExperimentConfig c = small_config();
  c.budget = 8;
  const ExperimentReport r = run_experiment_suite(c);
  EXPECT_GT(r.aggregate.budget_exceeded, 0u);
  EXPECT_LT(r.aggregate.budget_exceeded, r.aggregate.games);
}

TEST(SuiteTest, RejectsEmptyRanges) {
  ExperimentConfig c = small_config();
  c.n_range = {3, 2};
  EXPECT_THROW(run_experiment_suite(c), ValidationError);
}

TEST(SuiteTest, ScoringSuiteCanFindCycles) {
  // Scoring games are not guaranteed FIP; the suite must still run cleanly.
  ExperimentConfig c = small_config();
  c.mediator = Mediator::scoring(ScoreFunction::identity());
  c.checks = {Check::kFip};
  const ExperimentReport r = run_experiment_suite(c);
  EXPECT_EQ(r.aggregate.fip_checked, 30u);
  EXPECT_EQ(r.aggregate.cycle_witnesses,
            static_cast<std::size_t>(std::count_if(
                r.outcomes.begin(), r.outcomes.end(),
                [](const GameOutcome& o) { return o.fip == false; })));
}

TEST(SuiteTest, CsvHasOneRowPerGame) {
  const std::string csv = to_csv(run_experiment_suite(small_config()));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 31);
}

}  // namespace
}  // namespace authorsgame
