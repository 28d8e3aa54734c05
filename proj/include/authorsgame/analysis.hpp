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

#ifndef AUTHORSGAME_ANALYSIS_HPP_
#define AUTHORSGAME_ANALYSIS_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "authorsgame/dynamics.hpp"
#include "authorsgame/errors.hpp"
#include "authorsgame/game.hpp"
#include "authorsgame/payoff_table.hpp"
#include "authorsgame/profile_space.hpp"

namespace authorsgame {

// Directed graph over all m^n profiles. An edge a -> (t, a_{-j}) exists iff
// t is a better response of author j at a. Stored as CSR adjacency.
class ImprovementGraph {
 public:
  struct Edge {
    std::uint64_t target;
    Author mover;
  };

  explicit ImprovementGraph(const PayoffTable& table) : space_(table.space()) {
    const std::uint64_t size = space_.size();
    offsets_.reserve(size + 1);
    offsets_.push_back(0);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      for (Author j = 0; j < space_.authors(); ++j) {
        const Topic current = space_.topic_of(idx, j);
        for (Topic t = 0; t < space_.topics(); ++t) {
          if (t == current) continue;
          const std::uint64_t next = space_.deviate(idx, j, t);
          if (table.improves_at(idx, next, j)) edges_.push_back({next, j});
        }
      }
      offsets_.push_back(edges_.size());
    }
  }

  const ProfileSpace& space() const { return space_; }
  std::uint64_t node_count() const { return space_.size(); }
  std::uint64_t edge_count() const { return edges_.size(); }

  struct EdgeRange {
    const Edge* first;
    const Edge* last;
    const Edge* begin() const { return first; }
    const Edge* end() const { return last; }
    std::size_t size() const { return static_cast<std::size_t>(last - first); }
  };
  EdgeRange out_edges(std::uint64_t node) const {
    return {edges_.data() + offsets_[node], edges_.data() + offsets_[node + 1]};
  }

  // Kahn order; nullopt when the graph has a cycle.
  std::optional<std::vector<std::uint64_t>> topological_order() const {
    std::vector<std::uint32_t> indegree(node_count(), 0);
    for (const Edge& e : edges_) ++indegree[e.target];
    std::vector<std::uint64_t> order;
    order.reserve(node_count());
    for (std::uint64_t v = 0; v < node_count(); ++v) {
      if (indegree[v] == 0) order.push_back(v);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (const Edge& e : out_edges(order[head])) {
        if (--indegree[e.target] == 0) order.push_back(e.target);
      }
    }
    if (order.size() != node_count()) return std::nullopt;
    return order;
  }

  bool acyclic() const { return topological_order().has_value(); }

  // One shortest directed cycle, starting at its lowest-index profile;
  // empty when the graph is acyclic.
  std::vector<std::uint64_t> shortest_cycle() const {
    // Nodes Kahn cannot peel lie on or upstream of a cycle.
    std::vector<std::uint32_t> indegree(node_count(), 0);
    for (const Edge& e : edges_) ++indegree[e.target];
    std::vector<bool> peeled(node_count(), false);
    std::vector<std::uint64_t> queue;
    for (std::uint64_t v = 0; v < node_count(); ++v) {
      if (indegree[v] == 0) queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      peeled[queue[head]] = true;
      for (const Edge& e : out_edges(queue[head])) {
        if (--indegree[e.target] == 0) queue.push_back(e.target);
      }
    }

    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> parent(node_count(), kNone);
    std::vector<std::uint32_t> dist(node_count(), 0);
    std::vector<std::uint64_t> touched;
    for (std::uint64_t s = 0; s < node_count(); ++s) {
      if (peeled[s]) continue;
      // BFS back to s, never through lower-index nodes: a cycle through a
      // lower node was already found from that node.
      std::deque<std::uint64_t> frontier{s};
      parent[s] = s;
      touched.assign(1, s);
      std::optional<std::uint64_t> closing;
      while (!frontier.empty() && !closing) {
        const std::uint64_t v = frontier.front();
        frontier.pop_front();
        if (!best.empty() && dist[v] + 1 >= best.size()) break;
        for (const Edge& e : out_edges(v)) {
          if (e.target == s) {
            closing = v;
            break;
          }
          if (e.target < s || peeled[e.target] || parent[e.target] != kNone) {
            continue;
          }
          parent[e.target] = v;
          dist[e.target] = dist[v] + 1;
          touched.push_back(e.target);
          frontier.push_back(e.target);
        }
      }
      if (closing) {
        std::vector<std::uint64_t> cycle;
        for (std::uint64_t v = *closing; v != s; v = parent[v]) {
          cycle.push_back(v);
        }
        cycle.push_back(s);
        std::reverse(cycle.begin(), cycle.end());
        if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
      }
      for (std::uint64_t v : touched) {
        parent[v] = kNone;
        dist[v] = 0;
      }
    }
    return best;
  }

 private:
  ProfileSpace space_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Edge> edges_;
};

inline ImprovementGraph improvement_graph(
    const Game& game, std::uint64_t budget = kDefaultProfileBudget) {
  return ImprovementGraph(PayoffTable(game, budget));
}

struct FipResult {
  bool fip = true;
  // Profiles of one shortest improvement cycle (not repeating the first).
  std::vector<StrategyProfile> cycle;
};

inline FipResult has_fip(const ImprovementGraph& graph) {
  FipResult result;
  if (graph.acyclic()) return result;
  result.fip = false;
  for (std::uint64_t v : graph.shortest_cycle()) {
    result.cycle.push_back(graph.space().profile(v));
  }
  return result;
}

inline FipResult has_fip(const Game& game,
                         std::uint64_t budget = kDefaultProfileBudget) {
  return has_fip(improvement_graph(game, budget));
}

// Sinks of the improvement graph, in canonical (lexicographic) order.
inline std::vector<StrategyProfile> enumerate_pne(const ImprovementGraph& g) {
  std::vector<StrategyProfile> out;
  for (std::uint64_t v = 0; v < g.node_count(); ++v) {
    if (g.out_edges(v).size() == 0) out.push_back(g.space().profile(v));
  }
  return out;
}

inline std::vector<StrategyProfile> enumerate_pne(
    const Game& game, std::uint64_t budget = kDefaultProfileBudget) {
  return enumerate_pne(improvement_graph(game, budget));
}

// Edge count of the longest improvement path. Requires an acyclic graph.
inline std::uint64_t longest_improvement_path(const ImprovementGraph& graph) {
  const auto order = graph.topological_order();
  if (!order) {
    throw ValidationError("longest path is undefined: graph has a cycle");
  }
  std::vector<std::uint64_t> longest(graph.node_count(), 0);
  std::uint64_t best = 0;
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    std::uint64_t here = 0;
    for (const auto& e : graph.out_edges(*it)) {
      here = std::max(here, longest[e.target] + 1);
    }
    longest[*it] = here;
    best = std::max(best, here);
  }
  return best;
}

// A 2x2 subgame: the row author picks between two topics, the column author
// between two topics, everyone else plays as in `base`.
struct Subgame {
  Author row_author = 0;
  Author col_author = 1;
  Topic row_topics[2] = {0, 1};
  Topic col_topics[2] = {0, 1};
  StrategyProfile base;
};

// a21 - a11 + b22 - b21 + a12 - a22 + b11 - b12 with a the row author's
// payoffs and b the column author's; zero iff the subgame has an exact
// potential.
template <PayoffModel M>
Rational subgame_residual(const M& model, const Subgame& s) {
  auto at = [&](int r, int c) {
    StrategyProfile a = s.base;
    a[s.row_author] = s.row_topics[r];
    a[s.col_author] = s.col_topics[c];
    return a;
  };
  auto row = [&](int r, int c) { return Rational(model.utility(at(r, c), s.row_author)); };
  auto col = [&](int r, int c) { return Rational(model.utility(at(r, c), s.col_author)); };
  return row(1, 0) - row(0, 0) + col(1, 1) - col(1, 0) + row(0, 1) -
         row(1, 1) + col(0, 0) - col(0, 1);
}

inline constexpr double kScoringPotentialTolerance = 1e-9;

struct PotentialReport {
  bool has_exact_potential = true;
  Rational worst_residual = 0;  // max |residual| over all 2x2 subgames
  std::optional<Subgame> witness;
  Rational witness_residual = 0;  // signed residual at the witness
};

// Checks every 2x2 subgame (pairs of authors, pairs of their topics, every
// profile of the others). Exact zero test for PRP/RAND; tolerance 1e-9 for
// scoring mediators.
inline PotentialReport exact_potential_check(const PayoffTable& table,
                                             bool scoring) {
  const ProfileSpace& space = table.space();
  const std::size_t n = space.authors();
  const std::size_t m = space.topics();
  PotentialReport report;
  for (Author i = 0; i < n; ++i) {
    for (Author j = i + 1; j < n; ++j) {
      for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
        // Enumerate each opponent profile once: authors i, j at topic 0.
        if (space.topic_of(idx, i) != 0 || space.topic_of(idx, j) != 0) {
          continue;
        }
        Subgame s;
        s.row_author = i;
        s.col_author = j;
        s.base = space.profile(idx);
        for (Topic s1 = 0; s1 < m; ++s1) {
          for (Topic s2 = s1 + 1; s2 < m; ++s2) {
            for (Topic t1 = 0; t1 < m; ++t1) {
              for (Topic t2 = t1 + 1; t2 < m; ++t2) {
                s.row_topics[0] = s1;
                s.row_topics[1] = s2;
                s.col_topics[0] = t1;
                s.col_topics[1] = t2;
                const Rational r = subgame_residual(table, s);
                if (magnitude(r) > report.worst_residual) {
                  report.worst_residual = magnitude(r);
                  report.witness = s;
                  report.witness_residual = r;
                }
              }
            }
          }
        }
      }
    }
  }
  if (scoring) {
    report.has_exact_potential =
        to_double(report.worst_residual) <= kScoringPotentialTolerance;
  } else {
    report.has_exact_potential = report.worst_residual == 0;
  }
  if (report.has_exact_potential) report.witness.reset();
  return report;
}

inline PotentialReport exact_potential_check(
    const Game& game, std::uint64_t budget = kDefaultProfileBudget) {
  return exact_potential_check(PayoffTable(game, budget),
                               game.mediator().is_scoring());
}

// B_k, H_k along a path and the per-step checks derived from them.
struct PathInvariantReport {
  enum class BoundStatus { kNotApplicable, kPass, kFail };

  struct StepCheck {
    std::size_t r = 0;
    Author mover = 0;
    Topic topic = 0;
    Rational mover_quality;
    Rational top_quality_before;  // B_k(a^r)
    bool quality_check = true;    // mover quality >= B_k(a^r)
    BoundStatus bound = BoundStatus::kNotApplicable;
    Rational utility_after;
    Rational bound_value;  // D(k)/(W_k+1), or D(k) S_k/(W_k+1) for action
  };

  // Indexed [r][k] over profiles a^1..a^l.
  std::vector<std::vector<Rational>> top_quality;
  std::vector<std::vector<std::size_t>> top_count;
  std::vector<std::size_t> min_top_count;  // W_k
  std::vector<Rational> max_top_quality;   // S_k
  std::vector<StepCheck> steps;

  std::size_t failures() const {
    std::size_t count = 0;
    for (const StepCheck& s : steps) {
      if (!s.quality_check) ++count;
      if (s.bound == BoundStatus::kFail) ++count;
    }
    return count;
  }
  std::size_t not_applicable() const {
    std::size_t count = 0;
    for (const StepCheck& s : steps) {
      count += s.bound == BoundStatus::kNotApplicable ? 1 : 0;
    }
    return count;
  }
  bool passed() const { return failures() == 0; }
};

// Replays `t` against a PRP game and checks, for every step into topic k:
// the mover's quality is at least B_k(a^r); and, when it is at most B_k(a^r),
// the mover's new utility is at most D(k)/(W_k+1) (exposure) or
// D(k) S_k/(W_k+1) (action).
inline PathInvariantReport path_invariant_report(const Game& game,
                                                 const Trajectory& t) {
  if (game.mediator().kind() != Mediator::Kind::kPrp) {
    throw ValidationError("path invariants are defined for PRP games only");
  }
  game.validate(t.initial);
  const std::size_t m = game.num_topics();
  const std::vector<StrategyProfile> profiles = t.profiles();
  for (std::size_t r = 0; r < t.steps.size(); ++r) {
    const Step& s = t.steps[r];
    const StrategyProfile& before = profiles[r];
    const StrategyProfile& after = profiles[r + 1];
    if (s.mover >= game.num_authors() || s.to >= m ||
        before[s.mover] != s.from || s.from == s.to ||
        game.utility(before, s.mover) != s.utility_before ||
        game.utility(after, s.mover) != s.utility_after ||
        !(s.utility_after > s.utility_before)) {
      throw ValidationError("trajectory inconsistent with game at step " +
                            std::to_string(r));
    }
  }
  if (profiles.back() != t.terminal) {
    throw ValidationError("trajectory terminal does not match its steps");
  }

  PathInvariantReport report;
  report.min_top_count.assign(m, std::numeric_limits<std::size_t>::max());
  report.max_top_quality.assign(m, Rational(0));
  for (const StrategyProfile& a : profiles) {
    std::vector<Rational> b(m);
    std::vector<std::size_t> h(m);
    for (Topic k = 0; k < m; ++k) {
      b[k] = top_quality(game, k, a);
      h[k] = top_count(game, k, a);
      report.min_top_count[k] = std::min(report.min_top_count[k], h[k]);
      report.max_top_quality[k] = std::max(report.max_top_quality[k], b[k]);
    }
    report.top_quality.push_back(std::move(b));
    report.top_count.push_back(std::move(h));
  }

  for (std::size_t r = 0; r < t.steps.size(); ++r) {
    const Step& s = t.steps[r];
    PathInvariantReport::StepCheck c;
    c.r = r;
    c.mover = s.mover;
    c.topic = s.to;
    c.mover_quality = game.quality()(s.mover, s.to);
    c.top_quality_before = report.top_quality[r][s.to];
    c.quality_check = c.mover_quality >= c.top_quality_before;
    c.utility_after = s.utility_after;
    if (c.mover_quality <= c.top_quality_before) {
      const Rational denom(report.min_top_count[s.to] + 1);
      c.bound_value = game.demand()[s.to] / denom;
      if (game.scheme() == UtilityScheme::kAction) {
        c.bound_value *= report.max_top_quality[s.to];
      }
      c.bound = c.utility_after <= c.bound_value
                    ? PathInvariantReport::BoundStatus::kPass
                    : PathInvariantReport::BoundStatus::kFail;
    }
    report.steps.push_back(std::move(c));
  }
  return report;
}

// RAND/exposure game -> PRP game with an all-ones quality matrix; both
// induce the same utilities on every profile.
inline Game rand_to_prp_reduction(const Game& game) {
  if (game.mediator().kind() != Mediator::Kind::kRand ||
      game.scheme() != UtilityScheme::kExposure) {
    throw ValidationError("reduction needs a RAND mediator and exposure utility");
  }
  std::vector<std::vector<Rational>> ones(
      game.num_authors(), std::vector<Rational>(game.num_topics(), Rational(1)));
  return Game(game.demand(), QualityMatrix(std::move(ones)), Mediator::prp(),
              UtilityScheme::kExposure);
}

struct AnalysisOptions {
  std::uint64_t budget = kDefaultProfileBudget;
  bool potential = true;
};

// Everything the `analyze` command reports about one game.
struct AnalysisReport {
  FipResult fip;
  std::vector<StrategyProfile> pne;
  std::optional<std::uint64_t> longest_path;  // only when acyclic
  std::optional<PotentialReport> potential;
};

inline AnalysisReport analyze_game(const Game& game,
                                   const AnalysisOptions& options = {}) {
  const PayoffTable table(game, options.budget);
  const ImprovementGraph graph(table);
  AnalysisReport report;
  report.fip = has_fip(graph);
  report.pne = enumerate_pne(graph);
  if (report.fip.fip) report.longest_path = longest_improvement_path(graph);
  if (options.potential) {
    report.potential =
        exact_potential_check(table, game.mediator().is_scoring());
  }
  return report;
}

}  // namespace authorsgame

#endif  // AUTHORSGAME_ANALYSIS_HPP_
