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

#ifndef AUTHORSGAME_DYNAMICS_HPP_
#define AUTHORSGAME_DYNAMICS_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "authorsgame/errors.hpp"
#include "authorsgame/game.hpp"
#include "authorsgame/payoff_table.hpp"

namespace authorsgame {

// Topics t != a_j that strictly improve author j, with j's utility there.
template <PayoffModel M>
std::map<Topic, Rational> better_responses(const M& model,
                                           const StrategyProfile& a,
                                           Author j) {
  std::map<Topic, Rational> out;
  StrategyProfile b = a;
  for (Topic t = 0; t < model.num_topics(); ++t) {
    if (t == a[j]) continue;
    b[j] = t;
    if (model.improves(a, b, j)) out.emplace(t, model.utility(b, j));
  }
  return out;
}

// Argmax topics of author j's utility against a_{-j}; never empty and may
// contain a_j. Ascending.
template <PayoffModel M>
std::vector<Topic> best_responses(const M& model, const StrategyProfile& a,
                                  Author j) {
  std::vector<Topic> best;
  StrategyProfile b = a;
  b[j] = 0;
  auto best_key = model.order_key(b, j);
  best.push_back(0);
  for (Topic t = 1; t < model.num_topics(); ++t) {
    b[j] = t;
    auto key = model.order_key(b, j);
    if (best_key < key) {
      best_key = std::move(key);
      best.assign(1, t);
    } else if (!(key < best_key)) {
      best.push_back(t);
    }
  }
  return best;
}

template <PayoffModel M>
bool is_pne(const M& model, const StrategyProfile& a) {
  StrategyProfile b = a;
  for (Author j = 0; j < model.num_authors(); ++j) {
    for (Topic t = 0; t < model.num_topics(); ++t) {
      if (t == a[j]) continue;
      b[j] = t;
      if (model.improves(a, b, j)) return false;
    }
    b[j] = a[j];
  }
  return true;
}

enum class ResponseRule { kBetter, kBest };

// Who moves next, and how they pick among improving topics. Deterministic
// schedulers break ties toward the lowest topic index.
struct Scheduler {
  enum class Kind { kRoundRobin, kFirstDeviator, kRandom };

  Kind kind = Kind::kFirstDeviator;
  ResponseRule rule = ResponseRule::kBetter;
  std::vector<Author> order;  // round-robin only; empty means 0..n-1
  std::uint64_t seed = 0;     // random only

  static Scheduler first_deviator(ResponseRule rule = ResponseRule::kBetter) {
    return {Kind::kFirstDeviator, rule, {}, 0};
  }
  static Scheduler round_robin(std::vector<Author> order = {},
                               ResponseRule rule = ResponseRule::kBetter) {
    return {Kind::kRoundRobin, rule, std::move(order), 0};
  }
  static Scheduler random(std::uint64_t seed,
                          ResponseRule rule = ResponseRule::kBetter) {
    return {Kind::kRandom, rule, {}, seed};
  }

  bool deterministic() const { return kind != Kind::kRandom; }
};

struct Step {
  std::size_t index = 0;  // r, 0-based
  Author mover = 0;
  Topic from = 0;
  Topic to = 0;
  Rational utility_before;
  Rational utility_after;
};

struct Trajectory {
  StrategyProfile initial;
  std::vector<Step> steps;
  StrategyProfile terminal;

  // a^1, ..., a^{l}: the initial profile followed by one profile per step.
  std::vector<StrategyProfile> profiles() const {
    std::vector<StrategyProfile> out{initial};
    for (const Step& s : steps) {
      StrategyProfile next = out.back();
      next[s.mover] = s.to;
      out.push_back(std::move(next));
    }
    return out;
  }
};

struct DynamicsOutcome {
  enum class Kind { kConvergedPne, kRepeatDetected, kBudgetExhausted };

  Kind kind = Kind::kBudgetExhausted;
  Trajectory trajectory;
  // kRepeatDetected: position in trajectory.profiles() of the first
  // occurrence of the terminal profile.
  std::optional<std::size_t> repeated_profile_index;
  // Random schedulers keep going after revisiting a profile; the first such
  // revisit is recorded here without ending the run.
  std::optional<std::size_t> inconclusive_repeat_step;

  bool converged() const { return kind == Kind::kConvergedPne; }
  const StrategyProfile& profile() const { return trajectory.terminal; }
  std::size_t steps_taken() const { return trajectory.steps.size(); }
};

inline std::string to_string(DynamicsOutcome::Kind kind) {
  switch (kind) {
    case DynamicsOutcome::Kind::kConvergedPne:
      return "converged_pne";
    case DynamicsOutcome::Kind::kRepeatDetected:
      return "repeat_detected";
    case DynamicsOutcome::Kind::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "?";
}

// m^n * n * m, saturating.
inline std::uint64_t default_step_budget(std::size_t authors,
                                         std::size_t topics) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t budget = static_cast<std::uint64_t>(authors) * topics;
  for (std::size_t i = 0; i < authors; ++i) {
    if (budget > kMax / topics) return kMax;
    budget *= topics;
  }
  return budget;
}

namespace detail {

// The topic author j moves to under `rule`, if any.
template <PayoffModel M>
std::optional<Topic> choose_move(const M& model, const StrategyProfile& a,
                                 Author j, ResponseRule rule) {
  StrategyProfile b = a;
  if (rule == ResponseRule::kBetter) {
    for (Topic t = 0; t < model.num_topics(); ++t) {
      if (t == a[j]) continue;
      b[j] = t;
      if (model.improves(a, b, j)) return t;
    }
    return std::nullopt;
  }
  const std::vector<Topic> best = best_responses(model, a, j);
  for (Topic t : best) {
    if (t == a[j]) return std::nullopt;
  }
  b[j] = best.front();
  if (model.improves(a, b, j)) return best.front();
  return std::nullopt;
}

struct ProfileLess {
  bool operator()(const StrategyProfile& x, const StrategyProfile& y) const {
    return x < y;
  }
};

}  // namespace detail

// Sequential single-mover dynamics from `init` until a PNE, a revisited
// profile (deterministic schedulers: an improvement cycle), or max_steps
// moves.
template <PayoffModel M>
DynamicsOutcome run_dynamics(const M& model, const StrategyProfile& init,
                             const Scheduler& sched, std::uint64_t max_steps) {
  const std::size_t n = model.num_authors();
  if (max_steps == 0) throw ValidationError("max_steps must be positive");
  if (init.size() != n) throw ValidationError("initial profile has wrong size");
  for (Topic t : init) {
    if (t >= model.num_topics()) {
      throw ValidationError("initial profile names an unknown topic");
    }
  }
  std::vector<Author> order = sched.order;
  if (sched.kind == Scheduler::Kind::kRoundRobin) {
    if (order.empty()) {
      for (Author j = 0; j < n; ++j) order.push_back(j);
    }
    std::vector<bool> seen(n, false);
    if (order.size() != n) throw ValidationError("round-robin order size");
    for (Author j : order) {
      if (j >= n || seen[j]) {
        throw ValidationError("round-robin order is not a permutation");
      }
      seen[j] = true;
    }
  }

  DynamicsOutcome out;
  out.trajectory.initial = init;
  StrategyProfile a = init;
  std::map<StrategyProfile, std::size_t, detail::ProfileLess> visited;
  visited.emplace(a, 0);
  std::mt19937_64 rng(sched.seed);
  std::size_t rr_pos = 0;

  auto finish = [&](DynamicsOutcome::Kind kind) {
    out.kind = kind;
    out.trajectory.terminal = a;
    return out;
  };

  while (true) {
    std::optional<std::pair<Author, Topic>> move;
    switch (sched.kind) {
      case Scheduler::Kind::kFirstDeviator:
        for (Author j = 0; j < n && !move; ++j) {
          if (auto t = detail::choose_move(model, a, j, sched.rule)) {
            move.emplace(j, *t);
          }
        }
        break;
      case Scheduler::Kind::kRoundRobin:
        for (std::size_t tried = 0; tried < n && !move; ++tried) {
          const Author j = order[rr_pos];
          rr_pos = (rr_pos + 1) % n;
          if (auto t = detail::choose_move(model, a, j, sched.rule)) {
            move.emplace(j, *t);
          }
        }
        break;
      case Scheduler::Kind::kRandom: {
        std::vector<std::pair<Author, Topic>> options;
        for (Author j = 0; j < n; ++j) {
          if (sched.rule == ResponseRule::kBetter) {
            for (const auto& [t, u] : better_responses(model, a, j)) {
              options.emplace_back(j, t);
            }
          } else {
            const auto best = best_responses(model, a, j);
            bool at_best = false;
            for (Topic t : best) at_best = at_best || t == a[j];
            if (at_best) continue;
            StrategyProfile b = a;
            for (Topic t : best) {
              b[j] = t;
              if (model.improves(a, b, j)) options.emplace_back(j, t);
            }
          }
        }
        if (!options.empty()) {
          std::uniform_int_distribution<std::size_t> pick(0,
                                                          options.size() - 1);
          move = options[pick(rng)];
        }
        break;
      }
    }
    if (!move) return finish(DynamicsOutcome::Kind::kConvergedPne);
    if (out.trajectory.steps.size() >= max_steps) {
      return finish(DynamicsOutcome::Kind::kBudgetExhausted);
    }

    const auto [j, t] = *move;
    StrategyProfile next = a;
    next[j] = t;
    Step step;
    step.index = out.trajectory.steps.size();
    step.mover = j;
    step.from = a[j];
    step.to = t;
    step.utility_before = model.utility(a, j);
    step.utility_after = model.utility(next, j);
    out.trajectory.steps.push_back(std::move(step));
    a = std::move(next);

    const std::size_t position = out.trajectory.steps.size();
    auto [it, inserted] = visited.emplace(a, position);
    if (!inserted) {
      if (sched.deterministic()) {
        out.repeated_profile_index = it->second;
        return finish(DynamicsOutcome::Kind::kRepeatDetected);
      }
      if (!out.inconclusive_repeat_step) {
        out.inconclusive_repeat_step = position - 1;
      }
    }
  }
}

}  // namespace authorsgame

#endif  // AUTHORSGAME_DYNAMICS_HPP_
