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

#ifndef AUTHORSGAME_JSON_IO_HPP_
#define AUTHORSGAME_JSON_IO_HPP_

// JSON documents: games, trajectories (JSON lines), analysis reports,
// counterexample bundles, and experiment suites. Rationals travel as "p/q"
// strings; profiles and author/topic indices are 1-based.

#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "authorsgame/analysis.hpp"
#include "authorsgame/counterexamples.hpp"
#include "authorsgame/dynamics.hpp"
#include "authorsgame/errors.hpp"
#include "authorsgame/game.hpp"
#include "authorsgame/harness.hpp"

namespace authorsgame {

using json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_from_json(const json& j, const char* field) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    // Shortest round-trip decimal of the number, read exactly.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), j.get<double>());
    return parse_rational(std::string_view(buf, res.ptr - buf));
  }
  throw ValidationError(std::string(field) + ": expected a rational string");
}

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

inline std::size_t positive_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ValidationError(std::string(key) + " must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace detail

inline json profile_to_json(const StrategyProfile& a) {
  json out = json::array();
  for (Topic t : a) out.push_back(t + 1);
  return out;
}

inline StrategyProfile profile_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("profile must be an array");
  StrategyProfile a;
  for (const json& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw ValidationError("profile entries are 1-based topic numbers");
    }
    a.push_back(v.get<std::size_t>() - 1);
  }
  return a;
}

inline json score_to_json(const ScoreFunction& f) {
  json out{{"kind", f.name()}};
  if (f.has_param()) out["param"] = f.param();
  return out;
}

inline ScoreFunction score_from_json(const json& j) {
  const std::string kind = detail::require(j, "kind").get<std::string>();
  auto param = [&](double fallback, bool required) {
    if (j.contains("param")) {
      if (!j["param"].is_number()) {
        throw ValidationError("score param must be a number");
      }
      return j["param"].get<double>();
    }
    if (required) throw ValidationError(kind + " score needs \"param\"");
    return fallback;
  };
  if (kind == "identity") return ScoreFunction::identity();
  if (kind == "constant") return ScoreFunction::constant(param(1.0, false));
  if (kind == "power") return ScoreFunction::power(param(0, true));
  if (kind == "exponential") return ScoreFunction::exponential(param(1.0, false));
  if (kind == "exp_minus_one") return ScoreFunction::exp_minus_one();
  throw ValidationError("unknown score function kind \"" + kind + "\"");
}

inline json mediator_to_json(const Mediator& m) {
  switch (m.kind()) {
    case Mediator::Kind::kPrp:
      return {{"kind", "prp"}};
    case Mediator::Kind::kRand:
      return {{"kind", "rand"}};
    case Mediator::Kind::kScoring:
      return {{"kind", "scoring"}, {"f", score_to_json(m.score())}};
  }
  return {};
}

inline Mediator mediator_from_json(const json& j) {
  const std::string kind = detail::require(j, "kind").get<std::string>();
  if (kind == "prp") return Mediator::prp();
  if (kind == "rand") return Mediator::rand();
  if (kind == "scoring") {
    return Mediator::scoring(score_from_json(detail::require(j, "f")));
  }
  throw ValidationError("unknown mediator kind \"" + kind + "\"");
}

inline UtilityScheme scheme_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "exposure") return UtilityScheme::kExposure;
  if (s == "action") return UtilityScheme::kAction;
  throw ValidationError("utility must be \"exposure\" or \"action\"");
}

inline json game_to_json(const Game& game) {
  json d = json::array();
  for (const Rational& w : game.demand().weights()) d.push_back(to_string(w));
  json q = json::array();
  for (const auto& row : game.quality().rows()) {
    json r = json::array();
    for (const Rational& v : row) r.push_back(to_string(v));
    q.push_back(std::move(r));
  }
  json out{{"n", game.num_authors()},
           {"m", game.num_topics()},
           {"D", std::move(d)},
           {"Q", std::move(q)},
           {"mediator", mediator_to_json(game.mediator())},
           {"utility", to_string(game.scheme())}};
  if (game.improvement_margin() > 0) {
    out["improvement_margin"] = game.improvement_margin();
  }
  return out;
}

inline Game game_from_json(const json& j) {
  try {
    const std::size_t n = detail::positive_int(j, "n");
    const std::size_t m = detail::positive_int(j, "m");
    const json& dj = detail::require(j, "D");
    const json& qj = detail::require(j, "Q");
    if (!dj.is_array() || dj.size() != m) {
      throw ValidationError("D must be an array of m entries");
    }
    if (!qj.is_array() || qj.size() != n) {
      throw ValidationError("Q must be an array of n rows");
    }
    std::vector<Rational> d;
    for (const json& v : dj) d.push_back(detail::rational_from_json(v, "D"));
    std::vector<std::vector<Rational>> q;
    for (const json& row : qj) {
      if (!row.is_array() || row.size() != m) {
        throw ValidationError("every Q row must have m entries");
      }
      std::vector<Rational> r;
      for (const json& v : row) r.push_back(detail::rational_from_json(v, "Q"));
      q.push_back(std::move(r));
    }
    double margin = 0;
    if (j.contains("improvement_margin")) {
      margin = j["improvement_margin"].get<double>();
    }
    return Game(TopicDistribution(std::move(d)), QualityMatrix(std::move(q)),
                mediator_from_json(detail::require(j, "mediator")),
                scheme_from_json(detail::require(j, "utility")), margin);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed game document: ") + e.what());
  }
}

inline json step_to_json(const Step& s) {
  return {{"r", s.index + 1},
          {"player", s.mover + 1},
          {"from", s.from + 1},
          {"to", s.to + 1},
          {"u_before", to_string(s.utility_before)},
          {"u_after", to_string(s.utility_after)}};
}

// One JSON object per line, one line per step.
inline std::string trajectory_to_jsonl(const Trajectory& t) {
  std::string out;
  for (const Step& s : t.steps) {
    out += step_to_json(s).dump();
    out += '\n';
  }
  return out;
}

inline Trajectory trajectory_from_jsonl(const StrategyProfile& initial,
                                        const std::string& text) {
  Trajectory t;
  t.initial = initial;
  StrategyProfile a = initial;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      Step s;
      s.index = j.at("r").get<std::size_t>() - 1;
      s.mover = j.at("player").get<std::size_t>() - 1;
      s.from = j.at("from").get<std::size_t>() - 1;
      s.to = j.at("to").get<std::size_t>() - 1;
      s.utility_before = parse_rational(j.at("u_before").get<std::string>());
      s.utility_after = parse_rational(j.at("u_after").get<std::string>());
      if (s.mover >= a.size()) throw ValidationError("step mover out of range");
      a[s.mover] = s.to;
      t.steps.push_back(std::move(s));
    } catch (const json::exception& e) {
      throw ValidationError(std::string("malformed trajectory line: ") +
                            e.what());
    }
  }
  t.terminal = a;
  return t;
}

inline json subgame_to_json(const Subgame& s) {
  return {{"authors", {s.row_author + 1, s.col_author + 1}},
          {"row_topics", {s.row_topics[0] + 1, s.row_topics[1] + 1}},
          {"col_topics", {s.col_topics[0] + 1, s.col_topics[1] + 1}},
          {"base", profile_to_json(s.base)}};
}

inline json potential_to_json(const PotentialReport& p) {
  json out{{"exists", p.has_exact_potential},
           {"residual", to_string(p.worst_residual)}};
  if (p.witness) {
    out["witness"] = subgame_to_json(*p.witness);
    out["witness"]["residual"] = to_string(p.witness_residual);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

inline json analysis_to_json(const AnalysisReport& r) {
  json out{{"fip", r.fip.fip}};
  if (!r.fip.fip) {
    json cycle = json::array();
    for (const auto& a : r.fip.cycle) cycle.push_back(profile_to_json(a));
    out["cycle"] = std::move(cycle);
  }
  json pne = json::array();
  for (const auto& a : r.pne) pne.push_back(profile_to_json(a));
  out["pne"] = std::move(pne);
  if (r.longest_path) out["longest_path"] = *r.longest_path;
  if (r.potential) out["potential"] = potential_to_json(*r.potential);
  return out;
}

inline json bundle_to_json(const CounterexampleBundle& b) {
  json out = game_to_json(b.game);
  json cycle = json::array();
  for (const auto& a : b.cycle) cycle.push_back(profile_to_json(a));
  out["cycle"] = std::move(cycle);
  json params{{"x1", to_double(b.params.x1)},
              {"x2", to_double(b.params.x2)},
              {"x3", to_double(b.params.x3)},
              {"x_exact", {to_string(b.params.x1), to_string(b.params.x2),
                           to_string(b.params.x3)}},
              {"c1", b.params.c1},
              {"c2", b.params.c2},
              {"epsilon", to_double(b.params.epsilon)},
              {"epsilon_exact", to_string(b.params.epsilon)}};
  if (b.params.z) params["z"] = *b.params.z;
  if (b.params.alpha) params["alpha"] = *b.params.alpha;
  if (b.params.beta) params["beta"] = *b.params.beta;
  out["params"] = std::move(params);
  return out;
}

inline json bimatrix_to_json(const Bimatrix& table) {
  json rows = json::array();
  for (const auto& row : table) {
    json r = json::array();
    for (const auto& [u1, u2] : row) r.push_back({to_string(u1), to_string(u2)});
    rows.push_back(std::move(r));
  }
  return rows;
}

inline ExperimentConfig config_from_json(const json& j) {
  try {
    ExperimentConfig c;
    c.seed = detail::require(j, "seed").get<std::uint64_t>();
    c.games = detail::require(j, "games").get<std::size_t>();
    auto range = [&](const char* key) {
      const json& r = detail::require(j, key);
      if (!r.is_array() || r.size() != 2) {
        throw ValidationError(std::string(key) + " must be [lo, hi]");
      }
      return std::pair<std::size_t, std::size_t>{r[0].get<std::size_t>(),
                                                 r[1].get<std::size_t>()};
    };
    c.n_range = range("n_range");
    c.m_range = range("m_range");
    if (j.contains("mediator")) c.mediator = mediator_from_json(j["mediator"]);
    if (j.contains("utility")) c.scheme = scheme_from_json(j["utility"]);
    if (j.contains("checks")) {
      c.checks.clear();
      for (const json& v : j["checks"]) {
        const std::string s = v.get<std::string>();
        if (s == "fip") {
          c.checks.insert(Check::kFip);
        } else if (s == "pne") {
          c.checks.insert(Check::kPne);
        } else if (s == "potential") {
          c.checks.insert(Check::kPotential);
        } else if (s == "dynamics") {
          c.checks.insert(Check::kDynamics);
        } else {
          throw ValidationError("unknown check \"" + s + "\"");
        }
      }
    }
    if (j.contains("budget")) c.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("generic_Q")) c.generic_quality = j["generic_Q"].get<bool>();
    if (j.contains("sorted_D")) c.sorted_demand = j["sorted_D"].get<bool>();
    if (j.contains("denominator_bound")) {
      c.denominator_bound = j["denominator_bound"].get<std::int64_t>();
    }
    if (j.contains("tie_rich_fraction")) {
      c.tie_rich_fraction = j["tie_rich_fraction"].get<double>();
    }
    if (j.contains("threads")) c.threads = j["threads"].get<std::size_t>();
    return c;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed suite config: ") + e.what());
  }
}

inline json report_to_json(const ExperimentReport& r) {
  json games = json::array();
  for (const auto& o : r.outcomes) {
    json g{{"seed", o.seed},
           {"n", o.n},
           {"m", o.m},
           {"mediator", o.mediator},
           {"scheme", o.scheme},
           {"tie_rich", o.tie_rich},
           {"budget_exceeded", o.budget_exceeded}};
    if (o.fip) g["fip"] = *o.fip;
    if (!o.cycle.empty()) {
      json cycle = json::array();
      for (const auto& a : o.cycle) cycle.push_back(profile_to_json(a));
      g["cycle"] = std::move(cycle);
    }
    if (o.pne_count) g["pne_count"] = *o.pne_count;
    if (o.max_path_len) g["max_path_len"] = *o.max_path_len;
    if (o.potential_exists) g["potential_exists"] = *o.potential_exists;
    if (o.steps_to_converge) g["steps_to_converge"] = *o.steps_to_converge;
    if (o.dynamics_outcome) g["dynamics"] = *o.dynamics_outcome;
    games.push_back(std::move(g));
  }
  const ExperimentAggregate& a = r.aggregate;
  return {{"generator", r.generator},
          {"games", std::move(games)},
          {"aggregate",
           {{"games", a.games},
            {"budget_exceeded", a.budget_exceeded},
            {"fip_checked", a.fip_checked},
            {"fip_rate", a.fip_rate},
            {"potential_checked", a.potential_checked},
            {"potential_failure_rate", a.potential_failure_rate},
            {"dynamics_runs", a.dynamics_runs},
            {"converged_runs", a.converged_runs},
            {"mean_convergence_steps", a.mean_convergence_steps},
            {"max_convergence_steps", a.max_convergence_steps},
            {"cycle_witnesses", a.cycle_witnesses}}}};
}

}  // namespace authorsgame

#endif  // AUTHORSGAME_JSON_IO_HPP_
