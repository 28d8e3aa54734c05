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

#ifndef AUTHORSGAME_GAME_HPP_
#define AUTHORSGAME_GAME_HPP_

// Authors games: n authors each pick one of m topics; a mediator decides
// which document is shown first for a topic's queries. Utilities are exact
// rationals. Scoring mediators evaluate their score function in double
// precision and then continue exactly on the rounded scores.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "authorsgame/errors.hpp"
#include "authorsgame/rational.hpp"

namespace authorsgame {

using Author = std::size_t;
using Topic = std::size_t;

// One topic per author, 0-based. External formats use 1-based indices.
using StrategyProfile = std::vector<Topic>;

// Demand mass per topic; non-negative and summing to exactly one.
class TopicDistribution {
 public:
  TopicDistribution() = default;
  explicit TopicDistribution(std::vector<Rational> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty()) {
      throw ValidationError("topic distribution needs at least one topic");
    }
    Rational total = 0;
    for (const Rational& w : weights_) {
      if (w < 0) throw ValidationError("topic weight is negative");
      total += w;
    }
    if (total != 1) {
      throw ValidationError("topic weights sum to " + to_string(total) +
                            ", expected exactly 1");
    }
  }

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](Topic k) const { return weights_[k]; }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<Rational> weights_;
};

// n x m document qualities, every entry in [0, 1].
class QualityMatrix {
 public:
  QualityMatrix() = default;
  explicit QualityMatrix(std::vector<std::vector<Rational>> rows)
      : rows_(std::move(rows)) {
    if (rows_.empty()) throw ValidationError("quality matrix has no rows");
    const std::size_t m = rows_.front().size();
    if (m == 0) throw ValidationError("quality matrix has no columns");
    for (const auto& row : rows_) {
      if (row.size() != m) throw ValidationError("quality matrix is ragged");
      for (const Rational& q : row) {
        if (q < 0 || q > 1) {
          throw ValidationError("quality " + to_string(q) +
                                " is outside [0, 1]");
        }
      }
    }
  }

  std::size_t authors() const { return rows_.size(); }
  std::size_t topics() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const Rational& operator()(Author j, Topic k) const { return rows_[j][k]; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
};

// Non-decreasing, non-negative score on [0, 1].
class ScoreFunction {
 public:
  enum class Kind { kConstant, kIdentity, kPower, kExponential, kExpMinusOne };

  static ScoreFunction constant(double value = 1.0) {
    if (!(value >= 0) || !std::isfinite(value)) {
      throw ValidationError("constant score must be finite and >= 0");
    }
    return ScoreFunction(Kind::kConstant, value);
  }
  static ScoreFunction identity() { return ScoreFunction(Kind::kIdentity, 0); }
  static ScoreFunction power(double exponent) {
    if (!(exponent > 0) || !std::isfinite(exponent)) {
      throw ValidationError("power score needs a positive exponent");
    }
    return ScoreFunction(Kind::kPower, exponent);
  }
  // f(x) = exp(scale * x); scale >= 0 keeps f non-decreasing.
  static ScoreFunction exponential(double scale = 1.0) {
    if (!(scale >= 0) || !std::isfinite(scale)) {
      throw ValidationError("exponential score needs a finite scale >= 0");
    }
    return ScoreFunction(Kind::kExponential, scale);
  }
  static ScoreFunction exp_minus_one() {
    return ScoreFunction(Kind::kExpMinusOne, 0);
  }

  Kind kind() const { return kind_; }
  double param() const { return param_; }
  bool has_param() const {
    return kind_ == Kind::kConstant || kind_ == Kind::kPower ||
           kind_ == Kind::kExponential;
  }

  double operator()(double x) const {
    switch (kind_) {
      case Kind::kConstant:
        return param_;
      case Kind::kIdentity:
        return x;
      case Kind::kPower:
        return std::pow(x, param_);
      case Kind::kExponential:
        return std::exp(param_ * x);
      case Kind::kExpMinusOne:
        return std::expm1(x);
    }
    return 0;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::kConstant:
        return "constant";
      case Kind::kIdentity:
        return "identity";
      case Kind::kPower:
        return "power";
      case Kind::kExponential:
        return "exponential";
      case Kind::kExpMinusOne:
        return "exp_minus_one";
    }
    return "?";
  }

  friend bool operator==(const ScoreFunction&, const ScoreFunction&) = default;

 private:
  ScoreFunction(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_ = Kind::kIdentity;
  double param_ = 0;
};

class Mediator {
 public:
  enum class Kind { kPrp, kRand, kScoring };

  static Mediator prp() { return Mediator(Kind::kPrp, ScoreFunction::identity()); }
  static Mediator rand() { return Mediator(Kind::kRand, ScoreFunction::identity()); }
  static Mediator scoring(ScoreFunction f) {
    return Mediator(Kind::kScoring, f);
  }

  Kind kind() const { return kind_; }
  bool is_scoring() const { return kind_ == Kind::kScoring; }
  // Only meaningful for scoring mediators.
  const ScoreFunction& score() const { return score_; }

  std::string name() const {
    switch (kind_) {
      case Kind::kPrp:
        return "prp";
      case Kind::kRand:
        return "rand";
      case Kind::kScoring:
        return "scoring:" + score_.name();
    }
    return "?";
  }

  friend bool operator==(const Mediator&, const Mediator&) = default;

 private:
  Mediator(Kind kind, ScoreFunction f) : kind_(kind), score_(f) {}

  Kind kind_ = Kind::kPrp;
  ScoreFunction score_ = ScoreFunction::identity();
};

enum class UtilityScheme { kExposure, kAction };

inline std::string to_string(UtilityScheme scheme) {
  return scheme == UtilityScheme::kExposure ? "exposure" : "action";
}

// Immutable bundle <N, M, D, Q, R, u>.
class Game {
 public:
  Game(TopicDistribution demand, QualityMatrix quality, Mediator mediator,
       UtilityScheme scheme, double improvement_margin = 0.0)
      : demand_(std::move(demand)),
        quality_(std::move(quality)),
        mediator_(mediator),
        scheme_(scheme),
        margin_(improvement_margin) {
    if (quality_.topics() != demand_.size()) {
      throw ValidationError("quality matrix has " +
                            std::to_string(quality_.topics()) +
                            " columns but demand has " +
                            std::to_string(demand_.size()) + " topics");
    }
    if (!(margin_ >= 0) || !std::isfinite(margin_)) {
      throw ValidationError("improvement margin must be finite and >= 0");
    }
  }

  std::size_t num_authors() const { return quality_.authors(); }
  std::size_t num_topics() const { return demand_.size(); }
  const TopicDistribution& demand() const { return demand_; }
  const QualityMatrix& quality() const { return quality_; }
  const Mediator& mediator() const { return mediator_; }
  UtilityScheme scheme() const { return scheme_; }
  // Relative strict-improvement margin; applied to scoring mediators only.
  double improvement_margin() const { return margin_; }

  Game with_margin(double margin) const {
    return Game(demand_, quality_, mediator_, scheme_, margin);
  }

  void validate(const StrategyProfile& a) const {
    if (a.size() != num_authors()) {
      throw ValidationError("profile has " + std::to_string(a.size()) +
                            " entries, game has " +
                            std::to_string(num_authors()) + " authors");
    }
    for (Topic t : a) {
      if (t >= num_topics()) {
        throw ValidationError("profile names topic " + std::to_string(t + 1) +
                              " but game has " + std::to_string(num_topics()));
      }
    }
  }

  // Exact utility; see utility() below.
  Rational utility(const StrategyProfile& a, Author j) const;
  Rational order_key(const StrategyProfile& a, Author j) const {
    return utility(a, j);
  }

  // True iff moving author j from profile `from` to `to` strictly improves
  // them, under the relative margin for scoring mediators.
  bool improves(const StrategyProfile& from, const StrategyProfile& to,
                Author j) const;

 private:
  TopicDistribution demand_;
  QualityMatrix quality_;
  Mediator mediator_;
  UtilityScheme scheme_;
  double margin_;
};

// Strict improvement test shared by the game and tabulated payoffs:
// after > before, and for margin > 0 the gain must exceed
// margin * max(|before|, |after|).
inline bool strictly_improves(const Rational& before, const Rational& after,
                              double margin) {
  if (!(after > before)) return false;
  if (margin <= 0) return true;
  const Rational scale = std::max(magnitude(before), magnitude(after));
  return after - before > from_double(margin) * scale;
}

// B_k(a): highest quality among writers on k; 0 when nobody writes on k.
inline Rational top_quality(const Game& game, Topic k,
                            const StrategyProfile& a) {
  Rational best = 0;
  for (Author j = 0; j < a.size(); ++j) {
    if (a[j] == k && game.quality()(j, k) > best) best = game.quality()(j, k);
  }
  return best;
}

// H_k(a): number of writers on k whose quality equals B_k(a).
inline std::size_t top_count(const Game& game, Topic k,
                             const StrategyProfile& a) {
  const Rational best = top_quality(game, k, a);
  std::size_t count = 0;
  for (Author j = 0; j < a.size(); ++j) {
    if (a[j] == k && game.quality()(j, k) == best) ++count;
  }
  return count;
}

// Probability that each writer on k is ranked first. Non-writers are absent;
// an empty map means nobody writes on k.
inline std::map<Author, Rational> rank_probabilities(const Game& game, Topic k,
                                                     const StrategyProfile& a) {
  std::map<Author, Rational> probs;
  std::vector<Author> writers;
  for (Author j = 0; j < a.size(); ++j) {
    if (a[j] == k) writers.push_back(j);
  }
  if (writers.empty()) return probs;
  const Rational uniform(1, static_cast<long>(writers.size()));
  switch (game.mediator().kind()) {
    case Mediator::Kind::kPrp: {
      const Rational best = top_quality(game, k, a);
      std::size_t ties = 0;
      for (Author j : writers) ties += game.quality()(j, k) == best ? 1 : 0;
      const Rational share(1, static_cast<long>(ties));
      for (Author j : writers) {
        probs[j] = game.quality()(j, k) == best ? share : Rational(0);
      }
      break;
    }
    case Mediator::Kind::kRand:
      for (Author j : writers) probs[j] = uniform;
      break;
    case Mediator::Kind::kScoring: {
      const ScoreFunction& f = game.mediator().score();
      std::vector<Rational> scores;
      Rational total = 0;
      for (Author j : writers) {
        scores.push_back(from_double(f(to_double(game.quality()(j, k)))));
        total += scores.back();
      }
      for (std::size_t i = 0; i < writers.size(); ++i) {
        // All-zero scores leave the ratio undefined; fall back to uniform.
        probs[writers[i]] = total == 0 ? uniform : Rational(scores[i] / total);
      }
      break;
    }
  }
  return probs;
}

// u^Ex_j(a) = D(a_j) R_j(Q, a_j, a);  u^Ac_j(a) = u^Ex_j(a) Q_{j,a_j}.
inline Rational utility(const Game& game, const StrategyProfile& a, Author j) {
  const Topic k = a[j];
  const auto probs = rank_probabilities(game, k, a);
  Rational u = game.demand()[k] * probs.at(j);
  if (game.scheme() == UtilityScheme::kAction) u *= game.quality()(j, k);
  return u;
}

inline std::vector<Rational> utility_vector(const Game& game,
                                            const StrategyProfile& a) {
  game.validate(a);
  std::vector<Rational> u;
  u.reserve(a.size());
  for (Author j = 0; j < a.size(); ++j) u.push_back(utility(game, a, j));
  return u;
}

inline Rational Game::utility(const StrategyProfile& a, Author j) const {
  return authorsgame::utility(*this, a, j);
}

inline bool Game::improves(const StrategyProfile& from,
                           const StrategyProfile& to, Author j) const {
  const double margin = mediator_.is_scoring() ? margin_ : 0.0;
  return strictly_improves(utility(from, j), utility(to, j), margin);
}

}  // namespace authorsgame

#endif  // AUTHORSGAME_GAME_HPP_
