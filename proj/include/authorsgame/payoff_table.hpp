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

#ifndef AUTHORSGAME_PAYOFF_TABLE_HPP_
#define AUTHORSGAME_PAYOFF_TABLE_HPP_

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <vector>

#include "authorsgame/game.hpp"
#include "authorsgame/profile_space.hpp"

namespace authorsgame {

// Anything that can answer "what does author j get at profile a" and
// "does this move strictly improve j". Game evaluates on demand;
// PayoffTable answers from a precomputed table.
template <class M>
concept PayoffModel = requires(const M& model, const StrategyProfile& a,
                               Author j) {
  { model.num_authors() } -> std::convertible_to<std::size_t>;
  { model.num_topics() } -> std::convertible_to<std::size_t>;
  { model.utility(a, j) } -> std::convertible_to<Rational>;
  { model.improves(a, a, j) } -> std::same_as<bool>;
  { model.order_key(a, j) < model.order_key(a, j) } -> std::convertible_to<bool>;
};

// Every author's utility at every profile. Exact values are also ranked so
// margin-free comparisons reduce to integer comparisons.
class PayoffTable {
 public:
  explicit PayoffTable(const Game& game,
                       std::uint64_t budget = kDefaultProfileBudget)
      : space_(game, budget),
        margin_(game.mediator().is_scoring() ? game.improvement_margin() : 0) {
    const std::size_t n = game.num_authors();
    values_.reserve(space_.size() * n);
    for (std::uint64_t idx = 0; idx < space_.size(); ++idx) {
      const StrategyProfile a = space_.profile(idx);
      for (Author j = 0; j < n; ++j) values_.push_back(game.utility(a, j));
    }
    std::vector<Rational> distinct = values_;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    ranks_.reserve(values_.size());
    for (const Rational& v : values_) {
      ranks_.push_back(static_cast<std::uint32_t>(
          std::lower_bound(distinct.begin(), distinct.end(), v) -
          distinct.begin()));
    }
  }

  const ProfileSpace& space() const { return space_; }
  std::size_t num_authors() const { return space_.authors(); }
  std::size_t num_topics() const { return space_.topics(); }

  const Rational& utility_at(std::uint64_t idx, Author j) const {
    return values_[idx * num_authors() + j];
  }
  std::uint32_t rank_at(std::uint64_t idx, Author j) const {
    return ranks_[idx * num_authors() + j];
  }
  bool improves_at(std::uint64_t from, std::uint64_t to, Author j) const {
    if (margin_ <= 0) return rank_at(to, j) > rank_at(from, j);
    return strictly_improves(utility_at(from, j), utility_at(to, j), margin_);
  }

  const Rational& utility(const StrategyProfile& a, Author j) const {
    return utility_at(space_.index(a), j);
  }
  std::uint32_t order_key(const StrategyProfile& a, Author j) const {
    return rank_at(space_.index(a), j);
  }
  bool improves(const StrategyProfile& from, const StrategyProfile& to,
                Author j) const {
    return improves_at(space_.index(from), space_.index(to), j);
  }

 private:
  ProfileSpace space_;
  double margin_;
  std::vector<Rational> values_;
  std::vector<std::uint32_t> ranks_;
};

}  // namespace authorsgame

#endif  // AUTHORSGAME_PAYOFF_TABLE_HPP_
