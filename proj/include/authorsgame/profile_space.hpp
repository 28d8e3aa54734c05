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

#ifndef AUTHORSGAME_PROFILE_SPACE_HPP_
#define AUTHORSGAME_PROFILE_SPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "authorsgame/errors.hpp"
#include "authorsgame/game.hpp"

namespace authorsgame {

inline constexpr std::uint64_t kDefaultProfileBudget = 1'000'000;

// Lexicographic indexing of all m^n profiles; author 0 is most significant,
// so index order is the canonical profile order.
class ProfileSpace {
 public:
  ProfileSpace(std::size_t authors, std::size_t topics,
               std::uint64_t budget = kDefaultProfileBudget)
      : authors_(authors), topics_(topics), strides_(authors) {
    if (authors == 0 || topics == 0) {
      throw ValidationError("profile space needs n >= 1 and m >= 1");
    }
    std::uint64_t size = 1;
    for (std::size_t i = authors; i-- > 0;) {
      strides_[i] = size;
      if (size > budget / topics) {
        throw BudgetExceeded("m^n = " + std::to_string(topics) + "^" +
                             std::to_string(authors) +
                             " exceeds the enumeration budget of " +
                             std::to_string(budget) + " profiles");
      }
      size *= topics;
    }
    if (size > budget) {
      throw BudgetExceeded("profile count exceeds the enumeration budget");
    }
    size_ = size;
  }

  explicit ProfileSpace(const Game& game,
                        std::uint64_t budget = kDefaultProfileBudget)
      : ProfileSpace(game.num_authors(), game.num_topics(), budget) {}

  std::size_t authors() const { return authors_; }
  std::size_t topics() const { return topics_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t stride(Author j) const { return strides_[j]; }

  std::uint64_t index(const StrategyProfile& a) const {
    std::uint64_t idx = 0;
    for (Author j = 0; j < authors_; ++j) idx += a[j] * strides_[j];
    return idx;
  }

  StrategyProfile profile(std::uint64_t idx) const {
    StrategyProfile a(authors_);
    for (Author j = 0; j < authors_; ++j) {
      a[j] = static_cast<Topic>(idx / strides_[j]);
      idx %= strides_[j];
    }
    return a;
  }

  Topic topic_of(std::uint64_t idx, Author j) const {
    return static_cast<Topic>((idx / strides_[j]) % topics_);
  }

  // Index of the profile where author j switches to topic t.
  std::uint64_t deviate(std::uint64_t idx, Author j, Topic t) const {
    const Topic current = topic_of(idx, j);
    return idx - current * strides_[j] + t * strides_[j];
  }

 private:
  std::size_t authors_;
  std::size_t topics_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> strides_;
};

}  // namespace authorsgame

#endif  // AUTHORSGAME_PROFILE_SPACE_HPP_
