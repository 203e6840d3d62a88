// Copyright 2026 The hog Authors
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

// Classical normal-form games: payoff matrices, their embedding as
// higher-order games with coordinate-argmax players, and a pure Nash
// equilibrium oracle that works on the payoffs alone.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hog/context.hpp"
#include "hog/error.hpp"
#include "hog/game.hpp"
#include "hog/selection.hpp"

namespace hog {

class PayoffMatrix {
 public:
  using Payoffs = std::vector<Rational>;

  /// payoffs[k] is the payoff vector of the k-th profile in lexicographic
  /// order (last player fastest).
  PayoffMatrix(std::vector<std::string> players, std::vector<MoveSet> moves,
               std::vector<Payoffs> payoffs)
      : players_(std::move(players)), moves_(std::move(moves)), payoffs_(std::move(payoffs)) {
    if (moves_.empty()) fail(ErrorKind::kInvalidArgument, "a payoff matrix needs a player");
    if (players_.size() != moves_.size()) {
      fail(ErrorKind::kInvalidArgument, "one name per player required");
    }
    std::uint64_t total = 1;
    for (const auto& m : moves_) total *= m.size();
    if (payoffs_.size() != total) {
      fail(ErrorKind::kInvalidArgument, "payoff matrix has " + std::to_string(payoffs_.size()) +
                                            " cells for " + std::to_string(total) + " profiles");
    }
    for (const auto& cell : payoffs_) {
      if (cell.size() != moves_.size()) {
        fail(ErrorKind::kInvalidArgument, "every cell needs one payoff per player");
      }
    }
  }

  /// Players named P1..Pn.
  static PayoffMatrix anonymous(std::vector<MoveSet> moves, std::vector<Payoffs> payoffs) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < moves.size(); ++i) names.push_back("P" + std::to_string(i + 1));
    return PayoffMatrix(std::move(names), std::move(moves), std::move(payoffs));
  }

  std::size_t num_players() const noexcept { return moves_.size(); }
  const std::vector<std::string>& players() const noexcept { return players_; }
  const std::vector<MoveSet>& moves() const noexcept { return moves_; }
  const std::vector<Payoffs>& cells() const noexcept { return payoffs_; }

  std::uint64_t cell_index(const std::vector<std::size_t>& profile) const {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < moves_.size(); ++i) n = n * moves_[i].size() + profile[i];
    return n;
  }

  const Payoffs& payoff(const std::vector<std::size_t>& profile) const {
    return payoffs_[cell_index(profile)];
  }

  /// Every payoff value that occurs, ascending.
  std::vector<Rational> value_set() const {
    std::vector<Rational> values;
    for (const auto& cell : payoffs_) values.insert(values.end(), cell.begin(), cell.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  }

  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;

 private:
  std::vector<std::string> players_;
  std::vector<MoveSet> moves_;
  std::vector<Payoffs> payoffs_;
};

/// Outcomes are payoff vectors; player i plays argmax on coordinate i.
inline Game classical_game(const PayoffMatrix& m, std::string name = "classical") {
  std::vector<Player> players;
  for (std::size_t i = 0; i < m.num_players(); ++i) {
    players.push_back(Player{m.players()[i], m.moves()[i], make_argmax_coord(i + 1)});
  }
  std::vector<Outcome> table;
  table.reserve(m.cells().size());
  for (const auto& cell : m.cells()) table.push_back(Outcome::payoff(cell));
  return Game(std::move(name), std::move(players),
              OutcomeSpace::vector(m.num_players(), m.value_set()), std::move(table));
}

/// Pure profiles where no player gains strictly by deviating alone. Reads
/// the payoffs directly and does not touch the equilibrium engine.
inline std::vector<std::vector<std::size_t>> brute_force_nash(
    const PayoffMatrix& m, std::uint64_t budget = kDefaultProfileBudget) {
  std::uint64_t total = 1;
  for (const auto& moves : m.moves()) {
    if (total > budget / moves.size()) {
      fail(ErrorKind::kBudgetExceeded, "payoff matrix exceeds the profile budget");
    }
    total *= moves.size();
  }
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> profile(m.num_players(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    const auto& here = m.payoff(profile);
    bool stable = true;
    for (std::size_t i = 0; i < m.num_players() && stable; ++i) {
      std::vector<std::size_t> other = profile;
      for (std::size_t x = 0; x < m.moves()[i].size(); ++x) {
        other[i] = x;
        if (m.payoff(other)[i] > here[i]) {
          stable = false;
          break;
        }
      }
    }
    if (stable) found.push_back(profile);
    for (std::size_t k = profile.size(); k-- > 0;) {
      if (++profile[k] < m.moves()[k].size()) break;
      profile[k] = 0;
    }
  }
  return found;
}

}  // namespace hog
