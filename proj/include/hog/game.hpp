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

// Higher-order games G = (e_1, ..., e_n, q), unilateral contexts and the
// quantifier / selection equilibrium checks.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hog/context.hpp"
#include "hog/error.hpp"
#include "hog/selection.hpp"

namespace hog {

inline constexpr std::uint64_t kDefaultProfileBudget = 10'000'000;

struct Player {
  std::string name;
  MoveSet moves;
  SelectionFunction selection;

  friend bool operator==(const Player&, const Player&) = default;
};

/// One move index per player, in player order.
struct StrategyProfile {
  std::vector<std::size_t> moves;

  std::size_t operator[](std::size_t player) const { return moves[player]; }
  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

/// How q is represented. Majority and identity are computed on demand;
/// anything else is an explicit table indexed by profile ordinal.
enum class OutcomeRule { kTable, kMajority, kIdentity };

class Game {
 public:
  /// Explicit outcome table over all profiles in lexicographic order.
  Game(std::string name, std::vector<Player> players, OutcomeSpace outcomes,
       std::vector<Outcome> table)
      : Game(std::move(name), std::move(players), std::move(outcomes), OutcomeRule::kTable,
             std::move(table)) {}

  /// Majority vote among an odd number of players sharing one binary move
  /// set; the outcome space is that move set.
  static Game majority(std::string name, std::vector<Player> players) {
    if (players.empty()) fail(ErrorKind::kInvalidArgument, "a game needs at least one player");
    OutcomeSpace space = OutcomeSpace::atoms(players.front().moves);
    return Game(std::move(name), std::move(players), std::move(space), OutcomeRule::kMajority, {});
  }

  /// q = id, with the product of the move sets as outcome space.
  static Game identity(std::string name, std::vector<Player> players) {
    std::vector<MoveSet> coords;
    for (const auto& pl : players) coords.push_back(pl.moves);
    if (coords.empty()) fail(ErrorKind::kInvalidArgument, "a game needs at least one player");
    OutcomeSpace space = OutcomeSpace::product(std::move(coords));
    return Game(std::move(name), std::move(players), std::move(space), OutcomeRule::kIdentity, {});
  }

  /// Tabulates q from a callable over profiles.
  static Game tabulated(std::string name, std::vector<Player> players, OutcomeSpace outcomes,
                        const std::function<Outcome(const StrategyProfile&)>& q) {
    std::vector<std::size_t> radices;
    for (const auto& pl : players) radices.push_back(pl.moves.size());
    std::vector<Outcome> table;
    for_each_index(radices, [&](const std::vector<std::size_t>& idx) {
      table.push_back(q(StrategyProfile{idx}));
    });
    return Game(std::move(name), std::move(players), std::move(outcomes), std::move(table));
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t num_players() const noexcept { return players_.size(); }
  const std::vector<Player>& players() const noexcept { return players_; }
  const Player& player(std::size_t i) const {
    if (i >= players_.size()) {
      fail(ErrorKind::kPlayerOutOfRange, "player " + std::to_string(i) + " of " +
                                             std::to_string(players_.size()));
    }
    return players_[i];
  }
  const OutcomeSpace& outcomes() const noexcept { return outcomes_; }
  OutcomeRule rule() const noexcept { return rule_; }

  /// |X_1 x ... x X_n|, saturating.
  std::uint64_t profile_count() const noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t n = 1;
    for (const auto& pl : players_) {
      if (n > kMax / pl.moves.size()) return kMax;
      n *= pl.moves.size();
    }
    return n;
  }

  void validate(const StrategyProfile& s) const {
    if (s.moves.size() != players_.size()) {
      fail(ErrorKind::kInvalidProfile, "profile has " + std::to_string(s.moves.size()) +
                                           " moves for " + std::to_string(players_.size()) +
                                           " players");
    }
    for (std::size_t i = 0; i < players_.size(); ++i) {
      if (s.moves[i] >= players_[i].moves.size()) {
        fail(ErrorKind::kInvalidProfile, "move index out of range for " + players_[i].name);
      }
    }
  }

  /// Profile from move labels, one per player.
  StrategyProfile profile(const std::vector<std::string>& labels) const {
    if (labels.size() != players_.size()) {
      fail(ErrorKind::kInvalidProfile, "profile has " + std::to_string(labels.size()) +
                                           " moves for " + std::to_string(players_.size()) +
                                           " players");
    }
    StrategyProfile s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto x = players_[i].moves.find(labels[i]);
      if (!x) {
        fail(ErrorKind::kInvalidProfile,
             "'" + labels[i] + "' is not a move of " + players_[i].name);
      }
      s.moves.push_back(*x);
    }
    return s;
  }

  /// Lexicographic position of s, last player varying fastest.
  std::uint64_t ordinal(const StrategyProfile& s) const {
    validate(s);
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < players_.size(); ++i) {
      n = n * players_[i].moves.size() + s.moves[i];
    }
    return n;
  }

  StrategyProfile profile_at(std::uint64_t ordinal) const {
    StrategyProfile s;
    s.moves.resize(players_.size());
    for (std::size_t i = players_.size(); i-- > 0;) {
      s.moves[i] = ordinal % players_[i].moves.size();
      ordinal /= players_[i].moves.size();
    }
    return s;
  }

  std::vector<std::string> labels(const StrategyProfile& s) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.moves.size(); ++i) out.push_back(players_[i].moves[s.moves[i]]);
    return out;
  }

  /// q(s).
  Outcome outcome(const StrategyProfile& s) const {
    validate(s);
    return outcome_unchecked(s);
  }

  /// The explicit table; empty for majority and identity games.
  const std::vector<Outcome>& table() const noexcept { return table_; }

  friend bool operator==(const Game& a, const Game& b) {
    return a.name_ == b.name_ && a.players_ == b.players_ && a.outcomes_ == b.outcomes_ &&
           a.rule_ == b.rule_ && a.table_ == b.table_;
  }

  Outcome outcome_unchecked(const StrategyProfile& s) const {
    switch (rule_) {
      case OutcomeRule::kTable:
        return table_[ordinal_unchecked(s)];
      case OutcomeRule::kMajority: {
        const MoveSet& moves = players_.front().moves;
        std::size_t first = 0;
        for (std::size_t i = 0; i < players_.size(); ++i) {
          if (moves[0] == players_[i].moves[s.moves[i]]) ++first;
        }
        return Outcome::atom(2 * first > players_.size() ? moves[0] : moves[1]);
      }
      case OutcomeRule::kIdentity: {
        Outcome::Tuple t;
        for (std::size_t i = 0; i < players_.size(); ++i) {
          t.push_back(players_[i].moves[s.moves[i]]);
        }
        return Outcome::tuple(std::move(t));
      }
    }
    fail(ErrorKind::kInvalidArgument, "bad outcome rule");
  }

  template <typename Fn>
  static void for_each_index(const std::vector<std::size_t>& radices, Fn&& fn) {
    std::vector<std::size_t> idx(radices.size(), 0);
    for (;;) {
      fn(idx);
      std::size_t k = radices.size();
      while (k-- > 0) {
        if (++idx[k] < radices[k]) break;
        idx[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) return;
    }
  }

 private:
  Game(std::string name, std::vector<Player> players, OutcomeSpace outcomes, OutcomeRule rule,
       std::vector<Outcome> table)
      : name_(std::move(name)),
        players_(std::move(players)),
        outcomes_(std::move(outcomes)),
        rule_(rule),
        table_(std::move(table)) {
    check_invariants();
  }

  std::uint64_t ordinal_unchecked(const StrategyProfile& s) const {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < players_.size(); ++i) {
      n = n * players_[i].moves.size() + s.moves[i];
    }
    return n;
  }

  void check_invariants() const {
    if (players_.empty()) fail(ErrorKind::kInvalidArgument, "a game needs at least one player");
    for (std::size_t i = 0; i < players_.size(); ++i) {
      if (players_[i].name.empty()) fail(ErrorKind::kInvalidArgument, "player without a name");
      for (std::size_t j = 0; j < i; ++j) {
        if (players_[i].name == players_[j].name) {
          fail(ErrorKind::kInvalidArgument, "duplicate player '" + players_[i].name + "'");
        }
      }
    }
    switch (rule_) {
      case OutcomeRule::kMajority: {
        const MoveSet& moves = players_.front().moves;
        if (players_.size() % 2 == 0) {
          fail(ErrorKind::kTypeMismatch, "majority needs an odd number of players");
        }
        if (moves.size() != 2) fail(ErrorKind::kTypeMismatch, "majority needs binary move sets");
        for (const auto& pl : players_) {
          if (!(pl.moves == moves)) {
            fail(ErrorKind::kTypeMismatch, "majority needs identical move sets");
          }
        }
        if (!(outcomes_ == OutcomeSpace::atoms(moves))) {
          fail(ErrorKind::kTypeMismatch, "majority outcomes must be the shared move set");
        }
        break;
      }
      case OutcomeRule::kIdentity: {
        if (outcomes_.kind() != OutcomeSpace::Kind::kProduct ||
            outcomes_.arity() != players_.size()) {
          fail(ErrorKind::kTypeMismatch, "identity needs the product of the move sets");
        }
        for (std::size_t i = 0; i < players_.size(); ++i) {
          if (!(outcomes_.coordinates()[i] == players_[i].moves)) {
            fail(ErrorKind::kTypeMismatch, "identity needs the product of the move sets");
          }
        }
        break;
      }
      case OutcomeRule::kTable: {
        if (table_.size() != profile_count()) {
          fail(ErrorKind::kInvalidArgument, "outcome table has " + std::to_string(table_.size()) +
                                                " entries for " +
                                                std::to_string(profile_count()) + " profiles");
        }
        for (const auto& o : table_) {
          if (!outcomes_.contains(o)) {
            fail(ErrorKind::kTypeMismatch,
                 "outcome " + to_string(o) + " is not in the outcome space");
          }
        }
        break;
      }
    }
    for (const auto& pl : players_) {
      try {
        check_compatible(pl.selection, pl.moves, outcomes_);
      } catch (const Error& e) {
        throw Error(e.kind(), "player " + pl.name + ": " + e.what());
      }
      if (may_be_empty(pl.selection)) {
        fail(ErrorKind::kTypeMismatch,
             "player " + pl.name + ": " + to_string(pl.selection) + " may select no move");
      }
    }
  }

  std::string name_;
  std::vector<Player> players_;
  OutcomeSpace outcomes_;
  OutcomeRule rule_;
  std::vector<Outcome> table_;
};

/// U_i(s) : X_i -> R, x' |-> q(s[i := x']).
inline GameContext unilateral_context(const Game& g, const StrategyProfile& s, std::size_t i) {
  g.validate(s);
  const Player& pl = g.player(i);
  StrategyProfile deviation = s;
  std::vector<Outcome> table;
  table.reserve(pl.moves.size());
  for (std::size_t x = 0; x < pl.moves.size(); ++x) {
    deviation.moves[i] = x;
    table.push_back(g.outcome_unchecked(deviation));
  }
  return GameContext(pl.moves, g.outcomes(), std::move(table));
}

struct EquilibriumCheck {
  bool holds = true;
  std::vector<std::size_t> defectors;  // player indices failing the test
};

/// q(s) in lift(e_i)(U_i(s)) for every player i.
inline EquilibriumCheck is_quantifier_equilibrium(const Game& g, const StrategyProfile& s) {
  const Outcome realized = g.outcome(s);
  EquilibriumCheck out;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const GameContext p = unilateral_context(g, s, i);
    if (!contains(outcomes_of(p, eval_selection(g.player(i).selection, p)), realized)) {
      out.holds = false;
      out.defectors.push_back(i);
    }
  }
  return out;
}

/// s_i in e_i(U_i(s)) for every player i.
inline EquilibriumCheck is_selection_equilibrium(const Game& g, const StrategyProfile& s) {
  g.validate(s);
  EquilibriumCheck out;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const GameContext p = unilateral_context(g, s, i);
    if (!contains(eval_selection(g.player(i).selection, p), s[i])) {
      out.holds = false;
      out.defectors.push_back(i);
    }
  }
  return out;
}

struct ReportRow {
  StrategyProfile profile;
  Outcome outcome;
  bool quantifier_eq = false;
  std::vector<std::size_t> quantifier_defectors;
  bool selection_eq = false;
  std::vector<std::size_t> selection_defectors;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Both equilibrium tests for one profile, sharing the unilateral contexts.
inline ReportRow evaluate_profile(const Game& g, const StrategyProfile& s) {
  g.validate(s);
  ReportRow row{s, g.outcome_unchecked(s), true, {}, true, {}};
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    const GameContext p = unilateral_context(g, s, i);
    const MoveIndexSet good = eval_selection(g.player(i).selection, p);
    if (!contains(outcomes_of(p, good), row.outcome)) {
      row.quantifier_eq = false;
      row.quantifier_defectors.push_back(i);
    }
    if (!contains(good, s[i])) {
      row.selection_eq = false;
      row.selection_defectors.push_back(i);
    }
  }
  return row;
}

struct EquilibriumReport {
  std::string game;
  std::vector<std::string> players;
  std::vector<MoveSet> moves;
  std::vector<ReportRow> rows;

  std::vector<std::string> labels(const StrategyProfile& s) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.moves.size(); ++i) out.push_back(moves[i][s.moves[i]]);
    return out;
  }

  std::vector<StrategyProfile> quantifier_equilibria() const {
    std::vector<StrategyProfile> out;
    for (const auto& r : rows) {
      if (r.quantifier_eq) out.push_back(r.profile);
    }
    return out;
  }

  std::vector<StrategyProfile> selection_equilibria() const {
    std::vector<StrategyProfile> out;
    for (const auto& r : rows) {
      if (r.selection_eq) out.push_back(r.profile);
    }
    return out;
  }

  /// Flags agree with defector lists, and selection implies quantifier.
  bool consistent() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) {
      return r.quantifier_eq == r.quantifier_defectors.empty() &&
             r.selection_eq == r.selection_defectors.empty() &&
             (!r.selection_eq || r.quantifier_eq);
    });
  }
};

struct EnumerationOptions {
  std::uint64_t max_profiles = kDefaultProfileBudget;
  unsigned threads = 1;
};

inline EquilibriumReport make_report_header(const Game& g) {
  EquilibriumReport report;
  report.game = g.name();
  for (const auto& pl : g.players()) {
    report.players.push_back(pl.name);
    report.moves.push_back(pl.moves);
  }
  return report;
}

/// Single-row report for one profile.
inline EquilibriumReport report_for_profile(const Game& g, const StrategyProfile& s) {
  EquilibriumReport report = make_report_header(g);
  report.rows.push_back(evaluate_profile(g, s));
  return report;
}

/// One row per profile, in lexicographic profile order. With several threads
/// the profile range is split into contiguous blocks and merged in order, so
/// the report does not depend on the thread count.
inline EquilibriumReport enumerate_equilibria(const Game& g, const EnumerationOptions& options = {}) {
  const std::uint64_t total = g.profile_count();
  if (total > options.max_profiles) {
    fail(ErrorKind::kBudgetExceeded, std::to_string(total) + " profiles exceed the budget of " +
                                         std::to_string(options.max_profiles));
  }
  EquilibriumReport report = make_report_header(g);
  report.rows.resize(total, ReportRow{StrategyProfile{}, Outcome::atom("?"), false, {}, false, {}});

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t n = begin; n < end; ++n) {
      report.rows[n] = evaluate_profile(g, g.profile_at(n));
    }
  };

  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.threads, total));
  if (workers == 1) {
    run(0, total);
    return report;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t block = (total + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, w * block);
      const std::uint64_t end = std::min(total, begin + block);
      pool.emplace_back([&, w, begin, end] {
        try {
          run(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

}  // namespace hog
