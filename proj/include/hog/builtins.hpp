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

// The catalog of named example games, and the hand-encoded payoff matrices
// that classical game theory would use for the same situations.

#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hog/context.hpp"
#include "hog/error.hpp"
#include "hog/game.hpp"
#include "hog/payoff.hpp"
#include "hog/selection.hpp"

namespace hog {

struct BuiltinEntry {
  std::string name;
  std::string description;
  std::function<Game()> make;
};

namespace detail {

inline MoveSet candidates() { return MoveSet{"A", "B"}; }

inline Game three_judges(std::string name, SelectionFunction j1, SelectionFunction j2,
                         SelectionFunction j3) {
  return Game::majority(std::move(name), {Player{"J1", candidates(), std::move(j1)},
                                          Player{"J2", candidates(), std::move(j2)},
                                          Player{"J3", candidates(), std::move(j3)}});
}

inline SelectionFunction prefers_a() { return make_argmax_order(PreferenceOrder({"A", "B"})); }
inline SelectionFunction prefers_b() { return make_argmax_order(PreferenceOrder({"B", "A"})); }

// Wife is the first coordinate, husband the second.
inline std::vector<Player> couple() {
  MoveSet events{"B", "F"};
  return {Player{"W", events, make_lex(make_coord(), make_target_coord(1, "B"))},
          Player{"H", events, make_lex(make_coord(), make_target_coord(2, "F"))}};
}

inline Game keynes(std::string name) {
  return three_judges(std::move(name), prefers_a(), make_fix(), make_fix());
}

}  // namespace detail

/// Stable order; names double as CLI identifiers.
inline const std::vector<BuiltinEntry>& builtin_catalog() {
  static const std::vector<BuiltinEntry> catalog = {
      {"voting-classical",
       "Three judges, majority vote over A/B; J1 and J2 prefer A, J3 prefers B.",
       [] {
         return detail::three_judges("voting-classical", detail::prefers_a(), detail::prefers_a(),
                                     detail::prefers_b());
       }},
      {"voting-keynes",
       "Beauty contest: J1 prefers A, J2 and J3 want to vote for the winner (fix).",
       [] { return detail::keynes("voting-keynes"); }},
      {"voting-allfix", "All three judges want to vote for the winner (fix, fix, fix).",
       [] {
         return detail::three_judges("voting-allfix", make_fix(), make_fix(), make_fix());
       }},
      {"voting-allpunk", "All three judges want to be in the minority (nonfix, nonfix, nonfix).",
       [] {
         return detail::three_judges("voting-allpunk", make_nonfix(), make_nonfix(),
                                     make_nonfix());
       }},
      {"meeting-ny",
       "Two strangers pick E or G and only want to meet; each fixes on the other's coordinate.",
       [] {
         MoveSet places{"E", "G"};
         return Game::identity("meeting-ny", {Player{"P1", places, make_fix_proj(2)},
                                              Player{"P2", places, make_fix_proj(1)}});
       }},
      {"matching-pennies", "P1 wants to match P2's penny, P2 wants to differ (fix vs nonfix).",
       [] {
         MoveSet sides{"H", "T"};
         return Game::identity("matching-pennies", {Player{"P1", sides, make_fix_proj(2)},
                                                    Player{"P2", sides, make_nonfix_proj(1)}});
       }},
      {"bos-lex",
       "Battle of the sexes: be together first, then W wants ballet and H football.",
       [] { return Game::identity("bos-lex", detail::couple()); }},
      {"bos-agreement",
       "bos-lex, except that H alone at the football goes to the ballet instead.",
       [] {
         auto players = detail::couple();
         MoveSet events = players.front().moves;
         return Game::tabulated(
             "bos-agreement", players, OutcomeSpace::product({events, events}),
             [&](const StrategyProfile& s) {
               std::string w = events[s[0]];
               std::string h = events[s[1]];
               if (w == "B" && h == "F") h = "B";
               return Outcome::tuple({w, h});
             });
       }},
      {"voting-intro",
       "The beauty contest as first posed; same game as voting-keynes.",
       [] { return detail::keynes("voting-intro"); }},
  };
  return catalog;
}

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& e : builtin_catalog()) names.push_back(e.name);
  return names;
}

inline Game builtin(std::string_view name) {
  for (const auto& e : builtin_catalog()) {
    if (e.name == name) return e.make();
  }
  fail(ErrorKind::kUnknownBuiltin, "no builtin game named '" + std::string(name) + "'");
}

namespace detail {

// Three-judge payoffs laid out as two 2x2 blocks, one per vote of J3; rows
// are J1's vote and columns J2's: cells[4 * x3 + 2 * x1 + x2] = (u1, u2, u3).
using VotingBlocks = std::array<std::array<int, 3>, 8>;

inline PayoffMatrix voting_matrix(const VotingBlocks& blocks) {
  std::vector<PayoffMatrix::Payoffs> cells;
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) {
      for (int x3 = 0; x3 < 2; ++x3) {
        const auto& u = blocks[4 * x3 + 2 * x1 + x2];
        cells.push_back({Rational(u[0]), Rational(u[1]), Rational(u[2])});
      }
    }
  }
  return PayoffMatrix({"J1", "J2", "J3"}, {candidates(), candidates(), candidates()},
                      std::move(cells));
}

inline PayoffMatrix two_by_two(std::vector<std::string> players, MoveSet moves,
                               std::array<std::array<int, 2>, 4> cells) {
  std::vector<PayoffMatrix::Payoffs> out;
  for (const auto& c : cells) out.push_back({Rational(c[0]), Rational(c[1])});
  return PayoffMatrix(std::move(players), {moves, moves}, std::move(out));
}

}  // namespace detail

/// Payoff-matrix encodings of the catalog situations. "bos" is the
/// utility version of the battle of the sexes.
inline const std::vector<std::string>& builtin_matrix_names() {
  static const std::vector<std::string> names = {
      "voting-intro", "voting-classical", "voting-allfix", "voting-allpunk",
      "meeting-ny",   "matching-pennies", "bos"};
  return names;
}

inline PayoffMatrix builtin_payoff_matrix(std::string_view name) {
  using detail::VotingBlocks;
  if (name == "voting-intro") {
    return detail::voting_matrix(VotingBlocks{{
        {1, 1, 1}, {1, 0, 1},
        {1, 1, 1}, {0, 1, 0},
        {1, 1, 0}, {0, 1, 1},
        {0, 0, 1}, {0, 1, 1},
    }});
  }
  if (name == "voting-classical") {
    return detail::voting_matrix(VotingBlocks{{
        {1, 1, 0}, {1, 1, 0},
        {1, 1, 0}, {0, 0, 1},
        {1, 1, 0}, {0, 0, 1},
        {0, 0, 1}, {0, 0, 1},
    }});
  }
  if (name == "voting-allfix") {
    return detail::voting_matrix(VotingBlocks{{
        {1, 1, 1}, {1, 0, 1},
        {0, 1, 1}, {1, 1, 0},
        {1, 1, 0}, {0, 1, 1},
        {1, 0, 1}, {1, 1, 1},
    }});
  }
  if (name == "voting-allpunk") {
    // In BAB only J2 is in the minority, so the cell is (0, 1, 0).
    return detail::voting_matrix(VotingBlocks{{
        {0, 0, 0}, {0, 1, 0},
        {1, 0, 0}, {0, 0, 1},
        {0, 0, 1}, {1, 0, 0},
        {0, 1, 0}, {0, 0, 0},
    }});
  }
  if (name == "meeting-ny") {
    return detail::two_by_two({"P1", "P2"}, MoveSet{"E", "G"},
                              {{{1, 1}, {0, 0}, {0, 0}, {1, 1}}});
  }
  if (name == "matching-pennies") {
    return detail::two_by_two({"P1", "P2"}, MoveSet{"H", "T"},
                              {{{1, -1}, {-1, 1}, {-1, 1}, {1, -1}}});
  }
  if (name == "bos") {
    return detail::two_by_two({"W", "H"}, MoveSet{"B", "F"}, {{{3, 2}, {1, 1}, {0, 0}, {2, 3}}});
  }
  fail(ErrorKind::kUnknownBuiltin, "no builtin payoff matrix named '" + std::string(name) + "'");
}

}  // namespace hog
