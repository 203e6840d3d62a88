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

// Small builders shared by the unit tests.

#pragma once

#include <string>
#include <vector>

#include "hog.hpp"

namespace hog::testing {

inline MoveSet moves(std::vector<std::string> labels) { return MoveSet(std::move(labels)); }

inline OutcomeSpace atoms(std::vector<std::string> labels) {
  return OutcomeSpace::atoms(MoveSet(std::move(labels)));
}

/// Atom-valued context; values[k] is the outcome of the k-th move.
inline GameContext atom_context(std::vector<std::string> domain, std::vector<std::string> codomain,
                                const std::vector<std::string>& values) {
  std::vector<Outcome> table;
  for (const auto& v : values) table.push_back(Outcome::atom(v));
  return GameContext(MoveSet(std::move(domain)), atoms(std::move(codomain)), std::move(table));
}

/// Context into the square product {labels} x {labels}.
inline GameContext pair_context(std::vector<std::string> labels,
                                const std::vector<std::vector<std::string>>& values) {
  MoveSet m(labels);
  std::vector<Outcome> table;
  for (const auto& v : values) table.push_back(Outcome::tuple(v));
  return GameContext(m, OutcomeSpace::product({m, m}), std::move(table));
}

/// Context into integer payoff vectors over the given value set.
inline GameContext payoff_context(std::vector<std::string> domain, std::size_t dim,
                                  const std::vector<int>& value_set,
                                  const std::vector<std::vector<int>>& values) {
  std::vector<Rational> vs(value_set.begin(), value_set.end());
  std::vector<Outcome> table;
  for (const auto& v : values) table.push_back(Outcome::payoff(Outcome::Payoff(v.begin(), v.end())));
  return GameContext(MoveSet(std::move(domain)), OutcomeSpace::vector(dim, vs), std::move(table));
}

inline std::vector<std::string> select(const SelectionFunction& e, const GameContext& p) {
  return labels_of(p.domain(), eval_selection(e, p));
}

inline std::vector<std::string> quantify(const Quantifier& f, const GameContext& p) {
  std::vector<std::string> out;
  for (const auto& o : eval_quantifier(f, p)) out.push_back(to_string(o));
  return out;
}

using Labels = std::vector<std::string>;

}  // namespace hog::testing
