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

// Exhaustive law checks over every context p : X -> R of a finite shape.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hog/context.hpp"
#include "hog/error.hpp"
#include "hog/selection.hpp"

namespace hog {

inline constexpr std::uint64_t kDefaultContextBudget = 1'000'000;

/// |R|^|X|, saturating.
inline std::uint64_t context_count(const MoveSet& domain, const OutcomeSpace& codomain) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = codomain.cardinality();
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    if (r != 0 && n > kMax / r) return kMax;
    n *= r;
  }
  return n;
}

/// Calls visit(p) for every context domain -> codomain in lexicographic order
/// of outcome ordinals (first move most significant). visit returns false to
/// stop early. Throws BudgetExceeded if there are more than budget contexts.
template <typename Visitor>
void for_each_context(const MoveSet& domain, const OutcomeSpace& codomain, std::uint64_t budget,
                      Visitor&& visit) {
  const std::uint64_t total = context_count(domain, codomain);
  if (total > budget) {
    fail(ErrorKind::kBudgetExceeded, std::to_string(codomain.cardinality()) + "^" +
                                         std::to_string(domain.size()) +
                                         " contexts exceed the budget of " +
                                         std::to_string(budget));
  }
  const std::uint64_t radix = codomain.cardinality();
  std::vector<Outcome> values;
  values.reserve(radix);
  for (std::uint64_t r = 0; r < radix; ++r) values.push_back(codomain.at(r));

  std::vector<std::uint64_t> digits(domain.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<Outcome> table;
    table.reserve(digits.size());
    for (std::uint64_t d : digits) table.push_back(values[d]);
    if (!visit(GameContext(domain, codomain, std::move(table)))) return;
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < radix) break;
      digits[k] = 0;
    }
  }
}

struct ClosednessWitness {
  GameContext context;
  std::size_t good;      // in e(p)
  std::size_t excluded;  // same outcome as good, but not in e(p)
};

struct ClosednessResult {
  bool closed = true;
  std::optional<ClosednessWitness> witness;
  std::uint64_t contexts_checked = 0;
};

/// Decides whether x in e(p) and p(x) = p(x') imply x' in e(p) on every
/// context. On failure the first offending context is returned.
inline ClosednessResult is_closed(const SelectionFunction& e, const MoveSet& domain,
                                  const OutcomeSpace& codomain,
                                  std::uint64_t budget = kDefaultContextBudget) {
  check_compatible(e, domain, codomain);
  ClosednessResult result;
  for_each_context(domain, codomain, budget, [&](const GameContext& p) {
    ++result.contexts_checked;
    const MoveIndexSet good = eval_selection(e, p);
    for (std::size_t x : good) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (p.ordinal(x) == p.ordinal(y) && !contains(good, y)) {
          result.closed = false;
          result.witness = ClosednessWitness{p, x, y};
          return false;
        }
      }
    }
    return true;
  });
  return result;
}

struct AttainmentWitness {
  GameContext context;
  std::size_t move;  // in e(p) while p(move) is not in f(p)
};

struct AttainmentResult {
  bool attains = true;
  std::optional<AttainmentWitness> witness;
  std::uint64_t contexts_checked = 0;
};

/// Decides whether x in e(p) implies p(x) in f(p) on every context.
inline AttainmentResult attains(const SelectionFunction& e, const Quantifier& f,
                                const MoveSet& domain, const OutcomeSpace& codomain,
                                std::uint64_t budget = kDefaultContextBudget) {
  check_compatible(e, domain, codomain);
  check_compatible(f, domain, codomain);
  AttainmentResult result;
  for_each_context(domain, codomain, budget, [&](const GameContext& p) {
    ++result.contexts_checked;
    const OutcomeSet good = eval_quantifier(f, p);
    for (std::size_t x : eval_selection(e, p)) {
      if (!contains(good, p(x))) {
        result.attains = false;
        result.witness = AttainmentWitness{p, x};
        return false;
      }
    }
    return true;
  });
  return result;
}

/// Freezes e into an explicit table over every context of the given shape.
inline SelectionFunction tabulate(const SelectionFunction& e, const MoveSet& domain,
                                  const OutcomeSpace& codomain,
                                  std::uint64_t budget = kDefaultContextBudget) {
  check_compatible(e, domain, codomain);
  std::map<std::vector<std::uint64_t>, MoveIndexSet> entries;
  for_each_context(domain, codomain, budget, [&](const GameContext& p) {
    std::vector<std::uint64_t> key(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) key[x] = p.ordinal(x);
    entries.emplace(std::move(key), eval_selection(e, p));
    return true;
  });
  return make_table(domain, codomain, std::move(entries));
}

}  // namespace hog
