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

// Selection functions (X -> R) -> P(X) and quantifiers (X -> R) -> P(R).
//
// Both are immutable expression trees over a fixed palette of constructors
// and are evaluated against a GameContext. Results are canonical: move sets
// are ascending move indices, outcome sets are in outcome-space order.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hog/context.hpp"
#include "hog/error.hpp"

namespace hog {

/// A strict total order on atom outcomes, stored best first.
class PreferenceOrder {
 public:
  explicit PreferenceOrder(std::vector<std::string> best_first)
      : ranking_(std::move(best_first)) {}

  /// From a chain written worst first, as in "B < A".
  static PreferenceOrder ascending(std::vector<std::string> worst_first) {
    std::reverse(worst_first.begin(), worst_first.end());
    return PreferenceOrder(std::move(worst_first));
  }

  const std::vector<std::string>& ranking() const noexcept { return ranking_.labels(); }

  /// 0 is the most preferred outcome.
  std::optional<std::size_t> rank(std::string_view atom) const { return ranking_.find(atom); }

  bool covers(const MoveSet& atoms) const { return ranking_.same_labels(atoms); }

  friend bool operator==(const PreferenceOrder&, const PreferenceOrder&) = default;

 private:
  MoveSet ranking_;
};

struct SelectionExpr;
struct QuantifierExpr;

class SelectionFunction {
 public:
  explicit SelectionFunction(SelectionExpr expr);
  const SelectionExpr& expr() const noexcept { return *expr_; }
  friend bool operator==(const SelectionFunction& a, const SelectionFunction& b);

 private:
  std::shared_ptr<const SelectionExpr> expr_;
};

class Quantifier {
 public:
  explicit Quantifier(QuantifierExpr expr);
  const QuantifierExpr& expr() const noexcept { return *expr_; }
  friend bool operator==(const Quantifier& a, const Quantifier& b);

 private:
  std::shared_ptr<const QuantifierExpr> expr_;
};

namespace expr {

// Selection function constructors. Coordinates are 1-based.
struct ArgmaxOrder {
  PreferenceOrder order;
  friend bool operator==(const ArgmaxOrder&, const ArgmaxOrder&) = default;
};
struct ArgmaxCoord {
  std::size_t coord;
  friend bool operator==(const ArgmaxCoord&, const ArgmaxCoord&) = default;
};
struct Fix {
  friend bool operator==(const Fix&, const Fix&) = default;
};
struct FixProj {
  std::size_t coord;
  friend bool operator==(const FixProj&, const FixProj&) = default;
};
struct NonFix {
  friend bool operator==(const NonFix&, const NonFix&) = default;
};
struct NonFixProj {
  std::size_t coord;
  friend bool operator==(const NonFixProj&, const NonFixProj&) = default;
};
struct Coord {
  friend bool operator==(const Coord&, const Coord&) = default;
};
struct TargetCoord {
  std::size_t coord;
  std::string value;
  friend bool operator==(const TargetCoord&, const TargetCoord&) = default;
};
struct Lex {
  SelectionFunction primary;
  SelectionFunction secondary;
  friend bool operator==(const Lex&, const Lex&) = default;
};
/// Explicit tabulation over one (X, R) shape, keyed by context ordinals.
struct Table {
  MoveSet domain;
  OutcomeSpace codomain;
  std::map<std::vector<std::uint64_t>, MoveIndexSet> entries;
  friend bool operator==(const Table&, const Table&) = default;
};
/// The overline of a quantifier: { x | p(x) in f(p) }.
struct Preimage {
  Quantifier quantifier;
  friend bool operator==(const Preimage&, const Preimage&) = default;
};

// Quantifier constructors.
struct MaxOrder {
  PreferenceOrder order;
  friend bool operator==(const MaxOrder&, const MaxOrder&) = default;
};
struct MaxCoord {
  std::size_t coord;
  friend bool operator==(const MaxCoord&, const MaxCoord&) = default;
};
struct FixQ {
  friend bool operator==(const FixQ&, const FixQ&) = default;
};
/// The overline of a selection function: { p(x) | x in e(p) }.
struct Lifted {
  SelectionFunction selection;
  friend bool operator==(const Lifted&, const Lifted&) = default;
};

}  // namespace expr

struct SelectionExpr
    : std::variant<expr::ArgmaxOrder, expr::ArgmaxCoord, expr::Fix, expr::FixProj, expr::NonFix,
                   expr::NonFixProj, expr::Coord, expr::TargetCoord, expr::Lex, expr::Table,
                   expr::Preimage> {
  using variant::variant;
};

struct QuantifierExpr
    : std::variant<expr::MaxOrder, expr::MaxCoord, expr::FixQ, expr::Lifted> {
  using variant::variant;
};

inline SelectionFunction::SelectionFunction(SelectionExpr expr)
    : expr_(std::make_shared<const SelectionExpr>(std::move(expr))) {}

inline bool operator==(const SelectionFunction& a, const SelectionFunction& b) {
  if (a.expr_ == b.expr_) return true;
  return static_cast<const SelectionExpr::variant&>(*a.expr_) ==
         static_cast<const SelectionExpr::variant&>(*b.expr_);
}

inline Quantifier::Quantifier(QuantifierExpr expr)
    : expr_(std::make_shared<const QuantifierExpr>(std::move(expr))) {}

inline bool operator==(const Quantifier& a, const Quantifier& b) {
  if (a.expr_ == b.expr_) return true;
  return static_cast<const QuantifierExpr::variant&>(*a.expr_) ==
         static_cast<const QuantifierExpr::variant&>(*b.expr_);
}

// ---------------------------------------------------------------------------
// Palette.

inline SelectionFunction make_argmax_order(PreferenceOrder order) {
  return SelectionFunction(expr::ArgmaxOrder{std::move(order)});
}

inline void require_coordinate_index(std::size_t i) {
  if (i < 1) fail(ErrorKind::kCoordinateOutOfRange, "coordinates are numbered from 1");
}

inline SelectionFunction make_argmax_coord(std::size_t i) {
  require_coordinate_index(i);
  return SelectionFunction(expr::ArgmaxCoord{i});
}

inline SelectionFunction make_fix() { return SelectionFunction(expr::Fix{}); }

inline SelectionFunction make_fix_proj(std::size_t i) {
  require_coordinate_index(i);
  return SelectionFunction(expr::FixProj{i});
}

inline SelectionFunction make_nonfix() { return SelectionFunction(expr::NonFix{}); }

inline SelectionFunction make_nonfix_proj(std::size_t i) {
  require_coordinate_index(i);
  return SelectionFunction(expr::NonFixProj{i});
}

inline SelectionFunction make_coord() { return SelectionFunction(expr::Coord{}); }

inline SelectionFunction make_target_coord(std::size_t i, std::string value) {
  require_coordinate_index(i);
  return SelectionFunction(expr::TargetCoord{i, std::move(value)});
}

inline SelectionFunction make_lex(SelectionFunction primary, SelectionFunction secondary) {
  return SelectionFunction(expr::Lex{std::move(primary), std::move(secondary)});
}

inline SelectionFunction make_table(MoveSet domain, OutcomeSpace codomain,
                                    std::map<std::vector<std::uint64_t>, MoveIndexSet> entries) {
  for (auto& [key, moves] : entries) {
    if (key.size() != domain.size()) {
      fail(ErrorKind::kInvalidArgument, "table key does not match the domain size");
    }
    for (std::uint64_t r : key) {
      if (r >= codomain.cardinality()) {
        fail(ErrorKind::kInvalidArgument, "table key holds an ordinal outside the codomain");
      }
    }
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
    if (!moves.empty() && moves.back() >= domain.size()) {
      fail(ErrorKind::kInvalidArgument, "table entry names a move outside the domain");
    }
  }
  return SelectionFunction(
      expr::Table{std::move(domain), std::move(codomain), std::move(entries)});
}

inline Quantifier make_max_order(PreferenceOrder order) {
  return Quantifier(expr::MaxOrder{std::move(order)});
}

inline Quantifier make_max_coord(std::size_t i) {
  require_coordinate_index(i);
  return Quantifier(expr::MaxCoord{i});
}

inline Quantifier make_fix_quantifier() { return Quantifier(expr::FixQ{}); }

/// The smallest quantifier attained by e.
inline Quantifier lift_selection(SelectionFunction e) {
  return Quantifier(expr::Lifted{std::move(e)});
}

/// The selection function choosing every move whose outcome f deems good.
inline SelectionFunction lift_quantifier(Quantifier f) {
  return SelectionFunction(expr::Preimage{std::move(f)});
}

/// The double overline of e; extensive, and equal to e exactly when e is closed.
inline SelectionFunction closure_of(SelectionFunction e) {
  return lift_quantifier(lift_selection(std::move(e)));
}

// ---------------------------------------------------------------------------
// Shape checks. Each throws TypeMismatch, CoordinateOutOfRange or
// IncompleteOrder when a constructor cannot be applied to contexts X -> R.

namespace detail {

inline void require_atoms_equal_moves(const MoveSet& domain, const OutcomeSpace& codomain,
                                      const char* what) {
  if (codomain.kind() != OutcomeSpace::Kind::kAtoms ||
      !codomain.atom_labels().same_labels(domain)) {
    fail(ErrorKind::kTypeMismatch,
         std::string(what) + " needs atom outcomes equal to the move set");
  }
}

inline void require_coordinate(const OutcomeSpace& codomain, OutcomeSpace::Kind kind,
                               std::size_t i, const char* what) {
  if (codomain.kind() != kind) {
    fail(ErrorKind::kTypeMismatch,
         std::string(what) + (kind == OutcomeSpace::Kind::kProduct
                                  ? " needs a product outcome space"
                                  : " needs a vector outcome space"));
  }
  if (i < 1 || i > codomain.arity()) {
    fail(ErrorKind::kCoordinateOutOfRange,
         std::string(what) + ": coordinate " + std::to_string(i) + " outside 1.." +
             std::to_string(codomain.arity()));
  }
}

inline void require_projected_moves(const MoveSet& domain, const OutcomeSpace& codomain,
                                    std::size_t i, const char* what) {
  require_coordinate(codomain, OutcomeSpace::Kind::kProduct, i, what);
  if (!codomain.coordinates()[i - 1].same_labels(domain)) {
    fail(ErrorKind::kTypeMismatch, std::string(what) + ": coordinate " + std::to_string(i) +
                                       " does not range over the move set");
  }
}

inline void require_order(const PreferenceOrder& order, const OutcomeSpace& codomain,
                          const char* what) {
  if (codomain.kind() != OutcomeSpace::Kind::kAtoms) {
    fail(ErrorKind::kTypeMismatch, std::string(what) + " needs atom outcomes");
  }
  if (!order.covers(codomain.atom_labels())) {
    fail(ErrorKind::kIncompleteOrder,
         std::string(what) + ": preference order does not rank every outcome exactly once");
  }
}

}  // namespace detail

inline void check_compatible(const Quantifier& f, const MoveSet& domain, const OutcomeSpace& codomain);

/// Throws unless e can be evaluated on every context domain -> codomain.
inline void check_compatible(const SelectionFunction& e, const MoveSet& domain,
                             const OutcomeSpace& codomain) {
  using K = OutcomeSpace::Kind;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::ArgmaxOrder>) {
          detail::require_order(node.order, codomain, "argmax(order)");
        } else if constexpr (std::is_same_v<T, expr::ArgmaxCoord>) {
          detail::require_coordinate(codomain, K::kVector, node.coord, "argmax(coord)");
        } else if constexpr (std::is_same_v<T, expr::Fix>) {
          detail::require_atoms_equal_moves(domain, codomain, "fix");
        } else if constexpr (std::is_same_v<T, expr::NonFix>) {
          detail::require_atoms_equal_moves(domain, codomain, "nonfix");
        } else if constexpr (std::is_same_v<T, expr::FixProj>) {
          detail::require_projected_moves(domain, codomain, node.coord, "fix(coord)");
        } else if constexpr (std::is_same_v<T, expr::NonFixProj>) {
          detail::require_projected_moves(domain, codomain, node.coord, "nonfix(coord)");
        } else if constexpr (std::is_same_v<T, expr::Coord>) {
          if (codomain.kind() != K::kProduct || codomain.arity() < 2) {
            fail(ErrorKind::kTypeMismatch, "coord needs a product outcome space of arity >= 2");
          }
        } else if constexpr (std::is_same_v<T, expr::TargetCoord>) {
          detail::require_coordinate(codomain, K::kProduct, node.coord, "target");
          if (!codomain.coordinates()[node.coord - 1].contains(node.value)) {
            fail(ErrorKind::kTypeMismatch, "target: '" + node.value + "' is not a value of coordinate " +
                                               std::to_string(node.coord));
          }
        } else if constexpr (std::is_same_v<T, expr::Lex>) {
          check_compatible(node.primary, domain, codomain);
          check_compatible(node.secondary, domain, codomain);
        } else if constexpr (std::is_same_v<T, expr::Table>) {
          if (!(node.domain == domain) || !(node.codomain == codomain)) {
            fail(ErrorKind::kTypeMismatch, "table selection is defined on a different shape");
          }
        } else if constexpr (std::is_same_v<T, expr::Preimage>) {
          check_compatible(node.quantifier, domain, codomain);
        }
      },
      e.expr());
}

inline void check_compatible(const Quantifier& f, const MoveSet& domain,
                             const OutcomeSpace& codomain) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::MaxOrder>) {
          detail::require_order(node.order, codomain, "max(order)");
        } else if constexpr (std::is_same_v<T, expr::MaxCoord>) {
          detail::require_coordinate(codomain, OutcomeSpace::Kind::kVector, node.coord,
                                     "max(coord)");
        } else if constexpr (std::is_same_v<T, expr::FixQ>) {
          detail::require_atoms_equal_moves(domain, codomain, "fix quantifier");
        } else if constexpr (std::is_same_v<T, expr::Lifted>) {
          check_compatible(node.selection, domain, codomain);
        }
      },
      f.expr());
}

/// True when e can evaluate to the empty set on some compatible context.
/// Only such expressions are barred from being used as a player's goal.
inline bool may_be_empty(const SelectionFunction& e) {
  return std::visit(
      [](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::TargetCoord>) {
          return true;
        } else if constexpr (std::is_same_v<T, expr::Table>) {
          return std::any_of(node.entries.begin(), node.entries.end(),
                             [](const auto& kv) { return kv.second.empty(); });
        } else {
          return false;
        }
      },
      e.expr());
}

// ---------------------------------------------------------------------------
// Evaluation.

inline OutcomeSet eval_quantifier(const Quantifier& f, const GameContext& p);

namespace detail {

template <typename Pred>
MoveIndexSet filter_moves(const GameContext& p, Pred pred) {
  MoveIndexSet out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (pred(x)) out.push_back(x);
  }
  return out;
}

inline MoveIndexSet or_all(MoveIndexSet set, const GameContext& p) {
  return set.empty() ? p.domain().all() : set;
}

inline std::size_t best_rank(const PreferenceOrder& order, const GameContext& p,
                             std::vector<std::size_t>& ranks) {
  ranks.resize(p.size());
  std::size_t best = order.ranking().size();
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto r = order.rank(p(x).as_atom());
    if (!r) {
      fail(ErrorKind::kIncompleteOrder,
           "outcome '" + p(x).as_atom() + "' is missing from the preference order");
    }
    ranks[x] = *r;
    best = std::min(best, *r);
  }
  return best;
}

inline Rational coord_max(const GameContext& p, std::size_t i, std::vector<Rational>& column) {
  column.resize(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    column[x] = std::get<Rational>(p.codomain().project(p(x), i));
  }
  return *std::max_element(column.begin(), column.end());
}

inline const std::string& projected_label(const GameContext& p, std::size_t x, std::size_t i) {
  return p(x).as_tuple()[i - 1];
}

}  // namespace detail

/// e(p). Nonempty for every palette constructor except a bare target(...).
inline MoveIndexSet eval_selection(const SelectionFunction& e, const GameContext& p) {
  using K = OutcomeSpace::Kind;
  const MoveSet& domain = p.domain();
  const OutcomeSpace& codomain = p.codomain();
  return std::visit(
      [&](const auto& node) -> MoveIndexSet {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::ArgmaxOrder>) {
          if (codomain.kind() != K::kAtoms) {
            fail(ErrorKind::kTypeMismatch, "argmax(order) needs atom outcomes");
          }
          std::vector<std::size_t> ranks;
          std::size_t best = detail::best_rank(node.order, p, ranks);
          return detail::filter_moves(p, [&](std::size_t x) { return ranks[x] == best; });
        } else if constexpr (std::is_same_v<T, expr::ArgmaxCoord>) {
          detail::require_coordinate(codomain, K::kVector, node.coord, "argmax(coord)");
          std::vector<Rational> column;
          Rational best = detail::coord_max(p, node.coord, column);
          return detail::filter_moves(p, [&](std::size_t x) { return column[x] == best; });
        } else if constexpr (std::is_same_v<T, expr::Fix>) {
          detail::require_atoms_equal_moves(domain, codomain, "fix");
          return detail::or_all(
              detail::filter_moves(p, [&](std::size_t x) { return p(x).as_atom() == domain[x]; }),
              p);
        } else if constexpr (std::is_same_v<T, expr::NonFix>) {
          detail::require_atoms_equal_moves(domain, codomain, "nonfix");
          return detail::or_all(
              detail::filter_moves(p, [&](std::size_t x) { return p(x).as_atom() != domain[x]; }),
              p);
        } else if constexpr (std::is_same_v<T, expr::FixProj>) {
          detail::require_projected_moves(domain, codomain, node.coord, "fix(coord)");
          return detail::or_all(detail::filter_moves(p,
                                                     [&](std::size_t x) {
                                                       return detail::projected_label(
                                                                  p, x, node.coord) == domain[x];
                                                     }),
                                p);
        } else if constexpr (std::is_same_v<T, expr::NonFixProj>) {
          detail::require_projected_moves(domain, codomain, node.coord, "nonfix(coord)");
          return detail::or_all(detail::filter_moves(p,
                                                     [&](std::size_t x) {
                                                       return detail::projected_label(
                                                                  p, x, node.coord) != domain[x];
                                                     }),
                                p);
        } else if constexpr (std::is_same_v<T, expr::Coord>) {
          if (codomain.kind() != K::kProduct || codomain.arity() < 2) {
            fail(ErrorKind::kTypeMismatch, "coord needs a product outcome space of arity >= 2");
          }
          return detail::or_all(detail::filter_moves(p,
                                                     [&](std::size_t x) {
                                                       const auto& t = p(x).as_tuple();
                                                       return t[0] == t[1];
                                                     }),
                                p);
        } else if constexpr (std::is_same_v<T, expr::TargetCoord>) {
          detail::require_coordinate(codomain, K::kProduct, node.coord, "target");
          return detail::filter_moves(p, [&](std::size_t x) {
            return detail::projected_label(p, x, node.coord) == node.value;
          });
        } else if constexpr (std::is_same_v<T, expr::Lex>) {
          MoveIndexSet primary = eval_selection(node.primary, p);
          MoveIndexSet secondary = eval_selection(node.secondary, p);
          MoveIndexSet both;
          std::set_intersection(primary.begin(), primary.end(), secondary.begin(),
                                secondary.end(), std::back_inserter(both));
          if (!both.empty()) return both;
          return detail::or_all(std::move(primary), p);
        } else if constexpr (std::is_same_v<T, expr::Table>) {
          if (!(node.domain == domain) || !(node.codomain == codomain)) {
            fail(ErrorKind::kTypeMismatch, "table selection is defined on a different shape");
          }
          std::vector<std::uint64_t> key(p.size());
          for (std::size_t x = 0; x < p.size(); ++x) key[x] = p.ordinal(x);
          auto it = node.entries.find(key);
          if (it == node.entries.end()) {
            fail(ErrorKind::kInvalidArgument, "table selection has no entry for " + to_string(p));
          }
          return it->second;
        } else if constexpr (std::is_same_v<T, expr::Preimage>) {
          OutcomeSet good = eval_quantifier(node.quantifier, p);
          return detail::filter_moves(p, [&](std::size_t x) { return contains(good, p(x)); });
        }
      },
      e.expr());
}

/// f(p) in canonical outcome order.
inline OutcomeSet eval_quantifier(const Quantifier& f, const GameContext& p) {
  using K = OutcomeSpace::Kind;
  const OutcomeSpace& codomain = p.codomain();
  return std::visit(
      [&](const auto& node) -> OutcomeSet {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::MaxOrder>) {
          if (codomain.kind() != K::kAtoms) {
            fail(ErrorKind::kTypeMismatch, "max(order) needs atom outcomes");
          }
          std::vector<std::size_t> ranks;
          std::size_t best = detail::best_rank(node.order, p, ranks);
          return {Outcome::atom(node.order.ranking()[best])};
        } else if constexpr (std::is_same_v<T, expr::MaxCoord>) {
          detail::require_coordinate(codomain, K::kVector, node.coord, "max(coord)");
          std::vector<Rational> column;
          Rational best = detail::coord_max(p, node.coord, column);
          return outcomes_of(
              p, detail::filter_moves(p, [&](std::size_t x) { return column[x] == best; }));
        } else if constexpr (std::is_same_v<T, expr::FixQ>) {
          return outcomes_of(p, eval_selection(make_fix(), p));
        } else if constexpr (std::is_same_v<T, expr::Lifted>) {
          return outcomes_of(p, eval_selection(node.selection, p));
        }
      },
      f.expr());
}

// ---------------------------------------------------------------------------
// Display. Palette constructors print in the .hog expression syntax.

inline std::string to_string(const Quantifier& f);

inline std::string to_string(const SelectionFunction& e) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::ArgmaxOrder>) {
          std::string s = "argmax(order: ";
          const auto& r = node.order.ranking();
          for (std::size_t k = r.size(); k-- > 0;) {
            s += r[k];
            if (k) s += " < ";
          }
          return s + ")";
        } else if constexpr (std::is_same_v<T, expr::ArgmaxCoord>) {
          return "argmax(coord: " + std::to_string(node.coord) + ")";
        } else if constexpr (std::is_same_v<T, expr::Fix>) {
          return "fix";
        } else if constexpr (std::is_same_v<T, expr::FixProj>) {
          return "fix(coord: " + std::to_string(node.coord) + ")";
        } else if constexpr (std::is_same_v<T, expr::NonFix>) {
          return "nonfix";
        } else if constexpr (std::is_same_v<T, expr::NonFixProj>) {
          return "nonfix(coord: " + std::to_string(node.coord) + ")";
        } else if constexpr (std::is_same_v<T, expr::Coord>) {
          return "coord";
        } else if constexpr (std::is_same_v<T, expr::TargetCoord>) {
          return "target(coord: " + std::to_string(node.coord) + ", value: " + node.value + ")";
        } else if constexpr (std::is_same_v<T, expr::Lex>) {
          return "lex(" + to_string(node.primary) + ", " + to_string(node.secondary) + ")";
        } else if constexpr (std::is_same_v<T, expr::Table>) {
          return "table[" + std::to_string(node.entries.size()) + " contexts]";
        } else if constexpr (std::is_same_v<T, expr::Preimage>) {
          return "preimage(" + to_string(node.quantifier) + ")";
        }
      },
      e.expr());
}

inline std::string to_string(const Quantifier& f) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::MaxOrder>) {
          std::string s = "max(order: ";
          const auto& r = node.order.ranking();
          for (std::size_t k = r.size(); k-- > 0;) {
            s += r[k];
            if (k) s += " < ";
          }
          return s + ")";
        } else if constexpr (std::is_same_v<T, expr::MaxCoord>) {
          return "max(coord: " + std::to_string(node.coord) + ")";
        } else if constexpr (std::is_same_v<T, expr::FixQ>) {
          return "fixq";
        } else if constexpr (std::is_same_v<T, expr::Lifted>) {
          return "image(" + to_string(node.selection) + ")";
        }
      },
      f.expr());
}

}  // namespace hog
