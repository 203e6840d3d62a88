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

// Finite move sets, outcome spaces and game contexts p : X -> R.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "hog/error.hpp"

namespace hog {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

/// Indices into a MoveSet, kept sorted ascending (declaration order).
using MoveIndexSet = std::vector<std::size_t>;

/// An ordered, nonempty set of distinct labels. Copies share storage.
class MoveSet {
 public:
  explicit MoveSet(std::vector<std::string> labels)
      : labels_(std::make_shared<const std::vector<std::string>>(
            validated(std::move(labels)))) {}
  MoveSet(std::initializer_list<std::string> labels)
      : MoveSet(std::vector<std::string>(labels)) {}

  std::size_t size() const noexcept { return labels_->size(); }
  const std::string& operator[](std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }

  std::optional<std::size_t> find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_->size(); ++i) {
      if ((*labels_)[i] == label) return i;
    }
    return std::nullopt;
  }

  bool contains(std::string_view label) const { return find(label).has_value(); }

  std::size_t index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    fail(ErrorKind::kInvalidArgument,
         "unknown label '" + std::string(label) + "'");
  }

  /// Same labels regardless of declaration order.
  bool same_labels(const MoveSet& other) const {
    if (size() != other.size()) return false;
    return std::all_of(labels_->begin(), labels_->end(),
                       [&](const std::string& l) { return other.contains(l); });
  }

  MoveIndexSet all() const {
    MoveIndexSet out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

  friend bool operator==(const MoveSet& a, const MoveSet& b) {
    return a.labels_ == b.labels_ || a.labels() == b.labels();
  }

 private:
  static std::vector<std::string> validated(std::vector<std::string> labels) {
    if (labels.empty()) fail(ErrorKind::kInvalidArgument, "empty label set");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].empty()) fail(ErrorKind::kInvalidArgument, "empty label");
      for (std::size_t j = 0; j < i; ++j) {
        if (labels[i] == labels[j]) {
          fail(ErrorKind::kInvalidArgument,
               "duplicate label '" + labels[i] + "'");
        }
      }
    }
    return labels;
  }

  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A single outcome value: an atom, a tuple of labels (product outcome
/// spaces) or a payoff vector of exact rationals.
class Outcome {
 public:
  using Tuple = std::vector<std::string>;
  using Payoff = std::vector<Rational>;
  using Value = std::variant<std::string, Tuple, Payoff>;

  static Outcome atom(std::string label) { return Outcome(std::move(label)); }
  static Outcome tuple(Tuple labels) { return Outcome(std::move(labels)); }
  static Outcome payoff(Payoff values) { return Outcome(std::move(values)); }

  bool is_atom() const noexcept { return value_.index() == 0; }
  bool is_tuple() const noexcept { return value_.index() == 1; }
  bool is_payoff() const noexcept { return value_.index() == 2; }

  const std::string& as_atom() const { return std::get<0>(value_); }
  const Tuple& as_tuple() const { return std::get<1>(value_); }
  const Payoff& as_payoff() const { return std::get<2>(value_); }
  const Value& value() const noexcept { return value_; }

  friend bool operator==(const Outcome&, const Outcome&) = default;

 private:
  explicit Outcome(Value v) : value_(std::move(v)) {}
  Value value_;
};

inline std::string to_string(const Outcome& o) {
  if (o.is_atom()) return o.as_atom();
  std::string s = "(";
  if (o.is_tuple()) {
    for (std::size_t i = 0; i < o.as_tuple().size(); ++i) {
      if (i) s += ",";
      s += o.as_tuple()[i];
    }
  } else {
    for (std::size_t i = 0; i < o.as_payoff().size(); ++i) {
      if (i) s += ",";
      s += to_string(o.as_payoff()[i]);
    }
  }
  return s + ")";
}

/// One coordinate of a product or vector outcome.
using Coordinate = std::variant<std::string, Rational>;

/// The set R of outcomes. Atoms, a product of label sets, or n-dimensional
/// payoff vectors over a finite set of rationals. Every member has a
/// canonical ordinal in [0, cardinality()) which fixes the iteration order.
class OutcomeSpace {
 public:
  enum class Kind { kAtoms, kProduct, kVector };

  static OutcomeSpace atoms(MoveSet labels) {
    Impl impl;
    impl.kind = Kind::kAtoms;
    impl.atoms.push_back(std::move(labels));
    return OutcomeSpace(std::move(impl));
  }

  static OutcomeSpace product(std::vector<MoveSet> coordinates) {
    if (coordinates.empty()) {
      fail(ErrorKind::kInvalidArgument, "product outcome space needs a coordinate");
    }
    Impl impl;
    impl.kind = Kind::kProduct;
    impl.atoms = std::move(coordinates);
    return OutcomeSpace(std::move(impl));
  }

  static OutcomeSpace vector(std::size_t dimension, std::vector<Rational> values) {
    if (dimension == 0) {
      fail(ErrorKind::kInvalidArgument, "vector outcome space needs dimension >= 1");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) {
      fail(ErrorKind::kInvalidArgument, "vector outcome space needs a value set");
    }
    Impl impl;
    impl.kind = Kind::kVector;
    impl.dimension = dimension;
    impl.values = std::move(values);
    return OutcomeSpace(std::move(impl));
  }

  Kind kind() const noexcept { return impl_->kind; }

  /// Number of coordinates; zero for atoms.
  std::size_t arity() const noexcept {
    switch (impl_->kind) {
      case Kind::kAtoms: return 0;
      case Kind::kProduct: return impl_->atoms.size();
      case Kind::kVector: return impl_->dimension;
    }
    return 0;
  }

  const MoveSet& atom_labels() const {
    if (kind() != Kind::kAtoms) fail(ErrorKind::kTypeMismatch, "outcome space is not atoms");
    return impl_->atoms.front();
  }

  const std::vector<MoveSet>& coordinates() const {
    if (kind() != Kind::kProduct) fail(ErrorKind::kTypeMismatch, "outcome space is not a product");
    return impl_->atoms;
  }

  const std::vector<Rational>& values() const {
    if (kind() != Kind::kVector) fail(ErrorKind::kTypeMismatch, "outcome space is not a vector space");
    return impl_->values;
  }

  /// |R|, saturating at the maximum of std::uint64_t.
  std::uint64_t cardinality() const noexcept {
    switch (impl_->kind) {
      case Kind::kAtoms: return impl_->atoms.front().size();
      case Kind::kProduct: {
        std::uint64_t n = 1;
        for (const auto& c : impl_->atoms) n = saturating_mul(n, c.size());
        return n;
      }
      case Kind::kVector: {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < impl_->dimension; ++i) {
          n = saturating_mul(n, impl_->values.size());
        }
        return n;
      }
    }
    return 0;
  }

  std::optional<std::uint64_t> ordinal(const Outcome& o) const {
    switch (impl_->kind) {
      case Kind::kAtoms: {
        if (!o.is_atom()) return std::nullopt;
        auto i = impl_->atoms.front().find(o.as_atom());
        if (!i) return std::nullopt;
        return *i;
      }
      case Kind::kProduct: {
        if (!o.is_tuple() || o.as_tuple().size() != impl_->atoms.size()) return std::nullopt;
        std::uint64_t n = 0;
        for (std::size_t k = 0; k < impl_->atoms.size(); ++k) {
          auto i = impl_->atoms[k].find(o.as_tuple()[k]);
          if (!i) return std::nullopt;
          n = n * impl_->atoms[k].size() + *i;
        }
        return n;
      }
      case Kind::kVector: {
        if (!o.is_payoff() || o.as_payoff().size() != impl_->dimension) return std::nullopt;
        const auto& vs = impl_->values;
        std::uint64_t n = 0;
        for (const Rational& r : o.as_payoff()) {
          auto it = std::lower_bound(vs.begin(), vs.end(), r);
          if (it == vs.end() || *it != r) return std::nullopt;
          n = n * vs.size() + static_cast<std::uint64_t>(it - vs.begin());
        }
        return n;
      }
    }
    return std::nullopt;
  }

  bool contains(const Outcome& o) const { return ordinal(o).has_value(); }

  /// Inverse of ordinal().
  Outcome at(std::uint64_t ordinal) const {
    if (ordinal >= cardinality()) {
      fail(ErrorKind::kInvalidArgument, "outcome ordinal out of range");
    }
    switch (impl_->kind) {
      case Kind::kAtoms:
        return Outcome::atom(impl_->atoms.front()[ordinal]);
      case Kind::kProduct: {
        Outcome::Tuple t(impl_->atoms.size());
        for (std::size_t k = t.size(); k-- > 0;) {
          const auto& c = impl_->atoms[k];
          t[k] = c[ordinal % c.size()];
          ordinal /= c.size();
        }
        return Outcome::tuple(std::move(t));
      }
      case Kind::kVector: {
        const auto& vs = impl_->values;
        Outcome::Payoff p(impl_->dimension);
        for (std::size_t k = p.size(); k-- > 0;) {
          p[k] = vs[ordinal % vs.size()];
          ordinal /= vs.size();
        }
        return Outcome::payoff(std::move(p));
      }
    }
    fail(ErrorKind::kInvalidArgument, "bad outcome space");
  }

  /// The projection pi_i, 1-based.
  Coordinate project(const Outcome& o, std::size_t i) const {
    if (kind() == Kind::kAtoms) {
      fail(ErrorKind::kTypeMismatch, "projection is undefined on atom outcomes");
    }
    if (i < 1 || i > arity()) {
      fail(ErrorKind::kCoordinateOutOfRange,
           "coordinate " + std::to_string(i) + " outside 1.." + std::to_string(arity()));
    }
    if (kind() == Kind::kProduct) return o.as_tuple()[i - 1];
    return o.as_payoff()[i - 1];
  }

  friend bool operator==(const OutcomeSpace& a, const OutcomeSpace& b) {
    if (a.impl_ == b.impl_) return true;
    return a.impl_->kind == b.impl_->kind && a.impl_->atoms == b.impl_->atoms &&
           a.impl_->dimension == b.impl_->dimension && a.impl_->values == b.impl_->values;
  }

 private:
  struct Impl {
    Kind kind = Kind::kAtoms;
    std::vector<MoveSet> atoms;  // the atom set, or the product coordinates
    std::size_t dimension = 0;
    std::vector<Rational> values;
  };

  explicit OutcomeSpace(Impl impl) : impl_(std::make_shared<const Impl>(std::move(impl))) {}

  static std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
  }

  std::shared_ptr<const Impl> impl_;
};

/// Outcomes in canonical (ordinal) order without repetition.
using OutcomeSet = std::vector<Outcome>;

/// A total function p : X -> R, tabulated in move declaration order.
class GameContext {
 public:
  GameContext(MoveSet domain, OutcomeSpace codomain, std::vector<Outcome> table)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
    if (table_.size() != domain_.size()) {
      fail(ErrorKind::kInvalidArgument,
           "context table has " + std::to_string(table_.size()) + " entries for " +
               std::to_string(domain_.size()) + " moves");
    }
    ordinals_.reserve(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x) {
      auto n = codomain_.ordinal(table_[x]);
      if (!n) {
        fail(ErrorKind::kInvalidArgument, "context value " + hog::to_string(table_[x]) +
                                              " for move '" + domain_[x] +
                                              "' is not in the outcome space");
      }
      ordinals_.push_back(*n);
    }
  }

  /// Builds a context from (move label, outcome) pairs covering the domain.
  static GameContext from_pairs(MoveSet domain, OutcomeSpace codomain,
                                const std::vector<std::pair<std::string, Outcome>>& pairs) {
    std::vector<std::optional<Outcome>> slots(domain.size());
    for (const auto& [label, value] : pairs) {
      auto& slot = slots[domain.index_of(label)];
      if (slot) fail(ErrorKind::kInvalidArgument, "duplicate context entry for '" + label + "'");
      slot = value;
    }
    std::vector<Outcome> table;
    for (std::size_t x = 0; x < slots.size(); ++x) {
      if (!slots[x]) fail(ErrorKind::kInvalidArgument, "context misses move '" + domain[x] + "'");
      table.push_back(std::move(*slots[x]));
    }
    return GameContext(std::move(domain), std::move(codomain), std::move(table));
  }

  const MoveSet& domain() const noexcept { return domain_; }
  const OutcomeSpace& codomain() const noexcept { return codomain_; }
  const std::vector<Outcome>& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }

  const Outcome& operator()(std::size_t move) const { return table_.at(move); }
  const Outcome& operator()(std::string_view label) const {
    return table_[domain_.index_of(label)];
  }

  /// Ordinal of p(move) in the codomain.
  std::uint64_t ordinal(std::size_t move) const { return ordinals_.at(move); }

  friend bool operator==(const GameContext& a, const GameContext& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.ordinals_ == b.ordinals_;
  }

 private:
  MoveSet domain_;
  OutcomeSpace codomain_;
  std::vector<Outcome> table_;
  std::vector<std::uint64_t> ordinals_;
};

/// Im(p) in canonical order.
inline OutcomeSet image(const GameContext& p) {
  std::vector<std::pair<std::uint64_t, std::size_t>> seen;
  for (std::size_t x = 0; x < p.size(); ++x) seen.emplace_back(p.ordinal(x), x);
  std::sort(seen.begin(), seen.end());
  OutcomeSet out;
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (k > 0 && seen[k].first == seen[k - 1].first) continue;
    out.push_back(p(seen[k].second));
  }
  return out;
}

/// { p(x) | x in moves } in canonical order.
inline OutcomeSet outcomes_of(const GameContext& p, const MoveIndexSet& moves) {
  std::vector<std::pair<std::uint64_t, std::size_t>> seen;
  for (std::size_t x : moves) seen.emplace_back(p.ordinal(x), x);
  std::sort(seen.begin(), seen.end());
  OutcomeSet out;
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (k > 0 && seen[k].first == seen[k - 1].first) continue;
    out.push_back(p(seen[k].second));
  }
  return out;
}

inline bool contains(const OutcomeSet& set, const Outcome& o) {
  return std::find(set.begin(), set.end(), o) != set.end();
}

inline bool contains(const MoveIndexSet& set, std::size_t x) {
  return std::binary_search(set.begin(), set.end(), x);
}

inline std::vector<std::string> labels_of(const MoveSet& moves, const MoveIndexSet& set) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (std::size_t x : set) out.push_back(moves[x]);
  return out;
}

inline std::string to_string(const GameContext& p) {
  std::string s = "{";
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (x) s += ", ";
    s += p.domain()[x] + "->" + to_string(p(x));
  }
  return s + "}";
}

}  // namespace hog
