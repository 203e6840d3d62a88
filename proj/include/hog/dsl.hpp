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

// The .hog text format for higher-order games.
//
//   # comment
//   game <ident>
//   moves <player> = { <label>, ... }
//   outcomes = moves | { <label>, ... } | product | vectors <n>
//   outcome_fn = majority | identity | table { (<label>, ...) -> <value> ... }
//   player <player> = <sel-expr>
//
//   sel-expr := argmax(order: l1 < l2 < ...) | argmax(coord: i)
//             | fix | fix(coord: i) | nonfix | nonfix(coord: i)
//             | coord | target(coord: i, value: v) | lex(<sel-expr>, <sel-expr>)
//
// Statements end at a newline or ';'; a table body may span lines and its entries
// are separated by newlines or ';'. `outcomes = moves` makes the shared move
// set the outcome space, `product` the product of all move sets. Vector
// values are parenthesized rationals such as (1, -1/2).

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "hog/context.hpp"
#include "hog/error.hpp"
#include "hog/game.hpp"
#include "hog/selection.hpp"

namespace hog {

struct GameSource {
  std::string text;
  std::optional<std::string> name;
};

enum class Severity { kError, kWarning };

enum class DiagnosticCode {
  kSyntaxError,
  kUnknownConstructor,
  kTypeMismatch,
  kArityError,
  kDuplicateDefinition,
  kUnreachableOutcome,
};

inline std::string_view to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kSyntaxError: return "SyntaxError";
    case DiagnosticCode::kUnknownConstructor: return "UnknownConstructor";
    case DiagnosticCode::kTypeMismatch: return "TypeMismatch";
    case DiagnosticCode::kArityError: return "ArityError";
    case DiagnosticCode::kDuplicateDefinition: return "DuplicateDefinition";
    case DiagnosticCode::kUnreachableOutcome: return "UnreachableOutcome";
  }
  return "Unknown";
}

/// Line and column are 1-based.
struct ParseDiagnostic {
  Severity severity = Severity::kError;
  DiagnosticCode code = DiagnosticCode::kSyntaxError;
  std::string message;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline std::string format_diagnostic(const ParseDiagnostic& d, std::string_view file) {
  std::ostringstream out;
  out << file << ":" << d.line << ":" << d.column << ": "
      << (d.severity == Severity::kError ? "error" : "warning") << ": [" << to_string(d.code)
      << "] " << d.message;
  return out.str();
}

struct ParseResult {
  std::optional<Game> game;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const noexcept { return game.has_value(); }
  bool has_errors() const {
    for (const auto& d : diagnostics) {
      if (d.severity == Severity::kError) return true;
    }
    return false;
  }
};

namespace detail::dsl {

enum class Tok {
  kIdent,
  kNumber,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kComma,
  kEquals,
  kLess,
  kColon,
  kSemicolon,
  kArrow,
  kNewline,
  kEnd,
};

inline std::string_view describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kNumber: return "number";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kEquals: return "'='";
    case Tok::kLess: return "'<'";
    case Tok::kColon: return "':'";
    case Tok::kSemicolon: return "';'";
    case Tok::kArrow: return "'->'";
    case Tok::kNewline: return "end of line";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!ident_char(s[i])) return false;
    if (s[i] == '-' && i + 1 < s.size() && s[i + 1] == '>') return false;
  }
  return true;
}

inline std::vector<Token> lex(std::string_view text, std::vector<ParseDiagnostic>& diags) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string s, std::size_t c) {
    out.push_back(Token{kind, std::move(s), line, c});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      push(Tok::kNewline, "", col);
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start_col = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) {
        if (text[j] == '-' && j + 1 < text.size() && text[j + 1] == '>') break;
        ++j;
      }
      push(Tok::kIdent, std::string(text.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    const bool minus_digit =
        c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
    if (std::isdigit(static_cast<unsigned char>(c)) || minus_digit) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j + 1 < text.size() && text[j] == '/' &&
          std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      push(Tok::kNumber, std::string(text.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Tok::kArrow, "->", start_col);
      i += 2;
      col += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '{': kind = Tok::kLBrace; break;
      case '}': kind = Tok::kRBrace; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case '=': kind = Tok::kEquals; break;
      case '<': kind = Tok::kLess; break;
      case ':': kind = Tok::kColon; break;
      case ';': kind = Tok::kSemicolon; break;
      default: {
        // Skip a whole UTF-8 sequence so the column stays on characters.
        std::size_t j = i + 1;
        while (j < text.size() && (static_cast<unsigned char>(text[j]) & 0xC0) == 0x80) ++j;
        diags.push_back(ParseDiagnostic{Severity::kError, DiagnosticCode::kSyntaxError,
                                        "unexpected character '" +
                                            std::string(text.substr(i, j - i)) + "'",
                                        line, start_col});
        i = j;
        ++col;
        continue;
      }
    }
    push(kind, std::string(1, c), start_col);
    ++i;
    ++col;
  }
  push(Tok::kEnd, "", col);
  return out;
}

struct Located {
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct MovesDecl {
  Located player;
  std::vector<Located> labels;
};

struct OutcomesDecl {
  enum class Kind { kMoves, kAtoms, kProduct, kVectors } kind = Kind::kMoves;
  std::vector<Located> labels;
  std::size_t dimension = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ValueAst {
  bool tuple = false;
  std::vector<Token> items;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct TableEntry {
  std::vector<Token> key;
  ValueAst value;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct OutcomeFnDecl {
  enum class Kind { kMajority, kIdentity, kTable } kind = Kind::kMajority;
  std::vector<TableEntry> entries;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t close_line = 1;
  std::size_t close_column = 1;
};

struct PlayerDecl {
  Located name;
  SelectionFunction selection;
};

// Thrown after a diagnostic has been recorded; the statement loop resyncs.
struct Abort {};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<ParseDiagnostic>& diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  void parse_document() {
    for (;;) {
      skip_newlines();
      if (peek().kind == Tok::kEnd) return;
      try {
        statement();
      } catch (const Abort&) {
        resync();
      }
    }
  }

  std::optional<Located> game_name;
  std::vector<MovesDecl> moves;
  std::optional<OutcomesDecl> outcomes;
  std::optional<OutcomeFnDecl> outcome_fn;
  std::vector<PlayerDecl> players;
  std::size_t end_line = 1;

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind == Tok::kLBrace) ++open_braces_;
    if (t.kind == Tok::kRBrace && open_braces_ > 0) --open_braces_;
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

  [[noreturn]] void error_at(const Token& t, DiagnosticCode code, std::string message) {
    diags_.push_back(ParseDiagnostic{Severity::kError, code, std::move(message), t.line, t.column});
    throw Abort{};
  }

  const Token& expect(Tok kind, std::string_view context) {
    if (peek().kind != kind) {
      const Token& t = peek();
      std::string got = t.text.empty() ? std::string(describe(t.kind)) : "'" + t.text + "'";
      error_at(t, DiagnosticCode::kSyntaxError,
               "expected " + std::string(describe(kind)) + " " + std::string(context) +
                   ", found " + got);
    }
    return next();
  }

  const Token& expect_keyword(std::string_view word, std::string_view context) {
    if (peek().kind != Tok::kIdent || peek().text != word) {
      error_at(peek(), DiagnosticCode::kSyntaxError,
               "expected '" + std::string(word) + "' " + std::string(context));
    }
    return next();
  }

  void skip_newlines() {
    while (peek().kind == Tok::kNewline || peek().kind == Tok::kSemicolon) next();
  }

  void end_of_statement() {
    if (peek().kind == Tok::kNewline || peek().kind == Tok::kSemicolon ||
        peek().kind == Tok::kEnd) {
      next();
      return;
    }
    error_at(peek(), DiagnosticCode::kSyntaxError,
             "unexpected '" + peek().text + "' after the end of the declaration");
  }

  static bool is_keyword(const Token& t) {
    return t.kind == Tok::kIdent && (t.text == "game" || t.text == "moves" ||
                                     t.text == "outcomes" || t.text == "outcome_fn" ||
                                     t.text == "player");
  }

  // Skips to the end of the line, or past the closing brace of a block the
  // failed statement left open. An unclosed block ends at the next line that
  // starts with a keyword.
  void resync() {
    while (peek().kind != Tok::kEnd) {
      const Tok k = next().kind;
      if (k != Tok::kNewline) continue;
      if (open_braces_ == 0) return;
      if (is_keyword(peek())) {
        open_braces_ = 0;
        return;
      }
    }
  }

  Located located(const Token& t) { return Located{t.text, t.line, t.column}; }

  void duplicate(const Token& t, const std::string& what) {
    diags_.push_back(ParseDiagnostic{Severity::kError, DiagnosticCode::kDuplicateDefinition,
                                     "duplicate " + what, t.line, t.column});
  }

  void statement() {
    const Token& head = peek();
    if (head.kind != Tok::kIdent) {
      error_at(head, DiagnosticCode::kSyntaxError, "expected a declaration keyword");
    }
    if (head.text == "game") {
      next();
      const Token& name = expect(Tok::kIdent, "after 'game'");
      end_of_statement();
      if (game_name) {
        duplicate(head, "'game' declaration");
      } else {
        game_name = located(name);
      }
    } else if (head.text == "moves") {
      next();
      const Token& player = expect(Tok::kIdent, "naming the player");
      expect(Tok::kEquals, "after the player name");
      MovesDecl decl{located(player), label_set("in the move set")};
      end_of_statement();
      for (const auto& m : moves) {
        if (m.player.text == decl.player.text) {
          duplicate(player, "move declaration for player '" + player.text + "'");
          return;
        }
      }
      moves.push_back(std::move(decl));
    } else if (head.text == "outcomes") {
      next();
      expect(Tok::kEquals, "after 'outcomes'");
      OutcomesDecl decl;
      decl.line = head.line;
      decl.column = head.column;
      const Token& t = peek();
      if (t.kind == Tok::kLBrace) {
        decl.kind = OutcomesDecl::Kind::kAtoms;
        decl.labels = label_set("in the outcome set");
      } else if (t.kind == Tok::kIdent && t.text == "moves") {
        next();
        decl.kind = OutcomesDecl::Kind::kMoves;
      } else if (t.kind == Tok::kIdent && t.text == "product") {
        next();
        decl.kind = OutcomesDecl::Kind::kProduct;
      } else if (t.kind == Tok::kIdent && t.text == "vectors") {
        next();
        decl.kind = OutcomesDecl::Kind::kVectors;
        decl.dimension = positive_integer("as the vector dimension");
      } else if (t.kind == Tok::kIdent) {
        error_at(t, DiagnosticCode::kUnknownConstructor,
                 "unknown outcome space '" + t.text +
                     "' (expected moves, product, vectors <n> or a label set)");
      } else {
        error_at(t, DiagnosticCode::kSyntaxError, "expected an outcome space");
      }
      end_of_statement();
      if (outcomes) {
        duplicate(head, "'outcomes' declaration");
      } else {
        outcomes = std::move(decl);
      }
    } else if (head.text == "outcome_fn") {
      next();
      expect(Tok::kEquals, "after 'outcome_fn'");
      OutcomeFnDecl decl;
      decl.line = head.line;
      decl.column = head.column;
      const Token& t = expect(Tok::kIdent, "naming the outcome function");
      if (t.text == "majority") {
        decl.kind = OutcomeFnDecl::Kind::kMajority;
      } else if (t.text == "identity") {
        decl.kind = OutcomeFnDecl::Kind::kIdentity;
      } else if (t.text == "table") {
        decl.kind = OutcomeFnDecl::Kind::kTable;
        table_body(decl);
      } else {
        error_at(t, DiagnosticCode::kUnknownConstructor,
                 "unknown outcome function '" + t.text +
                     "' (expected majority, identity or table)");
      }
      end_of_statement();
      if (outcome_fn) {
        duplicate(head, "'outcome_fn' declaration");
      } else {
        outcome_fn = std::move(decl);
      }
    } else if (head.text == "player") {
      next();
      const Token& name = expect(Tok::kIdent, "naming the player");
      expect(Tok::kEquals, "after the player name");
      SelectionFunction sel = selection();
      end_of_statement();
      for (const auto& p : players) {
        if (p.name.text == name.text) {
          duplicate(name, "goal for player '" + name.text + "'");
          return;
        }
      }
      bool declared = false;
      for (const auto& m : moves) declared = declared || m.player.text == name.text;
      if (!declared) {
        diags_.push_back(ParseDiagnostic{
            Severity::kError, DiagnosticCode::kSyntaxError,
            "player '" + name.text + "' must follow a 'moves " + name.text + " = {...}' line",
            name.line, name.column});
        return;
      }
      players.push_back(PlayerDecl{located(name), std::move(sel)});
    } else {
      error_at(head, DiagnosticCode::kSyntaxError,
               "unknown declaration '" + head.text +
                   "' (expected game, moves, outcomes, outcome_fn or player)");
    }
    end_line = peek().line;
  }

  std::vector<Located> label_set(std::string_view context) {
    expect(Tok::kLBrace, context);
    std::vector<Located> labels;
    for (;;) {
      const Token& t = expect(Tok::kIdent, context);
      for (const auto& l : labels) {
        if (l.text == t.text) {
          error_at(t, DiagnosticCode::kDuplicateDefinition, "duplicate label '" + t.text + "'");
        }
      }
      labels.push_back(located(t));
      if (accept(Tok::kRBrace)) return labels;
      expect(Tok::kComma, context);
    }
  }

  std::size_t positive_integer(std::string_view context) {
    const Token& t = expect(Tok::kNumber, context);
    std::size_t value = 0;
    for (char c : t.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        error_at(t, DiagnosticCode::kSyntaxError,
                 "expected a positive integer " + std::string(context));
      }
      value = value * 10 + static_cast<std::size_t>(c - '0');
      if (value > 1'000'000) error_at(t, DiagnosticCode::kSyntaxError, "integer too large");
    }
    if (value == 0) {
      error_at(t, DiagnosticCode::kTypeMismatch,
               "expected a positive integer " + std::string(context));
    }
    return value;
  }

  void table_body(OutcomeFnDecl& decl) {
    expect(Tok::kLBrace, "to open the table");
    for (;;) {
      skip_newlines();
      if (peek().kind == Tok::kRBrace) {
        const Token& close = next();
        decl.close_line = close.line;
        decl.close_column = close.column;
        return;
      }
      TableEntry entry;
      const Token& open = expect(Tok::kLParen, "to start a profile");
      entry.line = open.line;
      entry.column = open.column;
      for (;;) {
        entry.key.push_back(expect(Tok::kIdent, "in the profile"));
        if (accept(Tok::kRParen)) break;
        expect(Tok::kComma, "in the profile");
      }
      expect(Tok::kArrow, "after the profile");
      entry.value = value();
      if (peek().kind != Tok::kNewline && peek().kind != Tok::kSemicolon &&
          peek().kind != Tok::kRBrace) {
        error_at(peek(), DiagnosticCode::kSyntaxError, "expected a new entry or '}'");
      }
      decl.entries.push_back(std::move(entry));
    }
  }

  ValueAst value() {
    ValueAst v;
    const Token& t = peek();
    v.line = t.line;
    v.column = t.column;
    if (t.kind == Tok::kIdent || t.kind == Tok::kNumber) {
      v.items.push_back(next());
      return v;
    }
    expect(Tok::kLParen, "as an outcome value");
    v.tuple = true;
    for (;;) {
      const Token& item = peek();
      if (item.kind != Tok::kIdent && item.kind != Tok::kNumber) {
        error_at(item, DiagnosticCode::kSyntaxError, "expected a label or number in the outcome");
      }
      v.items.push_back(next());
      if (accept(Tok::kRParen)) return v;
      expect(Tok::kComma, "in the outcome");
    }
  }

  // "name:" inside a constructor's argument list.
  void argument_name(std::string_view name, std::string_view ctor) {
    const Token& t = peek();
    if (t.kind != Tok::kIdent || t.text != name) {
      error_at(t, DiagnosticCode::kSyntaxError,
               "expected '" + std::string(name) + ":' in " + std::string(ctor) + "(...)");
    }
    next();
    expect(Tok::kColon, "after the argument name");
  }

  std::size_t coordinate_argument(std::string_view ctor) {
    argument_name("coord", ctor);
    return positive_integer("as the coordinate");
  }

  SelectionFunction selection() {
    const Token& head = expect(Tok::kIdent, "as a goal");
    const std::string& name = head.text;
    if (name == "argmax") {
      expect(Tok::kLParen, "after 'argmax'");
      const Token& key = peek();
      if (key.kind == Tok::kIdent && key.text == "order") {
        argument_name("order", "argmax");
        std::vector<std::string> chain;
        for (;;) {
          const Token& l = expect(Tok::kIdent, "in the preference order");
          for (const auto& c : chain) {
            if (c == l.text) {
              error_at(l, DiagnosticCode::kDuplicateDefinition,
                       "'" + l.text + "' appears twice in the preference order");
            }
          }
          chain.push_back(l.text);
          if (!accept(Tok::kLess)) break;
        }
        expect(Tok::kRParen, "to close argmax(...)");
        return make_argmax_order(PreferenceOrder::ascending(std::move(chain)));
      }
      const std::size_t i = coordinate_argument("argmax");
      expect(Tok::kRParen, "to close argmax(...)");
      return make_argmax_coord(i);
    }
    if (name == "fix" || name == "nonfix") {
      const bool fix = name == "fix";
      if (!accept(Tok::kLParen)) return fix ? make_fix() : make_nonfix();
      const std::size_t i = coordinate_argument(name);
      expect(Tok::kRParen, "to close the argument list");
      return fix ? make_fix_proj(i) : make_nonfix_proj(i);
    }
    if (name == "coord") return make_coord();
    if (name == "target") {
      expect(Tok::kLParen, "after 'target'");
      const std::size_t i = coordinate_argument("target");
      expect(Tok::kComma, "between the arguments of target(...)");
      argument_name("value", "target");
      const Token& v = expect(Tok::kIdent, "as the target value");
      expect(Tok::kRParen, "to close target(...)");
      return make_target_coord(i, v.text);
    }
    if (name == "lex") {
      expect(Tok::kLParen, "after 'lex'");
      SelectionFunction primary = selection();
      expect(Tok::kComma, "between the arguments of lex(...)");
      SelectionFunction secondary = selection();
      expect(Tok::kRParen, "to close lex(...)");
      return make_lex(std::move(primary), std::move(secondary));
    }
    error_at(head, DiagnosticCode::kUnknownConstructor,
             "unknown goal '" + name +
                 "' (expected argmax, fix, nonfix, coord, target or lex)");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t open_braces_ = 0;
  std::vector<ParseDiagnostic>& diags_;
};

inline std::optional<Rational> parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    std::int64_t num = std::stoll(text.substr(0, slash));
    std::int64_t den = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Second pass: turns the declarations into a validated Game.
class Builder {
 public:
  Builder(const Parser& ast, const GameSource& src, std::vector<ParseDiagnostic>& diags)
      : ast_(ast), src_(src), diags_(diags) {}

  std::optional<Game> build() {
    const std::size_t errors_before = error_count();
    if (ast_.moves.empty()) {
      report(DiagnosticCode::kSyntaxError, "no 'moves' declarations", ast_.end_line, 1);
    }
    for (const auto& m : ast_.moves) {
      bool has_goal = false;
      for (const auto& p : ast_.players) has_goal = has_goal || p.name.text == m.player.text;
      if (!has_goal) {
        report(DiagnosticCode::kSyntaxError, "player '" + m.player.text + "' has no goal",
               m.player.line, m.player.column);
      }
    }
    if (!ast_.outcomes) {
      report(DiagnosticCode::kSyntaxError, "no 'outcomes' declaration", ast_.end_line, 1);
    }
    if (!ast_.outcome_fn) {
      report(DiagnosticCode::kSyntaxError, "no 'outcome_fn' declaration", ast_.end_line, 1);
    }
    if (error_count() > errors_before) return std::nullopt;

    std::vector<MoveSet> move_sets;
    for (const auto& m : ast_.moves) {
      std::vector<std::string> labels;
      for (const auto& l : m.labels) labels.push_back(l.text);
      move_sets.emplace_back(std::move(labels));
    }

    std::optional<OutcomeSpace> space = outcome_space(move_sets);
    if (!space) return std::nullopt;

    std::vector<Player> players;
    for (std::size_t i = 0; i < ast_.moves.size(); ++i) {
      const auto& decl = player_decl(ast_.moves[i].player.text);
      if (!goal_ok(decl, move_sets[i], *space)) continue;
      players.push_back(Player{ast_.moves[i].player.text, move_sets[i], decl.selection});
    }

    std::optional<Game> game = make_game(std::move(players), *space);
    if (error_count() > errors_before) return std::nullopt;
    if (game) warn_unreachable(*game);
    return game;
  }

 private:
  std::size_t error_count() const {
    std::size_t n = 0;
    for (const auto& d : diags_) n += d.severity == Severity::kError;
    return n;
  }

  void report(DiagnosticCode code, std::string message, std::size_t line, std::size_t column) {
    diags_.push_back(ParseDiagnostic{Severity::kError, code, std::move(message), line, column});
  }

  const PlayerDecl& player_decl(const std::string& name) const {
    for (const auto& p : ast_.players) {
      if (p.name.text == name) return p;
    }
    fail(ErrorKind::kInvalidArgument, "missing player declaration");
  }

  std::optional<OutcomeSpace> outcome_space(const std::vector<MoveSet>& move_sets) {
    const OutcomesDecl& decl = *ast_.outcomes;
    using K = OutcomesDecl::Kind;
    switch (decl.kind) {
      case K::kMoves:
        for (const auto& m : move_sets) {
          if (!m.same_labels(move_sets.front())) {
            report(DiagnosticCode::kTypeMismatch,
                   "'outcomes = moves' needs every player to share one move set", decl.line,
                   decl.column);
            return std::nullopt;
          }
        }
        return OutcomeSpace::atoms(move_sets.front());
      case K::kAtoms: {
        std::vector<std::string> labels;
        for (const auto& l : decl.labels) labels.push_back(l.text);
        return OutcomeSpace::atoms(MoveSet(std::move(labels)));
      }
      case K::kProduct:
        return OutcomeSpace::product(move_sets);
      case K::kVectors: {
        const OutcomeFnDecl& fn = *ast_.outcome_fn;
        if (fn.kind != OutcomeFnDecl::Kind::kTable) {
          report(DiagnosticCode::kTypeMismatch, "vector outcomes need an outcome table", fn.line,
                 fn.column);
          return std::nullopt;
        }
        std::vector<Rational> values;
        bool ok = true;
        for (const auto& e : fn.entries) {
          if (!e.value.tuple || e.value.items.size() != decl.dimension) {
            report(DiagnosticCode::kTypeMismatch,
                   "expected a payoff vector of dimension " + std::to_string(decl.dimension),
                   e.value.line, e.value.column);
            ok = false;
            continue;
          }
          for (const auto& item : e.value.items) {
            auto r = item.kind == Tok::kNumber ? parse_rational(item.text) : std::nullopt;
            if (!r) {
              report(DiagnosticCode::kTypeMismatch, "'" + item.text + "' is not a rational",
                     item.line, item.column);
              ok = false;
              continue;
            }
            values.push_back(*r);
          }
        }
        if (!ok) return std::nullopt;
        if (values.empty()) {
          report(DiagnosticCode::kArityError, "the outcome table is empty", fn.close_line,
                 fn.close_column);
          return std::nullopt;
        }
        return OutcomeSpace::vector(decl.dimension, std::move(values));
      }
    }
    return std::nullopt;
  }

  bool goal_ok(const PlayerDecl& decl, const MoveSet& moves, const OutcomeSpace& space) {
    try {
      check_compatible(decl.selection, moves, space);
    } catch (const Error& e) {
      report(DiagnosticCode::kTypeMismatch, "player '" + decl.name.text + "': " + e.what(),
             decl.name.line, decl.name.column);
      return false;
    }
    if (may_be_empty(decl.selection)) {
      report(DiagnosticCode::kTypeMismatch,
             "player '" + decl.name.text + "': " + to_string(decl.selection) +
                 " may select no move; use it inside lex(...)",
             decl.name.line, decl.name.column);
      return false;
    }
    return true;
  }

  std::optional<Outcome> outcome_value(const ValueAst& v, const OutcomeSpace& space) {
    std::optional<Outcome> o;
    switch (space.kind()) {
      case OutcomeSpace::Kind::kAtoms:
        if (!v.tuple && v.items.front().kind == Tok::kIdent) o = Outcome::atom(v.items.front().text);
        break;
      case OutcomeSpace::Kind::kProduct: {
        Outcome::Tuple t;
        for (const auto& item : v.items) t.push_back(item.text);
        if (v.tuple) o = Outcome::tuple(std::move(t));
        break;
      }
      case OutcomeSpace::Kind::kVector: {
        Outcome::Payoff p;
        for (const auto& item : v.items) {
          if (auto r = parse_rational(item.text)) p.push_back(*r);
        }
        if (v.tuple && p.size() == v.items.size()) o = Outcome::payoff(std::move(p));
        break;
      }
    }
    if (!o || !space.contains(*o)) {
      std::string shown = v.tuple ? "(" : "";
      for (std::size_t k = 0; k < v.items.size(); ++k) {
        if (k) shown += ",";
        shown += v.items[k].text;
      }
      if (v.tuple) shown += ")";
      report(DiagnosticCode::kTypeMismatch, "'" + shown + "' is not in the outcome space", v.line,
             v.column);
      return std::nullopt;
    }
    return o;
  }

  std::optional<Game> make_game(std::vector<Player> players, const OutcomeSpace& space) {
    const OutcomeFnDecl& fn = *ast_.outcome_fn;
    std::string name = ast_.game_name ? ast_.game_name->text : src_.name.value_or("game");
    const std::size_t errors_before = error_count();

    std::vector<MoveSet> move_sets;
    for (const auto& m : ast_.moves) {
      std::vector<std::string> labels;
      for (const auto& l : m.labels) labels.push_back(l.text);
      move_sets.emplace_back(std::move(labels));
    }

    std::vector<Outcome> table;
    switch (fn.kind) {
      case OutcomeFnDecl::Kind::kMajority: {
        const MoveSet& first = move_sets.front();
        bool ok = move_sets.size() % 2 == 1 && first.size() == 2;
        for (const auto& m : move_sets) ok = ok && m == first;
        if (!ok) {
          report(DiagnosticCode::kTypeMismatch,
                 "majority needs an odd number of players with identical binary move sets",
                 fn.line, fn.column);
        } else if (space.kind() != OutcomeSpace::Kind::kAtoms ||
                   !space.atom_labels().same_labels(first)) {
          report(DiagnosticCode::kTypeMismatch, "majority needs the shared move set as outcomes",
                 ast_.outcomes->line, ast_.outcomes->column);
        }
        break;
      }
      case OutcomeFnDecl::Kind::kIdentity:
        if (!(space == OutcomeSpace::product(move_sets))) {
          report(DiagnosticCode::kTypeMismatch, "identity needs 'outcomes = product'",
                 ast_.outcomes->line, ast_.outcomes->column);
        }
        break;
      case OutcomeFnDecl::Kind::kTable:
        table = outcome_table(fn, move_sets, space);
        break;
    }
    if (error_count() > errors_before || players.size() != move_sets.size()) return std::nullopt;

    try {
      switch (fn.kind) {
        case OutcomeFnDecl::Kind::kMajority:
          return Game::majority(std::move(name), std::move(players));
        case OutcomeFnDecl::Kind::kIdentity:
          return Game::identity(std::move(name), std::move(players));
        case OutcomeFnDecl::Kind::kTable:
          return Game(std::move(name), std::move(players), space, std::move(table));
      }
    } catch (const Error& e) {
      report(DiagnosticCode::kTypeMismatch, e.what(), fn.line, fn.column);
    }
    return std::nullopt;
  }

  std::vector<Outcome> outcome_table(const OutcomeFnDecl& fn, const std::vector<MoveSet>& moves,
                                     const OutcomeSpace& space) {
    std::uint64_t total = 1;
    for (const auto& m : moves) {
      total *= m.size();
      if (total > kDefaultProfileBudget) {
        report(DiagnosticCode::kArityError, "outcome table would exceed the profile budget",
               fn.line, fn.column);
        return {};
      }
    }
    std::vector<std::optional<Outcome>> slots(total);
    for (const auto& e : fn.entries) {
      if (e.key.size() != moves.size()) {
        report(DiagnosticCode::kArityError,
               "profile has " + std::to_string(e.key.size()) + " moves for " +
                   std::to_string(moves.size()) + " players",
               e.line, e.column);
        continue;
      }
      std::uint64_t n = 0;
      bool ok = true;
      for (std::size_t i = 0; i < moves.size(); ++i) {
        auto x = moves[i].find(e.key[i].text);
        if (!x) {
          report(DiagnosticCode::kTypeMismatch,
                 "'" + e.key[i].text + "' is not a move of player '" + ast_.moves[i].player.text +
                     "'",
                 e.key[i].line, e.key[i].column);
          ok = false;
          break;
        }
        n = n * moves[i].size() + *x;
      }
      if (!ok) continue;
      auto o = outcome_value(e.value, space);
      if (!o) continue;
      if (slots[n]) {
        report(DiagnosticCode::kDuplicateDefinition, "profile listed twice", e.line, e.column);
        continue;
      }
      slots[n] = std::move(*o);
    }
    std::vector<Outcome> table;
    std::vector<std::string> missing;
    std::vector<std::size_t> idx(moves.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
      if (slots[n]) {
        table.push_back(*slots[n]);
      } else if (missing.size() < 4) {
        std::string p = "(";
        for (std::size_t i = 0; i < idx.size(); ++i) p += (i ? "," : "") + moves[i][idx[i]];
        missing.push_back(p + ")");
      } else if (missing.size() == 4) {
        missing.push_back("...");
      }
      for (std::size_t k = idx.size(); k-- > 0;) {
        if (++idx[k] < moves[k].size()) break;
        idx[k] = 0;
      }
    }
    if (table.size() != total) {
      std::string list;
      for (const auto& m : missing) list += (list.empty() ? "" : " ") + m;
      report(DiagnosticCode::kArityError,
             "outcome table misses " + std::to_string(total - table.size()) +
                 " profile(s): " + list,
             fn.close_line, fn.close_column);
    }
    return table;
  }

  void warn_unreachable(const Game& g) {
    if (g.outcomes().kind() != OutcomeSpace::Kind::kAtoms || g.rule() != OutcomeRule::kTable) {
      return;
    }
    const MoveSet& atoms = g.outcomes().atom_labels();
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      const Outcome o = Outcome::atom(atoms[a]);
      if (std::find(g.table().begin(), g.table().end(), o) == g.table().end()) {
        std::size_t line = ast_.outcomes->line;
        std::size_t column = ast_.outcomes->column;
        if (a < ast_.outcomes->labels.size()) {
          line = ast_.outcomes->labels[a].line;
          column = ast_.outcomes->labels[a].column;
        }
        diags_.push_back(ParseDiagnostic{Severity::kWarning, DiagnosticCode::kUnreachableOutcome,
                                         "outcome '" + atoms[a] + "' is never reached", line,
                                         column});
      }
    }
  }

  const Parser& ast_;
  const GameSource& src_;
  std::vector<ParseDiagnostic>& diags_;
};

}  // namespace detail::dsl

/// Parses and validates a .hog document. On failure the result holds no
/// game and at least one error diagnostic.
inline ParseResult parse_game(const GameSource& src) {
  ParseResult result;
  auto tokens = detail::dsl::lex(src.text, result.diagnostics);
  detail::dsl::Parser parser(std::move(tokens), result.diagnostics);
  parser.parse_document();
  detail::dsl::Builder builder(parser, src, result.diagnostics);
  std::optional<Game> game = builder.build();
  if (!result.has_errors()) result.game = std::move(game);
  return result;
}

inline ParseResult parse_game(std::string text) { return parse_game(GameSource{std::move(text), {}}); }

namespace detail::dsl {

inline void require_expressible(const SelectionFunction& e) {
  std::visit(
      [](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, expr::Table> || std::is_same_v<T, expr::Preimage>) {
          fail(ErrorKind::kInvalidArgument, to_string(SelectionFunction(node)) +
                                                " has no .hog syntax");
        } else if constexpr (std::is_same_v<T, expr::Lex>) {
          require_expressible(node.primary);
          require_expressible(node.secondary);
        }
      },
      e.expr());
}

inline std::string label_list(const std::vector<std::string>& labels) {
  std::string s = "{ ";
  for (std::size_t k = 0; k < labels.size(); ++k) s += (k ? ", " : "") + labels[k];
  return s + " }";
}

}  // namespace detail::dsl

/// Canonical .hog text for g. Throws InvalidArgument for games the grammar
/// cannot express (table or preimage goals, non-inferable outcome spaces).
inline GameSource render_game(const Game& g) {
  using detail::dsl::is_identifier;
  if (!is_identifier(g.name())) {
    fail(ErrorKind::kInvalidArgument, "game name '" + g.name() + "' is not an identifier");
  }
  std::ostringstream out;
  out << "game " << g.name() << "\n";
  std::vector<MoveSet> move_sets;
  for (const auto& pl : g.players()) {
    if (!is_identifier(pl.name)) {
      fail(ErrorKind::kInvalidArgument, "player name '" + pl.name + "' is not an identifier");
    }
    for (const auto& l : pl.moves.labels()) {
      if (!is_identifier(l)) fail(ErrorKind::kInvalidArgument, "label '" + l + "' is not an identifier");
    }
    detail::dsl::require_expressible(pl.selection);
    out << "moves " << pl.name << " = " << detail::dsl::label_list(pl.moves.labels()) << "\n";
    move_sets.push_back(pl.moves);
  }

  const OutcomeSpace& space = g.outcomes();
  switch (space.kind()) {
    case OutcomeSpace::Kind::kAtoms:
      for (const auto& l : space.atom_labels().labels()) {
        if (!is_identifier(l)) fail(ErrorKind::kInvalidArgument, "label '" + l + "' is not an identifier");
      }
      out << "outcomes = " << detail::dsl::label_list(space.atom_labels().labels()) << "\n";
      break;
    case OutcomeSpace::Kind::kProduct:
      if (!(space == OutcomeSpace::product(move_sets))) {
        fail(ErrorKind::kInvalidArgument, "product outcomes must be the product of the move sets");
      }
      out << "outcomes = product\n";
      break;
    case OutcomeSpace::Kind::kVector: {
      std::vector<Rational> used;
      for (const auto& o : g.table()) {
        used.insert(used.end(), o.as_payoff().begin(), o.as_payoff().end());
      }
      if (!(OutcomeSpace::vector(space.arity(), used) == space)) {
        fail(ErrorKind::kInvalidArgument,
             "vector outcome values must be exactly those used in the table");
      }
      out << "outcomes = vectors " << space.arity() << "\n";
      break;
    }
  }

  switch (g.rule()) {
    case OutcomeRule::kMajority:
      out << "outcome_fn = majority\n";
      break;
    case OutcomeRule::kIdentity:
      out << "outcome_fn = identity\n";
      break;
    case OutcomeRule::kTable: {
      out << "outcome_fn = table {\n";
      for (std::uint64_t n = 0; n < g.table().size(); ++n) {
        const auto labels = g.labels(g.profile_at(n));
        out << "  (";
        for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << labels[i];
        out << ") -> " << to_string(g.table()[n]) << "\n";
      }
      out << "}\n";
      break;
    }
  }
  for (const auto& pl : g.players()) {
    out << "player " << pl.name << " = " << to_string(pl.selection) << "\n";
  }
  return GameSource{out.str(), g.name()};
}

}  // namespace hog
