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

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
//   hog solve   [FILE | --builtin NAME] [--format table|json]
//               [--concept selection|quantifier|both] [--profile m1,m2,...]
//               [--max-profiles N] [--threads N]
//   hog analyze [FILE | --builtin NAME] [--format table|json] [--max-contexts N]
//   hog list    [--format table|json]
//   hog render  [FILE | --builtin NAME]
//
// Exit codes: 0 ok, 2 input error, 3 budget exceeded, 4 invariant violation.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hog/builtins.hpp"
#include "hog/dsl.hpp"
#include "hog/error.hpp"
#include "hog/game.hpp"
#include "hog/laws.hpp"

namespace hog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInvariant = 4;
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

enum class Format { kTable, kJson };
enum class Concept { kBoth, kSelection, kQuantifier };

struct RunConfig {
  std::string file;
  std::string builtin;
  Format format = Format::kTable;
  Concept concept_filter = Concept::kBoth;
  std::string profile;
  std::uint64_t max_profiles = kDefaultProfileBudget;
  std::uint64_t max_contexts = kDefaultContextBudget;
  unsigned threads = 1;
};

namespace detail {

// Reported as exit code 2 after the diagnostics went to stderr.
struct InputRejected {};

inline Game load_game(const RunConfig& cfg, std::ostream& err) {
  if (cfg.file.empty() == cfg.builtin.empty()) {
    err << "error: give exactly one of a .hog file or --builtin NAME\n";
    throw InputRejected{};
  }
  if (!cfg.builtin.empty()) return builtin(cfg.builtin);

  std::ifstream in(cfg.file, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << cfg.file << "'\n";
    throw InputRejected{};
  }
  std::ostringstream text;
  text << in.rdbuf();
  std::string stem = cfg.file.substr(cfg.file.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  ParseResult parsed = parse_game(GameSource{text.str(), stem});
  for (const auto& d : parsed.diagnostics) err << format_diagnostic(d, cfg.file) << "\n";
  if (!parsed.game) throw InputRejected{};
  return std::move(*parsed.game);
}

// "B,B,A", or "BBA" when every player has single-character labels.
inline StrategyProfile parse_profile(const Game& g, const std::string& text) {
  std::vector<std::string> labels;
  if (text.find(',') == std::string::npos && text.size() == g.num_players() &&
      g.num_players() > 1) {
    for (char c : text) labels.emplace_back(1, c);
  } else {
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      labels.push_back(item);
    }
  }
  return g.profile(labels);
}

inline bool single_char_labels(const EquilibriumReport& r) {
  for (const auto& m : r.moves) {
    for (const auto& l : m.labels()) {
      if (l.size() != 1) return false;
    }
  }
  return true;
}

inline std::string strategy_text(const EquilibriumReport& r, const StrategyProfile& s) {
  const auto labels = r.labels(s);
  const bool compact = single_char_labels(r);
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i && !compact) out += ",";
    out += labels[i];
  }
  return out;
}

inline std::vector<std::string> player_names(const EquilibriumReport& r,
                                             const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(r.players[i]);
  return out;
}

inline std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

inline void print_grid(std::ostream& out, const std::vector<std::vector<std::string>>& grid) {
  std::vector<std::size_t> width;
  for (const auto& row : grid) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

inline void print_report_table(std::ostream& out, const Game& g, const EquilibriumReport& r,
                               Concept concept_filter, bool summary) {
  const bool q = concept_filter != Concept::kSelection;
  const bool s = concept_filter != Concept::kQuantifier;
  out << "game: " << r.game << "\n";
  for (const auto& pl : g.players()) {
    out << "  " << pl.name << " = " << to_string(pl.selection) << "\n";
  }
  out << "\n";
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"Strategy", "Outcome"};
  if (q) header.insert(header.end(), {"QuantifierEq", "QDefects"});
  if (s) header.insert(header.end(), {"SelectionEq", "SDefects"});
  grid.push_back(header);
  auto defects = [&](const std::vector<std::size_t>& d) {
    return d.empty() ? std::string("-") : join(player_names(r, d), ",");
  };
  for (const auto& row : r.rows) {
    std::vector<std::string> line = {strategy_text(r, row.profile), to_string(row.outcome)};
    if (q) line.insert(line.end(), {row.quantifier_eq ? "yes" : "no", defects(row.quantifier_defectors)});
    if (s) line.insert(line.end(), {row.selection_eq ? "yes" : "no", defects(row.selection_defectors)});
    grid.push_back(std::move(line));
  }
  print_grid(out, grid);
  if (!summary) return;
  auto list = [&](const std::vector<StrategyProfile>& eq) {
    std::vector<std::string> items;
    for (const auto& p : eq) items.push_back(strategy_text(r, p));
    return "(" + std::to_string(items.size()) + ")" + (items.empty() ? "" : ": " + join(items, " "));
  };
  out << "\n";
  if (q) out << "quantifier equilibria " << list(r.quantifier_equilibria()) << "\n";
  if (s) out << "selection equilibria " << list(r.selection_equilibria()) << "\n";
}

inline Json outcome_json(const Outcome& o) {
  if (o.is_atom()) return o.as_atom();
  Json arr = Json::array();
  if (o.is_tuple()) {
    for (const auto& l : o.as_tuple()) arr.push_back(l);
  } else {
    for (const auto& v : o.as_payoff()) arr.push_back(to_string(v));
  }
  return arr;
}

inline Json report_json(const Game& g, const EquilibriumReport& r, Concept concept_filter) {
  const bool q = concept_filter != Concept::kSelection;
  const bool s = concept_filter != Concept::kQuantifier;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["game"] = r.game;
  j["players"] = Json::array();
  for (std::size_t i = 0; i < r.players.size(); ++i) {
    j["players"].push_back(Json{{"name", r.players[i]},
                                {"moves", r.moves[i].labels()},
                                {"goal", to_string(g.player(i).selection)}});
  }
  j["rows"] = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["strategy"] = r.labels(row.profile);
    jr["outcome"] = outcome_json(row.outcome);
    if (q) {
      jr["quantifier_eq"] = row.quantifier_eq;
      jr["quantifier_defectors"] = player_names(r, row.quantifier_defectors);
    }
    if (s) {
      jr["selection_eq"] = row.selection_eq;
      jr["selection_defectors"] = player_names(r, row.selection_defectors);
    }
    j["rows"].push_back(std::move(jr));
  }
  auto list = [&](const std::vector<StrategyProfile>& eq) {
    Json arr = Json::array();
    for (const auto& p : eq) arr.push_back(r.labels(p));
    return arr;
  };
  if (q) j["quantifier_equilibria"] = list(r.quantifier_equilibria());
  if (s) j["selection_equilibria"] = list(r.selection_equilibria());
  return j;
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Game g = load_game(cfg, err);
  EquilibriumReport report;
  const bool single = !cfg.profile.empty();
  if (single) {
    report = report_for_profile(g, parse_profile(g, cfg.profile));
  } else {
    report = enumerate_equilibria(g, EnumerationOptions{cfg.max_profiles, cfg.threads});
  }
  if (!report.consistent()) {
    err << "internal error: inconsistent equilibrium report\n";
    return kExitInvariant;
  }
  if (cfg.format == Format::kJson) {
    out << report_json(g, report, cfg.concept_filter).dump(2) << "\n";
  } else {
    print_report_table(out, g, report, cfg.concept_filter, !single);
  }
  return kExitOk;
}

struct PlayerAnalysis {
  ClosednessResult closed;
  AttainmentResult attains_lift;
};

inline std::string witness_text(const ClosednessWitness& w) {
  const MoveSet& x = w.context.domain();
  return "p = " + to_string(w.context) + ": " + x[w.good] + " selected, " + x[w.excluded] +
         " not, both reach " + to_string(w.context(w.good));
}

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Game g = load_game(cfg, err);
  std::vector<PlayerAnalysis> results;
  for (const auto& pl : g.players()) {
    results.push_back(PlayerAnalysis{
        is_closed(pl.selection, pl.moves, g.outcomes(), cfg.max_contexts),
        attains(pl.selection, lift_selection(pl.selection), pl.moves, g.outcomes(),
                cfg.max_contexts)});
  }
  for (const auto& r : results) {
    if (!r.attains_lift.attains) {
      err << "internal error: a goal does not attain its own lift\n";
      return kExitInvariant;
    }
  }
  if (cfg.format == Format::kJson) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["game"] = g.name();
    j["players"] = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const Player& pl = g.player(i);
      const ClosednessResult& c = results[i].closed;
      Json jp;
      jp["name"] = pl.name;
      jp["goal"] = to_string(pl.selection);
      jp["closed"] = c.closed;
      if (c.witness) {
        const GameContext& p = c.witness->context;
        Json ctx;
        for (std::size_t x = 0; x < p.size(); ++x) ctx[p.domain()[x]] = outcome_json(p(x));
        jp["witness"] = Json{{"context", ctx},
                             {"selected", p.domain()[c.witness->good]},
                             {"excluded", p.domain()[c.witness->excluded]}};
      } else {
        jp["witness"] = nullptr;
      }
      jp["attains_own_lift"] = results[i].attains_lift.attains;
      jp["contexts_checked"] = c.contexts_checked;
      j["players"].push_back(std::move(jp));
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "game: " << g.name() << "\n\n";
  std::vector<std::vector<std::string>> grid = {
      {"Player", "Goal", "Closed", "AttainsLift", "Contexts", "Witness"}};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const ClosednessResult& c = results[i].closed;
    grid.push_back({g.player(i).name, to_string(g.player(i).selection), c.closed ? "yes" : "no",
                    results[i].attains_lift.attains ? "yes" : "no",
                    std::to_string(c.contexts_checked),
                    c.witness ? witness_text(*c.witness) : "-"});
  }
  print_grid(out, grid);
  return kExitOk;
}

inline int cmd_list(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::kJson) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["builtins"] = Json::array();
    for (const auto& e : builtin_catalog()) {
      j["builtins"].push_back(Json{{"name", e.name}, {"description", e.description}});
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  std::vector<std::vector<std::string>> grid;
  for (const auto& e : builtin_catalog()) grid.push_back({e.name, e.description});
  print_grid(out, grid);
  return kExitOk;
}

inline int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  out << render_game(load_game(cfg, err)).text;
  return kExitOk;
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria of higher-order games", "hog"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats = {{"table", Format::kTable},
                                                 {"json", Format::kJson}};
  const std::map<std::string, Concept> concepts = {{"both", Concept::kBoth},
                                                   {"selection", Concept::kSelection},
                                                   {"quantifier", Concept::kQuantifier}};
  auto add_input = [&](CLI::App* sub) {
    auto* file = sub->add_option("file", cfg.file, ".hog game description");
    sub->add_option("--builtin", cfg.builtin, "builtin game name (see `hog list`)")
        ->excludes(file);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  CLI::App* solve = app.add_subcommand("solve", "enumerate equilibria");
  add_input(solve);
  add_format(solve);
  solve->add_option("--concept", cfg.concept_filter, "which equilibrium concept to show")
      ->transform(CLI::CheckedTransformer(concepts, CLI::ignore_case));
  solve->add_option("--profile", cfg.profile, "check a single profile, e.g. B,B,A");
  solve->add_option("--max-profiles", cfg.max_profiles, "profile budget")
      ->check(CLI::PositiveNumber);
  solve->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);

  CLI::App* analyze = app.add_subcommand("analyze", "closedness and attainment per player");
  add_input(analyze);
  add_format(analyze);
  analyze->add_option("--max-contexts", cfg.max_contexts, "context budget per player")
      ->check(CLI::PositiveNumber);

  CLI::App* list = app.add_subcommand("list", "list builtin games");
  add_format(list);

  CLI::App* render = app.add_subcommand("render", "print a game in .hog syntax");
  add_input(render);

  std::vector<const char*> argv = {"hog"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return detail::cmd_solve(cfg, out, err);
    if (*analyze) return detail::cmd_analyze(cfg, out, err);
    if (*list) return detail::cmd_list(cfg, out);
    return detail::cmd_render(cfg, out, err);
  } catch (const detail::InputRejected&) {
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kBudgetExceeded ? kExitBudget : kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace hog::cli
