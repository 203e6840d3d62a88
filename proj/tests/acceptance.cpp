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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. The oracles here work on plain integers and strings and
// do not reuse the equilibrium engine.

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hog/cli.hpp"
#include "palette.hpp"

namespace {

using hog::Game;
using hog::StrategyProfile;
using Labels = std::vector<std::string>;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Labels compact(const Game& g, const std::vector<StrategyProfile>& profiles) {
  Labels out;
  for (const auto& p : profiles) {
    std::string s;
    for (const auto& l : g.labels(p)) s += l;
    out.push_back(s);
  }
  return out;
}

std::string show(const Labels& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "}";
}

std::string player_list(const Game& g, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i : idx) s += (s.empty() ? "" : ",") + g.player(i).name;
  return s;
}

// --- Voting tables ------------------------------------------------------------

struct Expected {
  Labels quantifier;
  Labels selection;
};

const Labels kAllProfiles = {"AAA", "AAB", "ABA", "ABB", "BAA", "BAB", "BBA", "BBB"};

// Strategy, outcome, quantifier flag, quantifier defectors, selection flag,
// selection defectors.
using TableRow = std::array<std::string, 6>;

const std::map<std::string, std::vector<TableRow>>& voting_tables() {
  static const std::map<std::string, std::vector<TableRow>> tables = {
      {"voting-keynes",
       {{"AAA", "A", "1", "", "1", ""},
        {"AAB", "A", "1", "", "0", "J3"},
        {"ABA", "A", "1", "", "0", "J2"},
        {"ABB", "B", "1", "", "1", ""},
        {"BAA", "A", "1", "", "1", ""},
        {"BAB", "B", "0", "J1", "0", "J1,J2"},
        {"BBA", "B", "0", "J1", "0", "J1,J3"},
        {"BBB", "B", "1", "", "1", ""}}},
      {"voting-allfix",
       {{"AAA", "A", "1", "", "1", ""},
        {"AAB", "A", "1", "", "0", "J3"},
        {"ABA", "A", "1", "", "0", "J2"},
        {"ABB", "B", "1", "", "0", "J1"},
        {"BAA", "A", "1", "", "0", "J1"},
        {"BAB", "B", "1", "", "0", "J2"},
        {"BBA", "B", "1", "", "0", "J3"},
        {"BBB", "B", "1", "", "1", ""}}},
      {"voting-allpunk",
       {{"AAA", "A", "1", "", "0", "J1,J2,J3"},
        {"AAB", "A", "1", "", "1", ""},
        {"ABA", "A", "1", "", "1", ""},
        {"ABB", "B", "1", "", "1", ""},
        {"BAA", "A", "1", "", "1", ""},
        {"BAB", "B", "1", "", "1", ""},
        {"BBA", "B", "1", "", "1", ""},
        {"BBB", "B", "1", "", "0", "J1,J2,J3"}}},
  };
  return tables;
}

void check_rows(Verdict& v, const std::string& name, const Game& g,
                const hog::EquilibriumReport& report) {
  const auto& rows = voting_tables().at(name);
  v.require(report.rows.size() == rows.size(), name + ": row count");
  for (std::size_t k = 0; k < rows.size() && k < report.rows.size(); ++k) {
    const auto& row = report.rows[k];
    const TableRow got = {compact(g, {row.profile})[0], hog::to_string(row.outcome),
                          row.quantifier_eq ? "1" : "0", player_list(g, row.quantifier_defectors),
                          row.selection_eq ? "1" : "0", player_list(g, row.selection_defectors)};
    v.require(got == rows[k], name + ": row " + rows[k][0] + " differs");
  }
}

Verdict criterion_classical() {
  Verdict v;
  const Game g = hog::builtin("voting-classical");
  const auto report = hog::enumerate_equilibria(g);
  const Labels want = {"AAA", "AAB", "BBB"};
  v.require(compact(g, report.quantifier_equilibria()) == want,
            "quantifier " + show(compact(g, report.quantifier_equilibria())));
  v.require(compact(g, report.selection_equilibria()) == want,
            "selection " + show(compact(g, report.selection_equilibria())));
  return v;
}

Verdict criterion_table(const std::string& name) {
  Verdict v;
  const Game g = hog::builtin(name);
  check_rows(v, name, g, hog::enumerate_equilibria(g));
  return v;
}

Verdict criterion_allpunk() {
  Verdict v = criterion_table("voting-allpunk");
  const Game g = hog::builtin("voting-allpunk");
  const auto report = hog::enumerate_equilibria(g);
  v.require(compact(g, report.selection_equilibria()) ==
                Labels({"AAB", "ABA", "ABB", "BAA", "BAB", "BBA"}),
            "selection equilibria are not the non-unanimous profiles");
  v.require(compact(g, report.quantifier_equilibria()) == kAllProfiles,
            "quantifier column is not all true");
  return v;
}

// --- Criterion 5: classical coincidence ---------------------------------------

// Nash oracle on plain integers. cells[k] is the payoff vector of the k-th
// profile, last player fastest.
Labels integer_nash(const std::vector<std::size_t>& widths,
                    const std::vector<std::vector<int>>& cells) {
  const std::size_t n = widths.size();
  auto index = [&](const std::vector<std::size_t>& p) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k = k * widths[i] + p[i];
    return k;
  };
  Labels out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<std::size_t> p(n);
    std::size_t rest = c;
    for (std::size_t i = n; i-- > 0;) {
      p[i] = rest % widths[i];
      rest /= widths[i];
    }
    bool stable = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto q = p;
      for (q[i] = 0; q[i] < widths[i]; ++q[i]) {
        if (cells[index(q)][i] > cells[c][i]) stable = false;
      }
    }
    if (stable) {
      std::string s;
      for (std::size_t x : p) s += static_cast<char>('a' + x);
      out.push_back(s);
    }
  }
  return out;
}

Verdict criterion_bridge(std::size_t& matrices) {
  Verdict v;
  std::mt19937_64 rng(20260501);
  const std::vector<std::string> abc = {"a", "b", "c"};
  for (matrices = 0; matrices < 300; ++matrices) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
    std::vector<std::size_t> widths;
    std::vector<hog::MoveSet> moves;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      widths.push_back(std::uniform_int_distribution<std::size_t>(2, 3)(rng));
      moves.emplace_back(std::vector<std::string>(abc.begin(), abc.begin() + static_cast<long>(widths[i])));
      total *= widths[i];
    }
    std::vector<std::vector<int>> cells(total, std::vector<int>(n));
    std::vector<hog::PayoffMatrix::Payoffs> payoffs;
    for (auto& cell : cells) {
      hog::PayoffMatrix::Payoffs p;
      for (auto& u : cell) {
        u = std::uniform_int_distribution<int>(0, 3)(rng);
        p.emplace_back(u);
      }
      payoffs.push_back(std::move(p));
    }
    const auto m = hog::PayoffMatrix::anonymous(moves, payoffs);
    const Labels oracle = integer_nash(widths, cells);
    Labels nash;
    for (const auto& p : hog::brute_force_nash(m)) {
      std::string s;
      for (std::size_t i = 0; i < p.size(); ++i) s += m.moves()[i][p[i]];
      nash.push_back(s);
    }
    const Game g = hog::classical_game(m);
    const auto report = hog::enumerate_equilibria(g);
    const std::string tag = "matrix " + std::to_string(matrices) + ": ";
    v.require(nash == oracle, tag + "brute_force_nash " + show(nash) + " vs " + show(oracle));
    v.require(compact(g, report.selection_equilibria()) == nash, tag + "selection mismatch");
    v.require(compact(g, report.quantifier_equilibria()) == nash, tag + "quantifier mismatch");
  }
  return v;
}

// --- Criterion 6: refinement --------------------------------------------------

void check_refinement(Verdict& v, const Game& g) {
  const auto report = hog::enumerate_equilibria(g);
  for (const auto& row : report.rows) {
    v.require(!row.selection_eq || row.quantifier_eq,
              g.name() + ": selection equilibrium " + compact(g, {row.profile})[0] +
                  " is not a quantifier equilibrium");
  }
}

Verdict criterion_refinement(std::size_t& games) {
  Verdict v;
  games = 0;
  for (const auto& name : hog::builtin_names()) {
    check_refinement(v, hog::builtin(name));
    ++games;
  }
  hog::testing::Rng rng(6);
  for (std::size_t k = 0; k < 150; ++k, ++games) {
    check_refinement(v, hog::testing::random_palette_game(rng, k));
  }
  return v;
}

// --- Criterion 7: closure laws ------------------------------------------------

bool subset(const hog::MoveIndexSet& a, const hog::MoveIndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Verdict criterion_closure(std::uint64_t& checks) {
  Verdict v;
  checks = 0;
  for (const auto& shape : hog::testing::small_shapes(3, 3)) {
    const std::string where = shape.name + " |X|=" + std::to_string(shape.domain.size()) +
                              " |R|=" + std::to_string(shape.codomain.cardinality());
    for (const auto& f : hog::testing::quantifier_palette(shape)) {
      const auto twice = hog::lift_selection(hog::lift_quantifier(f));
      hog::for_each_context(shape.domain, shape.codomain, hog::kDefaultContextBudget,
                            [&](const hog::GameContext& p) {
                              ++checks;
                              v.require(hog::eval_quantifier(twice, p) == hog::eval_quantifier(f, p),
                                        where + ": double lift of " + hog::to_string(f) + " at " +
                                            hog::to_string(p));
                              return true;
                            });
    }
    for (const auto& e : hog::testing::selection_palette(shape)) {
      const auto closure = hog::closure_of(e);
      bool fixed = true;
      hog::for_each_context(shape.domain, shape.codomain, hog::kDefaultContextBudget,
                            [&](const hog::GameContext& p) {
                              ++checks;
                              const auto a = hog::eval_selection(e, p);
                              const auto b = hog::eval_selection(closure, p);
                              v.require(subset(a, b), where + ": " + hog::to_string(e) +
                                                          " not extensive at " + hog::to_string(p));
                              fixed = fixed && a == b;
                              return true;
                            });
      const bool closed = hog::is_closed(e, shape.domain, shape.codomain).closed;
      v.require(closed == fixed, where + ": closedness of " + hog::to_string(e) +
                                     " disagrees with its closure");
    }
  }
  return v;
}

// --- Criterion 8: witnesses ---------------------------------------------------

Verdict criterion_witnesses() {
  Verdict v;
  const hog::MoveSet ab{"A", "B"};
  const auto atoms = hog::OutcomeSpace::atoms(ab);
  const auto fix = hog::is_closed(hog::make_fix(), ab, atoms);
  v.require(!fix.closed, "fix reported closed");
  v.require(fix.witness.has_value(), "no witness for fix");
  if (fix.witness) {
    const auto& w = *fix.witness;
    const auto good = hog::eval_selection(hog::make_fix(), w.context);
    v.require(hog::contains(good, w.good), "witness move is not selected");
    v.require(!hog::contains(good, w.excluded), "excluded move is selected");
    v.require(w.context(w.good) == w.context(w.excluded), "witness moves differ in outcome");
    v.require(hog::to_string(w.context) == "{A->A, B->A}" && ab[w.good] == "A" &&
                  ab[w.excluded] == "B",
              "witness is " + hog::to_string(w.context));
  }
  for (std::size_t nv = 1; nv <= 3; ++nv) {
    std::vector<hog::Rational> values;
    for (std::size_t k = 0; k < nv; ++k) values.emplace_back(static_cast<std::int64_t>(k));
    for (std::size_t dim = 1; dim <= 2; ++dim) {
      const auto space = hog::OutcomeSpace::vector(dim, values);
      for (std::size_t nx = 1; nx <= 3; ++nx) {
        for (std::size_t i = 1; i <= dim; ++i) {
          v.require(hog::is_closed(hog::make_argmax_coord(i), hog::testing::first_labels(nx), space)
                        .closed,
                    "argmax(coord: " + std::to_string(i) + ") not closed");
        }
      }
    }
  }
  return v;
}

// --- Criterion 9: derived fixtures --------------------------------------------

// Two players, two moves each; outcomes are pairs of labels. Each goal maps
// the opponent's move and the own unilateral context to the good moves.
using Pair = std::array<std::string, 2>;
using Context2 = std::array<Pair, 2>;
using Goal2 = std::function<std::vector<int>(const Context2&)>;

struct Derived {
  Labels selection;
  Labels quantifier;
};

Derived four_profiles(const Labels& m, const std::function<Pair(int, int)>& q, const Goal2& g1,
                      const Goal2& g2) {
  Derived out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Context2 u1 = {q(0, b), q(1, b)};
      const Context2 u2 = {q(a, 0), q(a, 1)};
      const auto e1 = g1(u1);
      const auto e2 = g2(u2);
      auto has = [](const std::vector<int>& s, int x) {
        return std::find(s.begin(), s.end(), x) != s.end();
      };
      auto reaches = [&](const std::vector<int>& s, const Context2& u) {
        for (int x : s) {
          if (u[static_cast<std::size_t>(x)] == q(a, b)) return true;
        }
        return false;
      };
      if (has(e1, a) && has(e2, b)) out.selection.push_back(m[static_cast<std::size_t>(a)] + m[static_cast<std::size_t>(b)]);
      if (reaches(e1, u1) && reaches(e2, u2)) out.quantifier.push_back(m[static_cast<std::size_t>(a)] + m[static_cast<std::size_t>(b)]);
    }
  }
  return out;
}

std::vector<int> filter_or_all(const std::function<bool(int)>& keep) {
  std::vector<int> out;
  for (int x = 0; x < 2; ++x) {
    if (keep(x)) out.push_back(x);
  }
  return out.empty() ? std::vector<int>{0, 1} : out;
}

Derived derived_fixture(const std::string& name) {
  const auto label = [](const Labels& m) {
    return [m](int a, int b) { return Pair{m[static_cast<std::size_t>(a)], m[static_cast<std::size_t>(b)]}; };
  };
  // Goal "coordinate c of the outcome equals (or differs from) my move".
  const auto projected = [](const Labels& m, int c, bool equal) -> Goal2 {
    return [=](const Context2& u) {
      return filter_or_all([&](int x) {
        return (u[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] == m[static_cast<std::size_t>(x)]) == equal;
      });
    };
  };
  // Meet first; among meetings prefer coordinate c to be v.
  const auto lex = [](int c, const std::string& v) -> Goal2 {
    return [=](const Context2& u) {
      const auto meet = filter_or_all([&](int x) {
        return u[static_cast<std::size_t>(x)][0] == u[static_cast<std::size_t>(x)][1];
      });
      std::vector<int> both;
      for (int x : meet) {
        if (u[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] == v) both.push_back(x);
      }
      return both.empty() ? meet : both;
    };
  };
  if (name == "meeting-ny") {
    const Labels m = {"E", "G"};
    return four_profiles(m, label(m), projected(m, 1, true), projected(m, 0, true));
  }
  if (name == "matching-pennies") {
    const Labels m = {"H", "T"};
    return four_profiles(m, label(m), projected(m, 1, true), projected(m, 0, false));
  }
  const Labels m = {"B", "F"};
  if (name == "bos-lex") return four_profiles(m, label(m), lex(0, "B"), lex(1, "F"));
  return four_profiles(
      m, [](int a, int b) { return a == 0 && b == 1 ? Pair{"B", "B"} : Pair{a ? "F" : "B", b ? "F" : "B"}; },
      lex(0, "B"), lex(1, "F"));
}

const Labels kDerivedGames = {"meeting-ny", "matching-pennies", "bos-lex", "bos-agreement"};

Verdict criterion_derived(std::string& agreement) {
  Verdict v;
  const std::map<std::string, Labels> fixed = {
      {"meeting-ny", {"EE", "GG"}}, {"matching-pennies", {}}, {"bos-lex", {"BB", "FF"}}};
  for (const auto& name : kDerivedGames) {
    const Derived oracle = derived_fixture(name);
    if (auto it = fixed.find(name); it != fixed.end()) {
      v.require(oracle.selection == it->second, name + ": oracle gives " + show(oracle.selection));
    }
    if (name == "matching-pennies") {
      v.require(oracle.quantifier.empty(), "matching-pennies: oracle quantifier equilibria");
    }
    const Game g = hog::builtin(name);
    const auto report = hog::enumerate_equilibria(g);
    v.require(compact(g, report.selection_equilibria()) == oracle.selection,
              name + ": selection equilibria " + show(compact(g, report.selection_equilibria())) +
                  " vs oracle " + show(oracle.selection));
    v.require(compact(g, report.quantifier_equilibria()) == oracle.quantifier,
              name + ": quantifier equilibria " + show(compact(g, report.quantifier_equilibria())) +
                  " vs oracle " + show(oracle.quantifier));
    if (name == "bos-agreement") agreement = show(oracle.selection);
  }
  return v;
}

// --- Criterion 10: DSL round-trip ---------------------------------------------

Labels json_profiles(const nlohmann::json& list) {
  Labels out;
  for (const auto& p : list) {
    std::string s;
    for (const auto& l : p) s += l.get<std::string>();
    out.push_back(s);
  }
  return out;
}

Verdict criterion_roundtrip() {
  Verdict v;
  const auto dir = std::filesystem::temp_directory_path() / "hog_acceptance";
  std::filesystem::create_directories(dir);
  for (const auto& name : hog::builtin_names()) {
    const Game g = hog::builtin(name);
    const auto src = hog::render_game(g);
    const auto parsed = hog::parse_game(src);
    v.require(parsed.game.has_value() && *parsed.game == g, name + ": parse(render(g)) != g");

    const auto path = (dir / (name + ".hog")).string();
    std::ofstream(path) << src.text;
    std::ostringstream out;
    std::ostringstream err;
    const int code = hog::cli::run({"solve", path, "--format", "json"}, out, err);
    v.require(code == 0, name + ": solving the rendered file failed: " + err.str());
    if (code != 0) continue;
    const auto j = nlohmann::json::parse(out.str());
    const Labels q = json_profiles(j["quantifier_equilibria"]);
    const Labels s = json_profiles(j["selection_equilibria"]);

    if (name == "voting-classical") {
      v.require(q == Labels({"AAA", "AAB", "BBB"}) && s == q, name + ": equilibria differ");
    }
    if (auto it = voting_tables().find(name); it != voting_tables().end()) {
      for (std::size_t k = 0; k < it->second.size(); ++k) {
        const auto& want = it->second[k];
        const auto& row = j["rows"][k];
        const std::string strategy = json_profiles(nlohmann::json::array({row["strategy"]}))[0];
        auto joined = [](const nlohmann::json& a) {
          std::string t;
          for (const auto& x : a) t += (t.empty() ? "" : ",") + x.get<std::string>();
          return t;
        };
        const TableRow got = {strategy, row["outcome"].get<std::string>(),
                              row["quantifier_eq"].get<bool>() ? "1" : "0",
                              joined(row["quantifier_defectors"]),
                              row["selection_eq"].get<bool>() ? "1" : "0",
                              joined(row["selection_defectors"])};
        v.require(got == want, name + ": rendered row " + want[0] + " differs");
      }
    }
    if (std::find(kDerivedGames.begin(), kDerivedGames.end(), name) != kDerivedGames.end()) {
      const Derived oracle = derived_fixture(name);
      v.require(s == oracle.selection && q == oracle.quantifier,
                name + ": rendered equilibria differ from the oracle");
    }
  }
  std::filesystem::remove_all(dir);
  return v;
}

// --- Runner -------------------------------------------------------------------

int failures = 0;

void report(int id, const std::string& title, const std::function<Verdict(std::string&)>& body,
            double limit_seconds = 0) {
  std::string note;
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body(note);
  } catch (const std::exception& e) {
    v.ok = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (v.ok && limit_seconds > 0 && seconds >= limit_seconds) {
    v.ok = false;
    v.detail = "took longer than " + std::to_string(limit_seconds) + " s";
  }
  std::ostringstream line;
  line << (v.ok ? "PASS" : "FAIL") << "  [" << id << "] " << title;
  if (!note.empty()) line << " (" << note << ")";
  line << " — " << std::fixed;
  line.precision(3);
  line << seconds << " s";
  if (!v.ok) line << ": " << v.detail;
  std::cout << line.str() << std::endl;
  if (!v.ok) ++failures;
}

}  // namespace

int main() {
  report(1, "classical voting: quantifier = selection = {AAA,AAB,BBB}",
         [](std::string&) { return criterion_classical(); }, 1.0);
  report(2, "keynesian voting: every row, flag and defect cell",
         [](std::string&) {
           Verdict v = criterion_table("voting-keynes");
           const Game g = hog::builtin("voting-keynes");
           const auto r = hog::enumerate_equilibria(g);
           v.require(compact(g, r.selection_equilibria()) ==
                         Labels({"AAA", "ABB", "BAA", "BBB"}),
                     "selection equilibria");
           return v;
         },
         1.0);
  report(3, "all-fix voting: all quantifier, selection {AAA,BBB}, defects",
         [](std::string&) {
           Verdict v = criterion_table("voting-allfix");
           const Game g = hog::builtin("voting-allfix");
           const auto r = hog::enumerate_equilibria(g);
           v.require(compact(g, r.quantifier_equilibria()) == kAllProfiles, "quantifier column");
           v.require(compact(g, r.selection_equilibria()) == Labels({"AAA", "BBB"}),
                     "selection equilibria");
           return v;
         },
         1.0);
  report(4, "all-punk voting: six non-unanimous selection equilibria",
         [](std::string&) { return criterion_allpunk(); }, 1.0);
  report(5, "payoff bridge: nash = selection = quantifier on random matrices",
         [](std::string& note) {
           std::size_t n = 0;
           Verdict v = criterion_bridge(n);
           note = std::to_string(n) + " matrices";
           return v;
         },
         30.0);
  report(6, "refinement: selection equilibria are quantifier equilibria",
         [](std::string& note) {
           std::size_t n = 0;
           Verdict v = criterion_refinement(n);
           note = std::to_string(n) + " games";
           return v;
         });
  report(7, "closure laws over |X|,|R| <= 3",
         [](std::string& note) {
           std::uint64_t n = 0;
           Verdict v = criterion_closure(n);
           note = std::to_string(n) + " evaluations";
           return v;
         },
         10.0);
  report(8, "closedness witnesses: fix open with witness, argmax(coord) closed",
         [](std::string&) { return criterion_witnesses(); });
  report(9, "derived two-player fixtures match the four-profile oracle",
         [](std::string& note) {
           std::string agreement;
           Verdict v = criterion_derived(agreement);
           note = "bos-agreement " + agreement;
           return v;
         });
  report(10, "dsl round-trip and solving rendered files",
         [](std::string&) { return criterion_roundtrip(); });
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
