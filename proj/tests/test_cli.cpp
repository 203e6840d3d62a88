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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hog/cli.hpp"
#include "support.hpp"

namespace hog {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string game_file(const std::string& name) {
  return std::string(HOG_GAMES_DIR) + "/" + name + ".hog";
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hog_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string s; std::getline(in, s);) out.push_back(s);
  return out;
}

std::vector<std::string> columns(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string s; in >> s;) out.push_back(s);
  return out;
}

TEST(CliListTest, TableAndJson) {
  const auto r = run({"list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("voting-keynes"), std::string::npos);
  EXPECT_NE(r.out.find("bos-agreement"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"list", "--format", "json"}).out);
  EXPECT_EQ(j["schema_version"], 1);
  std::vector<std::string> names;
  for (const auto& e : j["builtins"]) names.push_back(e["name"]);
  EXPECT_EQ(names, builtin_names());
}

TEST(CliSolveTest, KeynesTable) {
  const auto r = run({"solve", "--builtin", "voting-keynes", "--format", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto out = lines(r.out);
  auto header = std::find_if(out.begin(), out.end(),
                             [](const std::string& l) { return l.rfind("Strategy", 0) == 0; });
  ASSERT_NE(header, out.end());
  EXPECT_EQ(columns(*header), (std::vector<std::string>{"Strategy", "Outcome", "QuantifierEq",
                                                        "QDefects", "SelectionEq", "SDefects"}));
  const std::vector<std::vector<std::string>> expected = {
      {"AAA", "A", "yes", "-", "yes", "-"},    {"AAB", "A", "yes", "-", "no", "J3"},
      {"ABA", "A", "yes", "-", "no", "J2"},    {"ABB", "B", "yes", "-", "yes", "-"},
      {"BAA", "A", "yes", "-", "yes", "-"},    {"BAB", "B", "no", "J1", "no", "J1,J2"},
      {"BBA", "B", "no", "J1", "no", "J1,J3"}, {"BBB", "B", "yes", "-", "yes", "-"}};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    ASSERT_LT(header + 1 + static_cast<long>(k), out.end());
    EXPECT_EQ(columns(*(header + 1 + static_cast<long>(k))), expected[k]);
  }
  EXPECT_NE(r.out.find("selection equilibria (4): AAA ABB BAA BBB"), std::string::npos);
  EXPECT_NE(r.out.find("quantifier equilibria (6): AAA AAB ABA ABB BAA BBB"), std::string::npos);
}

TEST(CliSolveTest, AllPunkJson) {
  const auto r = run({"solve", "--builtin", "voting-allpunk", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["game"], "voting-allpunk");
  EXPECT_EQ(j["rows"].size(), 8u);
  std::vector<std::string> eq;
  for (const auto& s : j["selection_equilibria"]) {
    std::string t;
    for (const auto& l : s) t += l.get<std::string>();
    eq.push_back(t);
  }
  EXPECT_EQ(eq, (std::vector<std::string>{"AAB", "ABA", "ABB", "BAA", "BAB", "BBA"}));
  EXPECT_EQ(j["rows"][0]["selection_defectors"],
            (nlohmann::json{"J1", "J2", "J3"}));
  for (const auto& row : j["rows"]) EXPECT_TRUE(row["quantifier_eq"].get<bool>());
}

TEST(CliSolveTest, SingleProfileFromFile) {
  for (const std::string profile : {"B,B,A", "BBA"}) {
    const auto r = run({"solve", game_file("voting-keynes"), "--profile", profile, "--format",
                        "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["rows"].size(), 1u);
    const auto& row = j["rows"][0];
    EXPECT_EQ(row["strategy"], (nlohmann::json{"B", "B", "A"}));
    EXPECT_FALSE(row["selection_eq"].get<bool>());
    EXPECT_EQ(row["selection_defectors"], (nlohmann::json{"J1", "J3"}));
    EXPECT_EQ(row["quantifier_defectors"], (nlohmann::json{"J1"}));
  }
}

TEST(CliSolveTest, ProductOutcomesAndCommaJoinedStrategies) {
  const auto r = run({"solve", "--builtin", "bos-agreement"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("BF        (B,B)"), std::string::npos) << r.out;
  const auto vec = run({"solve", game_file("bos-payoffs"), "--format", "json"});
  ASSERT_EQ(vec.code, 0) << vec.err;
  const auto j = nlohmann::json::parse(vec.out);
  EXPECT_EQ(j["rows"][0]["outcome"], (nlohmann::json{"3", "2"}));
}

TEST(CliSolveTest, MultiCharacterLabelsAreCommaJoined) {
  const auto path = temp_file("labels.hog", R"(game labels
moves P = { left, right }
moves Q = { left, right }
outcomes = product
outcome_fn = identity
player P = fix(coord: 2)
player Q = fix(coord: 1)
)");
  const auto r = run({"solve", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("left,left"), std::string::npos);
  EXPECT_NE(r.out.find("selection equilibria (2): left,left right,right"), std::string::npos);
  EXPECT_EQ(run({"solve", path, "--profile", "left, right"}).code, 0);
}

TEST(CliSolveTest, ConceptFilter) {
  const auto sel = run({"solve", "--builtin", "voting-keynes", "--concept", "selection"});
  ASSERT_EQ(sel.code, 0);
  EXPECT_EQ(sel.out.find("QuantifierEq"), std::string::npos);
  EXPECT_NE(sel.out.find("SelectionEq"), std::string::npos);
  const auto q = nlohmann::json::parse(
      run({"solve", "--builtin", "voting-keynes", "--concept", "quantifier", "--format", "json"})
          .out);
  EXPECT_TRUE(q.contains("quantifier_equilibria"));
  EXPECT_FALSE(q.contains("selection_equilibria"));
  EXPECT_FALSE(q["rows"][0].contains("selection_eq"));
}

TEST(CliSolveTest, JsonIsDeterministicAcrossRunsAndThreads) {
  for (const auto& name : builtin_names()) {
    const auto a = run({"solve", "--builtin", name, "--format", "json"});
    const auto b = run({"solve", "--builtin", name, "--format", "json"});
    const auto c = run({"solve", "--builtin", name, "--format", "json", "--threads", "4"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
  }
}

TEST(CliSolveTest, TableAndJsonAgree) {
  const auto table = run({"solve", "--builtin", "voting-allfix"}).out;
  const auto j = nlohmann::json::parse(run({"solve", "--builtin", "voting-allfix", "--format",
                                            "json"}).out);
  for (const auto& row : j["rows"]) {
    std::string strategy;
    for (const auto& l : row["strategy"]) strategy += l.get<std::string>();
    const auto pos = table.find("\n" + strategy + " ");
    ASSERT_NE(pos, std::string::npos);
    const auto cols = columns(table.substr(pos + 1, table.find('\n', pos + 1) - pos - 1));
    EXPECT_EQ(cols[2], row["quantifier_eq"].get<bool>() ? "yes" : "no");
    EXPECT_EQ(cols[4], row["selection_eq"].get<bool>() ? "yes" : "no");
  }
}

TEST(CliAnalyzeTest, Closedness) {
  auto analyze = [](const std::string& name) {
    const auto r = run({"analyze", "--builtin", name, "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
  };
  for (const auto& p : analyze("voting-classical")["players"]) {
    EXPECT_TRUE(p["closed"].get<bool>());
    EXPECT_TRUE(p["witness"].is_null());
    EXPECT_TRUE(p["attains_own_lift"].get<bool>());
  }
  const auto keynes = analyze("voting-keynes")["players"];
  EXPECT_TRUE(keynes[0]["closed"].get<bool>());
  for (int i : {1, 2}) {
    EXPECT_FALSE(keynes[i]["closed"].get<bool>());
    EXPECT_EQ(keynes[i]["witness"]["context"], (nlohmann::json{{"A", "A"}, {"B", "A"}}));
    EXPECT_EQ(keynes[i]["witness"]["selected"], "A");
    EXPECT_EQ(keynes[i]["witness"]["excluded"], "B");
  }
  for (const auto& p : analyze("matching-pennies")["players"]) {
    EXPECT_FALSE(p["closed"].get<bool>());
    EXPECT_EQ(p["contexts_checked"].get<int>() <= 16, true);
  }
}

TEST(CliAnalyzeTest, TableFormat) {
  const auto r = run({"analyze", "--builtin", "voting-keynes"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Closed"), std::string::npos);
  EXPECT_NE(r.out.find("p = {A->A, B->A}: A selected, B not, both reach A"), std::string::npos);
}

TEST(CliRenderTest, PrintsCanonicalText) {
  const auto r = run({"render", "--builtin", "bos-lex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, render_game(builtin("bos-lex")).text);
  const auto f = run({"render", game_file("voting-keynes")});
  EXPECT_EQ(f.out, render_game(builtin("voting-keynes")).text);
}

TEST(CliExitCodeTest, InputErrors) {
  EXPECT_EQ(run({"solve", "--builtin", "nope"}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"solve", game_file("voting-keynes"), "--builtin", "voting-keynes"}).code, 2);
  EXPECT_EQ(run({"solve", "/nonexistent/file.hog"}).code, 2);
  EXPECT_EQ(run({"solve", "--builtin", "voting-keynes", "--profile", "A,A"}).code, 2);
  EXPECT_EQ(run({"solve", "--builtin", "voting-keynes", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"solve", "--builtin", "voting-keynes", "--max-profiles", "0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"render", "--builtin", "nope"}).code, 2);
}

TEST(CliExitCodeTest, ParseErrorsGoToStderr) {
  const auto path = temp_file("bad.hog", "moves P = { A, B }\nplayer P = wat\n");
  const auto r = run({"solve", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find(path + ":2:12: error: [UnknownConstructor]"), std::string::npos) << r.err;
}

TEST(CliExitCodeTest, Budgets) {
  EXPECT_EQ(run({"solve", "--builtin", "voting-keynes", "--max-profiles", "7"}).code, 3);
  EXPECT_EQ(run({"solve", "--builtin", "voting-keynes", "--max-profiles", "8"}).code, 0);
  EXPECT_EQ(run({"analyze", "--builtin", "meeting-ny", "--max-contexts", "15"}).code, 3);
  EXPECT_EQ(run({"analyze", "--builtin", "meeting-ny", "--max-contexts", "16"}).code, 0);
}

TEST(CliExitCodeTest, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

}  // namespace
}  // namespace hog
