//  Copyright 2026 The soberkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


#include <gtest/gtest.h>

#include <sstream>

#include "soberkit/cli.hpp"
#include "support.hpp"

namespace {

using namespace soberkit;

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_space(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Parse, Examples) {
  const Space l = parse_space("poset 3\n0 < 1\n0 < 2\n");
  EXPECT_EQ(l.poset(), FinPoset::lambda());
  EXPECT_EQ(parse_space("poset 1\n").poset().size(), 1U);
  EXPECT_TRUE(parse_space("# comment\ncofinite\n").is_cofinite());
  EXPECT_EQ(parse_space("cofinite Nat\n").cofinite_carrier().name, "Nat");
  EXPECT_EQ(parse_space("  poset   2  # two points\n\n 0<1 \n").poset(), FinPoset::chain(2));
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("poset 2\n0 < 1\n1 < 0\n"), 3U);
  EXPECT_EQ(parse_error_line("poset 2\n0 < 2\n"), 2U);
  EXPECT_EQ(parse_error_line("lattice 2\n"), 1U);
  EXPECT_EQ(parse_error_line("\n# x\nposet 2\n0 < 1\n0 < 1\n"), 5U);
  EXPECT_EQ(parse_error_line("poset 2\nposet 2\n"), 2U);
  EXPECT_EQ(parse_error_line("poset 2\n0 1\n"), 2U);
  EXPECT_EQ(parse_error_line("poset 3\n0 < 0\n"), 2U);
  EXPECT_EQ(parse_error_line("cofinite\n0 < 1\n"), 2U);
  EXPECT_EQ(parse_error_line("poset x\n"), 1U);
  EXPECT_THROW(parse_space(""), ParseError);
  EXPECT_EQ(parse_error_line("poset 3\n0 < 1\n1 < 2\n2 < 0\n"), 4U);
}

TEST(Parse, RoundTripIsIsomorphic) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const FinPoset p = random_poset(rng, 1 + rng.below(8));
    const Space back = parse_space(serialize_space(Space(p)));
    EXPECT_TRUE(find_isomorphism(p, back.poset()).has_value());
  }
  EXPECT_EQ(serialize_space(parse_space("cofinite N\n")), "cofinite N\n");
}

RunConfig records() {
  RunConfig cfg;
  cfg.format = OutputFormat::Records;
  return cfg;
}

std::vector<nlohmann::json> lines(const std::string& out) {
  std::vector<nlohmann::json> v;
  std::istringstream in(out);
  for (std::string l; std::getline(in, l);) v.push_back(nlohmann::json::parse(l));
  return v;
}

nlohmann::json find_key(const std::vector<nlohmann::json>& recs, const std::string& key) {
  for (const auto& r : recs)
    if (r["key"] == key) return r;
  return {};
}

TEST(Run, ClassifyLambda) {
  std::ostringstream out;
  EXPECT_EQ(run_command({"classify", "", Space(FinPoset::lambda()), "lambda"}, records(), out), 0);
  const auto recs = lines(out.str());
  EXPECT_EQ(recs.size(), kFlagNames.size());
  EXPECT_EQ(find_key(recs, "sober")["value"], true);
  EXPECT_EQ(recs.front()["command"], "classify");
  EXPECT_EQ(recs.front()["instance"], "lambda");
}

TEST(Run, ClassifyCofinite) {
  std::ostringstream out;
  run_command({"classify", "", Space::cofinite(), "cof"}, records(), out);
  const auto wf = find_key(lines(out.str()), "well_filtered");
  EXPECT_EQ(wf["value"], false);
  EXPECT_EQ(wf["witness"].get<std::string>().rfind("CofiniteTails", 0), 0U);
}

TEST(Run, VerifyHofmannMisloveOnChain) {
  std::ostringstream out;
  RunConfig cfg = records();
  cfg.suite = {"hofmann-mislove"};
  EXPECT_EQ(run_command({"verify", "", Space(FinPoset::chain(2)), "c2"}, cfg, out), 0);
  const auto r = find_key(lines(out.str()), "hofmann-mislove");
  EXPECT_EQ(r["value"], "pass");
  EXPECT_NE(r["detail"].get<std::string>().find("|OFilt|=2"), std::string::npos);
}

TEST(Run, OtherCommands) {
  std::ostringstream out;
  const Command fam{"families", "", Space(FinPoset::lambda()), "l"};
  EXPECT_EQ(run_command(fam, records(), out), 0);
  EXPECT_EQ(find_key(lines(out.str()), "irr_c")["count"], 3);
  EXPECT_EQ(find_key(lines(out.str()), "k")["count"], 4);
  out.str("");
  EXPECT_EQ(run_command({"powerspace", "smyth", Space(FinPoset::chain(2)), "c"}, records(), out), 0);
  EXPECT_EQ(find_key(lines(out.str()), "points")["count"], 2);
  out.str("");
  EXPECT_EQ(run_command({"reflect", "wf", Space::cofinite(), "cof"}, records(), out), 0);
  EXPECT_EQ(find_key(lines(out.str()), "added_points")["value"], 1);
  out.str("");
  EXPECT_EQ(run_command({"reflect", "sober", Space(FinPoset::vee()), "v"}, RunConfig{}, out), 0);
  EXPECT_NE(out.str().find("v homeomorphism = "), std::string::npos);
  EXPECT_THROW(run_command({"powerspace", "vietoris", Space(FinPoset::vee()), "v"}, RunConfig{}, out),
               PreconditionError);
  EXPECT_THROW(run_command({"classify", "", std::nullopt, ""}, RunConfig{}, out), PreconditionError);
  EXPECT_THROW(run_command({"frobnicate", "", std::nullopt, ""}, RunConfig{}, out), PreconditionError);
}

TEST(Run, ConfigValidation) {
  RunConfig cfg;
  cfg.caps.carrier = 0;
  std::ostringstream out;
  EXPECT_THROW(run_command({"search", "", std::nullopt, ""}, cfg, out), PreconditionError);
}

TEST(Search, EmptyAndSeeded) {
  RunConfig cfg = records();
  cfg.count = 0;
  const SearchSummary empty = random_poset_search(cfg);
  EXPECT_EQ(empty.instances, 0U);
  EXPECT_TRUE(empty.failures.empty());
  cfg.count = 10;
  cfg.seed = 1;
  const SearchSummary s = random_poset_search(cfg);
  EXPECT_EQ(s.instances, 10U);
  EXPECT_TRUE(s.failures.empty());
}

TEST(Search, ByteIdenticalOutput) {
  RunConfig cfg = records();
  cfg.count = 5;
  cfg.seed = 77;
  std::ostringstream a;
  std::ostringstream b;
  EXPECT_EQ(run_command({"search", "", std::nullopt, ""}, cfg, a), 0);
  EXPECT_EQ(run_command({"search", "", std::nullopt, ""}, cfg, b), 0);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_FALSE(a.str().empty());
}

}  // namespace
