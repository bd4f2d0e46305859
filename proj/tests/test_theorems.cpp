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

#include "support.hpp"

namespace {

using namespace soberkit;

TEST(Theorems, RegistryIsSortedAndUnique) {
  const auto ids = theorem_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
  EXPECT_EQ(select_theorems({}), ids);
  EXPECT_EQ(select_theorems({"all"}), ids);
  EXPECT_EQ(select_theorems({"wf.min", "d-space.7cond", "wf.min"}),
            (std::vector<std::string>{"d-space.7cond", "wf.min"}));
  EXPECT_THROW(select_theorems({"no-such-theorem"}), PreconditionError);
}

TEST(Theorems, AllPassOnSmallPosets) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    for (const auto& r : verify_theorems(Space(p), {})) {
      EXPECT_NE(r.verdict, Outcome::Fail) << r.id << ": " << r.witness;
      if (r.id != "cofinite.example") {
        EXPECT_EQ(r.verdict, Outcome::Pass) << r.id << ": " << r.detail;
      }
    }
  }
}

TEST(Theorems, CofiniteReportsPassOrNotApplicable) {
  for (const auto& r : verify_theorems(Space::cofinite(), {})) {
    EXPECT_NE(r.verdict, Outcome::Fail) << r.id << ": " << r.witness;
  }
  const auto r = verify_theorems(Space::cofinite(), {"cofinite.example", "d-space.7cond"});
  ASSERT_EQ(r.size(), 2U);
  EXPECT_EQ(r[0].verdict, Outcome::Pass);
  EXPECT_EQ(r[1].verdict, Outcome::NotApplicable);
}

TEST(Theorems, HofmannMisloveOnChain) {
  const auto r = verify_theorems(Space(FinPoset::chain(2)), {"hofmann-mislove"});
  ASSERT_EQ(r.size(), 1U);
  EXPECT_EQ(r[0].verdict, Outcome::Pass);
  EXPECT_NE(r[0].detail.find("|OFilt|=2"), std::string::npos);
}

TEST(Theorems, CapExceededIsNotApplicable) {
  Caps caps;
  caps.subset_sweep = 2;
  const auto r = verify_theorems(Space(FinPoset::chain(3)), {"order.cut-closure"}, caps);
  EXPECT_EQ(r[0].verdict, Outcome::NotApplicable);
  EXPECT_NE(r[0].detail.find("cap exceeded"), std::string::npos);
}

TEST(Theorems, ImplicationWithFalseHypothesisIsNotApplicable) {
  const auto r = detail::implication("t", {"h", false, "x"}, {"c", false, "y"});
  EXPECT_EQ(r.verdict, Outcome::NotApplicable);
  const auto f = detail::implication("t", {"h", true, ""}, {"c", false, "why"});
  EXPECT_EQ(f.verdict, Outcome::Fail);
  EXPECT_EQ(f.witness, "why");
  const auto e = detail::equivalence("t", {{"a", true, ""}, {"b", false, "w"}}, false);
  EXPECT_EQ(e.verdict, Outcome::Fail);
  EXPECT_NE(e.witness.find("b fails: w"), std::string::npos);
}

TEST(Probe, EquationsHoldOnDiamond) {
  const FinPoset d = FinPoset::diamond();
  EXPECT_TRUE(equational_probe(d, "d-space", {Subset{0, 1}, Subset{0, 1, 2}, std::nullopt, std::nullopt}).equal);
  EXPECT_TRUE(equational_probe(d, "wf", {std::nullopt, Subset{0, 2}, std::nullopt,
                                         std::vector<Subset>{Subset{1, 3}, d.carrier()}})
                  .equal);
  EXPECT_TRUE(equational_probe(d, "sober", {std::nullopt, Subset{0, 1}, Subset{0, 2}, std::nullopt}).equal);
  const ProbeResult r =
      equational_probe(d, "sober-rip", {std::nullopt, std::nullopt, Subset{0, 2}, std::vector<Subset>{Subset{3}}});
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.lhs.empty());
}

TEST(Probe, BindingErrors) {
  const FinPoset d = FinPoset::diamond();
  EXPECT_THROW(equational_probe(d, "d-space", {std::nullopt, Subset{0}, std::nullopt, std::nullopt}), PreconditionError);
  EXPECT_THROW(equational_probe(d, "d-space", {Subset{1, 2}, Subset{0}, std::nullopt, std::nullopt}),
               PreconditionError);
  EXPECT_THROW(equational_probe(d, "wf", {std::nullopt, Subset{3}, std::nullopt, std::vector<Subset>{Subset{3}}}),
               PreconditionError);
  EXPECT_THROW(equational_probe(d, "wf", {std::nullopt, Subset{0}, std::nullopt,
                                          std::vector<Subset>{Subset{1, 3}, Subset{2, 3}}}),
               PreconditionError);
  EXPECT_THROW(equational_probe(d, "sober", {Subset{0}, Subset{0}, Subset{0}, std::nullopt}), PreconditionError);
  EXPECT_THROW(equational_probe(d, "nope", {}), PreconditionError);
}

TEST(Probe, FamilyEquationOnRandomPosets) {
  // For filtered families of compact saturated sets the two sides agree on
  // every closed set of a finite space.
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const FinPoset p = random_poset(rng, 1 + rng.below(6));
    const auto closed = closed_sets(p);
    for_each_filtered_family(compact_saturated(p), Caps{}, [&](const std::vector<Subset>& fam) {
      for (Subset a : closed) EXPECT_TRUE(family_equation(p, a, fam).equal());
    });
  }
}

}  // namespace
