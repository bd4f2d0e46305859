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
using testing_support::to_oracle;

TEST(Classify, FiniteSpacesHaveTheExpectedVector) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    const ClassificationVector v = classify(Space(p));
    for (const char* name : kFlagNames) {
      if (std::string(name) == "T1") continue;
      EXPECT_TRUE(v.get(name)) << name << " on " << serialize_space(Space(p));
    }
    // T1 exactly for discrete orders.
    EXPECT_EQ(v.get("T1"), p.covers().empty());
    EXPECT_TRUE(implication_violation(v).empty());
  }
}

TEST(Classify, SoberAndWellFilteredAgreeWithOracle) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    const auto q = to_oracle(p);
    EXPECT_EQ(is_sober(p).value, oracle::is_sober(q));
    EXPECT_EQ(is_well_filtered(p).value, oracle::is_well_filtered(q));
  }
}

TEST(Classify, T1WitnessNamesAComparablePair) {
  const Verdict v = is_t1(FinPoset::lambda());
  EXPECT_FALSE(v.value);
  EXPECT_FALSE(v.witness.empty());
  EXPECT_TRUE(is_t1(FinPoset::antichain(3)).value);
}

TEST(Classify, CofiniteVector) {
  const ClassificationVector v = classify(Space::cofinite());
  EXPECT_TRUE(v.get("rudin_space"));
  EXPECT_TRUE(v.get("wd_space"));
  EXPECT_FALSE(v.get("dc_space"));
  EXPECT_FALSE(v.get("well_filtered"));
  EXPECT_EQ(v.witnesses.at("well_filtered").rfind("CofiniteTails", 0), 0U);
  EXPECT_FALSE(v.get("sober"));
  EXPECT_TRUE(v.get("locally_compact"));
  EXPECT_TRUE(v.get("T1"));
  EXPECT_TRUE(v.get("d_space"));
  EXPECT_TRUE(implication_violation(v).empty());
}

TEST(Classify, UnknownFlag) { EXPECT_THROW(classify(Space::cofinite()).get("compact"), PreconditionError); }

TEST(Classify, ImplicationViolationIsReported) {
  ClassificationVector v = classify(Space(FinPoset::chain(2)));
  v.flags["well_filtered"] = false;
  EXPECT_EQ(implication_violation(v), "sober holds but well_filtered does not");
}

TEST(Classify, BoundedSweepIsNoted) {
  Caps caps;
  caps.family_bits = 2;
  const ClassificationVector v = classify(Space(FinPoset::antichain(3)), caps);
  EXPECT_EQ(v.notes.at("well_filtered"), "bounded check");
}

TEST(Classify, OpenLatticeOfChain) {
  const OpenLattice l = open_lattice(FinPoset::chain(3));
  EXPECT_EQ(l.opens.size(), 4U);
  EXPECT_EQ(l.order.covers().size(), 3U);
}

}  // namespace
