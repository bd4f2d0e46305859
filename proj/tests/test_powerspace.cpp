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
using testing_support::masks;
using testing_support::to_oracle;

TEST(Smyth, ReverseInclusionOrder) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    const PowerSpace ps = smyth(p);
    EXPECT_EQ(masks(ps.carrier), oracle::compact_saturated(to_oracle(p)));
    for (std::size_t i = 0; i < ps.carrier.size(); ++i)
      for (std::size_t j = 0; j < ps.carrier.size(); ++j)
        EXPECT_EQ(ps.space.leq(i, j), oracle::smyth_le(ps.carrier[i].bits(), ps.carrier[j].bits()));
  }
}

TEST(Smyth, XiIsAnEmbedding) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    const PowerSpace ps = smyth(p);
    EXPECT_TRUE(check_embedding(p, ps.space, xi(ps)).ok());
  }
}

TEST(Smyth, BoxOpens) {
  const PowerSpace ps = smyth(FinPoset::lambda());
  // Members of K(Lambda) inside {a}: just {a}.
  EXPECT_EQ(ps.sets_of(smyth_box(ps, Subset{1})), std::vector<Subset>{Subset{1}});
  EXPECT_TRUE(ps.space.is_upper(smyth_box(ps, Subset{1, 2})));
}

TEST(Smyth, PowerspaceCap) {
  Caps caps;
  caps.powerspace = 3;
  EXPECT_THROW(smyth(FinPoset::lambda(), caps), CapExceeded);
  EXPECT_THROW(smyth(FinPoset::antichain(7)), CapExceeded);
}

TEST(Hoare, InclusionOrderAndSobriety) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    const auto q = to_oracle(p);
    for (const PowerSpace& ps : {hoare_closed(p), hoare_irreducible(p), hoare_wd(p)}) {
      for (std::size_t i = 0; i < ps.carrier.size(); ++i)
        for (std::size_t j = 0; j < ps.carrier.size(); ++j)
          EXPECT_EQ(ps.space.leq(i, j), oracle::hoare_le(ps.carrier[i].bits(), ps.carrier[j].bits()));
      EXPECT_TRUE(oracle::is_sober(to_oracle(ps.space)));
    }
    EXPECT_EQ(masks(hoare_irreducible(p).carrier), oracle::irreducible_closed(q));
    EXPECT_TRUE(check_embedding(p, hoare_irreducible(p).space, eta(hoare_irreducible(p))).ok());
  }
}

TEST(Hoare, DiamondOpens) {
  const PowerSpace ps = hoare_irreducible(FinPoset::vee());
  // Sets meeting {b}: the closures of b and of the top.
  EXPECT_EQ(diamond(ps, Subset{1}).size(), 2U);
  EXPECT_THROW(hoare(FinPoset::vee(), {Subset{2}}), PreconditionError);
}

TEST(Embedding, DetectsFailures) {
  const FinPoset c2 = FinPoset::chain(2);
  EXPECT_FALSE(check_embedding(c2, c2, {0, 0}).injective);
  EXPECT_FALSE(check_embedding(c2, c2, {1, 0}).continuous);
  EXPECT_FALSE(check_embedding(FinPoset::antichain(2), c2, {0, 1}).open_onto_image);
}

TEST(UnionMap, CompactContinuousAndMeets) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    const UnionMapReport r = union_map_check(p);
    EXPECT_TRUE(r.ok()) << r.witness;
  }
}

TEST(OpenFilters, MatchOracleAndHofmannMislove) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    const auto q = to_oracle(p);
    const OpenFilterReport r = open_filters_and_phi(p, true);
    EXPECT_EQ(r.filters.size(), oracle::open_filters(q).size());
    EXPECT_EQ(r.filters.size(), r.k.size());
    EXPECT_TRUE(r.bijective);
    EXPECT_TRUE(r.order_iso);
    EXPECT_TRUE(r.agrees_with_sober);
  }
  EXPECT_EQ(open_filters_and_phi(FinPoset::chain(2), true).filters.size(), 2U);
}

TEST(OpenFilters, IrreducibleFamilies) {
  const FinPoset d = FinPoset::diamond();
  const IrrFilterReport r = irr_open_filter(d, {Subset{1, 3}, Subset{1, 2, 3}});
  EXPECT_TRUE(r.is_open_filter);
  EXPECT_TRUE(r.closure_agrees);
  EXPECT_THROW(irr_open_filter(d, {Subset{0}}), PreconditionError);
}

}  // namespace
