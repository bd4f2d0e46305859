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

TEST(Families, MatchOracleOnAllPosetsUpToFive) {
  for (const auto& p : posets_up_to_iso_upto(5)) {
    const auto q = to_oracle(p);
    const Families f = enumerate_families(Space(p));
    EXPECT_EQ(masks(f.irr_c), oracle::irreducible_closed(q));
    EXPECT_EQ(masks(f.k), oracle::compact_saturated(q));
    EXPECT_EQ(masks(f.s_c), oracle::point_closures(q));
    EXPECT_EQ(masks(f.d_c), oracle::directed_closures(q));
  }
}

TEST(Families, IrreducibilityMatchesOracle) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    const auto q = to_oracle(p);
    for_each_subset_of(p.carrier(), [&](Subset s) { EXPECT_EQ(is_irreducible(p, s), oracle::is_irreducible(q, s.bits())); });
  }
}

TEST(Families, NamedCounts) {
  EXPECT_EQ(irreducible_closed(FinPoset::lambda()).size(), 3U);
  EXPECT_EQ(compact_saturated(FinPoset::lambda()).size(), 4U);
  EXPECT_EQ(compact_saturated(FinPoset::chain(2)).size(), 2U);
  EXPECT_EQ(irreducible_closed(FinPoset::vee()).size(), 3U);
}

TEST(Families, CofiniteIsDescribed) {
  const Families f = enumerate_families(Space::cofinite());
  EXPECT_TRUE(f.symbolic);
  EXPECT_TRUE(f.irr_c.empty());
  EXPECT_NE(f.irr_c_desc.find("X"), std::string::npos);
  EXPECT_THROW(compact_saturated(Space::cofinite()), UnsupportedOperation);
}

TEST(Families, CarrierCap) {
  Caps caps;
  caps.carrier = 2;
  EXPECT_THROW(enumerate_families(Space(FinPoset::chain(3)), caps), CapExceeded);
}

TEST(Topology, ClosureInteriorSaturation) {
  const Space x(FinPoset::diamond());
  const TopologyOps ops = topology_ops(x, Subset{1});
  EXPECT_EQ(std::get<Subset>(ops.closure), (Subset{0, 1}));
  EXPECT_EQ(std::get<Subset>(ops.saturation), (Subset{1, 3}));
  EXPECT_EQ(std::get<Subset>(ops.interior), Subset{});
  EXPECT_EQ(std::get<Subset>(topology_ops(x, Subset{1, 3}).interior), (Subset{1, 3}));
  EXPECT_THROW(topology_ops(x, CofinSet::whole()), ConstructionError);
}

TEST(Topology, CofiniteOperations) {
  const Space x = Space::cofinite();
  const TopologyOps ops = topology_ops(x, CofinSet::finite({1, 2}));
  EXPECT_TRUE(std::get<CofinSet>(ops.closure).is_finite());
  EXPECT_TRUE(std::get<CofinSet>(ops.interior).empty());
  EXPECT_TRUE(std::get<CofinSet>(topology_ops(x, CofinSet::cofinite({3})).closure).is_whole());
  EXPECT_TRUE(is_irreducible(x, CofinSet::point(4)));
  EXPECT_FALSE(is_irreducible(x, CofinSet::finite({1, 2})));
  EXPECT_TRUE(is_irreducible(x, CofinSet::whole()));
}

TEST(CofinSet, Algebra) {
  const CofinSet a = CofinSet::finite({1, 2});
  const CofinSet b = CofinSet::cofinite({2});
  EXPECT_EQ((a & b), CofinSet::point(1));
  EXPECT_TRUE((a | b).is_whole());
  EXPECT_TRUE(a.complement().is_infinite());
  EXPECT_TRUE(CofinSet::point(1).subset_of(b));
  EXPECT_FALSE(CofinSet::point(2).intersects(b));
}

TEST(Compact, MinimalPointsRegenerate) {
  const Space x(FinPoset::diamond());
  EXPECT_EQ(std::get<Subset>(min_of_compact(x, Subset{1, 2, 3})), (Subset{1, 2}));
  EXPECT_TRUE(is_supercompact(x, Subset{1, 3}));
  EXPECT_FALSE(is_supercompact(x, Subset{1, 2, 3}));
  EXPECT_THROW(min_of_compact(x, Subset{1}), PreconditionError);
}

TEST(Maps, ContinuousMapsMatchOracle) {
  const auto targets = posets_up_to_iso_upto(3);
  for (const auto& x : posets_up_to_iso_upto(4))
    for (const auto& y : targets) EXPECT_EQ(continuous_maps(x, y).size(), oracle::monotone_maps(to_oracle(x), to_oracle(y)).size());
}

TEST(Maps, Budget) {
  Caps caps;
  caps.maps = 8;
  EXPECT_THROW(continuous_maps(FinPoset::antichain(4), FinPoset::antichain(2), caps), CapExceeded);
}

TEST(Maps, ImageAndPreimage) {
  const Map f = {0, 0, 1};
  EXPECT_EQ(image(f, Subset{1, 2}), (Subset{0, 1}));
  EXPECT_EQ(preimage(f, Subset{0}), (Subset{0, 1}));
}

TEST(Product, ComponentwiseOrder) {
  const Product pr = product({FinPoset::chain(2), FinPoset::antichain(2)});
  EXPECT_EQ(pr.space.size(), 4U);
  EXPECT_TRUE(pr.space.leq(pr.index_of({0, 1}), pr.index_of({1, 1})));
  EXPECT_FALSE(pr.space.leq(pr.index_of({0, 0}), pr.index_of({1, 1})));
  EXPECT_EQ(product_set(pr, {Subset{1}, Subset{0, 1}}), (Subset{pr.index_of({1, 0}), pr.index_of({1, 1})}));
  EXPECT_TRUE(is_monotone(pr.space, FinPoset::chain(2), pr.projection(0)));
}

TEST(Constructions, ClosedSubspaceAndTop) {
  const Subspace s = subspace_closed(FinPoset::diamond(), Subset{0, 1, 2});
  EXPECT_EQ(s.space.size(), 3U);
  EXPECT_THROW(subspace_closed(FinPoset::diamond(), Subset{3}), PreconditionError);
  const FinPoset t = add_top(FinPoset::antichain(2));
  EXPECT_EQ(t.greatest(t.carrier()), std::optional<std::size_t>(2));
  EXPECT_THROW(add_top(Space::cofinite()), UnsupportedOperation);
}

}  // namespace
