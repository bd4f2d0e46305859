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

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"

namespace {

using namespace soberkit;
using testing_support::to_oracle;

TEST(Subset, Algebra) {
  const Subset a{0, 2};
  const Subset b{2, 3};
  EXPECT_EQ((a | b), (Subset{0, 2, 3}));
  EXPECT_EQ((a & b), Subset{2});
  EXPECT_EQ((a - b), Subset{0});
  EXPECT_TRUE(Subset{2}.subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
  EXPECT_EQ(a.complement(4), (Subset{1, 3}));
  EXPECT_EQ(a.str(), "{0,2}");
  EXPECT_EQ(Subset::full(64).size(), 64U);
}

TEST(Subset, LexOrderPutsMissingElementFirst) {
  EXPECT_TRUE(lex_less(Subset{1}, Subset{0}));
  EXPECT_FALSE(lex_less(Subset{0}, Subset{1}));
}

TEST(Subset, VisitsAllSubsets) {
  std::set<std::uint64_t> seen;
  for_each_subset_of(Subset{1, 3, 4}, [&](Subset s) { seen.insert(s.bits()); });
  EXPECT_EQ(seen.size(), 8U);
}

TEST(FinPoset, RejectsBadRelations) {
  EXPECT_THROW(FinPoset::from_covers(2, {{0, 1}, {1, 0}}), ConstructionError);
  EXPECT_THROW(FinPoset::from_covers(2, {{0, 5}}), ConstructionError);
  EXPECT_THROW(FinPoset::from_matrix({{true, true}, {false, false}}), ConstructionError);
  EXPECT_THROW(FinPoset::antichain(65), ConstructionError);
}

TEST(FinPoset, BoundsAndCut) {
  const FinPoset d = FinPoset::diamond();  // 0 < a,b < 1
  EXPECT_EQ(d.upper_bounds(Subset{1, 2}), Subset{3});
  EXPECT_EQ(d.cut(Subset{1, 2}), d.carrier());
  EXPECT_EQ(d.sup(Subset{1, 2}), std::optional<std::size_t>(3));
  EXPECT_EQ(d.inf(Subset{1, 2}), std::optional<std::size_t>(0));
  const FinPoset l = FinPoset::lambda();
  EXPECT_FALSE(l.sup(Subset{1, 2}).has_value());
  EXPECT_TRUE(l.upper_bounds(Subset{1, 2}).empty());
  // Lower bounds of the empty upper-bound set are the whole carrier.
  EXPECT_EQ(l.cut(Subset{1, 2}), l.carrier());
}

TEST(FinPoset, DirectedAndFiltered) {
  const FinPoset l = FinPoset::lambda();
  EXPECT_TRUE(l.is_directed(Subset{0, 1}));
  EXPECT_FALSE(l.is_directed(Subset{1, 2}));
  EXPECT_FALSE(l.is_directed(Subset{}));
  EXPECT_TRUE(l.is_filtered(Subset{1, 2, 0}));
  EXPECT_TRUE(l.is_ideal(Subset{0, 1}));
}

TEST(FinPoset, DirectedMatchesOracleOnAllSmallPosets) {
  for (const auto& p : posets_up_to_iso_upto(4)) {
    const auto q = to_oracle(p);
    for_each_subset_of(p.carrier(), [&](Subset s) { EXPECT_EQ(p.is_directed(s), oracle::is_directed(q, s.bits())); });
  }
}

TEST(FinPoset, FiniteOrdersAreDcposWithCompactElements) {
  for (const auto& p : posets_up_to_iso_upto(5)) {
    EXPECT_TRUE(is_dcpo(p));
    EXPECT_TRUE(is_noetherian(p));
    const auto wb = way_below_relation(p);
    for (std::size_t x = 0; x < p.size(); ++x) EXPECT_EQ(wb[x], p.up(x));
    for (Subset u : up_sets(p)) EXPECT_TRUE(is_scott_open(p, u));
  }
}

TEST(FinPoset, NotScottOpenWhenNotUpper) { EXPECT_FALSE(is_scott_open(FinPoset::chain(2), Subset{0})); }

TEST(FinPoset, CapsAreEnforced) {
  Caps tight;
  tight.sets = 3;
  EXPECT_THROW(is_dcpo(FinPoset::chain(3), tight), CapExceeded);
  EXPECT_THROW(down_sets(FinPoset::antichain(3), tight), CapExceeded);
  tight.lattice_sweep = 2;
  EXPECT_THROW(way_below_relation(FinPoset::chain(3), tight), CapExceeded);
}

TEST(FinPoset, DownSetsMatchOracle) {
  for (const auto& p : posets_up_to_iso_upto(5)) {
    const auto q = to_oracle(p);
    EXPECT_EQ(testing_support::masks(down_sets(p)), oracle::closed_sets(q));
    EXPECT_EQ(testing_support::masks(up_sets(p)), testing_support::sorted(oracle::open_sets(q)));
  }
}

TEST(FinPoset, DualSwapsOrder) {
  const FinPoset v = FinPoset::lambda().dual();
  EXPECT_TRUE(v.leq(1, 0));
  EXPECT_EQ(v.covers().size(), 2U);
}

TEST(Enumerate, CountsUpToIsomorphism) {
  // Unlabelled posets on n points, n = 0..6.
  const std::vector<std::size_t> expected = {1, 1, 2, 5, 16, 63, 318};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(posets_up_to_iso(n).size(), expected[n]) << n;
}

TEST(Enumerate, LabelledCountsAgreeWithOracle) {
  // Labelled posets: 1, 3, 19, 219.
  for (int n = 1; n <= 4; ++n) {
    std::size_t labelled = 0;
    for (const auto& p : posets_up_to_iso(static_cast<std::size_t>(n))) {
      std::set<std::uint64_t> codes;
      std::vector<std::size_t> perm(p.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        codes.insert(relation_code(p, perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      labelled += codes.size();
    }
    EXPECT_EQ(labelled, oracle::all_labelled_posets(n).size()) << n;
  }
}

TEST(Enumerate, CanonicalCodeIsRelabellingInvariant) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const FinPoset p = random_poset(rng, 1 + rng.below(7));
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    const FinPoset q = relabel(p, perm);
    EXPECT_EQ(canonical_code(p), canonical_code(q));
    const auto iso = find_isomorphism(p, q);
    ASSERT_TRUE(iso.has_value());
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) EXPECT_EQ(p.leq(a, b), q.leq((*iso)[a], (*iso)[b]));
  }
}

TEST(Enumerate, NonIsomorphicPairsAreSeparated) {
  EXPECT_FALSE(find_isomorphism(FinPoset::lambda(), FinPoset::vee()).has_value());
  EXPECT_FALSE(find_isomorphism(FinPoset::chain(3), FinPoset::lambda()).has_value());
}

TEST(Enumerate, RandomPosetsAreDeterministic) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(random_poset(a, 6), random_poset(b, 6));
  EXPECT_THROW(Rng(1).below(0), PreconditionError);
}

}  // namespace
