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

TEST(Reflect, FiniteReflectionsAreHomeomorphic) {
  for (const auto& p : posets_up_to_iso_upto(5)) {
    for (const Reflection& r : {wf_reflection(Space(p)), sobrification(p)}) {
      const auto h = homeomorphic(p, r.reflected.space);
      ASSERT_TRUE(h.has_value());
      EXPECT_TRUE(check_embedding(p, r.reflected.space, r.eta).ok());
      EXPECT_FALSE(r.is_symbolic());
    }
  }
}

TEST(Reflect, FactorizationIsUnique) {
  const FinPoset l = FinPoset::lambda();
  const Reflection r = wf_reflection(Space(l));
  for (const auto& y : posets_up_to_iso_upto(3))
    for (const Map& f : continuous_maps(l, y)) {
      const FactorReport fr = factorize(r, y, f);
      EXPECT_TRUE(fr.ok()) << fr.witness;
      EXPECT_TRUE(fr.unique);
      for (std::size_t x = 0; x < l.size(); ++x) EXPECT_EQ(fr.f_star[r.eta[x]], f[x]);
    }
}

TEST(Reflect, FactorizationPreconditions) {
  const FinPoset c = FinPoset::chain(2);
  const Reflection r = wf_reflection(Space(c));
  EXPECT_THROW(factorize(r, c, {1, 0}), PreconditionError);
  const Reflection cof = wf_reflection(Space::cofinite());
  EXPECT_THROW(factorize(cof, c, {0}), UnsupportedOperation);
}

TEST(Reflect, UniquenessSweepIsBounded) {
  Caps caps;
  caps.maps = 4;
  const Reflection r = wf_reflection(Space(FinPoset::antichain(3)), caps);
  const FactorReport fr = factorize(r, FinPoset::chain(3), {0, 1, 2}, caps);
  EXPECT_TRUE(fr.uniqueness_bounded);
  EXPECT_TRUE(fr.ok());
}

TEST(Reflect, CofiniteHasOneAddedTop) {
  const Reflection r = wf_reflection(Space::cofinite());
  ASSERT_TRUE(r.is_symbolic());
  const SymbolicReflection& s = *r.symbolic;
  EXPECT_EQ(s.added_points, 1U);
  EXPECT_EQ(s.added_point, "X");
  EXPECT_TRUE(s.added_is_top);
  EXPECT_TRUE(s.sober);
  EXPECT_TRUE(s.equals_sobrification);
  EXPECT_EQ(s.carrier, symbolic_reflection(Space::cofinite(), false).carrier);
  EXPECT_THROW(symbolic_reflection(Space(FinPoset::chain(1)), true), PreconditionError);
}

TEST(Reflect, FunctorAction) {
  const FinPoset x = FinPoset::vee();
  const FinPoset y = FinPoset::chain(2);
  const Reflection rx = wf_reflection(Space(x));
  const Reflection ry = wf_reflection(Space(y));
  for (const Map& f : continuous_maps(x, y)) {
    const Map fw = functor_action(rx, ry, f);
    for (std::size_t p = 0; p < x.size(); ++p) EXPECT_EQ(fw[rx.eta[p]], ry.eta[f[p]]);
  }
}

TEST(Reflect, ProductsCommuteWithReflection) {
  const auto r = product_reflection_check({FinPoset::lambda(), FinPoset::chain(2)});
  EXPECT_TRUE(r.ok()) << r.witness;
  const auto s = product_reflection_check({FinPoset::antichain(2), FinPoset::vee()});
  EXPECT_TRUE(s.ok()) << s.witness;
}

}  // namespace
