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


#ifndef SOBERKIT_TESTS_SUPPORT_HPP_
#define SOBERKIT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "soberkit.hpp"

namespace testing_support {

inline oracle::Poset to_oracle(const soberkit::FinPoset& p) {
  oracle::Poset q;
  q.n = static_cast<int>(p.size());
  q.le.assign(p.size(), std::vector<bool>(p.size(), false));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) q.le[x][y] = p.leq(x, y);
  return q;
}

inline oracle::Family masks(const std::vector<soberkit::Subset>& sets) {
  oracle::Family out;
  for (auto s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

inline oracle::Family sorted(oracle::Family f) {
  std::sort(f.begin(), f.end());
  return f;
}

struct Named {
  std::string name;
  soberkit::FinPoset poset;
};

/// The small instances used throughout: 2-chain, Lambda, V, 2-antichain,
/// diamond.
inline std::vector<Named> named_instances() {
  using soberkit::FinPoset;
  return {{"chain2", FinPoset::chain(2)},
          {"lambda", FinPoset::lambda()},
          {"vee", FinPoset::vee()},
          {"antichain2", FinPoset::antichain(2)},
          {"diamond", FinPoset::diamond()}};
}

}  // namespace testing_support

#endif  // SOBERKIT_TESTS_SUPPORT_HPP_
