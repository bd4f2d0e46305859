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

#ifndef SOBERKIT_FAMILIES_HPP_
#define SOBERKIT_FAMILIES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "soberkit/caps.hpp"
#include "soberkit/subset.hpp"

namespace soberkit {

/// Filtered under the Smyth order: nonempty, and any two members contain a
/// common member.
inline bool is_filtered_family(const std::vector<Subset>& fam) {
  if (fam.empty()) return false;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      const Subset both = fam[i] & fam[j];
      bool found = false;
      for (Subset k : fam)
        if (k.subset_of(both)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

/// Irreducible as a subset of the Smyth power space of a finite space. The
/// closure of a family there is its superset-closure inside K(X), and that
/// closure is directed exactly when any two members contain a common member,
/// so on finite spaces this coincides with is_filtered_family.
inline bool is_smyth_irreducible(const std::vector<Subset>& fam) { return is_filtered_family(fam); }

/// Intersection of the members, relative to a carrier of size n.
inline Subset family_meet(const std::vector<Subset>& fam, std::size_t n) {
  Subset out = Subset::full(n);
  for (Subset k : fam) out &= k;
  return out;
}

inline Subset family_join(const std::vector<Subset>& fam) {
  Subset out;
  for (Subset k : fam) out |= k;
  return out;
}

/// The members of `universe` containing some member of `fam`: the closure of
/// `fam` in the Smyth power space when `universe` is K(X).
inline std::vector<Subset> superset_closure(const std::vector<Subset>& fam, const std::vector<Subset>& universe) {
  std::vector<Subset> out;
  for (Subset k : universe)
    for (Subset a : fam)
      if (a.subset_of(k)) {
        out.push_back(k);
        break;
      }
  return out;
}

struct SweepInfo {
  bool exhaustive = true;
  std::size_t visited = 0;
};

/// Visit nonempty subfamilies of `universe`. When |universe| is at most
/// caps.family_bits every subfamily is visited. Otherwise the sweep is
/// bounded: all singletons, all pairs, every family {K : K contains K0}, and
/// `universe` itself; SweepInfo::exhaustive is then false.
template <class F>
SweepInfo for_each_subfamily(const std::vector<Subset>& universe, const Caps& caps, F&& f) {
  SweepInfo info;
  const std::size_t m = universe.size();
  std::vector<Subset> fam;
  if (m <= caps.family_bits) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      fam.clear();
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1U) fam.push_back(universe[i]);
      ++info.visited;
      f(fam);
    }
    return info;
  }
  info.exhaustive = false;
  for (std::size_t i = 0; i < m; ++i) {
    fam.assign(1, universe[i]);
    ++info.visited;
    f(fam);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      fam = {universe[i], universe[j]};
      ++info.visited;
      f(fam);
    }
  for (std::size_t i = 0; i < m; ++i) {
    fam.clear();
    for (Subset k : universe)
      if (universe[i].subset_of(k)) fam.push_back(k);
    if (fam.size() > 2) {
      ++info.visited;
      f(fam);
    }
  }
  if (m > 2) {
    fam = universe;
    ++info.visited;
    f(fam);
  }
  return info;
}

/// Visit the filtered subfamilies reached by for_each_subfamily.
template <class F>
SweepInfo for_each_filtered_family(const std::vector<Subset>& universe, const Caps& caps, F&& f) {
  return for_each_subfamily(universe, caps, [&](const std::vector<Subset>& fam) {
    if (is_filtered_family(fam)) f(fam);
  });
}

}  // namespace soberkit

#endif  // SOBERKIT_FAMILIES_HPP_
