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

#ifndef SOBERKIT_ENUMERATE_HPP_
#define SOBERKIT_ENUMERATE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "soberkit/error.hpp"
#include "soberkit/poset.hpp"
#include "soberkit/subset.hpp"

namespace soberkit {

/// Seeded generator. Only raw 64-bit outputs of mt19937_64 are used (its
/// output sequence is fixed by the standard); bounded integers come from
/// rejection sampling, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("Rng::below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

/// Relation of P under the relabelling x -> perm[x], packed row-major into a
/// word (n <= 8).
inline std::uint64_t relation_code(const FinPoset& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  std::uint64_t code = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y)) code |= std::uint64_t{1} << (perm[x] * n + perm[y]);
  return code;
}

/// Permutation minimising relation_code; two posets are isomorphic iff their
/// canonical codes agree.
inline std::vector<std::size_t> canonical_permutation(const FinPoset& p) {
  const std::size_t n = p.size();
  if (n > 8) throw CapExceeded("canonical form limited to 8 elements");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best = perm;
  std::uint64_t best_code = relation_code(p, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    const std::uint64_t c = relation_code(p, perm);
    if (c < best_code) {
      best_code = c;
      best = perm;
    }
  }
  return best;
}

inline std::uint64_t canonical_code(const FinPoset& p) { return relation_code(p, canonical_permutation(p)); }

/// The poset with element x renamed perm[x].
inline FinPoset relabel(const FinPoset& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  std::vector<Subset> down(n);
  std::vector<std::string> labels(p.labels().empty() ? 0 : n);
  for (std::size_t y = 0; y < n; ++y) {
    p.down(y).for_each([&](std::size_t x) { down[perm[y]].insert(perm[x]); });
    if (!labels.empty()) labels[perm[y]] = p.labels()[y];
  }
  return FinPoset::from_down_sets(std::move(down), std::move(labels));
}

/// One representative of every isomorphism class of n-element posets, in
/// ascending canonical code. Every finite poset has a natural labelling
/// (x < y implies x precedes y), so only relations above the diagonal are
/// generated.
inline std::vector<FinPoset> posets_up_to_iso(std::size_t n) {
  if (n > 6) throw CapExceeded("isomorphism-class enumeration limited to 6 elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<std::pair<std::uint64_t, FinPoset>> found;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Subset> down(n);
    for (std::size_t y = 0; y < n; ++y) down[y] = Subset::singleton(y);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) down[slots[s].second].insert(slots[s].first);
    // Transitive iff each ideal contains the ideals of its members.
    bool transitive = true;
    for (std::size_t y = 0; y < n && transitive; ++y)
      down[y].for_each([&](std::size_t x) {
        if (!down[x].subset_of(down[y])) transitive = false;
      });
    if (!transitive) continue;
    FinPoset p = FinPoset::from_down_sets(down);
    const auto perm = canonical_permutation(p);
    const std::uint64_t code = relation_code(p, perm);
    if (seen.insert(code).second) found.emplace_back(code, relabel(p, perm));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FinPoset> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

/// Every poset with at most `max_n` elements, up to isomorphism, smallest
/// carriers first (the empty poset included when include_empty is set).
inline std::vector<FinPoset> posets_up_to_iso_upto(std::size_t max_n, bool include_empty = false) {
  std::vector<FinPoset> out;
  for (std::size_t n = include_empty ? 0 : 1; n <= max_n; ++n) {
    auto level = posets_up_to_iso(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Random poset on n elements: each pair i < j (in a hidden natural
/// labelling) becomes a cover candidate with probability k/4, k drawn from
/// {1, 2, 3}; the transitive closure is taken and the elements shuffled.
inline FinPoset random_poset(Rng& rng, std::size_t n) {
  const std::uint64_t k = 1 + rng.below(3);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (rng.below(4) < k) covers.emplace_back(i, j);
  FinPoset p = FinPoset::from_covers(n, covers);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return relabel(p, perm);
}

/// An order isomorphism P -> Q (image of each element), if one exists.
/// Backtracking over candidates with matching ideal and filter sizes.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const FinPoset& p, const FinPoset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  auto sig = [](const FinPoset& r, std::size_t x) { return std::make_pair(r.down(x).size(), r.up(x).size()); };
  std::vector<std::size_t> image(n, 0);
  Subset used;
  auto rec = [&](auto& self, std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used.contains(y) || sig(p, x) != sig(q, y)) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z)
        ok = p.leq(z, x) == q.leq(image[z], y) && p.leq(x, z) == q.leq(y, image[z]);
      if (!ok) continue;
      image[x] = y;
      used.insert(y);
      if (self(self, x + 1)) return true;
      used.erase(y);
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return image;
}

}  // namespace soberkit

#endif  // SOBERKIT_ENUMERATE_HPP_
