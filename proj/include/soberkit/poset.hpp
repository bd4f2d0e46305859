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

#ifndef SOBERKIT_POSET_HPP_
#define SOBERKIT_POSET_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soberkit/caps.hpp"
#include "soberkit/error.hpp"
#include "soberkit/subset.hpp"

namespace soberkit {

/// A finite partially ordered set on {0, ..., n-1}.
///
/// The order is stored as the principal ideal and principal filter of every
/// element. Instances are immutable once built; every constructor validates
/// reflexivity, antisymmetry and transitivity and throws ConstructionError on
/// violation.
class FinPoset {
 public:
  /// The empty poset.
  FinPoset() = default;

  /// Build from a full relation matrix, leq[x][y] meaning x <= y.
  static FinPoset from_matrix(const std::vector<std::vector<bool>>& leq, std::vector<std::string> labels = {}) {
    const std::size_t n = leq.size();
    check_size(n);
    std::vector<Subset> down(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (leq[y].size() != n) throw ConstructionError("relation matrix is not square");
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (leq[x][y]) down[y].insert(x);
    return FinPoset(std::move(down), std::move(labels));
  }

  /// Build from principal ideals: down[y] = { x : x <= y }.
  static FinPoset from_down_sets(std::vector<Subset> down, std::vector<std::string> labels = {}) {
    check_size(down.size());
    return FinPoset(std::move(down), std::move(labels));
  }

  /// Build from cover pairs (x, y) meaning x < y; the reflexive-transitive
  /// closure is taken. A cycle is an antisymmetry violation.
  static FinPoset from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                              std::vector<std::string> labels = {}) {
    check_size(n);
    std::vector<Subset> down(n);
    for (std::size_t x = 0; x < n; ++x) down[x] = Subset::singleton(x);
    for (auto [x, y] : covers) {
      if (x >= n || y >= n) throw ConstructionError("cover pair index out of range");
      down[y].insert(x);
    }
    // Warshall closure on bit rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t y = 0; y < n; ++y)
        if (down[y].contains(k)) down[y] |= down[k];
    return FinPoset(std::move(down), std::move(labels));
  }

  static FinPoset chain(std::size_t n) {
    std::vector<Subset> down(n);
    for (std::size_t y = 0; y < n; ++y) down[y] = Subset::full(y + 1);
    return FinPoset(std::move(down), {});
  }

  static FinPoset antichain(std::size_t n) {
    std::vector<Subset> down(n);
    for (std::size_t y = 0; y < n; ++y) down[y] = Subset::singleton(y);
    return FinPoset(std::move(down), {});
  }

  static FinPoset singleton() { return antichain(1); }

  /// 0 < a, 0 < b.
  static FinPoset lambda() { return from_covers(3, {{0, 1}, {0, 2}}, {"0", "a", "b"}); }

  /// a < 1, b < 1.
  static FinPoset vee() { return from_covers(3, {{0, 2}, {1, 2}}, {"a", "b", "1"}); }

  /// 0 < a, b < 1.
  static FinPoset diamond() { return from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "b", "1"}); }

  std::size_t size() const { return down_.size(); }
  Subset carrier() const { return Subset::full(size()); }

  bool leq(std::size_t x, std::size_t y) const { return down_[y].contains(x); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  /// Principal ideal of x.
  Subset down(std::size_t x) const { return down_[x]; }
  /// Principal filter of x.
  Subset up(std::size_t x) const { return up_[x]; }

  const std::vector<Subset>& principal_ideals() const { return down_; }

  std::string label(std::size_t x) const {
    if (x < labels_.size() && !labels_[x].empty()) return labels_[x];
    return std::to_string(x);
  }
  const std::vector<std::string>& labels() const { return labels_; }

  void check(Subset a) const {
    if (!a.within(size()))
      throw ConstructionError("subset " + a.str() + " not within carrier of size " + std::to_string(size()));
  }

  Subset down(Subset a) const {
    check(a);
    Subset out;
    a.for_each([&](std::size_t x) { out |= down_[x]; });
    return out;
  }

  Subset up(Subset a) const {
    check(a);
    Subset out;
    a.for_each([&](std::size_t x) { out |= up_[x]; });
    return out;
  }

  /// A^up: the upper bounds of A. Every element bounds the empty set.
  Subset upper_bounds(Subset a) const {
    check(a);
    Subset out = carrier();
    a.for_each([&](std::size_t x) { out &= up_[x]; });
    return out;
  }

  Subset lower_bounds(Subset a) const {
    check(a);
    Subset out = carrier();
    a.for_each([&](std::size_t x) { out &= down_[x]; });
    return out;
  }

  /// The cut (A^up)^down.
  Subset cut(Subset a) const { return lower_bounds(upper_bounds(a)); }

  bool is_lower(Subset a) const { return down(a) == a; }
  bool is_upper(Subset a) const { return up(a) == a; }

  /// Nonempty, and every pair has an upper bound inside A.
  bool is_directed(Subset a) const {
    check(a);
    if (a.empty()) return false;
    const auto el = a.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = i + 1; j < el.size(); ++j)
        if (!(up_[el[i]] & up_[el[j]]).intersects(a)) return false;
    return true;
  }

  bool is_filtered(Subset a) const {
    check(a);
    if (a.empty()) return false;
    const auto el = a.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = i + 1; j < el.size(); ++j)
        if (!(down_[el[i]] & down_[el[j]]).intersects(a)) return false;
    return true;
  }

  bool is_ideal(Subset a) const { return is_lower(a) && is_directed(a); }
  bool is_filter(Subset a) const { return is_upper(a) && is_filtered(a); }

  Subset maximal(Subset a) const {
    check(a);
    if (a.empty()) throw PreconditionError("maximal elements of the empty set");
    Subset out;
    a.for_each([&](std::size_t x) {
      if ((up_[x] & a) == Subset::singleton(x)) out.insert(x);
    });
    return out;
  }

  Subset minimal(Subset a) const {
    check(a);
    if (a.empty()) throw PreconditionError("minimal elements of the empty set");
    Subset out;
    a.for_each([&](std::size_t x) {
      if ((down_[x] & a) == Subset::singleton(x)) out.insert(x);
    });
    return out;
  }

  /// Greatest element of A, if any.
  std::optional<std::size_t> greatest(Subset a) const {
    check(a);
    std::optional<std::size_t> g;
    a.for_each([&](std::size_t x) {
      if (!g && a.subset_of(down_[x])) g = x;
    });
    return g;
  }

  std::optional<std::size_t> least(Subset a) const {
    check(a);
    std::optional<std::size_t> g;
    a.for_each([&](std::size_t x) {
      if (!g && a.subset_of(up_[x])) g = x;
    });
    return g;
  }

  /// Least upper bound of A, if it exists.
  std::optional<std::size_t> sup(Subset a) const { return least(upper_bounds(a)); }
  std::optional<std::size_t> inf(Subset a) const { return greatest(lower_bounds(a)); }

  /// Elements ordered so that x precedes every y with x < y.
  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> order(size());
    for (std::size_t i = 0; i < size(); ++i) order[i] = i;
    // |down(x)| strictly grows along <, so sorting by it is a linear extension.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return down_[a].size() < down_[b].size(); });
    return order;
  }

  /// Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t y = 0; y < size(); ++y) {
      const Subset below = down_[y] - Subset::singleton(y);
      below.for_each([&](std::size_t x) {
        const Subset between = (up_[x] & below) - Subset::singleton(x);
        if (between.empty()) out.emplace_back(x, y);
      });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Subposet induced on `a`, renumbered in increasing index order.
  FinPoset induced(Subset a) const {
    check(a);
    const auto el = a.elements();
    std::vector<Subset> down(el.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (std::size_t j = 0; j < el.size(); ++j)
        if (leq(el[j], el[i])) down[i].insert(j);
      labels.push_back(label(el[i]));
    }
    return FinPoset(std::move(down), std::move(labels));
  }

  FinPoset dual() const { return FinPoset(up_, labels_); }

  /// Same carrier and same order (labels ignored).
  bool operator==(const FinPoset& o) const { return down_ == o.down_; }

 private:
  FinPoset(std::vector<Subset> down, std::vector<std::string> labels)
      : down_(std::move(down)), labels_(std::move(labels)) {
    const std::size_t n = down_.size();
    if (!labels_.empty() && labels_.size() != n) throw ConstructionError("label count does not match carrier");
    up_.assign(n, Subset{});
    for (std::size_t y = 0; y < n; ++y) {
      if (!down_[y].within(n)) throw ConstructionError("relation index out of range");
      if (!down_[y].contains(y)) throw ConstructionError("order is not reflexive at " + std::to_string(y));
      down_[y].for_each([&](std::size_t x) { up_[x].insert(y); });
    }
    for (std::size_t y = 0; y < n; ++y) {
      down_[y].for_each([&](std::size_t x) {
        if (x != y && down_[x].contains(y))
          throw ConstructionError("order is not antisymmetric: " + std::to_string(x) + " and " + std::to_string(y));
        if (!down_[x].subset_of(down_[y]))
          throw ConstructionError("order is not transitive below " + std::to_string(y));
      });
    }
  }

  static void check_size(std::size_t n) {
    if (n > kMaxCarrier) throw ConstructionError("carrier larger than " + std::to_string(kMaxCarrier));
  }

  std::vector<Subset> down_;
  std::vector<Subset> up_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Order operators as free functions.

struct Closures {
  Subset down;
  Subset up;
};

inline Closures closures(const FinPoset& p, Subset a) { return {p.down(a), p.up(a)}; }

struct BoundsAndCut {
  Subset upper_bounds;
  Subset lower_bounds;
  Subset cut;
};

inline BoundsAndCut bounds_and_cut(const FinPoset& p, Subset a) {
  return {p.upper_bounds(a), p.lower_bounds(a), p.cut(a)};
}

struct Extremes {
  Subset max;
  Subset min;
};

inline Extremes extremes(const FinPoset& p, Subset a) { return {p.maximal(a), p.minimal(a)}; }

/// Visit every directed subset of P. A finite directed set contains its own
/// maximum m, so the directed sets are exactly {m} united with a subset of the
/// strict ideal below m; each is produced once.
template <class F>
void for_each_directed_subset(const FinPoset& p, F&& f) {
  for (std::size_t m = 0; m < p.size(); ++m) {
    const Subset below = p.down(m) - Subset::singleton(m);
    for_each_subset_of(below, [&](Subset s) { f(s | Subset::singleton(m)); });
  }
}

inline std::size_t count_directed_subsets(const FinPoset& p) {
  std::size_t total = 0;
  for (std::size_t m = 0; m < p.size(); ++m) total += std::size_t{1} << (p.down(m).size() - 1);
  return total;
}

/// Every directed subset has a supremum. Decided by sweeping directed subsets.
inline bool is_dcpo(const FinPoset& p, const Caps& caps = {}) {
  if (count_directed_subsets(p) > caps.sets) throw CapExceeded("directed subsets exceed cap");
  bool ok = true;
  for_each_directed_subset(p, [&](Subset d) {
    if (ok && !p.sup(d)) ok = false;
  });
  return ok;
}

/// Every ascending chain has a greatest member. Decided by sweeping all
/// subsets: each totally ordered one must have a greatest element.
inline bool is_noetherian(const FinPoset& p, const Caps& caps = {}) {
  if (p.size() > caps.subset_sweep) throw CapExceeded("chain sweep exceeds subset cap");
  bool ok = true;
  for_each_subset_of(p.carrier(), [&](Subset c) {
    if (!ok || c.empty()) return;
    bool chain = true;
    c.for_each([&](std::size_t x) {
      if (!c.subset_of(p.down(x) | p.up(x))) chain = false;
    });
    if (chain && !p.greatest(c)) ok = false;
  });
  return ok;
}

struct OrderFlags {
  bool is_directed = false;
  bool is_filtered = false;
  bool is_lower = false;
  bool is_upper = false;
  bool is_ideal = false;
  bool is_filter = false;
  bool is_dcpo = false;
  bool is_noetherian = false;
};

inline OrderFlags order_predicates(const FinPoset& p, Subset a, const Caps& caps = {}) {
  OrderFlags f;
  f.is_directed = p.is_directed(a);
  f.is_filtered = p.is_filtered(a);
  f.is_lower = p.is_lower(a);
  f.is_upper = p.is_upper(a);
  f.is_ideal = p.is_ideal(a);
  f.is_filter = p.is_filter(a);
  f.is_dcpo = is_dcpo(p, caps);
  f.is_noetherian = is_noetherian(p, caps);
  return f;
}

/// Scott-open: an upper set U such that sup D in U forces D to meet U, for
/// every directed D whose supremum exists.
inline bool is_scott_open(const FinPoset& p, Subset u, const Caps& caps = {}) {
  if (!p.is_upper(u)) return false;
  if (count_directed_subsets(p) > caps.sets) throw CapExceeded("directed subsets exceed cap");
  bool ok = true;
  for_each_directed_subset(p, [&](Subset d) {
    if (!ok) return;
    auto s = p.sup(d);
    if (s && u.contains(*s) && !d.intersects(u)) ok = false;
  });
  return ok;
}

/// The way-below relation of P: row x holds every y with x << y, where x << y
/// iff each directed D with an existing sup above y has a member above x.
/// Decided by sweeping all directed subsets.
inline std::vector<Subset> way_below_relation(const FinPoset& p, const Caps& caps = {}) {
  if (p.size() > caps.lattice_sweep) throw CapExceeded("way-below sweep exceeds lattice cap");
  const std::size_t n = p.size();
  std::vector<Subset> fails(n);  // fails[x]: y with a directed D witnessing not(x << y)
  for_each_directed_subset(p, [&](Subset d) {
    auto s = p.sup(d);
    if (!s) return;
    const Subset covered = p.down(d);
    const Subset targets = p.down(*s);
    for (std::size_t x = 0; x < n; ++x)
      if (!covered.contains(x)) fails[x] |= targets;
  });
  std::vector<Subset> wb(n);
  for (std::size_t x = 0; x < n; ++x) wb[x] = p.carrier() - fails[x];
  return wb;
}

// ---------------------------------------------------------------------------
// Down-set and up-set enumeration.

/// Visit every down-set of P. Elements are decided along a linear extension;
/// an element may join only when its strict ideal is already in, so every
/// branch ends in a distinct down-set.
template <class F>
void for_each_down_set(const FinPoset& p, F&& f) {
  const auto order = p.linear_extension();
  std::vector<std::size_t> stack_order = order;
  auto rec = [&](auto& self, std::size_t i, Subset cur) -> void {
    if (i == stack_order.size()) {
      f(cur);
      return;
    }
    const std::size_t x = stack_order[i];
    self(self, i + 1, cur);
    const Subset below = p.down(x) - Subset::singleton(x);
    if (below.subset_of(cur)) self(self, i + 1, cur | Subset::singleton(x));
  };
  rec(rec, 0, Subset{});
}

/// All down-sets in ascending mask order.
inline std::vector<Subset> down_sets(const FinPoset& p, const Caps& caps = {}) {
  std::vector<Subset> out;
  for_each_down_set(p, [&](Subset s) {
    if (out.size() >= caps.sets) throw CapExceeded("down-set enumeration exceeds cap");
    out.push_back(s);
  });
  std::sort(out.begin(), out.end(), MaskLess{});
  return out;
}

/// All up-sets in ascending mask order.
inline std::vector<Subset> up_sets(const FinPoset& p, const Caps& caps = {}) {
  std::vector<Subset> out;
  for_each_down_set(p, [&](Subset s) {
    if (out.size() >= caps.sets) throw CapExceeded("up-set enumeration exceeds cap");
    out.push_back(s.complement(p.size()));
  });
  std::sort(out.begin(), out.end(), MaskLess{});
  return out;
}

}  // namespace soberkit

#endif  // SOBERKIT_POSET_HPP_
