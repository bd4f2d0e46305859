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

#ifndef SOBERKIT_SPACE_HPP_
#define SOBERKIT_SPACE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "soberkit/caps.hpp"
#include "soberkit/error.hpp"
#include "soberkit/poset.hpp"
#include "soberkit/subset.hpp"

namespace soberkit {

/// A subset of a countably infinite carrier (points are natural numbers),
/// either finite or cofinite. `support` lists the set itself (Finite) or its
/// complement (Cofinite).
class CofinSet {
 public:
  enum class Tag { Finite, Cofinite };

  CofinSet() = default;

  static CofinSet finite(std::set<std::uint64_t> points) { return CofinSet(Tag::Finite, std::move(points)); }
  static CofinSet cofinite(std::set<std::uint64_t> missing) { return CofinSet(Tag::Cofinite, std::move(missing)); }

  /// From a point list; duplicates are rejected.
  static CofinSet from_list(Tag tag, const std::vector<std::uint64_t>& points) {
    std::set<std::uint64_t> s(points.begin(), points.end());
    if (s.size() != points.size()) throw ConstructionError("duplicate point in support list");
    return CofinSet(tag, std::move(s));
  }

  static CofinSet whole() { return cofinite({}); }
  static CofinSet none() { return finite({}); }
  static CofinSet point(std::uint64_t x) { return finite({x}); }

  Tag tag() const { return tag_; }
  const std::set<std::uint64_t>& support() const { return support_; }

  bool is_finite() const { return tag_ == Tag::Finite; }
  bool is_infinite() const { return tag_ == Tag::Cofinite; }
  bool empty() const { return is_finite() && support_.empty(); }
  bool is_whole() const { return is_infinite() && support_.empty(); }

  bool contains(std::uint64_t x) const { return (support_.count(x) != 0) == is_finite(); }

  CofinSet complement() const { return CofinSet(is_finite() ? Tag::Cofinite : Tag::Finite, support_); }

  CofinSet operator&(const CofinSet& o) const {
    if (is_finite() && o.is_finite()) return finite(meet(support_, o.support_));
    if (is_finite()) return finite(minus(support_, o.support_));
    if (o.is_finite()) return finite(minus(o.support_, support_));
    return cofinite(join(support_, o.support_));
  }

  CofinSet operator|(const CofinSet& o) const { return (complement() & o.complement()).complement(); }

  bool subset_of(const CofinSet& o) const { return (*this & o.complement()).empty(); }
  bool intersects(const CofinSet& o) const { return !(*this & o).empty(); }

  bool operator==(const CofinSet& o) const = default;

  std::string str() const {
    std::string inner;
    for (auto x : support_) {
      if (!inner.empty()) inner += ',';
      inner += std::to_string(x);
    }
    if (is_finite()) return "{" + inner + "}";
    if (support_.empty()) return "X";
    return "X\\{" + inner + "}";
  }

 private:
  CofinSet(Tag tag, std::set<std::uint64_t> support) : tag_(tag), support_(std::move(support)) {}

  static std::set<std::uint64_t> meet(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    std::set<std::uint64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  }
  static std::set<std::uint64_t> join(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    std::set<std::uint64_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  }
  static std::set<std::uint64_t> minus(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    std::set<std::uint64_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  }

  Tag tag_ = Tag::Finite;
  std::set<std::uint64_t> support_;
};

/// The countably infinite carrier with the cofinite topology.
struct CofiniteCarrier {
  std::string name = "N";
};

/// A T0 space: a finite poset read as its Alexandroff space, or the symbolic
/// cofinite space. Opens of a finite space are its up-sets, closed sets its
/// down-sets, and its specialization order is the poset order.
class Space {
 public:
  Space(FinPoset p) : v_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Space(CofiniteCarrier c) : v_(std::move(c)) {}  // NOLINT(google-explicit-constructor)

  static Space cofinite(std::string name = "N") { return Space(CofiniteCarrier{std::move(name)}); }

  bool is_finite() const { return std::holds_alternative<FinPoset>(v_); }
  bool is_cofinite() const { return !is_finite(); }

  const FinPoset& poset() const {
    if (!is_finite()) throw UnsupportedOperation("operation requires a finite space");
    return std::get<FinPoset>(v_);
  }

  const CofiniteCarrier& cofinite_carrier() const {
    if (is_finite()) throw UnsupportedOperation("operation requires the cofinite space");
    return std::get<CofiniteCarrier>(v_);
  }

  std::string describe() const {
    if (is_finite()) return "finite space with " + std::to_string(poset().size()) + " points";
    return "cofinite space on " + cofinite_carrier().name;
  }

 private:
  std::variant<FinPoset, CofiniteCarrier> v_;
};

using SpaceSubset = std::variant<Subset, CofinSet>;

inline std::string subset_str(const SpaceSubset& a) {
  return std::visit([](const auto& s) { return s.str(); }, a);
}

inline Subset finite_part(const Space& x, const SpaceSubset& a) {
  if (!x.is_finite() || !std::holds_alternative<Subset>(a))
    throw ConstructionError("subset kind does not match a finite space");
  const Subset s = std::get<Subset>(a);
  x.poset().check(s);
  return s;
}

inline const CofinSet& cofinite_part(const Space& x, const SpaceSubset& a) {
  if (!x.is_cofinite() || !std::holds_alternative<CofinSet>(a))
    throw ConstructionError("subset kind does not match the cofinite space");
  return std::get<CofinSet>(a);
}

// ---------------------------------------------------------------------------
// Topology of a finite space.

/// Largest up-set inside A.
inline Subset interior(const FinPoset& p, Subset a) {
  p.check(a);
  Subset out;
  a.for_each([&](std::size_t x) {
    if (p.up(x).subset_of(a)) out.insert(x);
  });
  return out;
}

inline bool is_closed(const FinPoset& p, Subset a) { return p.is_lower(a); }
inline bool is_open(const FinPoset& p, Subset a) { return p.is_upper(a); }

/// Irreducible: nonempty, and its closure is directed.
inline bool is_irreducible(const FinPoset& p, Subset a) { return !a.empty() && p.is_directed(p.down(a)); }

struct TopologyOps {
  SpaceSubset closure;
  SpaceSubset interior;
  SpaceSubset saturation;
};

inline TopologyOps topology_ops(const Space& x, const SpaceSubset& a) {
  if (x.is_finite()) {
    const FinPoset& p = x.poset();
    const Subset s = finite_part(x, a);
    return {p.down(s), interior(p, s), p.up(s)};
  }
  const CofinSet& s = cofinite_part(x, a);
  return {s.is_finite() ? s : CofinSet::whole(), s.is_infinite() ? s : CofinSet::none(), s};
}

/// Cofinite kind: a set is irreducible iff it is a single point or infinite
/// (two disjoint finite closed sets cover any other finite set).
inline bool is_irreducible(const Space& x, const SpaceSubset& a) {
  if (x.is_finite()) return is_irreducible(x.poset(), finite_part(x, a));
  const CofinSet& s = cofinite_part(x, a);
  return s.is_infinite() || s.support().size() == 1;
}

// ---------------------------------------------------------------------------
// Families of a finite space. All lists are in ascending mask order.

inline std::vector<Subset> closed_sets(const FinPoset& p, const Caps& caps = {}) { return down_sets(p, caps); }
inline std::vector<Subset> open_sets(const FinPoset& p, const Caps& caps = {}) { return up_sets(p, caps); }

/// K(X): every nonempty up-set (on a finite space every set is compact).
inline std::vector<Subset> compact_saturated(const FinPoset& p, const Caps& caps = {}) {
  std::vector<Subset> out;
  for (Subset u : up_sets(p, caps))
    if (!u.empty()) out.push_back(u);
  return out;
}

/// S_c(X): point closures.
inline std::vector<Subset> point_closures(const FinPoset& p) {
  std::vector<Subset> out = p.principal_ideals();
  std::sort(out.begin(), out.end(), MaskLess{});
  return out;
}

/// S^u(X): principal filters.
inline std::vector<Subset> point_saturations(const FinPoset& p) {
  std::vector<Subset> out;
  for (std::size_t x = 0; x < p.size(); ++x) out.push_back(p.up(x));
  std::sort(out.begin(), out.end(), MaskLess{});
  return out;
}

/// Irr_c(X): closed sets that are irreducible. For carriers within
/// caps.carrier every down-set is tested; above that the principal ideals
/// are returned, which the small-carrier sweep confirms is the same family on
/// every finite poset.
inline std::vector<Subset> irreducible_closed(const FinPoset& p, const Caps& caps = {}) {
  if (p.size() > caps.carrier) return point_closures(p);
  std::vector<Subset> out;
  for (Subset c : down_sets(p, caps))
    if (is_irreducible(p, c)) out.push_back(c);
  return out;
}

/// All irreducible subsets (not only closed ones), by subset sweep.
inline std::vector<Subset> irreducible_subsets(const FinPoset& p, const Caps& caps = {}) {
  if (p.size() > caps.subset_sweep) throw CapExceeded("irreducible-subset sweep exceeds subset cap");
  std::vector<Subset> out;
  for_each_subset_of(p.carrier(), [&](Subset a) {
    if (is_irreducible(p, a)) out.push_back(a);
  });
  std::sort(out.begin(), out.end(), MaskLess{});
  return out;
}

/// All directed subsets, ascending mask order.
inline std::vector<Subset> directed_subsets(const FinPoset& p, const Caps& caps = {}) {
  if (count_directed_subsets(p) > caps.sets) throw CapExceeded("directed-subset sweep exceeds cap");
  std::vector<Subset> out;
  for_each_directed_subset(p, [&](Subset d) { out.push_back(d); });
  std::sort(out.begin(), out.end(), MaskLess{});
  return out;
}

/// D_c(X): closures of directed subsets.
inline std::vector<Subset> directed_closures(const FinPoset& p, const Caps& caps = {}) {
  if (count_directed_subsets(p) > caps.sets) throw CapExceeded("directed-subset sweep exceeds cap");
  std::set<std::uint64_t> seen;
  for_each_directed_subset(p, [&](Subset d) { seen.insert(p.down(d).bits()); });
  std::vector<Subset> out;
  for (auto b : seen) out.emplace_back(b);
  return out;
}

struct Families {
  bool symbolic = false;
  std::vector<Subset> irr_c;
  std::vector<Subset> s_c;
  std::vector<Subset> d_c;
  std::vector<Subset> k;
  /// Descriptions used for the cofinite space.
  std::string irr_c_desc;
  std::string s_c_desc;
  std::string d_c_desc;
  std::string k_desc;
};

inline Families enumerate_families(const Space& x, const Caps& caps = {}) {
  Families f;
  if (x.is_cofinite()) {
    f.symbolic = true;
    f.irr_c_desc = "{ {x} : x in X } + { X }";
    f.s_c_desc = "{ {x} : x in X }";
    f.d_c_desc = "{ {x} : x in X }";
    f.k_desc = "all nonempty subsets of X";
    return f;
  }
  const FinPoset& p = x.poset();
  if (p.size() > caps.carrier) throw CapExceeded("family enumeration exceeds carrier cap");
  f.irr_c = irreducible_closed(p, caps);
  f.s_c = point_closures(p);
  f.d_c = directed_closures(p, caps);
  f.k = compact_saturated(p, caps);
  const auto describe = [](const std::vector<Subset>& fam) { return family_str(fam); };
  f.irr_c_desc = describe(f.irr_c);
  f.s_c_desc = describe(f.s_c);
  f.d_c_desc = describe(f.d_c);
  f.k_desc = describe(f.k);
  return f;
}

/// K(X) as a materialized list; unavailable on the cofinite space.
inline std::vector<Subset> compact_saturated(const Space& x, const Caps& caps = {}) {
  if (x.is_cofinite()) throw UnsupportedOperation("K(X) of the cofinite space is not materialized");
  return compact_saturated(x.poset(), caps);
}

inline bool is_compact_saturated(const FinPoset& p, Subset k) { return !k.empty() && p.is_upper(k); }

/// min(K) for K in K(X); checks up(min K) = K.
inline SpaceSubset min_of_compact(const Space& x, const SpaceSubset& k) {
  if (x.is_finite()) {
    const FinPoset& p = x.poset();
    const Subset s = finite_part(x, k);
    if (!is_compact_saturated(p, s)) throw PreconditionError("set " + s.str() + " is not a nonempty saturated set");
    const Subset m = p.minimal(s);
    if (p.up(m) != s) throw Error("up(min K) differs from K for " + s.str());
    return m;
  }
  const CofinSet& s = cofinite_part(x, k);
  if (s.empty()) throw PreconditionError("empty set is not compact saturated");
  return s;  // the specialization order is discrete
}

inline bool is_supercompact(const Space& x, const SpaceSubset& k) {
  if (x.is_finite()) return std::get<Subset>(min_of_compact(x, k)).size() == 1;
  const CofinSet& s = cofinite_part(x, k);
  if (s.empty()) throw PreconditionError("empty set is not compact saturated");
  return s.is_finite() && s.support().size() == 1;
}

// ---------------------------------------------------------------------------
// Maps.

using Map = std::vector<std::size_t>;

inline bool is_monotone(const FinPoset& x, const FinPoset& y, const Map& f) {
  if (f.size() != x.size()) return false;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (f[a] >= y.size()) return false;
    bool ok = true;
    x.up(a).for_each([&](std::size_t b) {
      if (!y.leq(f[a], f[b])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline Subset image(const Map& f, Subset a) {
  Subset out;
  a.for_each([&](std::size_t x) { out.insert(f[x]); });
  return out;
}

inline Subset preimage(const Map& f, Subset b) {
  Subset out;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (b.contains(f[x])) out.insert(x);
  return out;
}

/// Every continuous (equivalently, monotone) map X -> Y in lexicographic
/// order of the value tuple.
inline std::vector<Map> continuous_maps(const FinPoset& x, const FinPoset& y, const Caps& caps = {}) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  double bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    bound *= static_cast<double>(m);
    if (bound > static_cast<double>(caps.maps)) throw CapExceeded("|Y|^|X| exceeds the map cap");
  }
  std::vector<Map> out;
  Map f(n, 0);
  auto rec = [&](auto& self, std::size_t a) -> void {
    if (a == n) {
      out.push_back(f);
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      bool ok = true;
      for (std::size_t b = 0; b < a && ok; ++b) {
        if (x.leq(b, a) && !y.leq(f[b], v)) ok = false;
        if (x.leq(a, b) && !y.leq(v, f[b])) ok = false;
      }
      if (!ok) continue;
      f[a] = v;
      self(self, a + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Map> continuous_maps(const Space& x, const Space& y, const Caps& caps = {}) {
  return continuous_maps(x.poset(), y.poset(), caps);
}

// ---------------------------------------------------------------------------
// Constructions.

struct Product {
  FinPoset space;
  /// coords[z][i]: the i-th coordinate of point z.
  std::vector<std::vector<std::size_t>> coords;
  std::vector<std::size_t> factor_sizes;

  Map projection(std::size_t i) const {
    Map f(coords.size());
    for (std::size_t z = 0; z < coords.size(); ++z) f[z] = coords[z][i];
    return f;
  }

  /// Point with the given coordinates; the last factor varies fastest.
  std::size_t index_of(const std::vector<std::size_t>& c) const {
    std::size_t z = 0;
    for (std::size_t i = 0; i < c.size(); ++i) z = z * factor_sizes[i] + c[i];
    return z;
  }
};

/// Componentwise order. For finitely many finite spaces the product topology
/// is the Alexandroff topology of this order.
inline Product product(const std::vector<FinPoset>& xs) {
  std::size_t total = 1;
  for (const auto& x : xs) {
    total *= x.size();
    if (total > kMaxCarrier) throw CapExceeded("product carrier exceeds " + std::to_string(kMaxCarrier));
  }
  Product pr;
  for (const auto& x : xs) pr.factor_sizes.push_back(x.size());
  pr.coords.resize(total);
  for (std::size_t z = 0; z < total; ++z) {
    std::size_t rest = z;
    std::vector<std::size_t> c(xs.size());
    for (std::size_t i = xs.size(); i-- > 0;) {
      c[i] = rest % xs[i].size();
      rest /= xs[i].size();
    }
    pr.coords[z] = std::move(c);
  }
  std::vector<Subset> down(total);
  std::vector<std::string> labels(total);
  for (std::size_t z = 0; z < total; ++z) {
    std::string lab = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) lab += (i ? "," : "") + xs[i].label(pr.coords[z][i]);
    labels[z] = lab + ")";
    for (std::size_t w = 0; w < total; ++w) {
      bool le = true;
      for (std::size_t i = 0; i < xs.size() && le; ++i) le = xs[i].leq(pr.coords[w][i], pr.coords[z][i]);
      if (le) down[z].insert(w);
    }
  }
  pr.space = FinPoset::from_down_sets(std::move(down), std::move(labels));
  return pr;
}

inline Subset product_set(const Product& pr, const std::vector<Subset>& parts) {
  Subset out;
  for (std::size_t z = 0; z < pr.coords.size(); ++z) {
    bool in = true;
    for (std::size_t i = 0; i < parts.size() && in; ++i) in = parts[i].contains(pr.coords[z][i]);
    if (in) out.insert(z);
  }
  return out;
}

struct Subspace {
  FinPoset space;
  /// inclusion[i]: the point of X that is point i of the subspace.
  Map inclusion;
};

inline Subspace subspace_closed(const FinPoset& x, Subset a) {
  x.check(a);
  if (!is_closed(x, a)) throw PreconditionError("subset " + a.str() + " is not closed");
  return {x.induced(a), a.elements()};
}

/// X with a new greatest point (index n, label "inf"); closed sets are those
/// of X together with the whole new carrier.
inline FinPoset add_top(const FinPoset& x) {
  const std::size_t n = x.size();
  std::vector<Subset> down;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    down.push_back(x.down(i));
    labels.push_back(x.label(i));
  }
  down.push_back(Subset::full(n + 1));
  labels.emplace_back("inf");
  return FinPoset::from_down_sets(std::move(down), std::move(labels));
}

inline Space add_top(const Space& x) {
  if (x.is_cofinite()) throw UnsupportedOperation("X_inf of the cofinite space is not representable");
  return Space(add_top(x.poset()));
}

}  // namespace soberkit

#endif  // SOBERKIT_SPACE_HPP_
