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

#ifndef SOBERKIT_POWERSPACE_HPP_
#define SOBERKIT_POWERSPACE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soberkit/caps.hpp"
#include "soberkit/error.hpp"
#include "soberkit/families.hpp"
#include "soberkit/poset.hpp"
#include "soberkit/rudin.hpp"
#include "soberkit/space.hpp"
#include "soberkit/subset.hpp"

namespace soberkit {

enum class PowerKind { Smyth, Hoare };

/// A power space of a finite space, itself a finite space. Point i of
/// `space` is the subset carrier[i] of the base; carriers are sorted by
/// ascending characteristic word.
struct PowerSpace {
  FinPoset base;
  PowerKind kind = PowerKind::Smyth;
  std::vector<Subset> carrier;
  FinPoset space;

  std::optional<std::size_t> find(Subset s) const {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), s, MaskLess{});
    if (it == carrier.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - carrier.begin());
  }

  std::size_t index_of(Subset s) const {
    auto i = find(s);
    if (!i) throw PreconditionError("set " + s.str() + " is not a point of the power space");
    return *i;
  }

  /// Subset of `space` whose members lie in `family`.
  Subset points_of(const std::vector<Subset>& family) const {
    Subset out;
    for (Subset s : family) out.insert(index_of(s));
    return out;
  }

  std::vector<Subset> sets_of(Subset points) const {
    std::vector<Subset> out;
    points.for_each([&](std::size_t i) { out.push_back(carrier[i]); });
    return out;
  }
};

/// Box U = {K : K inside U} over the points of a Smyth power space.
inline Subset smyth_box(const PowerSpace& ps, Subset u) {
  Subset out;
  for (std::size_t i = 0; i < ps.carrier.size(); ++i)
    if (ps.carrier[i].subset_of(u)) out.insert(i);
  return out;
}

/// Diamond U = {A : A meets U} over the points of a power space.
inline Subset diamond(const PowerSpace& ps, Subset u) {
  Subset out;
  for (std::size_t i = 0; i < ps.carrier.size(); ++i)
    if (ps.carrier[i].intersects(u)) out.insert(i);
  return out;
}

/// P_S(X): K(X) under the Smyth order (K <= K' iff K' is inside K).
///
/// Construction checks that the upper Vietoris topology, generated by the
/// boxes of open sets, is the Alexandroff topology of the Smyth order: every
/// box is an up-set, and the principal up-set of K is the box of K (K is
/// open in a finite space).
inline PowerSpace smyth(const FinPoset& x, const Caps& caps = {}) {
  PowerSpace ps;
  ps.base = x;
  ps.kind = PowerKind::Smyth;
  ps.carrier = compact_saturated(x, caps);
  if (ps.carrier.size() > caps.powerspace || ps.carrier.size() > kMaxCarrier)
    throw CapExceeded("Smyth power space has " + std::to_string(ps.carrier.size()) + " points");
  const std::size_t m = ps.carrier.size();
  std::vector<Subset> down(m);
  std::vector<std::string> labels(m);
  for (std::size_t j = 0; j < m; ++j) {
    labels[j] = ps.carrier[j].str();
    for (std::size_t i = 0; i < m; ++i)
      if (ps.carrier[j].subset_of(ps.carrier[i])) down[j].insert(i);
  }
  ps.space = FinPoset::from_down_sets(std::move(down), std::move(labels));
  for (Subset u : open_sets(x, caps))
    if (!ps.space.is_upper(smyth_box(ps, u))) throw Error("box of " + u.str() + " is not a Smyth up-set");
  for (std::size_t i = 0; i < m; ++i)
    if (ps.space.up(i) != smyth_box(ps, ps.carrier[i]))
      throw Error("principal Smyth filter of " + ps.carrier[i].str() + " is not a box");
  return ps;
}

/// P_H(G) for a family G of nonempty closed sets, ordered by inclusion, with
/// the lower Vietoris topology {diamond U}.
///
/// Construction checks that this topology is the Alexandroff topology of
/// inclusion: every diamond is an up-set, and the principal up-set of A is the
/// intersection of the diamonds of the principal filters of its points.
inline PowerSpace hoare(const FinPoset& x, std::vector<Subset> g, const Caps& caps = {}) {
  for (Subset a : g) {
    x.check(a);
    if (a.empty()) throw PreconditionError("the empty set cannot be a point of a Hoare power space");
    if (!is_closed(x, a)) throw PreconditionError("set " + a.str() + " is not closed");
  }
  std::sort(g.begin(), g.end(), MaskLess{});
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.size() > caps.powerspace || g.size() > kMaxCarrier)
    throw CapExceeded("Hoare power space has " + std::to_string(g.size()) + " points");
  PowerSpace ps;
  ps.base = x;
  ps.kind = PowerKind::Hoare;
  ps.carrier = std::move(g);
  const std::size_t m = ps.carrier.size();
  std::vector<Subset> down(m);
  std::vector<std::string> labels(m);
  for (std::size_t j = 0; j < m; ++j) {
    labels[j] = ps.carrier[j].str();
    for (std::size_t i = 0; i < m; ++i)
      if (ps.carrier[i].subset_of(ps.carrier[j])) down[j].insert(i);
  }
  ps.space = FinPoset::from_down_sets(std::move(down), std::move(labels));
  for (Subset u : open_sets(x, caps))
    if (!ps.space.is_upper(diamond(ps, u))) throw Error("diamond of " + u.str() + " is not an up-set");
  for (std::size_t i = 0; i < m; ++i) {
    Subset meet = Subset::full(m);
    ps.carrier[i].for_each([&](std::size_t a) { meet &= diamond(ps, x.up(a)); });
    if (meet != ps.space.up(i)) throw Error("principal filter of " + ps.carrier[i].str() + " is not open");
  }
  return ps;
}

inline PowerSpace hoare_irreducible(const FinPoset& x, const Caps& caps = {}) {
  return hoare(x, irreducible_closed(x, caps), caps);
}

inline PowerSpace hoare_wd(const FinPoset& x, const Caps& caps = {}) { return hoare(x, wd_sets(x, {}, caps), caps); }

inline PowerSpace hoare_closed(const FinPoset& x, const Caps& caps = {}) {
  std::vector<Subset> g;
  for (Subset c : closed_sets(x, caps))
    if (!c.empty()) g.push_back(c);
  return hoare(x, std::move(g), caps);
}

/// x -> up x into P_S(X).
inline Map xi(const PowerSpace& ps) {
  if (ps.kind != PowerKind::Smyth) throw PreconditionError("xi maps into a Smyth power space");
  Map f(ps.base.size());
  for (std::size_t x = 0; x < ps.base.size(); ++x) f[x] = ps.index_of(ps.base.up(x));
  return f;
}

/// x -> down x into P_H(G); requires every point closure in G.
inline Map eta(const PowerSpace& ps) {
  if (ps.kind != PowerKind::Hoare) throw PreconditionError("eta maps into a Hoare power space");
  Map f(ps.base.size());
  for (std::size_t x = 0; x < ps.base.size(); ++x) f[x] = ps.index_of(ps.base.down(x));
  return f;
}

struct EmbeddingReport {
  bool injective = false;
  bool continuous = false;
  bool open_onto_image = false;
  std::string witness;
  bool ok() const { return injective && continuous && open_onto_image; }
};

/// Whether f: X -> Y is a topological embedding: injective, continuous, and
/// every open U of X satisfies f(U) = V & f(X) for the open V = up f(U).
inline EmbeddingReport check_embedding(const FinPoset& x, const FinPoset& y, const Map& f, const Caps& caps = {}) {
  EmbeddingReport r;
  r.injective = image(f, x.carrier()).size() == x.size();
  if (!r.injective) r.witness = "two points share an image";
  r.continuous = true;
  for (Subset v : open_sets(y, caps))
    if (!x.is_upper(preimage(f, v))) {
      r.continuous = false;
      r.witness = "preimage of open " + v.str() + " is not open";
      break;
    }
  r.open_onto_image = true;
  const Subset whole = image(f, x.carrier());
  for (Subset u : open_sets(x, caps)) {
    const Subset fu = image(f, u);
    if ((y.up(fu) & whole) != fu) {
      r.open_onto_image = false;
      r.witness = "image of open " + u.str() + " is not open in the image";
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// The union map and meets in the Smyth power space.

struct UnionMapReport {
  bool compact_ok = true;
  bool continuous_ok = true;
  bool meet_ok = true;
  bool meet_exhaustive = true;
  std::size_t outer_points = 0;
  std::size_t families_checked = 0;
  std::string witness;
  bool ok() const { return compact_ok && continuous_ok && meet_ok; }
};

/// Checks that the union of every K in K(P_S(X)) lies in K(X), that the union
/// map P_S(P_S(X)) -> P_S(X) is continuous, and that a family of compact
/// saturated sets has the same intersection as its Smyth closure.
///
/// P_S(P_S(X)) is Alexandroff for the Smyth order, so a set of its points is
/// open iff it is closed under passing to smaller up-sets of P_S(X); removing
/// one minimal point at a time reaches every smaller up-set.
inline UnionMapReport union_map_check(const FinPoset& x, const Caps& caps = {}) {
  UnionMapReport r;
  const PowerSpace ps = smyth(x, caps);
  std::vector<Subset> outer;  // K(P_S(X)) as point sets of ps.space
  for (Subset u : up_sets(ps.space, caps))
    if (!u.empty()) outer.push_back(u);
  r.outer_points = outer.size();
  std::vector<Subset> unions(outer.size());
  for (std::size_t i = 0; i < outer.size(); ++i) {
    unions[i] = family_join(ps.sets_of(outer[i]));
    if (!is_compact_saturated(x, unions[i]) && r.compact_ok) {
      r.compact_ok = false;
      r.witness = "union of " + family_str(ps.sets_of(outer[i])) + " is not in K(X)";
    }
  }
  for (Subset u : open_sets(x, caps)) {
    for (std::size_t i = 0; i < outer.size() && r.continuous_ok; ++i) {
      if (!unions[i].subset_of(u)) continue;
      ps.space.minimal(outer[i]).for_each([&](std::size_t k) {
        const Subset smaller = outer[i] - Subset::singleton(k);
        if (smaller.empty() || !r.continuous_ok) return;
        if (!family_join(ps.sets_of(smaller)).subset_of(u)) {
          r.continuous_ok = false;
          r.witness = "preimage of box " + u.str() + " is not open";
        }
      });
    }
  }
  Caps meet_caps = caps;
  meet_caps.family_bits = caps.subset_sweep;
  const SweepInfo info = for_each_subfamily(ps.carrier, meet_caps, [&](const std::vector<Subset>& fam) {
    ++r.families_checked;
    const auto cl = superset_closure(fam, ps.carrier);
    if (r.meet_ok && family_meet(fam, x.size()) != family_meet(cl, x.size())) {
      r.meet_ok = false;
      r.witness = "meet of " + family_str(fam) + " differs from the meet of its closure";
    }
  });
  r.meet_exhaustive = info.exhaustive;
  return r;
}

// ---------------------------------------------------------------------------
// Open filters of O(X).

struct OpenFilterReport {
  /// O(X), ascending mask order; filters and images of Phi are point sets of
  /// this list.
  std::vector<Subset> opens;
  std::vector<Subset> filters;
  std::vector<Subset> k;
  std::vector<Subset> phi;
  bool scott_checked = false;
  bool bijective = false;
  bool order_iso = false;
  bool agrees_with_sober = false;
  std::string witness;
};

/// Phi(K) = {U open : K inside U}, as a point set of `opens`.
inline Subset phi_of(const std::vector<Subset>& opens, Subset k) {
  Subset out;
  for (std::size_t i = 0; i < opens.size(); ++i)
    if (k.subset_of(opens[i])) out.insert(i);
  return out;
}

/// Scott-open filters of O(X) that omit the empty open set, found by sweeping
/// every up-set of the lattice; Phi: K(X) -> OFilt and its order behaviour.
/// `sober` is the caller's sobriety verdict for X, to be cross-checked.
inline OpenFilterReport open_filters_and_phi(const FinPoset& x, bool sober, const Caps& caps = {}) {
  OpenFilterReport r;
  r.opens = open_sets(x, caps);
  const std::size_t m = r.opens.size();
  if (m > kMaxCarrier) throw CapExceeded("O(X) has more than " + std::to_string(kMaxCarrier) + " members");
  std::vector<Subset> down(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i)
      if (r.opens[i].subset_of(r.opens[j])) down[j].insert(i);
  const FinPoset lattice = FinPoset::from_down_sets(std::move(down));
  const std::size_t empty_index = 0;  // the empty set has the smallest mask
  auto meet_index = [&](std::size_t a, std::size_t b) {
    auto it = std::lower_bound(r.opens.begin(), r.opens.end(), r.opens[a] & r.opens[b], MaskLess{});
    return static_cast<std::size_t>(it - r.opens.begin());
  };
  r.scott_checked = count_directed_subsets(lattice) <= caps.sets;
  for (Subset f : up_sets(lattice, caps)) {
    if (f.empty() || f.contains(empty_index)) continue;
    bool closed_under_meets = true;
    const auto el = f.elements();
    for (std::size_t i = 0; i < el.size() && closed_under_meets; ++i)
      for (std::size_t j = i + 1; j < el.size() && closed_under_meets; ++j)
        if (!f.contains(meet_index(el[i], el[j]))) closed_under_meets = false;
    if (!closed_under_meets) continue;
    if (r.scott_checked && !is_scott_open(lattice, f, caps)) continue;
    r.filters.push_back(f);
  }
  std::sort(r.filters.begin(), r.filters.end(), MaskLess{});
  r.k = compact_saturated(x, caps);
  for (Subset k : r.k) r.phi.push_back(phi_of(r.opens, k));
  std::vector<Subset> images = r.phi;
  std::sort(images.begin(), images.end(), MaskLess{});
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  r.bijective = injective && images == r.filters;
  if (!r.bijective) {
    for (Subset f : r.filters)
      if (!std::binary_search(images.begin(), images.end(), f, MaskLess{})) {
        std::vector<Subset> members;
        f.for_each([&](std::size_t i) { members.push_back(r.opens[i]); });
        r.witness = "open filter " + family_str(members) + " is not Phi(K) for any K";
        break;
      }
    if (r.witness.empty()) r.witness = "Phi is not injective";
  }
  r.order_iso = r.bijective;
  for (std::size_t i = 0; i < r.k.size() && r.order_iso; ++i)
    for (std::size_t j = 0; j < r.k.size() && r.order_iso; ++j) {
      const bool smyth_le = r.k[j].subset_of(r.k[i]);
      if (smyth_le != r.phi[i].subset_of(r.phi[j])) {
        r.order_iso = false;
        r.witness = "Phi does not reflect the Smyth order at " + r.k[i].str() + ", " + r.k[j].str();
      }
    }
  r.agrees_with_sober = r.order_iso == sober;
  return r;
}

struct IrrFilterReport {
  Subset filter;  // point set of `opens`
  std::vector<Subset> opens;
  bool is_open_filter = false;
  bool closure_agrees = false;
};

/// F_A = union of Phi(K) over K in A, for A irreducible in P_S(X).
inline IrrFilterReport irr_open_filter(const FinPoset& x, const std::vector<Subset>& fam, const Caps& caps = {}) {
  for (Subset k : fam) {
    x.check(k);
    if (!is_compact_saturated(x, k)) throw PreconditionError("member " + k.str() + " is not in K(X)");
  }
  if (!is_smyth_irreducible(fam)) throw PreconditionError("family " + family_str(fam) + " is not irreducible");
  IrrFilterReport r;
  r.opens = open_sets(x, caps);
  if (r.opens.size() > kMaxCarrier) throw CapExceeded("O(X) has more than " + std::to_string(kMaxCarrier) + " members");
  for (Subset k : fam) r.filter |= phi_of(r.opens, k);
  bool upper = true;
  bool meets = true;
  const bool proper = !r.filter.contains(0);
  r.filter.for_each([&](std::size_t i) {
    for (std::size_t j = 0; j < r.opens.size(); ++j) {
      if (r.opens[i].subset_of(r.opens[j]) && !r.filter.contains(j)) upper = false;
      if (r.filter.contains(j)) {
        auto it = std::lower_bound(r.opens.begin(), r.opens.end(), r.opens[i] & r.opens[j], MaskLess{});
        if (!r.filter.contains(static_cast<std::size_t>(it - r.opens.begin()))) meets = false;
      }
    }
  });
  r.is_open_filter = !r.filter.empty() && upper && meets && proper;
  Subset closure_filter;
  for (Subset k : superset_closure(fam, compact_saturated(x, caps))) closure_filter |= phi_of(r.opens, k);
  r.closure_agrees = closure_filter == r.filter;
  return r;
}

}  // namespace soberkit

#endif  // SOBERKIT_POWERSPACE_HPP_
