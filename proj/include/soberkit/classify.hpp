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

#ifndef SOBERKIT_CLASSIFY_HPP_
#define SOBERKIT_CLASSIFY_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
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

/// A truth value with a counterexample when false. `bounded` marks verdicts
/// whose family sweep was not exhaustive.
struct Verdict {
  bool value = true;
  std::string witness;
  bool bounded = false;

  static Verdict yes(bool bounded = false) { return {true, {}, bounded}; }
  static Verdict no(std::string why, bool bounded = false) { return {false, std::move(why), bounded}; }
};

// ---------------------------------------------------------------------------
// Space-class predicates of a finite space, each decided from its definition.

inline Verdict is_t1(const FinPoset& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.down(x) != Subset::singleton(x)) return Verdict::no("closure of {" + std::to_string(x) + "} is " + p.down(x).str());
  return Verdict::yes();
}

/// Directed complete, and every open set is Scott-open.
inline Verdict is_d_space(const FinPoset& p, const Caps& caps = {}) {
  if (!is_dcpo(p, caps)) return Verdict::no("specialization order is not directed complete");
  for (Subset u : open_sets(p, caps))
    if (!is_scott_open(p, u, caps)) return Verdict::no("open set " + u.str() + " is not Scott-open");
  return Verdict::yes();
}

/// Every directed set has an upper bound.
inline Verdict is_d_bounded(const FinPoset& p, const Caps& caps = {}) {
  for (Subset d : directed_subsets(p, caps))
    if (p.upper_bounds(d).empty()) return Verdict::no("directed set " + d.str() + " has no upper bound");
  return Verdict::yes();
}

/// For every filtered family K of compact saturated sets and open U, if the
/// meet of K lies in U then some member does.
inline Verdict is_well_filtered(const FinPoset& p, const Caps& caps = {}) {
  const auto k = compact_saturated(p, caps);
  const auto opens = open_sets(p, caps);
  Verdict v;
  const SweepInfo info = for_each_filtered_family(k, caps, [&](const std::vector<Subset>& fam) {
    if (!v.value) return;
    const Subset meet = family_meet(fam, p.size());
    // A member equal to the meet answers every U at once.
    if (std::find(fam.begin(), fam.end(), meet) != fam.end()) return;
    for (Subset u : opens) {
      if (!meet.subset_of(u)) continue;
      bool some = false;
      for (Subset m : fam)
        if (m.subset_of(u)) some = true;
      if (!some) {
        v = Verdict::no("filtered family " + family_str(fam) + " has meet inside open " + u.str() +
                        " but no member inside it");
        return;
      }
    }
  });
  v.bounded = !info.exhaustive;
  return v;
}

/// Every irreducible closed set is the closure of exactly one point.
inline Verdict is_sober(const FinPoset& p, const Caps& caps = {}) {
  for (Subset a : irreducible_closed(p, caps)) {
    std::size_t generic = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.down(x) == a) ++generic;
    if (generic != 1)
      return Verdict::no("irreducible closed set " + a.str() + " has " + std::to_string(generic) + " generic points");
  }
  return Verdict::yes();
}

/// Every irreducible closed set is the closure of a directed set.
inline Verdict is_dc_space(const FinPoset& p, const Caps& caps = {}) {
  const auto dc = directed_closures(p, caps);
  for (Subset a : irreducible_closed(p, caps))
    if (!std::binary_search(dc.begin(), dc.end(), a, MaskLess{}))
      return Verdict::no("irreducible closed set " + a.str() + " is not a directed closure");
  return Verdict::yes();
}

inline Verdict is_rudin_space(const FinPoset& p, const Caps& caps = {}) {
  const Space x(p);
  for (Subset a : irreducible_closed(p, caps))
    if (!is_rudin_set(x, a, caps).rudin) return Verdict::no("irreducible closed set " + a.str() + " is not a Rudin set");
  return Verdict::yes();
}

inline Verdict is_wd_space(const FinPoset& p, const Caps& caps = {}) {
  const Space x(p);
  for (Subset a : irreducible_closed(p, caps)) {
    const WdVerdict w = wd_status(x, a, {}, caps);
    if (!w.is_wd()) return Verdict::no("irreducible closed set " + a.str() + " has WD status " + to_string(w.status));
  }
  return Verdict::yes();
}

/// For each point x and open U containing x there is K in K(X) with x in
/// int K and K inside U.
inline Verdict is_locally_compact(const FinPoset& p, const Caps& caps = {}) {
  const auto k = compact_saturated(p, caps);
  for (Subset u : open_sets(p, caps)) {
    bool ok = true;
    u.for_each([&](std::size_t x) {
      bool found = false;
      for (Subset c : k)
        if (c.subset_of(u) && interior(p, c).contains(x)) {
          found = true;
          break;
        }
      if (!found) ok = false;
    });
    if (!ok) return Verdict::no("open set " + u.str() + " has a point without a compact neighbourhood inside it");
  }
  return Verdict::yes();
}

/// O(X) of a finite space as a poset under inclusion; point i is opens[i].
struct OpenLattice {
  std::vector<Subset> opens;
  FinPoset order;
};

inline OpenLattice open_lattice(const FinPoset& p, const Caps& caps = {}) {
  OpenLattice l;
  l.opens = open_sets(p, caps);
  if (l.opens.size() > kMaxCarrier) throw CapExceeded("O(X) has more than " + std::to_string(kMaxCarrier) + " members");
  std::vector<Subset> down(l.opens.size());
  for (std::size_t j = 0; j < l.opens.size(); ++j)
    for (std::size_t i = 0; i < l.opens.size(); ++i)
      if (l.opens[i].subset_of(l.opens[j])) down[j].insert(i);
  l.order = FinPoset::from_down_sets(std::move(down));
  return l;
}

/// O(X) is a continuous lattice: every open is the union of the opens way
/// below it. Way-below is swept over directed families when O(X) has at most
/// caps.lattice_sweep members; above that the finite-lattice identity
/// (u << v iff u <= v) is used and the verdict is marked bounded.
inline Verdict is_core_compact(const FinPoset& p, const Caps& caps = {}) {
  const auto opens = open_sets(p, caps);
  if (opens.size() > caps.lattice_sweep || opens.size() > kMaxCarrier) {
    // Every open is then its own way-below approximant.
    return Verdict::yes(true);
  }
  const OpenLattice l = open_lattice(p, caps);
  const auto wb = way_below_relation(l.order, caps);
  for (std::size_t v = 0; v < l.opens.size(); ++v) {
    Subset approx;
    for (std::size_t u = 0; u < l.opens.size(); ++u)
      if (wb[u].contains(v)) approx |= l.opens[u];
    if (approx != l.opens[v]) return Verdict::no("open set " + l.opens[v].str() + " is not the union of opens way below it");
  }
  return Verdict::yes();
}

/// For x in open U there is a finite F with x in int(up F) and up F inside U.
/// Candidate sets are {x} and min(U).
inline Verdict is_locally_hypercompact(const FinPoset& p, const Caps& caps = {}) {
  for (Subset u : open_sets(p, caps)) {
    if (u.empty()) continue;
    const Subset mins = p.minimal(u);
    bool ok = true;
    u.for_each([&](std::size_t x) {
      bool found = false;
      for (Subset f : {Subset::singleton(x), mins}) {
        const Subset uf = p.up(f);
        if (uf.subset_of(u) && interior(p, uf).contains(x)) found = true;
      }
      if (!found) ok = false;
    });
    if (!ok) return Verdict::no("open set " + u.str() + " has a point with no finitely generated neighbourhood");
  }
  return Verdict::yes();
}

/// For x in open U there is u in U with x in int(up u). On lattices within
/// caps.lattice_sweep the distributive law of O(X), computed with lattice
/// joins and meets, is also checked; finite distributive lattices are
/// completely distributive.
inline Verdict is_c_space(const FinPoset& p, const Caps& caps = {}) {
  for (Subset u : open_sets(p, caps)) {
    bool ok = true;
    u.for_each([&](std::size_t x) {
      bool found = false;
      u.for_each([&](std::size_t y) {
        if (p.up(y).subset_of(u) && interior(p, p.up(y)).contains(x)) found = true;
      });
      if (!found) ok = false;
    });
    if (!ok) return Verdict::no("open set " + u.str() + " has a point with no principal neighbourhood inside it");
  }
  const auto opens = open_sets(p, caps);
  if (opens.size() > caps.lattice_sweep || opens.size() > kMaxCarrier) return Verdict::yes(true);
  const OpenLattice l = open_lattice(p, caps);
  const std::size_t m = l.opens.size();
  auto join = [&](std::size_t a, std::size_t b) { return *l.order.sup(Subset::singleton(a) | Subset::singleton(b)); };
  auto meet = [&](std::size_t a, std::size_t b) { return *l.order.inf(Subset::singleton(a) | Subset::singleton(b)); };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          return Verdict::no("O(X) is not distributive at " + l.opens[a].str() + ", " + l.opens[b].str() + ", " +
                             l.opens[c].str());
  return Verdict::yes();
}

/// Every filtered family of compact saturated sets has nonempty meet.
inline Verdict has_ftip(const FinPoset& p, const Caps& caps = {}) {
  Verdict v;
  const SweepInfo info = for_each_filtered_family(compact_saturated(p, caps), caps, [&](const std::vector<Subset>& fam) {
    if (v.value && family_meet(fam, p.size()).empty())
      v = Verdict::no("filtered family " + family_str(fam) + " has empty meet");
  });
  v.bounded = !info.exhaustive;
  return v;
}

/// Every irreducible family in P_S(X) has nonempty meet.
inline Verdict has_rip(const FinPoset& p, const Caps& caps = {}) {
  Verdict v;
  const SweepInfo info = for_each_subfamily(compact_saturated(p, caps), caps, [&](const std::vector<Subset>& fam) {
    if (v.value && is_smyth_irreducible(fam) && family_meet(fam, p.size()).empty())
      v = Verdict::no("irreducible family " + family_str(fam) + " has empty meet");
  });
  v.bounded = !info.exhaustive;
  return v;
}

/// Every irreducible set has a supremum.
inline Verdict is_irreducible_complete(const FinPoset& p, const Caps& caps = {}) {
  for (Subset a : irreducible_subsets(p, caps))
    if (!p.sup(a)) return Verdict::no("irreducible set " + a.str() + " has no supremum");
  return Verdict::yes();
}

/// Every irreducible set has an upper bound.
inline Verdict is_r_bounded(const FinPoset& p, const Caps& caps = {}) {
  for (Subset a : irreducible_subsets(p, caps))
    if (p.upper_bounds(a).empty()) return Verdict::no("irreducible set " + a.str() + " has no upper bound");
  return Verdict::yes();
}

// ---------------------------------------------------------------------------

inline constexpr std::array<const char*, 16> kFlagNames = {
    "T1",          "d_space",         "d_bounded",     "well_filtered",        "sober", "dc_space",
    "rudin_space", "wd_space",        "locally_compact", "core_compact", "locally_hypercompact",
    "c_space",     "ftip",            "rip",           "irreducible_complete", "r_bounded"};

/// The sixteen class flags of a space, with witnesses for false flags and a
/// note for flags decided by a bounded sweep.
struct ClassificationVector {
  std::map<std::string, bool> flags;
  std::map<std::string, std::string> witnesses;
  std::map<std::string, std::string> notes;

  bool get(const std::string& name) const {
    auto it = flags.find(name);
    if (it == flags.end()) throw PreconditionError("unknown flag " + name);
    return it->second;
  }

  void set(const std::string& name, const Verdict& v) {
    flags[name] = v.value;
    if (!v.value) witnesses[name] = v.witness;
    if (v.bounded) notes[name] = "bounded check";
  }
};

/// Implications between the flags that every space satisfies. Returns a
/// description of the first violated implication, or an empty string.
inline std::string implication_violation(const ClassificationVector& v) {
  static const std::array<std::pair<const char*, const char*>, 8> kImplications = {{
      {"sober", "well_filtered"},
      {"well_filtered", "d_space"},
      {"d_space", "d_bounded"},
      {"dc_space", "rudin_space"},
      {"rudin_space", "wd_space"},
      {"c_space", "locally_hypercompact"},
      {"locally_hypercompact", "locally_compact"},
      {"locally_compact", "core_compact"},
  }};
  for (auto [from, to] : kImplications)
    if (v.get(from) && !v.get(to)) return std::string(from) + " holds but " + to + " does not";
  if (v.get("sober") && !v.get("dc_space")) return "sober holds but dc_space does not";
  return {};
}

inline ClassificationVector classify(const FinPoset& p, const Caps& caps = {}) {
  ClassificationVector v;
  v.set("T1", is_t1(p));
  v.set("d_space", is_d_space(p, caps));
  v.set("d_bounded", is_d_bounded(p, caps));
  v.set("well_filtered", is_well_filtered(p, caps));
  v.set("sober", is_sober(p, caps));
  v.set("dc_space", is_dc_space(p, caps));
  v.set("rudin_space", is_rudin_space(p, caps));
  v.set("wd_space", is_wd_space(p, caps));
  v.set("locally_compact", is_locally_compact(p, caps));
  v.set("core_compact", is_core_compact(p, caps));
  v.set("locally_hypercompact", is_locally_hypercompact(p, caps));
  v.set("c_space", is_c_space(p, caps));
  v.set("ftip", has_ftip(p, caps));
  v.set("rip", has_rip(p, caps));
  v.set("irreducible_complete", is_irreducible_complete(p, caps));
  v.set("r_bounded", is_r_bounded(p, caps));
  return v;
}

/// The cofinite space on a countable carrier. Its specialization order is
/// discrete and every subset is compact; the verdicts follow from that.
inline ClassificationVector classify_cofinite() {
  ClassificationVector v;
  v.set("T1", Verdict::yes());
  v.set("d_space", Verdict::yes());  // directed sets are singletons
  v.set("d_bounded", Verdict::yes());
  v.set("well_filtered",
        Verdict::no("CofiniteTails: the family {X \\ F : F finite} is filtered, its meet is empty and so lies in "
                    "the open set {}, yet no member is empty"));
  v.set("sober", Verdict::no("X is irreducible and closed but is not the closure of any point"));
  v.set("dc_space", Verdict::no("X is irreducible and closed, while directed sets are singletons with finite closure"));
  v.set("rudin_space", Verdict::yes());
  v.set("wd_space", Verdict::yes());
  v.set("locally_compact", Verdict::yes());
  v.set("core_compact", Verdict::yes());
  v.set("locally_hypercompact",
        Verdict::no("up F = F is finite for finite F and finite sets have empty interior"));
  v.set("c_space", Verdict::no("up x = {x} has empty interior"));
  v.set("ftip", Verdict::no("CofiniteTails is filtered with empty meet"));
  v.set("rip", Verdict::no("CofiniteTails is irreducible in P_S(X) with empty meet"));
  v.set("irreducible_complete", Verdict::no("X is irreducible and has no supremum in the discrete order"));
  v.set("r_bounded", Verdict::no("X is irreducible and has no upper bound in the discrete order"));
  return v;
}

/// Classify a space and assert the implication closure.
inline ClassificationVector classify(const Space& x, const Caps& caps = {}) {
  ClassificationVector v = x.is_finite() ? classify(x.poset(), caps) : classify_cofinite();
  const std::string bad = implication_violation(v);
  if (!bad.empty()) throw Error("classification violates an implication: " + bad);
  return v;
}

}  // namespace soberkit

#endif  // SOBERKIT_CLASSIFY_HPP_
