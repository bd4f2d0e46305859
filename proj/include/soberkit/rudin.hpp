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

#ifndef SOBERKIT_RUDIN_HPP_
#define SOBERKIT_RUDIN_HPP_

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
#include "soberkit/space.hpp"
#include "soberkit/subset.hpp"

namespace soberkit {

/// A filtered family of compact saturated sets: an explicit list over a
/// finite space, or the family of cofinite tails {X \ F : F finite} of the
/// cofinite space.
class FilteredFamily {
 public:
  /// Validates that the list is nonempty, lies in K(X) and is filtered.
  static FilteredFamily of(const FinPoset& p, std::vector<Subset> members) {
    if (members.empty()) throw PreconditionError("filtered family is empty");
    for (std::size_t i = 0; i < members.size(); ++i) {
      p.check(members[i]);
      if (!is_compact_saturated(p, members[i]))
        throw PreconditionError("member " + std::to_string(i) + " " + members[i].str() +
                                " is not a nonempty saturated set");
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!has_refinement(members, members[i] & members[j]))
          throw PreconditionError("members " + std::to_string(i) + " and " + std::to_string(j) +
                                  " have no common refinement in the family");
    FilteredFamily f;
    f.members_ = std::move(members);
    return f;
  }

  static FilteredFamily cofinite_tails() {
    FilteredFamily f;
    f.tails_ = true;
    return f;
  }

  /// The one-member family {up x} = {{x}} of the cofinite space.
  static FilteredFamily cofinite_point(std::uint64_t x) {
    FilteredFamily f;
    f.cofinite_members_.push_back(CofinSet::point(x));
    return f;
  }

  bool is_cofinite_tails() const { return tails_; }
  bool is_on_cofinite() const { return tails_ || !cofinite_members_.empty(); }
  const std::vector<Subset>& members() const {
    if (tails_) throw UnsupportedOperation("the cofinite tails family has no finite member list");
    return members_;
  }

  std::string str() const {
    if (tails_) return "CofiniteTails";
    if (!cofinite_members_.empty()) {
      std::string out = "{";
      for (std::size_t i = 0; i < cofinite_members_.size(); ++i) out += (i ? "," : "") + cofinite_members_[i].str();
      return out + "}";
    }
    return family_str(members_);
  }

 private:
  static bool has_refinement(const std::vector<Subset>& fam, Subset both) {
    for (Subset k : fam)
      if (k.subset_of(both)) return true;
    return false;
  }

  bool tails_ = false;
  std::vector<Subset> members_;
  std::vector<CofinSet> cofinite_members_;
};

/// M(fam): closed sets meeting every member, ascending mask order.
inline std::vector<Subset> closed_meeting_all(const FinPoset& p, const std::vector<Subset>& fam,
                                              const Caps& caps = {}) {
  std::vector<Subset> out;
  for (Subset c : closed_sets(p, caps)) {
    bool meets = true;
    for (Subset k : fam)
      if (!c.intersects(k)) {
        meets = false;
        break;
      }
    if (meets) out.push_back(c);
  }
  return out;
}

/// Inclusion-minimal members of a family of sets.
inline std::vector<Subset> inclusion_minimal(const std::vector<Subset>& sets) {
  std::vector<Subset> out;
  for (Subset a : sets) {
    bool minimal = true;
    for (Subset b : sets)
      if (b != a && b.subset_of(a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

/// A closed set A meets every member and no proper closed subset does. Every
/// proper closed subset of A lies in A minus one of its maximal points, so
/// only those are tested.
inline bool is_minimal_meeting(const FinPoset& p, Subset a, const std::vector<Subset>& fam) {
  if (a.empty() || !is_closed(p, a)) return false;
  for (Subset k : fam)
    if (!a.intersects(k)) return false;
  bool minimal = true;
  p.maximal(a).for_each([&](std::size_t m) {
    const Subset smaller = a - Subset::singleton(m);
    bool meets = true;
    for (Subset k : fam)
      if (!smaller.intersects(k)) meets = false;
    if (meets) minimal = false;
  });
  return minimal;
}

struct MmResult {
  bool symbolic = false;
  std::vector<Subset> M;
  std::vector<Subset> m;
  std::string M_desc;
  std::string m_desc;
};

inline MmResult M_and_m(const Space& x, const FilteredFamily& fam, const Caps& caps = {}) {
  MmResult r;
  if (x.is_cofinite()) {
    if (!fam.is_cofinite_tails())
      throw UnsupportedOperation("M and m on the cofinite space are available for CofiniteTails only");
    // No finite set meets every cofinite tail, so X is the only candidate.
    r.symbolic = true;
    r.M_desc = "{X}";
    r.m_desc = "{X}";
    return r;
  }
  if (fam.is_on_cofinite()) throw UnsupportedOperation("family lives on the cofinite space");
  const FinPoset& p = x.poset();
  for (Subset k : fam.members()) p.check(k);
  r.M = closed_meeting_all(p, fam.members(), caps);
  r.m = inclusion_minimal(r.M);
  r.M_desc = family_str(r.M);
  r.m_desc = family_str(r.m);
  return r;
}

/// Inclusion-minimal irreducible closed subset of C meeting every member of
/// `fam`, where `fam` is irreducible in the Smyth power space. Among several
/// minimal candidates the lexicographically least characteristic vector wins.
inline Subset topological_rudin_minimize(const FinPoset& p, const std::vector<Subset>& fam, Subset c,
                                         const Caps& caps = {}) {
  p.check(c);
  if (!is_closed(p, c)) throw PreconditionError("C = " + c.str() + " is not closed");
  if (fam.empty()) throw PreconditionError("family is empty");
  for (std::size_t i = 0; i < fam.size(); ++i) {
    p.check(fam[i]);
    if (!is_compact_saturated(p, fam[i]))
      throw PreconditionError("member " + std::to_string(i) + " " + fam[i].str() + " is not in K(X)");
  }
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      bool refined = false;
      for (Subset k : fam)
        if (k.subset_of(fam[i] & fam[j])) refined = true;
      if (!refined)
        throw PreconditionError("family is not irreducible in the Smyth power space: members " + std::to_string(i) +
                                " " + fam[i].str() + " and " + std::to_string(j) + " " + fam[j].str());
    }
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (!c.intersects(fam[i]))
      throw PreconditionError("C = " + c.str() + " misses member " + std::to_string(i) + " " + fam[i].str());

  std::vector<Subset> candidates;
  for (Subset b : closed_sets(p, caps)) {
    if (!b.subset_of(c) || !is_irreducible(p, b)) continue;
    bool meets = true;
    for (Subset k : fam)
      if (!b.intersects(k)) meets = false;
    if (meets) candidates.push_back(b);
  }
  std::optional<Subset> best;
  for (Subset b : inclusion_minimal(candidates))
    if (!best || lex_less(b, *best)) best = b;
  if (!best) throw Error("no irreducible closed subset of " + c.str() + " meets the family");
  return *best;
}

struct RudinWitness {
  FilteredFamily family;
  SpaceSubset minimal_set;
};

struct RudinVerdict {
  bool rudin = false;
  std::optional<RudinWitness> witness;
};

/// Whether a closed set is a Rudin set. On a finite space a filtered family
/// has a least member K*, and m(fam) = m({K*}), so only one-member families
/// are searched, principal filters first.
inline RudinVerdict is_rudin_set(const Space& x, const SpaceSubset& a, const Caps& caps = {}) {
  RudinVerdict v;
  if (x.is_cofinite()) {
    const CofinSet& s = cofinite_part(x, a);
    if (s.is_infinite() && !s.is_whole()) throw PreconditionError("set " + s.str() + " is not closed");
    if (s.is_whole()) {
      v.rudin = true;
      v.witness = RudinWitness{FilteredFamily::cofinite_tails(), s};
    } else if (s.support().size() == 1) {
      // {x} is the least closed set meeting the one-member family {{x}}.
      v.rudin = true;
      v.witness = RudinWitness{FilteredFamily::cofinite_point(*s.support().begin()), s};
    }
    return v;
  }
  const FinPoset& p = x.poset();
  const Subset s = finite_part(x, a);
  if (!is_closed(p, s)) throw PreconditionError("set " + s.str() + " is not closed");
  if (s.empty()) return v;
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (is_minimal_meeting(p, s, {p.up(y)})) {
      v.rudin = true;
      v.witness = RudinWitness{FilteredFamily::of(p, {p.up(y)}), s};
      return v;
    }
  }
  for (Subset k : compact_saturated(p, caps)) {
    if (is_minimal_meeting(p, s, {k})) {
      v.rudin = true;
      v.witness = RudinWitness{FilteredFamily::of(p, {k}), s};
      return v;
    }
  }
  return v;
}

/// RD(X) of a finite space.
inline std::vector<Subset> rudin_sets(const FinPoset& p, const Caps& caps = {}) {
  std::vector<Subset> out;
  const Space x(p);
  for (Subset c : closed_sets(p, caps))
    if (!c.empty() && is_rudin_set(x, c, caps).rudin) out.push_back(c);
  return out;
}

enum class WdStatus { Yes, No, YesByInclusion, Unknown };

inline const char* to_string(WdStatus s) {
  switch (s) {
    case WdStatus::Yes: return "yes";
    case WdStatus::No: return "no";
    case WdStatus::YesByInclusion: return "yes-by-inclusion";
    case WdStatus::Unknown: return "unknown";
  }
  return "unknown";
}

struct WdVerdict {
  WdStatus status = WdStatus::Unknown;
  std::string provenance;
  bool is_wd() const { return status == WdStatus::Yes || status == WdStatus::YesByInclusion; }
};

struct WdOptions {
  /// Apply the exact descriptions of WD(X) for finite spaces (point closures)
  /// and for the cofinite space (Irr_c). With this off only the inclusion
  /// rules are used.
  bool exact_rules = true;
};

/// WD status of a closed set. The definition quantifies over all maps into
/// all well-filtered spaces, so the verdict is derived from exact
/// descriptions where known and from RD <= WD <= Irr_c otherwise.
inline WdVerdict wd_status(const Space& x, const SpaceSubset& a, const WdOptions& opt = {}, const Caps& caps = {}) {
  WdVerdict v;
  if (x.is_finite()) {
    const FinPoset& p = x.poset();
    const Subset s = finite_part(x, a);
    if (!is_closed(p, s)) throw PreconditionError("set " + s.str() + " is not closed");
    if (opt.exact_rules) {
      bool point_closure = false;
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.down(y) == s) point_closure = true;
      v.status = point_closure ? WdStatus::Yes : WdStatus::No;
      v.provenance = "finite spaces are sober, so WD(X) is the set of point closures";
      return v;
    }
  } else {
    const CofinSet& s = cofinite_part(x, a);
    if (s.is_infinite() && !s.is_whole()) throw PreconditionError("set " + s.str() + " is not closed");
    if (opt.exact_rules) {
      v.status = is_irreducible(x, a) ? WdStatus::Yes : WdStatus::No;
      v.provenance = "cofinite space: WD(X) = Irr_c(X) = singletons and X";
      return v;
    }
  }
  if (is_rudin_set(x, a, caps).rudin) {
    v.status = WdStatus::YesByInclusion;
    v.provenance = "Rudin set, and RD(X) is contained in WD(X)";
    return v;
  }
  if (!is_irreducible(x, a)) {
    v.status = WdStatus::No;
    v.provenance = "not irreducible, and WD(X) is contained in Irr_c(X)";
    return v;
  }
  v.status = WdStatus::Unknown;
  v.provenance = "irreducible closed but not a Rudin set; no exact rule applies";
  return v;
}

/// WD(X) of a finite space; throws if any status is Unknown.
inline std::vector<Subset> wd_sets(const FinPoset& p, const WdOptions& opt = {}, const Caps& caps = {}) {
  std::vector<Subset> out;
  const Space x(p);
  for (Subset c : closed_sets(p, caps)) {
    const WdVerdict v = wd_status(x, c, opt, caps);
    if (v.status == WdStatus::Unknown) throw PreconditionError("WD status of " + c.str() + " is unknown");
    if (v.is_wd()) out.push_back(c);
  }
  return out;
}

}  // namespace soberkit

#endif  // SOBERKIT_RUDIN_HPP_
