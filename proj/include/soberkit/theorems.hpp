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

#ifndef SOBERKIT_THEOREMS_HPP_
#define SOBERKIT_THEOREMS_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "soberkit/caps.hpp"
#include "soberkit/classify.hpp"
#include "soberkit/enumerate.hpp"
#include "soberkit/error.hpp"
#include "soberkit/families.hpp"
#include "soberkit/poset.hpp"
#include "soberkit/powerspace.hpp"
#include "soberkit/reflect.hpp"
#include "soberkit/rudin.hpp"
#include "soberkit/space.hpp"
#include "soberkit/subset.hpp"

namespace soberkit {

enum class Outcome { Pass, Fail, NotApplicable };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct TheoremReport {
  std::string id;
  Outcome verdict = Outcome::NotApplicable;
  std::string detail;
  std::string witness;  // nonempty on every failure
  bool bounded = false;
};

/// A space together with lazily computed enumerations shared by the checks.
class Instance {
 public:
  explicit Instance(Space x, Caps caps = {}) : space_(std::move(x)), caps_(caps) {}

  const Space& space() const { return space_; }
  const Caps& caps() const { return caps_; }
  bool finite() const { return space_.is_finite(); }
  const FinPoset& poset() const { return space_.poset(); }
  std::size_t size() const { return poset().size(); }

  const std::vector<Subset>& closed() { return lazy(closed_, [&] { return closed_sets(poset(), caps_); }); }
  const std::vector<Subset>& opens() { return lazy(opens_, [&] { return open_sets(poset(), caps_); }); }
  const std::vector<Subset>& k() { return lazy(k_, [&] { return compact_saturated(poset(), caps_); }); }
  const std::vector<Subset>& irr_c() { return lazy(irr_c_, [&] { return irreducible_closed(poset(), caps_); }); }
  const std::vector<Subset>& irr() { return lazy(irr_, [&] { return irreducible_subsets(poset(), caps_); }); }
  const std::vector<Subset>& directed() { return lazy(directed_, [&] { return directed_subsets(poset(), caps_); }); }

  /// Every nonempty point set S whose principal family {up s : s in S} is
  /// filtered; these are the filtered subfamilies of S^u(X).
  const std::vector<Subset>& principal_filtered() {
    return lazy(principal_, [&] {
      if (size() > caps_.subset_sweep) throw CapExceeded("point-set sweep exceeds subset cap");
      std::vector<Subset> out;
      for_each_subset_of(poset().carrier(), [&](Subset s) {
        if (!s.empty() && is_filtered_family(ups(s))) out.push_back(s);
      });
      return out;
    });
  }

  /// Filtered subfamilies of K(X) reached by the family sweep. On finite
  /// spaces these are also the irreducible subsets of P_S(X).
  const std::vector<std::vector<Subset>>& filtered() {
    if (!filtered_) {
      std::vector<std::vector<Subset>> out;
      const SweepInfo info = for_each_filtered_family(k(), caps_, [&](const std::vector<Subset>& f) { out.push_back(f); });
      families_exhaustive_ = info.exhaustive;
      filtered_ = std::move(out);
    }
    return *filtered_;
  }
  bool families_exhaustive() {
    filtered();
    return families_exhaustive_;
  }

  const ClassificationVector& classification() {
    if (!class_) class_ = classify(space_, caps_);
    return *class_;
  }

  /// Finite spaces used as codomains for map-quantified statements.
  const std::vector<FinPoset>& targets() {
    return lazy(targets_, [&] { return posets_up_to_iso_upto(caps_.target_size); });
  }

  std::vector<Subset> ups(Subset s) const {
    std::vector<Subset> out;
    s.for_each([&](std::size_t x) { out.push_back(poset().up(x)); });
    return out;
  }

 private:
  template <class T, class F>
  const T& lazy(std::optional<T>& slot, F&& make) {
    if (!slot) slot = make();
    return *slot;
  }

  Space space_;
  Caps caps_;
  std::optional<std::vector<Subset>> closed_, opens_, k_, irr_c_, irr_, directed_, principal_;
  std::optional<std::vector<std::vector<Subset>>> filtered_;
  bool families_exhaustive_ = true;
  std::optional<ClassificationVector> class_;
  std::optional<std::vector<FinPoset>> targets_;
};

// ---------------------------------------------------------------------------
// Equations.

struct EquationSides {
  Subset lhs;
  Subset rhs;
  bool equal() const { return lhs == rhs; }
};

/// up(A & meet K) against the meet over K of up(A & K).
inline EquationSides family_equation(const FinPoset& p, Subset a, const std::vector<Subset>& fam) {
  EquationSides e;
  e.lhs = p.up(a & family_meet(fam, p.size()));
  e.rhs = p.carrier();
  for (Subset k : fam) e.rhs &= p.up(a & k);
  return e;
}

/// up f(meet K) against the meet over K of up f(K), in the codomain y.
inline EquationSides map_equation(const FinPoset& x, const FinPoset& y, const Map& f, const std::vector<Subset>& fam) {
  EquationSides e;
  e.lhs = y.up(image(f, family_meet(fam, x.size())));
  e.rhs = y.carrier();
  for (Subset k : fam) e.rhs &= y.up(image(f, k));
  return e;
}

struct ProbeBindings {
  std::optional<Subset> d;
  std::optional<Subset> a;
  std::optional<Subset> c;
  std::optional<std::vector<Subset>> family;
};

struct ProbeResult {
  Subset lhs;
  Subset rhs;
  bool equal = false;
};

/// Evaluate one side-by-side equation on a finite space.
///   "d-space":   D directed, A closed;   family = {up d : d in D}
///   "wf":        family filtered, A closed
///   "sober":     A irreducible, C closed; family = {up a : a in A}
///   "sober-rip": family irreducible in P_S(X), C closed
inline ProbeResult equational_probe(const FinPoset& p, const std::string& id, const ProbeBindings& b) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw PreconditionError("probe " + id + " needs binding " + what);
  };
  auto forbid = [&](bool present, const char* what) {
    if (present) throw PreconditionError("probe " + id + " does not take binding " + what);
  };
  auto principal = [&](Subset s) {
    std::vector<Subset> out;
    s.for_each([&](std::size_t x) { out.push_back(p.up(x)); });
    return out;
  };
  auto closed_arg = [&](Subset s) {
    p.check(s);
    if (!is_closed(p, s)) throw PreconditionError("binding " + s.str() + " is not closed");
    return s;
  };
  std::vector<Subset> fam;
  Subset side;
  if (id == "d-space") {
    need(b.d.has_value(), "D");
    need(b.a.has_value(), "A");
    forbid(b.c.has_value(), "C");
    forbid(b.family.has_value(), "family");
    p.check(*b.d);
    if (!p.is_directed(*b.d)) throw PreconditionError("binding D is not directed");
    fam = principal(*b.d);
    side = closed_arg(*b.a);
  } else if (id == "wf") {
    need(b.family.has_value(), "family");
    need(b.a.has_value(), "A");
    forbid(b.d.has_value(), "D");
    forbid(b.c.has_value(), "C");
    fam = *b.family;
    for (Subset k : fam) p.check(k);
    if (!is_filtered_family(fam)) throw PreconditionError("binding family is not filtered");
    side = closed_arg(*b.a);
  } else if (id == "sober") {
    need(b.a.has_value(), "A");
    need(b.c.has_value(), "C");
    forbid(b.d.has_value(), "D");
    forbid(b.family.has_value(), "family");
    p.check(*b.a);
    if (!is_irreducible(p, *b.a)) throw PreconditionError("binding A is not irreducible");
    fam = principal(*b.a);
    side = closed_arg(*b.c);
  } else if (id == "sober-rip") {
    need(b.family.has_value(), "family");
    need(b.c.has_value(), "C");
    forbid(b.d.has_value(), "D");
    forbid(b.a.has_value(), "A");
    fam = *b.family;
    for (Subset k : fam) p.check(k);
    if (!is_smyth_irreducible(fam)) throw PreconditionError("binding family is not irreducible in P_S(X)");
    side = closed_arg(*b.c);
  } else {
    throw PreconditionError("unknown equation id " + id);
  }
  const EquationSides e = family_equation(p, side, fam);
  return {e.lhs, e.rhs, e.equal()};
}

// ---------------------------------------------------------------------------
// Report builders.

namespace detail {

/// A condition's value and, when false, the first counterexample found.
struct Condition {
  std::string name;
  bool value = true;
  std::string witness;
};

/// Runs `check` over a domain until it yields a counterexample.
template <class Range, class F>
Condition for_all(std::string name, const Range& range, F&& check) {
  Condition c{std::move(name), true, {}};
  for (const auto& item : range) {
    std::optional<std::string> bad = check(item);
    if (bad) {
      c.value = false;
      c.witness = *bad;
      break;
    }
  }
  return c;
}

inline Condition conj(std::string name, const Condition& a, const Condition& b) {
  Condition c{std::move(name), a.value && b.value, {}};
  if (!a.value)
    c.witness = a.witness;
  else if (!b.value)
    c.witness = b.witness;
  return c;
}

inline Condition flag(std::string name, const Verdict& v) { return {std::move(name), v.value, v.witness}; }

inline std::string values_str(const std::vector<Condition>& cs) {
  std::string s;
  for (const auto& c : cs) s += (s.empty() ? "" : ", ") + c.name + "=" + (c.value ? "true" : "false");
  return s;
}

/// Conditions asserted mutually equivalent.
inline TheoremReport equivalence(const std::string& id, const std::vector<Condition>& cs, bool bounded) {
  TheoremReport r{id, Outcome::Pass, {}, {}, bounded};
  const bool first = cs.front().value;
  const bool agree = std::all_of(cs.begin(), cs.end(), [&](const Condition& c) { return c.value == first; });
  if (agree) {
    r.detail = std::to_string(cs.size()) + " conditions all " + (first ? "true" : "false");
  } else {
    r.verdict = Outcome::Fail;
    r.detail = "conditions disagree";
    r.witness = values_str(cs);
    for (const auto& c : cs)
      if (!c.value) {
        r.witness += "; " + c.name + " fails: " + c.witness;
        break;
      }
  }
  if (bounded) r.detail += " (bounded check)";
  return r;
}

/// A chain of implications c[0] => c[1] => ...; later links are checked only
/// where the earlier condition holds.
inline TheoremReport implication_chain(const std::string& id, const std::vector<Condition>& cs, bool bounded) {
  TheoremReport r{id, Outcome::Pass, values_str(cs), {}, bounded};
  for (std::size_t i = 0; i + 1 < cs.size(); ++i)
    if (cs[i].value && !cs[i + 1].value) {
      r.verdict = Outcome::Fail;
      r.witness = cs[i].name + " holds but " + cs[i + 1].name + " fails: " + cs[i + 1].witness;
      return r;
    }
  if (bounded) r.detail += " (bounded check)";
  return r;
}

/// hypothesis => conclusion; not applicable when the hypothesis fails.
inline TheoremReport implication(const std::string& id, const Condition& hyp, const Condition& concl,
                                 bool bounded = false) {
  TheoremReport r{id, Outcome::Pass, {}, {}, bounded};
  if (!hyp.value) {
    r.verdict = Outcome::NotApplicable;
    r.detail = "hypothesis " + hyp.name + " fails";
    return r;
  }
  if (concl.value) {
    r.detail = hyp.name + " and " + concl.name + " hold";
  } else {
    r.verdict = Outcome::Fail;
    r.detail = hyp.name + " holds but " + concl.name + " fails";
    r.witness = concl.witness.empty() ? concl.name + " is false" : concl.witness;
  }
  if (bounded) r.detail += " (bounded check)";
  return r;
}

/// Pass when every check holds; the first failure becomes the witness.
inline TheoremReport all_hold(const std::string& id, const std::vector<Condition>& cs, bool bounded = false) {
  TheoremReport r{id, Outcome::Pass, {}, {}, bounded};
  for (const auto& c : cs)
    if (!c.value) {
      r.verdict = Outcome::Fail;
      r.detail = c.name + " fails";
      r.witness = c.witness.empty() ? c.name + " is false" : c.witness;
      return r;
    }
  r.detail = std::to_string(cs.size()) + " checks hold";
  if (bounded) r.detail += " (bounded check)";
  return r;
}

inline TheoremReport not_applicable(const std::string& id, std::string why) {
  return {id, Outcome::NotApplicable, std::move(why), {}, false};
}

inline Condition cond_of(std::string name, bool value, std::string witness = {}) {
  return {std::move(name), value, value ? std::string() : std::move(witness)};
}

inline bool contains_set(const std::vector<Subset>& sorted, Subset s) {
  return std::binary_search(sorted.begin(), sorted.end(), s, MaskLess{});
}

/// Counts work across a map-quantified sweep and stops at the cap.
struct Budget {
  std::size_t left;
  bool exceeded = false;
  bool spend(std::size_t n = 1) {
    if (n > left) {
      exceeded = true;
      left = 0;
      return false;
    }
    left -= n;
    return true;
  }
};

/// Whether the principal family of s is irreducible and closed in the
/// subspace S^u(X) of P_S(X).
inline bool principal_family_closed(const FinPoset& p, Subset s) {
  // Closure in S^u(X): every up x containing some up s, s in S; i.e. x <= s.
  return p.down(s) == s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The checks. Each takes a finite instance unless noted.

namespace checks {

using detail::Condition;
using detail::cond_of;
using detail::for_all;

inline std::string set_str(Subset s) { return s.str(); }

// d-space: seven conditions.
inline TheoremReport d_space_7cond(Instance& in) {
  const FinPoset& p = in.poset();
  const auto& opens = in.opens();
  const auto& closed = in.closed();
  const auto& irr_c = in.irr_c();
  auto sc = point_closures(p);
  auto dc = directed_closures(p, in.caps());
  std::sort(sc.begin(), sc.end(), MaskLess{});
  std::vector<Condition> cs;
  cs.push_back(detail::flag("d-space", is_d_space(p, in.caps())));
  cs.push_back(cond_of("Dc=Sc", sc == dc, "D_c " + family_str(dc) + " differs from S_c " + family_str(sc)));
  cs.push_back(for_all("directed-open", in.directed(), [&](Subset d) -> std::optional<std::string> {
    const Subset ub = p.upper_bounds(d);
    for (Subset u : opens)
      if (ub.subset_of(u) && !d.intersects(u)) return "D=" + d.str() + ", U=" + u.str();
    return std::nullopt;
  }));
  cs.push_back(for_all("principal-filtered-open", in.principal_filtered(), [&](Subset s) -> std::optional<std::string> {
    const auto fam = in.ups(s);
    const Subset meet = family_meet(fam, p.size());
    for (Subset u : opens) {
      if (!meet.subset_of(u)) continue;
      bool some = false;
      for (Subset k : fam) some = some || k.subset_of(u);
      if (!some) return "family " + family_str(fam) + ", U=" + u.str();
    }
    return std::nullopt;
  }));
  auto meets_bounds = [&](const std::vector<Subset>& sets, const char* name) {
    return for_all(name, in.directed(), [&](Subset d) -> std::optional<std::string> {
      for (Subset a : sets)
        if (d.subset_of(a) && !a.intersects(p.upper_bounds(d))) return "D=" + d.str() + ", A=" + a.str();
      return std::nullopt;
    });
  };
  cs.push_back(meets_bounds(closed, "closed-meets-bounds"));
  cs.push_back(meets_bounds(irr_c, "irr-closed-meets-bounds"));
  cs.push_back(for_all("closure-meets-bounds", in.directed(), [&](Subset d) -> std::optional<std::string> {
    if (!p.down(d).intersects(p.upper_bounds(d))) return "D=" + d.str();
    return std::nullopt;
  }));
  return detail::equivalence("d-space.7cond", cs, false);
}

/// The equation over D directed (as principal families) and A in `sets`.
inline Condition directed_equation(Instance& in, const std::vector<Subset>& sets, std::string name) {
  const FinPoset& p = in.poset();
  return for_all(std::move(name), in.principal_filtered(), [&](Subset s) -> std::optional<std::string> {
    const auto fam = in.ups(s);
    for (Subset a : sets) {
      const EquationSides e = family_equation(p, a, fam);
      if (!e.equal())
        return "D=" + s.str() + ", A=" + a.str() + ": lhs " + e.lhs.str() + " rhs " + e.rhs.str();
    }
    return std::nullopt;
  });
}

inline Condition directed_set_equation(Instance& in, const std::vector<Subset>& sets, std::string name) {
  const FinPoset& p = in.poset();
  return for_all(std::move(name), in.directed(), [&](Subset d) -> std::optional<std::string> {
    const auto fam = in.ups(d);
    for (Subset a : sets) {
      const EquationSides e = family_equation(p, a, fam);
      if (!e.equal())
        return "D=" + d.str() + ", A=" + a.str() + ": lhs " + e.lhs.str() + " rhs " + e.rhs.str();
    }
    return std::nullopt;
  });
}

inline TheoremReport d_space_equational(Instance& in) {
  const FinPoset& p = in.poset();
  const Condition bounded = detail::flag("d-bounded", is_d_bounded(p, in.caps()));
  std::vector<Condition> cs;
  cs.push_back(detail::flag("d-space", is_d_space(p, in.caps())));
  cs.push_back(detail::conj("directed/closed", bounded, directed_set_equation(in, in.closed(), "eq")));
  cs.push_back(detail::conj("filtered/closed", bounded, directed_equation(in, in.closed(), "eq")));
  cs.push_back(detail::conj("directed/irr-closed", bounded, directed_set_equation(in, in.irr_c(), "eq")));
  cs.push_back(detail::conj("filtered/irr-closed", bounded, directed_equation(in, in.irr_c(), "eq")));
  return detail::equivalence("d-space.equational", cs, false);
}

inline TheoremReport d_bounded_4cond(Instance& in) {
  const FinPoset& p = in.poset();
  std::vector<Condition> cs;
  cs.push_back(detail::flag("d-bounded", is_d_bounded(p, in.caps())));
  cs.push_back(for_all("upper-bounds", in.directed(), [&](Subset d) -> std::optional<std::string> {
    if (p.upper_bounds(d).empty()) return "D=" + d.str();
    return std::nullopt;
  }));
  auto cond = [&](const std::vector<Subset>& sets, const char* name) {
    return for_all(name, in.directed(), [&](Subset d) -> std::optional<std::string> {
      for (Subset a : sets) {
        if (!d.subset_of(a)) continue;
        Subset meet = p.carrier();
        d.for_each([&](std::size_t x) { meet &= p.up(a & p.up(x)); });
        if (meet.empty()) return "D=" + d.str() + ", A=" + a.str();
      }
      return std::nullopt;
    });
  };
  cs.push_back(cond(in.closed(), "closed"));
  cs.push_back(cond(in.irr_c(), "irr-closed"));
  return detail::equivalence("d-bounded.4cond", cs, false);
}

/// Runs `f(y, map)` over every continuous map into every target, within the
/// map budget. Returns the first counterexample.
template <class F>
std::optional<std::string> over_maps(Instance& in, bool sober_only, detail::Budget& budget, F&& f) {
  for (const FinPoset& y : in.targets()) {
    if (sober_only && !is_sober(y, in.caps()).value) continue;
    for (const Map& m : continuous_maps(in.poset(), y, in.caps())) {
      auto bad = f(y, m);
      if (bad) return bad;
      if (budget.exceeded) return std::nullopt;
    }
  }
  return std::nullopt;
}

inline std::string map_str(const Map& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

inline Condition map_condition(Instance& in, const std::vector<std::vector<Subset>>& families, bool sober_only,
                               detail::Budget& budget, std::string name) {
  const FinPoset& p = in.poset();
  Condition c{std::move(name), true, {}};
  auto bad = over_maps(in, sober_only, budget, [&](const FinPoset& y, const Map& f) -> std::optional<std::string> {
    for (const auto& fam : families) {
      if (!budget.spend()) return std::nullopt;
      const EquationSides e = map_equation(p, y, f, fam);
      if (!e.equal()) return "f=" + map_str(f) + " into " + std::to_string(y.size()) + " points, family " + family_str(fam);
    }
    return std::nullopt;
  });
  if (bad) {
    c.value = false;
    c.witness = *bad;
  }
  return c;
}

inline TheoremReport d_space_maps(Instance& in) {
  std::vector<std::vector<Subset>> fams;
  for (Subset d : in.directed()) fams.push_back(in.ups(d));
  detail::Budget budget{in.caps().maps};
  std::vector<Condition> cs;
  cs.push_back(detail::flag("d-space", is_d_space(in.poset(), in.caps())));
  cs.push_back(map_condition(in, fams, false, budget, "T0-targets"));
  cs.push_back(map_condition(in, fams, true, budget, "sober-targets"));
  return detail::equivalence("d-space.maps", cs, budget.exceeded);
}

/// Smyth-order sups of filtered families, found among K(X) directly.
inline Condition smyth_dcpo(Instance& in) {
  const FinPoset& p = in.poset();
  const auto& k = in.k();
  return for_all("K(X)-dcpo", in.filtered(), [&](const std::vector<Subset>& fam) -> std::optional<std::string> {
    const Subset meet = family_meet(fam, p.size());
    // Upper bounds in the Smyth order are members of K(X) inside every member.
    std::optional<Subset> sup;
    for (Subset c : k)
      if (c.subset_of(meet)) {
        bool largest = true;
        for (Subset d : k)
          if (d.subset_of(meet) && !d.subset_of(c)) largest = false;
        if (largest) sup = c;
      }
    if (!sup) return "filtered family " + family_str(fam) + " has no sup in K(X)";
    return std::nullopt;
  });
}

inline Condition filtered_equation(Instance& in, const std::vector<std::vector<Subset>>& families,
                                   const std::vector<Subset>& sets, std::string name) {
  const FinPoset& p = in.poset();
  return for_all(std::move(name), families, [&](const std::vector<Subset>& fam) -> std::optional<std::string> {
    for (Subset a : sets) {
      const EquationSides e = family_equation(p, a, fam);
      if (!e.equal())
        return "family " + family_str(fam) + ", A=" + a.str() + ": lhs " + e.lhs.str() + " rhs " + e.rhs.str();
    }
    return std::nullopt;
  });
}

inline TheoremReport wf_equational(Instance& in) {
  const FinPoset& p = in.poset();
  const Condition dcpo = smyth_dcpo(in);
  const Condition ftip = detail::flag("FTIP", has_ftip(p, in.caps()));
  const Condition eq_closed = filtered_equation(in, in.filtered(), in.closed(), "eq");
  const Condition eq_irr = filtered_equation(in, in.filtered(), in.irr_c(), "eq");
  std::vector<Condition> cs;
  cs.push_back(detail::flag("well-filtered", is_well_filtered(p, in.caps())));
  cs.push_back(detail::conj("dcpo/closed", dcpo, eq_closed));
  cs.push_back(detail::conj("dcpo/irr-closed", dcpo, eq_irr));
  cs.push_back(detail::conj("FTIP/closed", ftip, eq_closed));
  cs.push_back(detail::conj("FTIP/irr-closed", ftip, eq_irr));
  return detail::equivalence("wf.equational", cs, !in.families_exhaustive());
}

inline TheoremReport wf_maps(Instance& in) {
  detail::Budget budget{in.caps().maps};
  std::vector<Condition> cs;
  cs.push_back(detail::flag("well-filtered", is_well_filtered(in.poset(), in.caps())));
  cs.push_back(map_condition(in, in.filtered(), false, budget, "T0-targets"));
  cs.push_back(map_condition(in, in.filtered(), true, budget, "sober-targets"));
  return detail::equivalence("wf.maps", cs, budget.exceeded || !in.families_exhaustive());
}

inline TheoremReport wf_min(Instance& in) {
  const FinPoset& p = in.poset();
  const Condition wf = detail::flag("well-filtered", is_well_filtered(p, in.caps()));
  const Condition c = for_all("min-equation", in.filtered(), [&](const std::vector<Subset>& fam) -> std::optional<std::string> {
    const Subset meet = family_meet(fam, p.size());
    if (!is_compact_saturated(p, meet)) return "meet of " + family_str(fam) + " is not in K(X)";
    std::optional<std::string> bad;
    p.minimal(meet).for_each([&](std::size_t c) {
      const EquationSides e = family_equation(p, p.down(c), fam);
      if (!bad && !(e.equal() && e.lhs == p.up(c))) bad = "family " + family_str(fam) + ", c=" + std::to_string(c);
    });
    return bad;
  });
  return detail::implication("wf.min", wf, c, !in.families_exhaustive());
}

// Sober characterizations.
inline TheoremReport sober_7cond(Instance& in) {
  const FinPoset& p = in.poset();
  const auto& opens = in.opens();
  auto bounds_meet = [&](const std::vector<Subset>& sets, bool close, const char* name) {
    return for_all(name, sets, [&](Subset a) -> std::optional<std::string> {
      const Subset base = close ? p.down(a) : a;
      if (!base.intersects(p.upper_bounds(a))) return "A=" + a.str();
      return std::nullopt;
    });
  };
  auto open_cond = [&](const std::vector<Subset>& sets, const char* name) {
    return for_all(name, sets, [&](Subset a) -> std::optional<std::string> {
      const Subset ub = p.upper_bounds(a);
      for (Subset u : opens)
        if (ub.subset_of(u) && !a.intersects(u)) return "A=" + a.str() + ", U=" + u.str();
      return std::nullopt;
    });
  };
  // Principal subfamilies of P_S(X): irreducible ones, and those also closed
  // in the subspace S^u(X).
  std::vector<Subset> principal_irr;
  std::vector<Subset> principal_irr_closed;
  for_each_subset_of(p.carrier(), [&](Subset s) {
    if (s.empty() || !is_smyth_irreducible(in.ups(s))) return;
    principal_irr.push_back(s);
    if (detail::principal_family_closed(p, s)) principal_irr_closed.push_back(s);
  });
  auto family_cond = [&](const std::vector<Subset>& sets, const char* name) {
    return for_all(name, sets, [&](Subset s) -> std::optional<std::string> {
      const auto fam = in.ups(s);
      const Subset meet = family_meet(fam, p.size());
      for (Subset u : opens) {
        if (!meet.subset_of(u)) continue;
        bool some = false;
        for (Subset k : fam) some = some || k.subset_of(u);
        if (!some) return "family " + family_str(fam) + ", U=" + u.str();
      }
      return std::nullopt;
    });
  };
  std::vector<Condition> cs;
  cs.push_back(detail::flag("sober", is_sober(p, in.caps())));
  cs.push_back(bounds_meet(in.irr(), true, "irr-closure-meets-bounds"));
  cs.push_back(bounds_meet(in.irr_c(), false, "irr-closed-meets-bounds"));
  cs.push_back(open_cond(in.irr(), "irr-open"));
  cs.push_back(open_cond(in.irr_c(), "irr-closed-open"));
  cs.push_back(family_cond(principal_irr, "principal-irreducible-open"));
  cs.push_back(family_cond(principal_irr_closed, "principal-irreducible-closed-open"));
  return detail::equivalence("sober.7cond", cs, false);
}

inline TheoremReport sober_equational(Instance& in) {
  const FinPoset& p = in.poset();
  const Condition rb = detail::flag("r-bounded", is_r_bounded(p, in.caps()));
  auto eq = [&](const std::vector<Subset>& as, const std::vector<Subset>& cs_, const char* name) {
    return for_all(name, as, [&](Subset a) -> std::optional<std::string> {
      const auto fam = in.ups(a);
      for (Subset c : cs_) {
        const EquationSides e = family_equation(p, c, fam);
        if (!e.equal()) return "A=" + a.str() + ", C=" + c.str() + ": lhs " + e.lhs.str() + " rhs " + e.rhs.str();
      }
      return std::nullopt;
    });
  };
  // Principal families {up a : a in A} irreducible in P_S(X), found directly.
  std::vector<Subset> principal_irr;
  for_each_subset_of(p.carrier(), [&](Subset s) {
    if (!s.empty() && is_smyth_irreducible(in.ups(s))) principal_irr.push_back(s);
  });
  std::vector<Condition> cs;
  cs.push_back(detail::flag("sober", is_sober(p, in.caps())));
  cs.push_back(detail::conj("irr/closed", rb, eq(in.irr(), in.closed(), "eq")));
  cs.push_back(detail::conj("irr/irr-closed", rb, eq(in.irr(), in.irr_c(), "eq")));
  cs.push_back(detail::conj("principal/closed", rb, eq(principal_irr, in.closed(), "eq")));
  cs.push_back(detail::conj("principal/irr-closed", rb, eq(principal_irr, in.irr_c(), "eq")));
  cs.push_back(detail::conj("irr-closed/closed", rb, eq(in.irr_c(), in.closed(), "eq")));
  cs.push_back(detail::conj("irr-closed/irr-closed", rb, eq(in.irr_c(), in.irr_c(), "eq")));
  return detail::equivalence("sober.equational", cs, false);
}

/// Superset closures of the swept irreducible families: the irreducible
/// closed subsets of P_S(X).
inline std::vector<std::vector<Subset>> smyth_irr_closed(Instance& in) {
  std::set<std::vector<Subset>, bool (*)(const std::vector<Subset>&, const std::vector<Subset>&)> seen(
      [](const std::vector<Subset>& a, const std::vector<Subset>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), MaskLess{});
      });
  for (const auto& fam : in.filtered()) {
    auto c = superset_closure(fam, in.k());
    std::sort(c.begin(), c.end(), MaskLess{});
    seen.insert(std::move(c));
  }
  return {seen.begin(), seen.end()};
}

inline TheoremReport sober_rip(Instance& in) {
  const FinPoset& p = in.poset();
  const Condition rip = detail::flag("RIP", has_rip(p, in.caps()));
  const auto closed_fams = smyth_irr_closed(in);
  std::vector<Condition> cs;
  cs.push_back(detail::flag("sober", is_sober(p, in.caps())));
  cs.push_back(detail::conj("irr/closed", rip, filtered_equation(in, in.filtered(), in.closed(), "eq")));
  cs.push_back(detail::conj("irr/irr-closed", rip, filtered_equation(in, in.filtered(), in.irr_c(), "eq")));
  cs.push_back(detail::conj("irr-closed/closed", rip, filtered_equation(in, closed_fams, in.closed(), "eq")));
  cs.push_back(detail::conj("irr-closed/irr-closed", rip, filtered_equation(in, closed_fams, in.irr_c(), "eq")));
  return detail::equivalence("sober.rip", cs, !in.families_exhaustive());
}

inline TheoremReport sober_maps(Instance& in) {
  detail::Budget budget{in.caps().maps};
  const auto closed_fams = smyth_irr_closed(in);
  std::vector<Condition> cs;
  cs.push_back(detail::flag("sober", is_sober(in.poset(), in.caps())));
  cs.push_back(map_condition(in, in.filtered(), false, budget, "T0/irr"));
  cs.push_back(map_condition(in, closed_fams, false, budget, "T0/irr-closed"));
  cs.push_back(map_condition(in, in.filtered(), true, budget, "sober/irr"));
  cs.push_back(map_condition(in, closed_fams, true, budget, "sober/irr-closed"));
  return detail::equivalence("sober.maps", cs, budget.exceeded || !in.families_exhaustive());
}

inline TheoremReport sober_min(Instance& in) {
  const FinPoset& p = in.poset();
  const Condition sober = detail::flag("sober", is_sober(p, in.caps()));
  const Condition c = for_all("min-equation", in.filtered(), [&](const std::vector<Subset>& fam) -> std::optional<std::string> {
    const Subset meet = family_meet(fam, p.size());
    if (!is_compact_saturated(p, meet)) return "meet of " + family_str(fam) + " is not in K(X)";
    std::optional<std::string> bad;
    p.minimal(meet).for_each([&](std::size_t c) {
      const EquationSides e = family_equation(p, p.down(c), fam);
      if (!bad && !(e.equal() && e.lhs == p.up(c))) bad = "family " + family_str(fam) + ", c=" + std::to_string(c);
    });
    return bad;
  });
  return detail::implication("sober.min", sober, c, !in.families_exhaustive());
}

/// Meets of families inside an open force a member inside it.
inline Condition meet_in_open(Instance& in, const std::vector<std::vector<Subset>>& fams, std::string name) {
  const FinPoset& p = in.poset();
  return for_all(std::move(name), fams, [&](const std::vector<Subset>& fam) -> std::optional<std::string> {
    const Subset meet = family_meet(fam, p.size());
    for (Subset u : in.opens()) {
      if (!meet.subset_of(u)) continue;
      bool some = false;
      for (Subset k : fam) some = some || k.subset_of(u);
      if (!some) return "family " + family_str(fam) + ", U=" + u.str();
    }
    return std::nullopt;
  });
}

inline TheoremReport smyth_sober(Instance& in) {
  const PowerSpace ps = smyth(in.poset(), in.caps());
  std::vector<Condition> cs;
  cs.push_back(detail::flag("sober", is_sober(in.poset(), in.caps())));
  cs.push_back(meet_in_open(in, in.filtered(), "irreducible"));
  cs.push_back(meet_in_open(in, smyth_irr_closed(in), "irreducible-closed"));
  cs.push_back(detail::flag("P_S(X) sober", is_sober(ps.space, in.caps())));
  return detail::equivalence("smyth.sober", cs, !in.families_exhaustive());
}

inline TheoremReport smyth_wf(Instance& in) {
  const PowerSpace ps = smyth(in.poset(), in.caps());
  std::vector<Condition> cs;
  cs.push_back(detail::flag("well-filtered", is_well_filtered(in.poset(), in.caps())));
  cs.push_back(detail::flag("P_S(X) d-space", is_d_space(ps.space, in.caps())));
  const Verdict wf = is_well_filtered(ps.space, in.caps());
  cs.push_back(detail::flag("P_S(X) well-filtered", wf));
  return detail::equivalence("smyth.wf", cs, wf.bounded || !in.families_exhaustive());
}

inline TheoremReport smyth_wd(Instance& in) {
  const PowerSpace ps = smyth(in.poset(), in.caps());
  return detail::implication("smyth.wd", detail::flag("P_S(X) WD", is_wd_space(ps.space, in.caps())),
                             detail::flag("WD", is_wd_space(in.poset(), in.caps())));
}

inline TheoremReport smyth_irr(Instance& in) {
  const FinPoset& p = in.poset();
  const PowerSpace ps = smyth(p, in.caps());
  const Map x = xi(ps);
  std::vector<Condition> cs;
  cs.push_back(for_all("irr-transfer", std::vector<int>{0}, [&](int) -> std::optional<std::string> {
    std::optional<std::string> bad;
    for_each_subset_of(p.carrier(), [&](Subset a) {
      if (bad || a.empty()) return;
      const bool irr = is_irreducible(p, a);
      const Subset img = image(x, a);
      const bool in_ps = is_irreducible(ps.space, img);
      // S^u(X) as a subspace of P_S(X): irreducibility there is that of the
      // image inside the induced order on the principal filters.
      const Subset principal = image(x, p.carrier());
      const FinPoset su = ps.space.induced(principal);
      Subset img_su;
      const auto el = principal.elements();
      for (std::size_t i = 0; i < el.size(); ++i)
        if (img.contains(el[i])) img_su.insert(i);
      const bool in_su = is_irreducible(su, img_su);
      const bool closed_x = is_closed(p, a);
      const bool closed_su = is_closed(su, img_su);
      if (irr != in_ps || irr != in_su) bad = "A=" + a.str() + " irreducibility differs";
      else if ((irr && closed_x) != (in_su && closed_su)) bad = "A=" + a.str() + " closed irreducibility differs";
    });
    return bad;
  }));
  cs.push_back(for_all("filtered-iff-directed", std::vector<int>{0}, [&](int) -> std::optional<std::string> {
    std::optional<std::string> bad;
    for_each_subset_of(p.carrier(), [&](Subset s) {
      if (!bad && !s.empty() && is_filtered_family(in.ups(s)) != p.is_directed(s)) bad = "S=" + s.str();
    });
    return bad;
  }));
  return detail::all_hold("smyth.irr", cs);
}

inline TheoremReport smyth_union(Instance& in) {
  const UnionMapReport r = union_map_check(in.poset(), in.caps());
  std::vector<Condition> cs;
  cs.push_back(cond_of("union-compact", r.compact_ok, r.witness));
  cs.push_back(cond_of("union-continuous", r.continuous_ok, r.witness));
  cs.push_back(cond_of("meet-sup", r.meet_ok, r.witness));
  TheoremReport rep = detail::all_hold("smyth.union", cs, !r.meet_exhaustive);
  rep.detail += "; " + std::to_string(r.outer_points) + " compact sets of P_S(X), " + std::to_string(r.families_checked) +
                " families";
  return rep;
}

inline TheoremReport hofmann_mislove(Instance& in) {
  const FinPoset& p = in.poset();
  const Verdict sober = is_sober(p, in.caps());
  const OpenFilterReport r = open_filters_and_phi(p, sober.value, in.caps());
  std::vector<Subset> images = r.phi;
  std::sort(images.begin(), images.end(), MaskLess{});
  std::vector<Condition> cs;
  cs.push_back(detail::flag("sober", sober));
  cs.push_back(for_all("filter-is-phi", r.filters, [&](Subset f) -> std::optional<std::string> {
    if (!detail::contains_set(images, f)) return "open filter " + f.str() + " of O(X) indices";
    return std::nullopt;
  }));
  cs.push_back(for_all("filter-is-phi-of-meet", r.filters, [&](Subset f) -> std::optional<std::string> {
    Subset meet = p.carrier();
    f.for_each([&](std::size_t i) { meet &= r.opens[i]; });
    if (phi_of(r.opens, meet) != f) return "open filter " + f.str() + " of O(X) indices";
    return std::nullopt;
  }));
  TheoremReport rep = detail::equivalence("hofmann-mislove", cs, !r.scott_checked);
  rep.detail += "; |OFilt|=" + std::to_string(r.filters.size()) + ", |K(X)|=" + std::to_string(r.k.size()) +
                ", order isomorphism " + (r.order_iso ? "yes" : "no");
  if (rep.verdict == Outcome::Pass && sober.value && !r.order_iso) {
    rep.verdict = Outcome::Fail;
    rep.witness = r.witness;
  }
  return rep;
}

inline TheoremReport irr_open_filter_check(Instance& in) {
  return detail::all_hold(
      "irr.open-filter",
      {for_all("open-filter", in.filtered(), [&](const std::vector<Subset>& fam) -> std::optional<std::string> {
        const IrrFilterReport r = irr_open_filter(in.poset(), fam, in.caps());
        if (!r.is_open_filter) return "F_A of " + family_str(fam) + " is not an open filter";
        if (!r.closure_agrees) return "F_A of " + family_str(fam) + " differs from that of its closure";
        return std::nullopt;
      })},
      !in.families_exhaustive());
}

inline TheoremReport hoare_sober(Instance& in) {
  const FinPoset& p = in.poset();
  const PowerSpace closed = hoare_closed(p, in.caps());
  const PowerSpace irr = hoare_irreducible(p, in.caps());
  return detail::all_hold("hoare.sober", {detail::flag("P_H(C(X)) sober", is_sober(closed.space, in.caps())),
                                          detail::flag("P_H(Irr_c(X)) sober", is_sober(irr.space, in.caps()))});
}

inline TheoremReport hoare_eta(Instance& in) {
  const FinPoset& p = in.poset();
  const PowerSpace ps = hoare_irreducible(p, in.caps());
  const Map e = eta(ps);
  const EmbeddingReport emb = check_embedding(p, ps.space, e, in.caps());
  return detail::all_hold("hoare.eta", {cond_of("eta embedding", emb.ok(), emb.witness)});
}

inline TheoremReport inclusion_chain(Instance& in) {
  const FinPoset& p = in.poset();
  auto dc = directed_closures(p, in.caps());
  auto rd = rudin_sets(p, in.caps());
  auto wd = wd_sets(p, {}, in.caps());
  auto irr = in.irr_c();
  for (auto* v : {&dc, &rd, &wd, &irr}) std::sort(v->begin(), v->end(), MaskLess{});
  auto incl = [&](const std::vector<Subset>& a, const std::vector<Subset>& b, const char* name) {
    return for_all(name, a, [&](Subset s) -> std::optional<std::string> {
      if (!detail::contains_set(b, s)) return s.str();
      return std::nullopt;
    });
  };
  TheoremReport r = detail::all_hold("inclusion-chain", {incl(dc, rd, "Dc in RD"), incl(rd, wd, "RD in WD"),
                                                         incl(wd, irr, "WD in Irr_c")});
  r.detail += "; sizes " + std::to_string(dc.size()) + "/" + std::to_string(rd.size()) + "/" + std::to_string(wd.size()) +
              "/" + std::to_string(irr.size());
  return r;
}

inline TheoremReport soberequiv(Instance& in) {
  const ClassificationVector& v = in.classification();
  auto f = [&](const char* n) { return cond_of(n, v.get(n), v.witnesses.count(n) ? v.witnesses.at(n) : std::string()); };
  const bool wf = v.get("well_filtered");
  std::vector<Condition> cs;
  cs.push_back(f("sober"));
  cs.push_back(cond_of("DC d-space", v.get("dc_space") && v.get("d_space")));
  cs.push_back(cond_of("WF DC", wf && v.get("dc_space")));
  cs.push_back(cond_of("WF Rudin", wf && v.get("rudin_space")));
  cs.push_back(cond_of("WF WD", wf && v.get("wd_space")));
  return detail::equivalence("soberequiv", cs, false);
}

inline TheoremReport space_hierarchy(Instance& in) {
  const ClassificationVector& v = in.classification();
  static const std::vector<std::pair<const char*, const char*>> kLinks = {
      {"sober", "dc_space"},         {"dc_space", "rudin_space"},
      {"rudin_space", "wd_space"},   {"sober", "well_filtered"},
      {"well_filtered", "d_space"},  {"d_space", "d_bounded"},
      {"well_filtered", "ftip"},     {"sober", "rip"},
      {"rip", "ftip"},               {"sober", "irreducible_complete"},
      {"irreducible_complete", "r_bounded"}, {"locally_hypercompact", "dc_space"},
      {"c_space", "locally_hypercompact"},   {"locally_hypercompact", "locally_compact"},
      {"locally_compact", "core_compact"},   {"locally_compact", "rudin_space"},
      {"core_compact", "wd_space"},
  };
  std::vector<Condition> cs;
  for (auto [a, b] : kLinks)
    cs.push_back(cond_of(std::string(a) + " => " + b, !v.get(a) || v.get(b), std::string(a) + " holds, " + b + " fails"));
  return detail::all_hold("space-hierarchy", cs);
}

inline TheoremReport rudin_local_compact(Instance& in) {
  const ClassificationVector& v = in.classification();
  return detail::implication("rudin.local-compact", cond_of("locally compact", v.get("locally_compact")),
                             cond_of("Rudin space", v.get("rudin_space")));
}

inline TheoremReport wd_core_compact(Instance& in) {
  const ClassificationVector& v = in.classification();
  return detail::implication("wd.core-compact", cond_of("core compact", v.get("core_compact")),
                             cond_of("WD space", v.get("wd_space")));
}

inline TheoremReport wf_core_compact_sober(Instance& in) {
  const ClassificationVector& v = in.classification();
  const bool cc = v.get("core_compact");
  const bool wf = v.get("well_filtered");
  const bool sober = v.get("sober");
  if (cc && !sober) {
    // Contrapositive form: a core compact space that is not sober is not
    // well-filtered.
    TheoremReport r{"wf.core-compact-sober", wf ? Outcome::Fail : Outcome::Pass, {}, {}, false};
    r.detail = wf ? "core compact, well-filtered, not sober" : "core compact and not sober, hence not well-filtered";
    if (wf) r.witness = v.witnesses.count("sober") ? v.witnesses.at("sober") : "sober is false";
    return r;
  }
  return detail::implication("wf.core-compact-sober", cond_of("core compact and well-filtered", cc && wf),
                             cond_of("sober", sober));
}

inline TheoremReport rudin_wf(Instance& in) {
  const FinPoset& p = in.poset();
  const Condition two = for_all("max and closed down-meets", in.irr_c(), [&](Subset a) -> std::optional<std::string> {
    if (p.maximal(a).empty()) return "max of " + a.str() + " is empty";
    for (Subset k : in.k())
      if (!is_closed(p, p.down(a & k))) return "A=" + a.str() + ", K=" + k.str();
    return std::nullopt;
  });
  const Condition sober = detail::flag("sober", is_sober(p, in.caps()));
  const Verdict wf_v = is_well_filtered(p, in.caps());
  const Condition wf = detail::flag("well-filtered", wf_v);
  TheoremReport r = detail::implication_chain("rudin-wf", {sober, two, wf}, wf_v.bounded);
  if (r.verdict == Outcome::Pass && in.classification().get("core_compact") && !(sober.value == two.value && two.value == wf.value)) {
    r.verdict = Outcome::Fail;
    r.witness = "core compact but conditions differ: " + detail::values_str({sober, two, wf});
  }
  return r;
}

inline TheoremReport x_infinity_wf(Instance& in) {
  const FinPoset xi_p = add_top(in.poset());
  const Verdict wf = is_well_filtered(in.poset(), in.caps());
  const Verdict top = is_well_filtered(xi_p, in.caps());
  Condition t0 = cond_of("X_inf is T0", true);  // from_down_sets rejects non-T0 specialization
  return detail::implication("x-infinity.wf", detail::flag("well-filtered", wf),
                             detail::conj("X_inf well-filtered", t0, detail::flag("X_inf well-filtered", top)),
                             wf.bounded || top.bounded);
}

inline TheoremReport rudin_lemma(Instance& in) {
  const FinPoset& p = in.poset();
  const Condition c = for_all("minimizer", in.filtered(), [&](const std::vector<Subset>& fam) -> std::optional<std::string> {
    for (Subset cl : in.closed()) {
      bool meets = true;
      for (Subset k : fam) meets = meets && cl.intersects(k);
      if (!meets) continue;
      const Subset a = topological_rudin_minimize(p, fam, cl, in.caps());
      if (!a.subset_of(cl) || !is_closed(p, a) || !is_irreducible(p, a) || !is_minimal_meeting(p, a, fam))
        return "family " + family_str(fam) + ", C=" + cl.str() + " gave " + a.str();
    }
    return std::nullopt;
  });
  return detail::all_hold("rudin.lemma", {c}, !in.families_exhaustive());
}

/// Minimal closed sets inside `a` that meet every member.
inline std::vector<Subset> minimal_inside(Instance& in, const std::vector<Subset>& fam, Subset a) {
  std::vector<Subset> meeting;
  for (Subset c : in.closed()) {
    if (!c.subset_of(a)) continue;
    bool ok = true;
    for (Subset k : fam) ok = ok && c.intersects(k);
    if (ok) meeting.push_back(c);
  }
  return inclusion_minimal(meeting);
}

inline TheoremReport rudin_equiv(Instance& in) {
  const FinPoset& p = in.poset();
  std::optional<std::string> bad;
  const SweepInfo info = for_each_subfamily(in.k(), in.caps(), [&](const std::vector<Subset>& fam) {
    if (bad) return;
    const bool irr = is_smyth_irreducible(fam);
    bool cond2 = true;
    for (Subset a : in.closed()) {
      bool meets = true;
      for (Subset k : fam) meets = meets && a.intersects(k);
      if (!meets) continue;
      bool found = false;
      for (Subset c : minimal_inside(in, fam, a)) found = found || is_irreducible(p, c);
      if (!found) {
        cond2 = false;
        break;
      }
    }
    if (irr != cond2) bad = "family " + family_str(fam) + (irr ? " is irreducible" : " is not irreducible");
  });
  TheoremReport r{"rudin.equiv", bad ? Outcome::Fail : Outcome::Pass,
                  std::to_string(info.visited) + " families", bad.value_or(""), !info.exhaustive};
  if (r.bounded) r.detail += " (bounded check)";
  return r;
}

inline TheoremReport rudin_meet(Instance& in) {
  const FinPoset& p = in.poset();
  const auto& k = in.k();
  const Condition c = for_all("meet-of-diamonds", smyth_irr_closed(in), [&](const std::vector<Subset>& fam) -> std::optional<std::string> {
    const auto mins = inclusion_minimal(closed_meeting_all(p, fam, in.caps()));
    std::vector<Subset> rebuilt;
    for (Subset kk : k) {
      bool all = true;
      for (Subset a : mins) all = all && kk.intersects(a);
      if (all) rebuilt.push_back(kk);
    }
    for (Subset a : mins)
      if (!is_irreducible(p, a)) return "minimal set " + a.str() + " is not irreducible";
    if (rebuilt != fam) return "family " + family_str(fam) + " rebuilt as " + family_str(rebuilt);
    return std::nullopt;
  });
  return detail::all_hold("rudin.meet", {c}, !in.families_exhaustive());
}

inline TheoremReport rudin_m_lemma(Instance& in) {
  const FinPoset& p = in.poset();
  std::optional<std::string> bad;
  const SweepInfo info = for_each_subfamily(in.k(), in.caps(), [&](const std::vector<Subset>& fam) {
    if (bad) return;
    for (Subset c : closed_meeting_all(p, fam, in.caps()))
      if (minimal_inside(in, fam, c).empty()) {
        bad = "family " + family_str(fam) + ", C=" + c.str();
        return;
      }
  });
  TheoremReport r{"rudin.m-lemma", bad ? Outcome::Fail : Outcome::Pass, std::to_string(info.visited) + " families",
                  bad.value_or(""), !info.exhaustive};
  return r;
}

inline TheoremReport irr_image(Instance& in) {
  const FinPoset& p = in.poset();
  detail::Budget budget{in.caps().maps};
  auto bad = over_maps(in, false, budget, [&](const FinPoset& y, const Map& f) -> std::optional<std::string> {
    for (Subset a : in.irr()) {
      if (!budget.spend()) return std::nullopt;
      if (!is_irreducible(y, image(f, a))) return "f=" + map_str(f) + ", A=" + a.str();
      if (y.down(image(f, a)) != y.down(image(f, p.down(a)))) return "closure mismatch f=" + map_str(f) + ", A=" + a.str();
    }
    // Rudin sets map to Rudin sets under closure of the image.
    for (Subset a : rudin_sets(p, in.caps()))
      if (!is_rudin_set(Space(y), y.down(image(f, a)), in.caps()).rudin) return "Rudin image f=" + map_str(f) + ", A=" + a.str();
    return std::nullopt;
  });
  return detail::all_hold("irr.image", {Condition{"image", !bad, bad.value_or("")}}, budget.exceeded);
}

inline TheoremReport irr_subspace(Instance& in) {
  const FinPoset& p = in.poset();
  if (p.size() > in.caps().subset_sweep) throw CapExceeded("subspace sweep exceeds subset cap");
  std::optional<std::string> bad;
  for_each_subset_of(p.carrier(), [&](Subset y) {
    if (bad || y.empty()) return;
    const FinPoset sub = p.induced(y);
    const auto el = y.elements();
    for_each_subset_of(y, [&](Subset a) {
      if (bad || a.empty()) return;
      Subset local;
      for (std::size_t i = 0; i < el.size(); ++i)
        if (a.contains(el[i])) local.insert(i);
      const bool in_y = is_irreducible(sub, local);
      const bool in_x = is_irreducible(p, a);
      const bool cl = is_irreducible(p, p.down(a));
      if (in_y != in_x || in_x != cl) bad = "Y=" + y.str() + ", A=" + a.str();
    });
  });
  return detail::all_hold("irr.subspace", {Condition{"subspace", !bad, bad.value_or("")}});
}

/// Second factors used for product statements.
inline std::vector<FinPoset> small_factors() { return {FinPoset::singleton(), FinPoset::chain(2), FinPoset::antichain(2)}; }

inline TheoremReport irr_product(Instance& in) {
  const FinPoset& p = in.poset();
  std::vector<Condition> cs;
  for (const FinPoset& y : small_factors()) {
    if (p.size() * y.size() > in.caps().carrier) throw CapExceeded("product exceeds carrier cap");
    const Product pr = product({p, y});
    const auto irr_xy = irreducible_closed(pr.space, in.caps());
    const auto irr_x = in.irr_c();
    const auto irr_y = irreducible_closed(y, in.caps());
    cs.push_back(for_all("Irr_c of product", irr_xy, [&](Subset a) -> std::optional<std::string> {
      const Subset a0 = image(pr.projection(0), a);
      const Subset a1 = image(pr.projection(1), a);
      if (product_set(pr, {a0, a1}) != a) return "A=" + a.str() + " is not the product of its projections";
      if (!is_irreducible(p, a0) || !is_closed(p, a0) || !is_irreducible(y, a1) || !is_closed(y, a1))
        return "projections of " + a.str() + " are not irreducible closed";
      return std::nullopt;
    }));
    std::size_t products = 0;
    for (Subset a : irr_x)
      for (Subset b : irr_y) {
        ++products;
        const Subset ab = product_set(pr, {a, b});
        if (!std::count(irr_xy.begin(), irr_xy.end(), ab))
          cs.push_back(cond_of("product of Irr_c", false, a.str() + " x " + b.str()));
      }
    cs.push_back(cond_of("counts", products == irr_xy.size(), "count mismatch"));
  }
  return detail::all_hold("irr.product", cs);
}

struct ClassFlags {
  bool sober, dc, rudin, wd;
};

inline ClassFlags class_flags(const FinPoset& p, const Caps& caps) {
  return {is_sober(p, caps).value, is_dc_space(p, caps).value, is_rudin_space(p, caps).value, is_wd_space(p, caps).value};
}

inline std::optional<std::string> inherits(const ClassFlags& parent, const ClassFlags& child, const std::string& what) {
  if (parent.sober && !child.sober) return what + " is not sober";
  if (parent.dc && !child.dc) return what + " is not DC";
  if (parent.rudin && !child.rudin) return what + " is not Rudin";
  if (parent.wd && !child.wd) return what + " is not WD";
  return std::nullopt;
}

inline TheoremReport closed_subspace(Instance& in) {
  const ClassFlags parent = class_flags(in.poset(), in.caps());
  const Condition c = for_all("closed subspaces", in.closed(), [&](Subset a) -> std::optional<std::string> {
    if (a.empty()) return std::nullopt;
    const Subspace s = subspace_closed(in.poset(), a);
    return inherits(parent, class_flags(s.space, in.caps()), "closed subspace " + a.str());
  });
  return detail::all_hold("closed-subspace", {c});
}

inline TheoremReport product_preservation(Instance& in) {
  const FinPoset& p = in.poset();
  const ClassFlags fx = class_flags(p, in.caps());
  std::vector<Condition> cs;
  for (const FinPoset& y : small_factors()) {
    if (p.size() * y.size() > in.caps().carrier) throw CapExceeded("product exceeds carrier cap");
    const ClassFlags fy = class_flags(y, in.caps());
    const ClassFlags both{fx.sober && fy.sober, fx.dc && fy.dc, fx.rudin && fy.rudin, fx.wd && fy.wd};
    const ClassFlags fp = class_flags(product({p, y}).space, in.caps());
    auto bad = inherits(both, fp, "product with " + std::to_string(y.size()) + " points");
    cs.push_back(Condition{"product", !bad, bad.value_or("")});
    // Factors are retracts of the product, so the converse direction holds too.
    const bool converse = (!fp.rudin || both.rudin) && (!fp.dc || both.dc) && (!fp.sober || both.sober);
    cs.push_back(cond_of("factors", converse, "product has a class its factors lack"));
  }
  return detail::all_hold("product.preservation", cs);
}

inline TheoremReport retract(Instance& in) {
  const FinPoset& p = in.poset();
  const ClassFlags parent = class_flags(p, in.caps());
  std::set<std::uint64_t> seen;
  std::optional<std::string> bad;
  for (const Map& r : continuous_maps(p, p, in.caps())) {
    bool idem = true;
    for (std::size_t x = 0; x < r.size() && idem; ++x) idem = r[r[x]] == r[x];
    if (!idem) continue;
    const Subset img = image(r, p.carrier());
    if (!seen.insert(img.bits()).second) continue;
    bad = inherits(parent, class_flags(p.induced(img), in.caps()), "retract onto " + img.str());
    if (bad) break;
  }
  TheoremReport rep = detail::all_hold("retract", {Condition{"retracts", !bad, bad.value_or("")}});
  rep.detail += "; " + std::to_string(seen.size()) + " retract images";
  return rep;
}

inline TheoremReport order_cut_closure(Instance& in) {
  const FinPoset& p = in.poset();
  if (p.size() > in.caps().subset_sweep) throw CapExceeded("subset sweep exceeds cap");
  std::optional<std::string> bad;
  for_each_subset_of(p.carrier(), [&](Subset c) {
    if (bad) return;
    const Subset cl = p.down(c);
    for (std::size_t x = 0; x < p.size() && !bad; ++x) {
      const bool a = p.upper_bounds(c).contains(x);
      const bool b = c.subset_of(p.down(x));
      const bool d = cl.subset_of(p.down(x));
      if (a != b || b != d) bad = "C=" + c.str() + ", x=" + std::to_string(x);
    }
    if (!bad && p.cut(c) != p.cut(cl)) bad = "cut of " + c.str() + " differs from cut of its closure";
    if (!bad && !cl.subset_of(p.cut(c))) bad = "closure of " + c.str() + " is not inside its cut";
  });
  return detail::all_hold("order.cut-closure", {Condition{"cut", !bad, bad.value_or("")}});
}

inline TheoremReport alexandroff_6cond(Instance& in) {
  const FinPoset& p = in.poset();
  const auto wb = way_below_relation(p, in.caps());
  bool compact = true;
  for (std::size_t x = 0; x < p.size(); ++x) compact = compact && wb[x].contains(x);
  bool alpha_sigma = true;
  for (Subset u : in.opens()) alpha_sigma = alpha_sigma && is_scott_open(p, u, in.caps());
  const bool dcpo = is_dcpo(p, in.caps());
  std::vector<Condition> cs;
  cs.push_back(detail::flag("sober", is_sober(p, in.caps())));
  cs.push_back(detail::flag("well-filtered", is_well_filtered(p, in.caps())));
  cs.push_back(detail::flag("d-space", is_d_space(p, in.caps())));
  cs.push_back(cond_of("ACC", is_noetherian(p, in.caps()), "an ascending chain has no top"));
  cs.push_back(cond_of("dcpo, all compact", dcpo && compact, "some element is not compact"));
  cs.push_back(cond_of("dcpo, alpha=sigma", dcpo && alpha_sigma, "some up-set is not Scott-open"));
  TheoremReport r = detail::equivalence("alexandroff.6cond", cs, false);
  if (r.verdict == Outcome::Pass && !is_dc_space(p, in.caps()).value) {
    r.verdict = Outcome::Fail;
    r.witness = "Alexandroff space is not DC";
  }
  return r;
}

// Reflection.
inline TheoremReport reflection_iso(Instance& in) {
  if (!in.finite()) {
    const Reflection r = wf_reflection(in.space(), in.caps());
    const SymbolicReflection& s = *r.symbolic;
    return detail::all_hold("reflection.iso", {cond_of("one added point", s.added_points == 1, "added points differ from 1"),
                                               cond_of("added point is top", s.added_is_top, "added point is not a top"),
                                               cond_of("equals sobrification", s.equals_sobrification,
                                                       "WD carrier differs from Irr_c carrier")});
  }
  const FinPoset& p = in.poset();
  const Reflection r = wf_reflection(in.space(), in.caps());
  const auto h = homeomorphic(p, r.reflected.space);
  const bool eta_bij = image(r.eta, p.carrier()).size() == r.reflected.carrier.size() && r.eta.size() == r.reflected.carrier.size();
  const bool eta_iso = eta_bij && is_monotone(p, r.reflected.space, r.eta) && [&] {
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (r.reflected.space.leq(r.eta[a], r.eta[b]) && !p.leq(a, b)) return false;
    return true;
  }();
  TheoremReport rep = detail::all_hold("reflection.iso", {cond_of("homeomorphic", h.has_value(), "no isomorphism found"),
                                                          cond_of("eta is a homeomorphism", eta_iso, "eta is not an order isomorphism")});
  if (h) rep.detail += "; witness " + map_str(*h);
  return rep;
}

inline TheoremReport reflection_eta(Instance& in) {
  const Reflection r = wf_reflection(in.space(), in.caps());
  const EmbeddingReport e = check_embedding(in.poset(), r.reflected.space, r.eta, in.caps());
  return detail::all_hold("reflection.eta", {cond_of("eta embedding", e.ok(), e.witness)});
}

inline TheoremReport reflection_universal(Instance& in) {
  const Reflection r = wf_reflection(in.space(), in.caps());
  std::size_t maps = 0;
  bool bounded = false;
  std::optional<std::string> bad;
  for (const FinPoset& y : in.targets()) {
    if (!is_well_filtered(y, in.caps()).value) continue;
    for (const Map& f : continuous_maps(in.poset(), y, in.caps())) {
      ++maps;
      const FactorReport fr = factorize(r, y, f, in.caps());
      bounded = bounded || fr.uniqueness_bounded;
      if (!fr.ok()) {
        bad = "f=" + map_str(f) + " into " + std::to_string(y.size()) + " points: " + fr.witness;
        break;
      }
    }
    if (bad) break;
  }
  TheoremReport rep = detail::all_hold("reflection.universal", {Condition{"factorization", !bad, bad.value_or("")}}, bounded);
  rep.detail += "; " + std::to_string(maps) + " maps";
  return rep;
}

inline TheoremReport reflection_closure(Instance& in) {
  const FinPoset& p = in.poset();
  if (p.size() > in.caps().subset_sweep) throw CapExceeded("subset sweep exceeds cap");
  const Reflection r = wf_reflection(in.space(), in.caps());
  std::optional<std::string> bad;
  for_each_subset_of(p.carrier(), [&](Subset a) {
    if (bad) return;
    const Subset lhs = r.reflected.space.down(image(r.eta, a));
    Subset rhs;
    const Subset cl = p.down(a);
    for (std::size_t i = 0; i < r.reflected.carrier.size(); ++i)
      if (r.reflected.carrier[i].subset_of(cl)) rhs.insert(i);
    if (lhs != rhs) bad = "A=" + a.str();
  });
  return detail::all_hold("reflection.closure", {Condition{"closure", !bad, bad.value_or("")}});
}

inline TheoremReport reflection_wf(Instance& in) {
  const Reflection r = wf_reflection(in.space(), in.caps());
  const Verdict v = is_well_filtered(r.reflected.space, in.caps());
  return detail::all_hold("reflection.wf", {detail::flag("X^w well-filtered", v)}, v.bounded);
}

inline TheoremReport reflection_sober(Instance& in) {
  if (!in.finite()) {
    const SymbolicReflection s = symbolic_reflection(in.space(), false, in.caps());
    return detail::all_hold("reflection.sober", {cond_of("X^s sober", s.sober, "symbolic sobrification is not sober")});
  }
  const Reflection r = sobrification(in.poset(), in.caps());
  return detail::all_hold("reflection.sober", {detail::flag("X^s sober", is_sober(r.reflected.space, in.caps()))});
}

inline TheoremReport reflection_compact(Instance& in) {
  if (!in.finite()) {
    const Reflection r = wf_reflection(in.space(), in.caps());
    // The cofinite space is compact: a cover member omits finitely many points.
    return detail::all_hold("reflection.compact", {cond_of("X^w compact", r.symbolic->compact, "X^w is not compact")});
  }
  return detail::all_hold("reflection.compact", {cond_of("finite spaces are compact", true)});
}

inline TheoremReport reflection_functor(Instance& in) {
  const FinPoset& x = in.poset();
  const Reflection rx = wf_reflection(in.space(), in.caps());
  std::optional<std::string> bad;
  try {
    // Identity law.
    Map id(x.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    const Map idw = functor_action(rx, rx, id);
    for (std::size_t i = 0; i < idw.size() && !bad; ++i)
      if (idw[i] != i) bad = "identity is not preserved";
    // Square and composition over small codomains.
    std::vector<FinPoset> ys;
    for (const FinPoset& y : in.targets())
      if (y.size() <= 2) ys.push_back(y);
    for (const FinPoset& y : ys) {
      const Reflection ry = wf_reflection(Space(y), in.caps());
      for (const Map& f : continuous_maps(x, y, in.caps())) {
        const Map fw = functor_action(rx, ry, f);
        for (const FinPoset& z : ys) {
          const Reflection rz = wf_reflection(Space(z), in.caps());
          for (const Map& g : continuous_maps(y, z, in.caps())) {
            Map gf(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) gf[i] = g[f[i]];
            const Map gfw = functor_action(rx, rz, gf);
            const Map gw = functor_action(ry, rz, g);
            for (std::size_t i = 0; i < gfw.size() && !bad; ++i)
              if (gfw[i] != gw[fw[i]]) bad = "composition fails for f=" + map_str(f) + ", g=" + map_str(g);
          }
        }
      }
    }
  } catch (const Error& e) {
    if (dynamic_cast<const CapExceeded*>(&e)) throw;
    bad = e.what();
  }
  return detail::all_hold("reflection.functor", {Condition{"functor", !bad, bad.value_or("")}});
}

inline TheoremReport reflection_product(Instance& in) {
  std::vector<Condition> cs;
  for (const FinPoset& y : small_factors()) {
    if (in.size() * y.size() > in.caps().carrier) throw CapExceeded("product exceeds carrier cap");
    const ProductReflectionReport r = product_reflection_check({in.poset(), y}, in.caps());
    cs.push_back(cond_of("gamma with " + std::to_string(y.size()) + "-point factor", r.ok(), r.witness));
  }
  return detail::all_hold("reflection.product", cs);
}

inline TheoremReport reflection_opens(Instance& in) {
  const Reflection r = wf_reflection(in.space(), in.caps());
  const auto opens_x = in.opens();
  auto opens_w = open_sets(r.reflected.space, in.caps());
  std::vector<Subset> images;
  for (Subset u : opens_x) images.push_back(diamond(r.reflected, u));
  std::vector<Subset> sorted = images;
  std::sort(sorted.begin(), sorted.end(), MaskLess{});
  const bool bij = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted == opens_w;
  bool order = true;
  for (std::size_t i = 0; i < opens_x.size(); ++i)
    for (std::size_t j = 0; j < opens_x.size(); ++j)
      order = order && (opens_x[i].subset_of(opens_x[j]) == images[i].subset_of(images[j]));
  return detail::all_hold("reflection.opens", {cond_of("diamond is a bijection", bij, "U -> diamond U is not onto O(X^w)"),
                                               cond_of("diamond preserves order", order, "inclusion not preserved")});
}

inline TheoremReport reflection_box_wd(Instance& in) {
  const FinPoset& p = in.poset();
  const Reflection r = wf_reflection(in.space(), in.caps());
  const Space w(r.reflected.space);
  const Condition c = for_all("box transfer", in.closed(), [&](Subset a) -> std::optional<std::string> {
    if (a.empty()) return std::nullopt;
    Subset box;
    for (std::size_t i = 0; i < r.reflected.carrier.size(); ++i)
      if (r.reflected.carrier[i].subset_of(a)) box.insert(i);
    const bool wd_x = wd_status(in.space(), a, {}, in.caps()).is_wd();
    const bool wd_w = !box.empty() && wd_status(w, box, {}, in.caps()).is_wd();
    if (wd_x != wd_w) return "A=" + a.str();
    (void)p;
    return std::nullopt;
  });
  return detail::all_hold("reflection.box-wd", {c});
}

// Cofinite and symbolic forms.
inline TheoremReport cofinite_example(Instance& in) {
  if (in.finite()) return detail::not_applicable("cofinite.example", "requires the cofinite space");
  const ClassificationVector& v = in.classification();
  const std::vector<std::pair<const char*, bool>> expected = {
      {"rudin_space", true}, {"wd_space", true},        {"dc_space", false}, {"well_filtered", false},
      {"sober", false},      {"locally_compact", true}, {"T1", true},        {"d_space", true}};
  std::vector<Condition> cs;
  for (auto [name, want] : expected)
    cs.push_back(cond_of(name, v.get(name) == want, std::string(name) + " differs from the expected value"));
  const bool tails = v.witnesses.count("well_filtered") && v.witnesses.at("well_filtered").find("CofiniteTails") == 0;
  cs.push_back(cond_of("CofiniteTails witness", tails, "well_filtered witness is not CofiniteTails"));
  return detail::all_hold("cofinite.example", cs);
}

inline TheoremReport inclusion_chain_cofinite(Instance& in) {
  const Space& x = in.space();
  std::vector<Condition> cs;
  // D_c consists of the point closures; RD, WD and Irr_c also contain X.
  const SpaceSubset point = CofinSet::point(0);
  const SpaceSubset whole = CofinSet::whole();
  cs.push_back(cond_of("point closure Rudin", is_rudin_set(x, point, in.caps()).rudin, "{0} is not Rudin"));
  cs.push_back(cond_of("X Rudin", is_rudin_set(x, whole, in.caps()).rudin, "X is not Rudin"));
  cs.push_back(cond_of("X WD", wd_status(x, whole, {}, in.caps()).is_wd(), "X is not WD"));
  cs.push_back(cond_of("X irreducible", is_irreducible(x, whole), "X is not irreducible"));
  return detail::all_hold("inclusion-chain", cs);
}

}  // namespace checks

// ---------------------------------------------------------------------------
// Registry.

struct TheoremEntry {
  const char* id;
  TheoremReport (*finite)(Instance&);
  TheoremReport (*cofinite)(Instance&);  // nullptr: finite spaces only
};

inline const std::vector<TheoremEntry>& theorem_registry() {
  using namespace checks;
  static const std::vector<TheoremEntry> kRegistry = {
      {"alexandroff.6cond", alexandroff_6cond, nullptr},
      {"closed-subspace", closed_subspace, nullptr},
      {"cofinite.example", cofinite_example, cofinite_example},
      {"d-bounded.4cond", d_bounded_4cond, nullptr},
      {"d-space.7cond", d_space_7cond, nullptr},
      {"d-space.equational", d_space_equational, nullptr},
      {"d-space.maps", d_space_maps, nullptr},
      {"hoare.eta", hoare_eta, nullptr},
      {"hoare.sober", hoare_sober, nullptr},
      {"hofmann-mislove", hofmann_mislove, nullptr},
      {"inclusion-chain", inclusion_chain, inclusion_chain_cofinite},
      {"irr.image", irr_image, nullptr},
      {"irr.open-filter", irr_open_filter_check, nullptr},
      {"irr.product", irr_product, nullptr},
      {"irr.subspace", irr_subspace, nullptr},
      {"order.cut-closure", order_cut_closure, nullptr},
      {"product.preservation", product_preservation, nullptr},
      {"reflection.box-wd", reflection_box_wd, nullptr},
      {"reflection.closure", reflection_closure, nullptr},
      {"reflection.compact", reflection_compact, reflection_compact},
      {"reflection.eta", reflection_eta, nullptr},
      {"reflection.functor", reflection_functor, nullptr},
      {"reflection.iso", reflection_iso, reflection_iso},
      {"reflection.opens", reflection_opens, nullptr},
      {"reflection.product", reflection_product, nullptr},
      {"reflection.sober", reflection_sober, reflection_sober},
      {"reflection.universal", reflection_universal, nullptr},
      {"reflection.wf", reflection_wf, nullptr},
      {"retract", retract, nullptr},
      {"rudin-wf", rudin_wf, nullptr},
      {"rudin.equiv", rudin_equiv, nullptr},
      {"rudin.lemma", rudin_lemma, nullptr},
      {"rudin.local-compact", rudin_local_compact, rudin_local_compact},
      {"rudin.m-lemma", rudin_m_lemma, nullptr},
      {"rudin.meet", rudin_meet, nullptr},
      {"smyth.irr", smyth_irr, nullptr},
      {"smyth.sober", smyth_sober, nullptr},
      {"smyth.union", smyth_union, nullptr},
      {"smyth.wd", smyth_wd, nullptr},
      {"smyth.wf", smyth_wf, nullptr},
      {"sober.7cond", sober_7cond, nullptr},
      {"sober.equational", sober_equational, nullptr},
      {"sober.maps", sober_maps, nullptr},
      {"sober.min", sober_min, nullptr},
      {"sober.rip", sober_rip, nullptr},
      {"soberequiv", soberequiv, soberequiv},
      {"space-hierarchy", space_hierarchy, space_hierarchy},
      {"wd.core-compact", wd_core_compact, wd_core_compact},
      {"wf.core-compact-sober", wf_core_compact_sober, wf_core_compact_sober},
      {"wf.equational", wf_equational, nullptr},
      {"wf.maps", wf_maps, nullptr},
      {"wf.min", wf_min, nullptr},
      {"x-infinity.wf", x_infinity_wf, nullptr},
  };
  return kRegistry;
}

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const auto& e : theorem_registry()) out.emplace_back(e.id);
  return out;
}

/// Expand a selection: empty or {"all"} means every id; unknown ids throw.
inline std::vector<std::string> select_theorems(const std::vector<std::string>& ids) {
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) return theorem_ids();
  const auto known = theorem_ids();
  std::vector<std::string> out;
  for (const auto& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) throw PreconditionError("unknown theorem id " + id);
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline TheoremReport run_theorem(Instance& in, const std::string& id) {
  for (const auto& e : theorem_registry()) {
    if (id != e.id) continue;
    auto fn = in.finite() ? e.finite : e.cofinite;
    if (!fn) return detail::not_applicable(id, "requires a finite space");
    try {
      TheoremReport r = fn(in);
      if (r.verdict == Outcome::Fail && r.witness.empty()) r.witness = r.detail;
      return r;
    } catch (const CapExceeded& err) {
      return detail::not_applicable(id, std::string("cap exceeded: ") + err.what());
    } catch (const UnsupportedOperation& err) {
      return detail::not_applicable(id, std::string("unsupported: ") + err.what());
    }
  }
  throw PreconditionError("unknown theorem id " + id);
}

/// Reports sorted by theorem id.
inline std::vector<TheoremReport> verify_theorems(const Space& x, const std::vector<std::string>& ids,
                                                  const Caps& caps = {}) {
  Instance in(x, caps);
  std::vector<TheoremReport> out;
  for (const auto& id : select_theorems(ids)) out.push_back(run_theorem(in, id));
  return out;
}

}  // namespace soberkit

#endif  // SOBERKIT_THEOREMS_HPP_
