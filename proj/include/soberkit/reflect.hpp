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

#ifndef SOBERKIT_REFLECT_HPP_
#define SOBERKIT_REFLECT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soberkit/caps.hpp"
#include "soberkit/classify.hpp"
#include "soberkit/enumerate.hpp"
#include "soberkit/error.hpp"
#include "soberkit/poset.hpp"
#include "soberkit/powerspace.hpp"
#include "soberkit/rudin.hpp"
#include "soberkit/space.hpp"
#include "soberkit/subset.hpp"

namespace soberkit {

/// Reflection of the cofinite space, kept as a description: the point
/// closures of the original carrier plus one added point, the class of X.
struct SymbolicReflection {
  std::string original;
  std::vector<std::string> carrier;  // one entry per kind of point
  std::size_t added_points = 0;
  std::string added_point;
  bool added_is_top = false;
  bool sober = false;
  bool compact = false;
  bool equals_sobrification = false;
};

struct Reflection {
  Space original;
  PowerSpace reflected;
  Map eta;
  std::optional<SymbolicReflection> symbolic;

  bool is_symbolic() const { return symbolic.has_value(); }
};

/// Finite T0 homeomorphism is order isomorphism; the witness sends points of
/// x to points of y.
inline std::optional<Map> homeomorphic(const FinPoset& x, const FinPoset& y) { return find_isomorphism(x, y); }

/// P_H(Irr_c(X)) with x -> closure{x}.
inline Reflection sobrification(const FinPoset& x, const Caps& caps = {}) {
  Reflection r{Space(x), hoare_irreducible(x, caps), {}, std::nullopt};
  r.eta = eta(r.reflected);
  if (!is_sober(r.reflected.space, caps).value) throw Error("sobrification is not sober");
  return r;
}

/// The carrier of a reflection of the cofinite space: each irreducible closed
/// set that qualifies is listed by kind. `wd_only` keeps WD sets only.
inline std::vector<std::string> cofinite_reflection_carrier(const Space& x, bool wd_only, const Caps& caps) {
  std::vector<std::string> out;
  const SpaceSubset point = CofinSet::point(0);
  const SpaceSubset whole = CofinSet::whole();
  // Every point closure is {x}; the representative 0 stands for all of them.
  if (is_irreducible(x, point) && (!wd_only || wd_status(x, point, {}, caps).is_wd())) out.emplace_back("{x} for x in X");
  if (is_irreducible(x, whole) && (!wd_only || wd_status(x, whole, {}, caps).is_wd())) out.emplace_back("X");
  return out;
}

inline SymbolicReflection symbolic_reflection(const Space& x, bool wd_only, const Caps& caps = {}) {
  if (!x.is_cofinite()) throw PreconditionError("symbolic reflections describe the cofinite space only");
  SymbolicReflection s;
  s.original = x.describe();
  s.carrier = cofinite_reflection_carrier(x, wd_only, caps);
  // Point closures are the image of eta; anything else is added.
  for (const auto& c : s.carrier)
    if (c != "{x} for x in X") {
      ++s.added_points;
      s.added_point = c;
    }
  // The added point X lies in every nonempty diamond-open set, so it is the
  // top of the specialization order; every irreducible closed set of the
  // reflection is then the closure of {x} or of the top.
  s.added_is_top = s.added_point == "X";
  s.sober = s.added_is_top;
  s.compact = true;  // every open cover of X has a finite subcover
  s.equals_sobrification = s.carrier == cofinite_reflection_carrier(x, false, caps);
  return s;
}

/// X^w = P_H(WD(X)) with eta(x) = closure{x}.
inline Reflection wf_reflection(const Space& x, const Caps& caps = {}) {
  if (x.is_cofinite()) {
    Reflection r{x, {}, {}, symbolic_reflection(x, true, caps)};
    return r;
  }
  Reflection r{x, hoare_wd(x.poset(), caps), {}, std::nullopt};
  r.eta = eta(r.reflected);
  return r;
}

// ---------------------------------------------------------------------------
// Universal property.

struct FactorReport {
  Map f_star;  // point of the reflection -> point of Y
  bool commutes = false;
  bool continuous = false;
  bool unique = false;
  bool uniqueness_bounded = false;
  std::size_t maps_checked = 0;
  std::string witness;
  bool ok() const { return commutes && continuous && (unique || uniqueness_bounded); }
};

/// The unique continuous f* on X^w with f* o eta = f, for Y well-filtered.
inline FactorReport factorize(const Reflection& r, const FinPoset& y, const Map& f, const Caps& caps = {}) {
  if (r.is_symbolic()) throw UnsupportedOperation("factorization is restricted to finite spaces");
  const FinPoset& x = r.original.poset();
  if (!is_well_filtered(y, caps).value) throw PreconditionError("target space is not well-filtered");
  if (!is_monotone(x, y, f)) throw PreconditionError("map is not continuous");
  FactorReport rep;
  const auto& ps = r.reflected;
  rep.f_star.resize(ps.carrier.size());
  for (std::size_t i = 0; i < ps.carrier.size(); ++i) {
    const Subset cl = y.down(image(f, ps.carrier[i]));
    std::optional<std::size_t> gen;
    for (std::size_t v = 0; v < y.size(); ++v)
      if (y.down(v) == cl) gen = v;
    if (!gen) {
      rep.witness = "closure of f(" + ps.carrier[i].str() + ") is not a point closure";
      return rep;
    }
    rep.f_star[i] = *gen;
  }
  rep.continuous = is_monotone(ps.space, y, rep.f_star);
  rep.commutes = true;
  for (std::size_t p = 0; p < x.size(); ++p)
    if (rep.f_star[r.eta[p]] != f[p]) {
      rep.commutes = false;
      rep.witness = "f* o eta differs from f at " + std::to_string(p);
    }
  try {
    std::size_t matching = 0;
    for (const Map& g : continuous_maps(ps.space, y, caps)) {
      ++rep.maps_checked;
      bool same = true;
      for (std::size_t p = 0; p < x.size() && same; ++p) same = g[r.eta[p]] == f[p];
      if (same) {
        ++matching;
        if (g != rep.f_star) rep.witness = "a second continuous map agrees with f on eta(X)";
      }
    }
    rep.unique = matching == 1;
  } catch (const CapExceeded&) {
    rep.uniqueness_bounded = true;
  }
  return rep;
}

/// f^w(A) = closure f(A) between the reflections, as indices; throws when the
/// square f^w o eta_X = eta_Y o f fails.
inline Map functor_action(const Reflection& rx, const Reflection& ry, const Map& f) {
  if (rx.is_symbolic() || ry.is_symbolic()) throw UnsupportedOperation("functor action is restricted to finite spaces");
  const FinPoset& y = ry.original.poset();
  Map fw(rx.reflected.carrier.size());
  for (std::size_t i = 0; i < fw.size(); ++i) fw[i] = ry.reflected.index_of(y.down(image(f, rx.reflected.carrier[i])));
  for (std::size_t p = 0; p < rx.eta.size(); ++p)
    if (fw[rx.eta[p]] != ry.eta[f[p]]) throw Error("functor square fails at point " + std::to_string(p));
  return fw;
}

struct ProductReflectionReport {
  Map gamma;  // point of (prod X_i)^w -> point of prod X_i^w
  bool bijective = false;
  bool continuous = false;
  bool inverse_continuous = false;
  std::string witness;
  bool ok() const { return bijective && continuous && inverse_continuous; }
};

/// gamma(A) = (p_1(A), ..., p_n(A)) from (prod X_i)^w to prod (X_i^w).
inline ProductReflectionReport product_reflection_check(const std::vector<FinPoset>& xs, const Caps& caps = {}) {
  const Product pr = product(xs);
  const Reflection whole = wf_reflection(Space(pr.space), caps);
  std::vector<Reflection> parts;
  std::vector<FinPoset> part_spaces;
  for (const auto& x : xs) {
    parts.push_back(wf_reflection(Space(x), caps));
    part_spaces.push_back(parts.back().reflected.space);
  }
  const Product target = product(part_spaces);
  ProductReflectionReport rep;
  rep.gamma.resize(whole.reflected.carrier.size());
  for (std::size_t i = 0; i < rep.gamma.size(); ++i) {
    const Subset a = whole.reflected.carrier[i];
    std::vector<std::size_t> c(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const auto idx = parts[k].reflected.find(image(pr.projection(k), a));
      if (!idx) {
        rep.witness = "projection " + std::to_string(k) + " of " + a.str() + " is not in WD";
        return rep;
      }
      c[k] = *idx;
    }
    rep.gamma[i] = target.index_of(c);
  }
  rep.bijective = image(rep.gamma, whole.reflected.space.carrier()).size() == target.space.size() &&
                  rep.gamma.size() == target.space.size();
  rep.continuous = is_monotone(whole.reflected.space, target.space, rep.gamma);
  rep.inverse_continuous = rep.bijective;
  for (std::size_t i = 0; i < rep.gamma.size() && rep.inverse_continuous; ++i)
    for (std::size_t j = 0; j < rep.gamma.size(); ++j)
      if (target.space.leq(rep.gamma[i], rep.gamma[j]) && !whole.reflected.space.leq(i, j)) {
        rep.inverse_continuous = false;
        rep.witness = "inverse of gamma is not monotone";
        break;
      }
  if (!rep.bijective && rep.witness.empty()) rep.witness = "gamma is not a bijection";
  return rep;
}

}  // namespace soberkit

#endif  // SOBERKIT_REFLECT_HPP_
