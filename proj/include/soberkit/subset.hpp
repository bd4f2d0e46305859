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

#ifndef SOBERKIT_SUBSET_HPP_
#define SOBERKIT_SUBSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "soberkit/error.hpp"

namespace soberkit {

/// Largest carrier a finite structure may have. Subsets are single machine
/// words.
inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a finite carrier {0, ..., n-1}, stored as its characteristic
/// word (bit i set iff element i belongs to the set).
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  Subset(std::initializer_list<std::size_t> elems) {
    for (auto e : elems) insert(e);
  }

  static Subset of(const std::vector<std::size_t>& elems) {
    Subset s;
    for (auto e : elems) s.insert(e);
    return s;
  }

  /// The whole carrier {0, ..., n-1}.
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  static constexpr Subset singleton(std::size_t e) { return Subset(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t e) const { return e < 64 && ((bits_ >> e) & 1U) != 0; }

  void insert(std::size_t e) {
    if (e >= kMaxCarrier) throw ConstructionError("element index " + std::to_string(e) + " exceeds carrier limit");
    bits_ |= std::uint64_t{1} << e;
  }
  void erase(std::size_t e) {
    if (e < 64) bits_ &= ~(std::uint64_t{1} << e);
  }

  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  /// True iff every element lies below `n`.
  constexpr bool within(std::size_t n) const { return subset_of(full(n)); }

  /// Smallest element; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset operator^(Subset o) const { return Subset(bits_ ^ o.bits_); }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  /// Complement relative to the carrier {0, ..., n-1}.
  constexpr Subset complement(std::size_t n) const { return full(n) - *this; }

  constexpr bool operator==(const Subset&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t e) { out.push_back(e); });
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    bool first_elem = true;
    for_each([&](std::size_t e) {
      if (!first_elem) os << ',';
      os << e;
      first_elem = false;
    });
    os << '}';
    return os.str();
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on characteristic vectors (b_0, b_1, ...): at the first
/// index where the vectors differ, the set without that element is smaller.
inline bool lex_less(Subset a, Subset b) {
  const Subset diff = a ^ b;
  if (diff.empty()) return false;
  return !a.contains(diff.first());
}

/// Canonical storage order for families of subsets: ascending characteristic
/// word.
struct MaskLess {
  bool operator()(Subset a, Subset b) const { return a.bits() < b.bits(); }
};

inline std::ostream& operator<<(std::ostream& os, Subset s) { return os << s.str(); }

inline std::string family_str(const std::vector<Subset>& fam) {
  std::string out = "{";
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i) out += ',';
    out += fam[i].str();
  }
  return out + "}";
}

/// Visit every subset of `s` (including the empty set and `s` itself).
template <class F>
void for_each_subset_of(Subset s, F&& f) {
  std::uint64_t m = s.bits();
  std::uint64_t sub = m;
  while (true) {
    f(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace soberkit

template <>
struct std::hash<soberkit::Subset> {
  std::size_t operator()(soberkit::Subset s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

#endif  // SOBERKIT_SUBSET_HPP_
