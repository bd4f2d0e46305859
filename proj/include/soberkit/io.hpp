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

#ifndef SOBERKIT_IO_HPP_
#define SOBERKIT_IO_HPP_

#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "soberkit/error.hpp"
#include "soberkit/poset.hpp"
#include "soberkit/space.hpp"
#include "soberkit/subset.hpp"

namespace soberkit {

// Space files.
//
//   poset <n>       header, n points numbered 0..n-1
//   i < j           cover pair, one per line
//   cofinite [name] header for the cofinite space; no body
//
// '#' starts a comment; blank lines and extra whitespace are ignored.

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::optional<std::size_t> parse_index(const std::string& s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

/// Accepts "i < j", "i<j", "i <j" and "i< j".
inline std::optional<std::pair<std::string, std::string>> split_cover(const std::vector<std::string>& t) {
  std::string joined;
  for (const auto& s : t) joined += s;
  const auto lt = joined.find('<');
  if (lt == std::string::npos || joined.find('<', lt + 1) != std::string::npos) return std::nullopt;
  return std::make_pair(joined.substr(0, lt), joined.substr(lt + 1));
}

}  // namespace detail

inline Space parse_space(std::istream& in) {
  std::optional<std::size_t> n;
  std::optional<std::string> cofinite;
  std::vector<Subset> down;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto t = detail::tokens(line);
    if (t.empty()) continue;
    if (!n && !cofinite) {
      if (t[0] == "poset") {
        if (t.size() != 2) throw ParseError(lineno, "expected 'poset <n>'");
        const auto v = detail::parse_index(t[1]);
        if (!v) throw ParseError(lineno, "bad point count '" + t[1] + "'");
        if (*v > kMaxCarrier) throw ParseError(lineno, "more than " + std::to_string(kMaxCarrier) + " points");
        n = *v;
        down.resize(*v);
        for (std::size_t x = 0; x < *v; ++x) down[x] = Subset::singleton(x);
      } else if (t[0] == "cofinite") {
        if (t.size() > 2) throw ParseError(lineno, "expected 'cofinite [name]'");
        cofinite = t.size() == 2 ? t[1] : "N";
      } else {
        throw ParseError(lineno, "unknown header '" + t[0] + "'");
      }
      continue;
    }
    if (t[0] == "poset" || t[0] == "cofinite") throw ParseError(lineno, "duplicate header");
    if (cofinite) throw ParseError(lineno, "cofinite space takes no body");
    const auto parts = detail::split_cover(t);
    if (!parts) throw ParseError(lineno, "expected 'i < j'");
    const auto x = detail::parse_index(parts->first);
    const auto y = detail::parse_index(parts->second);
    if (!x || !y) throw ParseError(lineno, "bad index");
    if (*x >= *n || *y >= *n) throw ParseError(lineno, "index out of range for poset " + std::to_string(*n));
    if (!seen.insert({*x, *y}).second) throw ParseError(lineno, "duplicate cover " + parts->first + " < " + parts->second);
    // x < y closes a cycle when y is already below x.
    if (*x == *y || down[*x].contains(*y)) throw ParseError(lineno, "cycle through " + parts->first + " and " + parts->second);
    for (std::size_t z = 0; z < *n; ++z)
      if (down[z].contains(*y)) down[z] |= down[*x];
    covers.emplace_back(*x, *y);
  }
  if (cofinite) return Space::cofinite(*cofinite);
  if (!n) throw ParseError(lineno, "missing header");
  return Space(FinPoset::from_covers(*n, covers));
}

inline Space parse_space(const std::string& text) {
  std::istringstream in(text);
  return parse_space(in);
}

inline Space parse_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  return parse_space(in);
}

/// Header plus the cover relation, in ascending pair order.
inline std::string serialize_space(const Space& x) {
  if (x.is_cofinite()) return "cofinite " + x.cofinite_carrier().name + "\n";
  const FinPoset& p = x.poset();
  std::string out = "poset " + std::to_string(p.size()) + "\n";
  for (auto [a, b] : p.covers()) out += std::to_string(a) + " < " + std::to_string(b) + "\n";
  return out;
}

}  // namespace soberkit

#endif  // SOBERKIT_IO_HPP_
