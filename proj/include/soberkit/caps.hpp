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

#ifndef SOBERKIT_CAPS_HPP_
#define SOBERKIT_CAPS_HPP_

#include <cstddef>

namespace soberkit {

/// Enumeration limits. All exhaustive sweeps consult one of these before
/// running, so a large instance fails fast with CapExceeded instead of hanging.
struct Caps {
  /// Largest carrier accepted by enumerate_families.
  std::size_t carrier = 12;
  /// Largest carrier of a materialized power space (number of subsets).
  std::size_t powerspace = 64;
  /// Largest number of down-sets / up-sets / families produced by one sweep.
  std::size_t sets = std::size_t{1} << 18;
  /// Largest carrier for which all 2^n subsets are swept.
  std::size_t subset_sweep = 16;
  /// Families of compact saturated sets are swept exhaustively (all 2^|K|
  /// subfamilies) only when |K(X)| is at most this; otherwise a bounded sweep
  /// is used and reported as such.
  std::size_t family_bits = 10;
  /// Upper bound on |Y|^|X| for continuous-map enumeration.
  std::size_t maps = std::size_t{1} << 20;
  /// Largest target space used to instantiate "for every continuous map"
  /// quantifiers.
  std::size_t target_size = 3;
  /// Largest lattice on which way-below and Scott-openness are decided by
  /// sweeping directed subsets.
  std::size_t lattice_sweep = 20;
};

}  // namespace soberkit

#endif  // SOBERKIT_CAPS_HPP_
