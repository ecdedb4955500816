// Copyright 2026 The ifscrypt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Cryptanalysis experiments: exhaustive message search and the cycle
// structure of the public affine maps over F_p.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ifscrypt/affine.hpp"
#include "ifscrypt/ifs.hpp"
#include "ifscrypt/projective.hpp"

namespace ifscrypt {

struct BruteForceOptions {
  std::size_t min_len = 1;
  std::size_t max_len = 0;
  std::uint64_t budget = std::uint64_t{1} << 26;  // candidates
  unsigned jobs = 1;
};

struct BruteForceResult {
  std::optional<Word> word;
  // Rank of the hit in length-then-lexicographic order, or the number of
  // candidates examined when nothing matched.
  std::uint64_t trials = 0;
  bool exhausted = false;  // every candidate up to max_len was examined
};

/// Enumerates words by length, then lexicographically, and returns the first
/// one accepted by `matches`. Each length is split into `jobs` contiguous
/// index ranges searched in parallel; `matches` must be thread-safe.
BruteForceResult brute_force(unsigned nu, const std::function<bool(const Word&)>& matches,
                             const BruteForceOptions& options);

BruteForceResult brute_force(const AffinePublicKey& pk, const FieldElement& c, BruteForceOptions options);
BruteForceResult brute_force(const ProjPublicKey& pk, const ModMatrix& c, BruteForceOptions options,
                             bool with_length = false);

struct Cycle {
  std::uint64_t representative = 0;  // smallest element
  std::uint64_t length = 0;
};

/// Cycles of x -> slope * x + intercept on F_p, ordered by representative.
/// For a bijection of a finite set these are its minimal invariant sets.
struct CycleDecomposition {
  std::uint64_t p = 0;
  std::uint64_t slope = 0;
  std::uint64_t intercept = 0;
  std::vector<Cycle> cycles;

  std::uint64_t step(std::uint64_t x) const;
};

inline constexpr std::uint64_t kMaxCycleModulus = 1'000'000'000;

/// Throws kNotABijection for a zero slope and kInvalidParameter for p above
/// kMaxCycleModulus.
CycleDecomposition invariant_sets(const FieldAffineMap& map);

struct IntersectionReport {
  std::vector<std::vector<std::uint64_t>> sizes;  // sizes[i][j] = |E_{0,i} & E_{1,j}|
  // Every non-singleton cycle of one map meets every non-singleton cycle of
  // the other.
  bool separation_impossible = false;
};

IntersectionReport intersection_report(const CycleDecomposition& d0, const CycleDecomposition& d1);

}  // namespace ifscrypt
