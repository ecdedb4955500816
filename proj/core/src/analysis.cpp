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

#include "ifscrypt/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace ifscrypt {

namespace {

Word word_at(std::uint64_t index, unsigned nu, std::size_t len) { return base_digits(index, nu, len); }

// nu^len, saturated at `cap`.
std::uint64_t count_words(unsigned nu, std::size_t len, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (out > cap / nu) return cap;
    out *= nu;
  }
  return std::min(out, cap);
}

}  // namespace

BruteForceResult brute_force(unsigned nu, const std::function<bool(const Word&)>& matches,
                             const BruteForceOptions& options) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  BruteForceResult result;
  const unsigned jobs = std::max(1u, options.jobs);
  for (std::size_t len = options.min_len; len <= options.max_len; ++len) {
    const std::uint64_t remaining = options.budget - result.trials;
    const std::uint64_t full = count_words(nu, len, kNone - 1);
    const std::uint64_t count = std::min(full, remaining);

    std::atomic<std::uint64_t> best{kNone};
    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t idx = lo; idx < hi && idx < best.load(std::memory_order_relaxed); ++idx) {
        if (matches(word_at(idx, nu, len))) {
          std::uint64_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
      }
    };
    if (jobs == 1 || count < jobs) {
      scan(0, count);
    } else {
      std::vector<std::thread> workers;
      const std::uint64_t chunk = (count + jobs - 1) / jobs;
      for (unsigned t = 0; t < jobs; ++t) {
        const std::uint64_t lo = std::min(count, t * chunk);
        const std::uint64_t hi = std::min(count, lo + chunk);
        workers.emplace_back(scan, lo, hi);
      }
      for (auto& w : workers) w.join();
    }

    if (best != kNone) {
      result.trials += best + 1;
      result.word = word_at(best, nu, len);
      return result;
    }
    result.trials += count;
    if (count < full) return result;  // budget exhausted mid-length
  }
  result.exhausted = true;
  return result;
}

BruteForceResult brute_force(const AffinePublicKey& pk, const FieldElement& c, BruteForceOptions options) {
  if (pk.mode == AffineMode::kFixedLength) {
    options.min_len = options.max_len = pk.n;
  } else {
    options.max_len = std::min(options.max_len, pk.n);
  }
  // Padding is deterministic, so one terminator lookup serves every trial.
  const Symbol terminator = pk.mode == AffineMode::kPadded ? terminator_symbol(pk) : 0;
  return brute_force(
      pk.nu,
      [&](const Word& w) {
        if (pk.mode == AffineMode::kFixedLength) return evaluate(pk, w) == c;
        return evaluate(pk, pad(w, pk.n, terminator).joined()) == c;
      },
      options);
}

BruteForceResult brute_force(const ProjPublicKey& pk, const ModMatrix& c, BruteForceOptions options,
                             bool with_length) {
  if (with_length) {
    const std::size_t overhead = digit_count(pk.n, pk.nu) + 4 + 1;
    options.max_len = pk.n >= overhead ? std::min(options.max_len, pk.n - overhead) : 0;
    if (pk.n < overhead) options.min_len = 1;
  } else {
    options.min_len = std::max<std::size_t>(options.min_len, 1);
    options.max_len = std::min(options.max_len, pk.n);
  }
  return brute_force(
      pk.nu,
      [&](const Word& w) {
        return evaluate(pk, with_length ? frame_length(w, pk.n) : w) == c;
      },
      options);
}

// ---------------------------------------------------------------------------
// Cycles

std::uint64_t CycleDecomposition::step(std::uint64_t x) const { return (slope * x + intercept) % p; }

CycleDecomposition invariant_sets(const FieldAffineMap& map) {
  const Integer& p = map.slope.modulus();
  if (p > Integer(static_cast<unsigned long>(kMaxCycleModulus))) {
    throw Error(ErrorKind::kInvalidParameter, "cycle analysis is limited to p <= 10^9");
  }
  if (map.slope.value() == 0) throw Error(ErrorKind::kNotABijection, "slope is zero modulo p");

  CycleDecomposition out;
  out.p = p.get_ui();
  out.slope = map.slope.value().get_ui();
  out.intercept = map.intercept.value().get_ui();

  std::vector<bool> visited(out.p, false);
  for (std::uint64_t start = 0; start < out.p; ++start) {
    if (visited[start]) continue;
    std::uint64_t len = 0;
    for (std::uint64_t x = start; !visited[x]; x = out.step(x)) {
      visited[x] = true;
      ++len;
    }
    out.cycles.push_back({start, len});
  }
  return out;
}

IntersectionReport intersection_report(const CycleDecomposition& d0, const CycleDecomposition& d1) {
  if (d0.p != d1.p) throw Error(ErrorKind::kInvalidParameter, "decompositions over different fields");
  std::vector<std::uint32_t> owner(d0.p);
  for (std::uint32_t i = 0; i < d0.cycles.size(); ++i) {
    std::uint64_t x = d0.cycles[i].representative;
    for (std::uint64_t k = 0; k < d0.cycles[i].length; ++k, x = d0.step(x)) owner[x] = i;
  }

  IntersectionReport report;
  report.sizes.assign(d0.cycles.size(), std::vector<std::uint64_t>(d1.cycles.size(), 0));
  for (std::size_t j = 0; j < d1.cycles.size(); ++j) {
    std::uint64_t x = d1.cycles[j].representative;
    for (std::uint64_t k = 0; k < d1.cycles[j].length; ++k, x = d1.step(x)) ++report.sizes[owner[x]][j];
  }

  bool any_large = false;
  bool all_meet = true;
  for (std::size_t i = 0; i < d0.cycles.size(); ++i) {
    if (d0.cycles[i].length < 2) continue;
    for (std::size_t j = 0; j < d1.cycles.size(); ++j) {
      if (d1.cycles[j].length < 2) continue;
      any_large = true;
      if (report.sizes[i][j] == 0) all_meet = false;
    }
  }
  report.separation_impossible = any_large && all_meet;
  return report;
}

}  // namespace ifscrypt
