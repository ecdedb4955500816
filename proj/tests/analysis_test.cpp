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

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "ifscrypt/analysis.hpp"

namespace ifscrypt {
namespace {

using testing::interval_2x2;
using testing::triadic;
using testing::triadic_19687;

FieldAffineMap field_map(long slope, long intercept, long p) {
  return {FieldElement(slope, p), FieldElement(intercept, p)};
}

TEST(CycleTest, PublishedKey) {
  const AffineKeyPair keys = triadic_19687();
  for (const FieldAffineMap& g : keys.pub.g) {
    const CycleDecomposition d = invariant_sets(g);
    std::multiset<std::uint64_t> lengths;
    std::uint64_t total = 0;
    for (const Cycle& c : d.cycles) {
      lengths.insert(c.length);
      total += c.length;
    }
    EXPECT_EQ(lengths, (std::multiset<std::uint64_t>{1, 6562, 6562, 6562}));
    EXPECT_EQ(total, 19687u);
    for (std::size_t i = 1; i < d.cycles.size(); ++i) {
      EXPECT_LT(d.cycles[i - 1].representative, d.cycles[i].representative);
    }
  }
}

TEST(CycleTest, RepresentativeIsTheSmallestElement) {
  const CycleDecomposition d = invariant_sets(field_map(3, 1, 31));
  for (const Cycle& c : d.cycles) {
    std::uint64_t x = c.representative;
    for (std::uint64_t i = 0; i < c.length; ++i) {
      EXPECT_GE(x, c.representative);
      x = d.step(x);
    }
    EXPECT_EQ(x, c.representative);
  }
}

TEST(CycleTest, SmallExamples) {
  // x -> x + 1 is one big cycle; x -> -x pairs up nonzero elements.
  EXPECT_EQ(invariant_sets(field_map(1, 1, 7)).cycles.size(), 1u);
  const CycleDecomposition neg = invariant_sets(field_map(6, 0, 7));
  ASSERT_EQ(neg.cycles.size(), 4u);
  EXPECT_EQ(neg.cycles[0].length, 1u);
  EXPECT_EQ(neg.cycles[1].length, 2u);
}

TEST(CycleTest, Errors) {
  try {
    invariant_sets(field_map(0, 3, 7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotABijection);
  }
  try {
    invariant_sets({FieldElement(2, Integer("1000000007")), FieldElement(0, Integer("1000000007"))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameter);
  }
}

TEST(IntersectionTest, PublishedKeyTable) {
  const AffineKeyPair keys = triadic_19687();
  const IntersectionReport r = intersection_report(invariant_sets(keys.pub.g[0]), invariant_sets(keys.pub.g[1]));
  const std::vector<std::vector<std::uint64_t>> expected{
      {2188, 2160, 2214, 0}, {2214, 2188, 2160, 0}, {2160, 2214, 2187, 1}, {0, 0, 1, 0}};
  EXPECT_EQ(r.sizes, expected);
  EXPECT_TRUE(r.separation_impossible);
}

TEST(IntersectionTest, DisjointOrbitsAreReported) {
  // x -> -x and x -> x share every orbit as a union of singletons and pairs;
  // the identity has only singletons, so no verdict is possible.
  const IntersectionReport r = intersection_report(invariant_sets(field_map(6, 0, 7)), invariant_sets(field_map(1, 0, 7)));
  EXPECT_FALSE(r.separation_impossible);
}

TEST(BruteForceTest, FindsThePublishedMessage) {
  const AffineKeyPair keys = triadic_19687();
  const Word w = Word::parse("10000000", 2);
  BruteForceOptions options;
  options.max_len = 8;
  const BruteForceResult r = brute_force(keys.pub, encrypt(keys.pub, w), options);
  ASSERT_TRUE(r.word.has_value());
  EXPECT_EQ(*r.word, w);
  EXPECT_EQ(r.trials, 129u);
}

TEST(BruteForceTest, TrialsDoNotDependOnJobCount) {
  Rng rng(80);
  const auto sys = triadic();
  const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, 10, rng);
  const Word w = Word::parse("0110101", 2);
  const FieldElement c = encrypt(keys.pub, w);
  std::optional<BruteForceResult> first;
  for (unsigned jobs : {1u, 2u, 3u, 7u}) {
    BruteForceOptions options;
    options.max_len = 10;
    options.jobs = jobs;
    const BruteForceResult r = brute_force(keys.pub, c, options);
    ASSERT_TRUE(r.word.has_value());
    EXPECT_EQ(*r.word, w);
    // 2 + 4 + ... + 64 shorter words, then rank 0b0110101 = 53.
    EXPECT_EQ(r.trials, 126u + 53u + 1u);
    if (first) EXPECT_EQ(r.trials, first->trials);
    first = r;
  }
}

TEST(BruteForceTest, BudgetAndExhaustion) {
  const auto never = [](const Word&) { return false; };
  BruteForceOptions options;
  options.max_len = 4;
  BruteForceResult r = brute_force(2, never, options);
  EXPECT_FALSE(r.word.has_value());
  EXPECT_TRUE(r.exhausted);
  EXPECT_EQ(r.trials, 30u);

  options.budget = 10;
  r = brute_force(2, never, options);
  EXPECT_FALSE(r.exhausted);
  EXPECT_EQ(r.trials, 10u);
}

TEST(BruteForceTest, ProjectiveKey) {
  const auto sys = interval_2x2();
  Rng rng(81);
  const ProjKeyPair keys = proj_keygen(sys.a, sys.sep, 8, rng);
  const Word w = Word::parse("11010", 2);
  BruteForceOptions options;
  options.max_len = 8;
  options.jobs = 2;
  const BruteForceResult r = brute_force(keys.pub, encrypt(keys.pub, w), options);
  ASSERT_TRUE(r.word.has_value());
  EXPECT_EQ(*r.word, w);
  EXPECT_EQ(r.trials, 30u + 26u + 1u);
}

}  // namespace
}  // namespace ifscrypt
