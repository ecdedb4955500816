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

#include <vector>

#include "ifscrypt/ifs.hpp"
#include "ifscrypt/numeric.hpp"

namespace ifscrypt {
namespace {

TEST(ParseTest, IntegersAndRationals) {
  EXPECT_EQ(parse_integer("-42"), -42);
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-2/-3"), make_rational(2, 3));
  EXPECT_EQ(to_string(make_rational(4, -6)), "-2/3");
  EXPECT_THROW(parse_integer("12a"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(RationalTest, StoredReducedWithPositiveDenominator) {
  const Rational r = make_rational(10, -4);
  EXPECT_EQ(r.get_num(), -5);
  EXPECT_EQ(r.get_den(), 2);
}

TEST(IsInRpTest, Examples) {
  EXPECT_TRUE(is_in_rp(make_rational(2, 3), 19687));
  EXPECT_FALSE(is_in_rp(make_rational(1, 19687), 19687));
  EXPECT_TRUE(is_in_rp(make_rational(8026, 15296), 19687));
}

TEST(IsInRpTest, CompositeModulusIsRejected) {
  try {
    is_in_rp(make_rational(1, 2), 15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidModulus);
  }
}

TEST(PsiTest, Examples) {
  EXPECT_EQ(psi(make_rational(1, 3), 19687).value(), 13125);
  EXPECT_EQ(psi(Rational(5), 7).value(), 5);
  EXPECT_EQ(psi(make_rational(2, 3), 7).value(), 3);
}

TEST(PsiTest, DenominatorDivisibleByPIsNotInRp) {
  try {
    psi(make_rational(1, 14), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotInRp);
  }
}

TEST(PsiTest, CommutesWithAffineComposition) {
  Rng rng(11);
  const Integer p = 19687;
  for (int i = 0; i < 500; ++i) {
    const auto rnd = [&] { return make_rational(random_between(-50, 50, rng), random_between(1, 60, rng)); };
    AffineMap a{rnd(), rnd()};
    const AffineMap b{rnd(), rnd()};
    if (a.slope == 0) a.slope = 1;
    const FieldAffineMap pa{psi(a.slope, p), psi(a.intercept, p)};
    const FieldAffineMap pb{psi(b.slope, p), psi(b.intercept, p)};
    const AffineMap ab = a * b;
    const FieldElement x(random_below(p, rng), p);
    EXPECT_EQ((pa * pb)(x), psi(ab.slope, p) * x + psi(ab.intercept, p));
  }
}

TEST(RemPTest, Examples) {
  EXPECT_EQ(rem_p(FieldElement(6, 7)), 6);
  EXPECT_EQ(rem_p(FieldElement(0, 19687)), 0);
  EXPECT_EQ(rem_p(psi(Rational(-1), 7)), 6);
}

TEST(RemPTest, InvertsReduction) {
  for (int m = 0; m < 97; ++m) EXPECT_EQ(rem_p(FieldElement(m, 97)), m);
}

TEST(ModsTest, Examples) {
  EXPECT_EQ(mods(19686, 19687), -1);
  EXPECT_EQ(mods(8750, 19687), 8750);
  EXPECT_EQ(mods(13125, 19687), -6562);
}

TEST(ModsTest, SymmetricRange) {
  for (long a = -300; a <= 300; ++a) {
    const Integer b = mods(a, 19);
    EXPECT_LT(2 * abs(b), 19);
    EXPECT_EQ((Integer(a) - b) % 19, 0);
  }
}

TEST(ModInverseTest, Examples) {
  EXPECT_EQ(mod_inverse(3, 19687), 13125);
  EXPECT_EQ(mod_inverse(1, 7), 1);
  EXPECT_EQ(mod_inverse(15296, 19687), 12491);
  EXPECT_EQ(Integer(15296 * 12491) % 19687, 1);
}

TEST(ModInverseTest, ZeroHasNoInverse) {
  try {
    mod_inverse(19687 * 2, 19687);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoInverse);
  }
}

TEST(ModInverseTest, RandomSample) {
  Rng rng(12);
  const Integer p = 1000003;
  for (int i = 0; i < 1000; ++i) {
    const Integer a = random_between(1, p - 1, rng);
    EXPECT_EQ(a * mod_inverse(a, p) % p, 1);
  }
}

TEST(FieldElementTest, Arithmetic) {
  const FieldElement a(5, 7);
  const FieldElement b(4, 7);
  EXPECT_EQ((a + b).value(), 2);
  EXPECT_EQ((a - b).value(), 1);
  EXPECT_EQ((b - a).value(), 6);
  EXPECT_EQ((a * b).value(), 6);
  EXPECT_EQ((a / b * b), a);
  EXPECT_EQ((-a).value(), 2);
  EXPECT_EQ(FieldElement(-1, 7).value(), 6);
  EXPECT_THROW(a + FieldElement(1, 11), Error);
  EXPECT_THROW(FieldElement(0, 7).inverse(), Error);
}

TEST(PrimeTest, DeterministicExamples) {
  EXPECT_EQ(gen_prime_above(6561), 6563);
  EXPECT_EQ(gen_prime_above(2), 3);
  EXPECT_TRUE(is_probable_prime(19687));
  EXPECT_FALSE(is_probable_prime(6561));
}

TEST(PrimeTest, AgreesWithSieveBelowOneMillion) {
  constexpr std::size_t kLimit = 1000000;
  std::vector<bool> composite(kLimit, false);
  composite[0] = composite[1] = true;
  for (std::size_t i = 2; i * i < kLimit; ++i) {
    if (!composite[i]) {
      for (std::size_t j = i * i; j < kLimit; j += i) composite[j] = true;
    }
  }
  std::size_t disagreements = 0;
  for (std::size_t n = 0; n < kLimit; ++n) {
    if (is_probable_prime(Integer(static_cast<unsigned long>(n))) == composite[n]) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0u);
}

TEST(PrimeTest, LargeKnownValues) {
  EXPECT_TRUE(is_probable_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
  EXPECT_FALSE(is_probable_prime(Integer("3317044064679887385961981")));  // strong pseudoprime to bases 2..37
  EXPECT_FALSE(is_probable_prime(Integer("170141183460469231731687303715884105727") * 3));
}

TEST(PrimeTest, RandomisedModeStaysInRange) {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const Integer bound = random_between(10, 100000, rng);
    const Integer p = gen_prime_above(bound, rng);
    EXPECT_GT(p, bound);
    EXPECT_LE(p, 2 * bound);
    EXPECT_TRUE(is_probable_prime(p));
  }
}

TEST(PrimeTest, SameSeedSamePrime) {
  Rng a(99);
  Rng b(99);
  EXPECT_EQ(gen_prime_above(Integer(1) << 80, a), gen_prime_above(Integer(1) << 80, b));
}

}  // namespace
}  // namespace ifscrypt
