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

#include "fixtures.hpp"
#include "ifscrypt/affine.hpp"

namespace ifscrypt {
namespace {

using testing::random_affine_system;
using testing::random_word;
using testing::triadic;
using testing::triadic_19687;

Word w2(const char* digits) { return Word::parse(digits, 2); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kParseError;
}

TEST(AffineKeygenTest, PublishedCoefficients) {
  const AffineKeyPair keys = triadic_19687();
  EXPECT_EQ(keys.pub.g[0].slope.value(), 13125);
  EXPECT_EQ(keys.pub.g[0].intercept.value(), 8750);
  EXPECT_EQ(keys.pub.g[1].slope.value(), 13125);
  EXPECT_EQ(keys.pub.g[1].intercept.value(), 10515);
}

TEST(AffineKeygenTest, GammaIsPreimageOfAlpha) {
  const AffineKeyPair keys = triadic_19687();
  EXPECT_EQ(keys.pub.gamma.value(), 13125);
  EXPECT_EQ(FieldElement(15296, 19687) * keys.pub.gamma + FieldElement(8026, 19687), FieldElement(0, 19687));
}

TEST(AffineKeygenTest, PublishedConjugatorIsNotCoprime) {
  // gcd(15296, 8026) = 2, so the strict reading of "coprime" rejects it.
  const auto sys = triadic();
  AffineKeygenOptions options;
  options.mode = AffineMode::kFixedLength;
  EXPECT_EQ(kind_of([&] { affine_keygen(sys.f, sys.sep, 8, ExplicitAffineParams{19687, 15296, 8026}, options); }),
            ErrorKind::kInvalidParameter);
}

TEST(AffineKeygenTest, IdentityConjugationLeavesMapsUnscrambled) {
  const auto sys = triadic();
  AffineKeygenOptions options;
  options.mode = AffineMode::kFixedLength;
  options.strict_conjugator = false;
  const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, 8, ExplicitAffineParams{19687, 1, 0}, options);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_EQ(keys.pub.g[j].slope, psi(sys.f[j].slope, 19687));
    EXPECT_EQ(keys.pub.g[j].intercept, psi(sys.f[j].intercept, 19687));
  }
  EXPECT_EQ(keys.pub.gamma.value(), 0);
}

TEST(AffineKeygenTest, ParameterErrors) {
  const auto sys = triadic();
  AffineKeygenOptions fixed;
  fixed.mode = AffineMode::kFixedLength;
  fixed.strict_conjugator = false;
  const auto keygen = [&](Integer p, Integer a, Integer b, AffineKeygenOptions o) {
    return [=] { affine_keygen(sys.f, sys.sep, 8, ExplicitAffineParams{p, a, b}, o); };
  };
  EXPECT_EQ(kind_of(keygen(6553, 2, 3, fixed)), ErrorKind::kInvalidParameter);    // below 3^8
  EXPECT_EQ(kind_of(keygen(19689, 2, 3, fixed)), ErrorKind::kInvalidParameter);   // composite
  EXPECT_EQ(kind_of(keygen(19687, 0, 3, fixed)), ErrorKind::kInvalidParameter);   // a = 0
  AffineKeygenOptions strict;
  strict.mode = AffineMode::kFixedLength;
  EXPECT_EQ(kind_of(keygen(19687, 5, 5, strict)), ErrorKind::kInvalidParameter);  // a = b
  EXPECT_EQ(kind_of(keygen(19687, 1, 5, strict)), ErrorKind::kInvalidParameter);  // a < 2

  const std::vector<AffineMap> overlapping{{make_rational(1, 2), 0}, {make_rational(1, 2), make_rational(1, 4)}};
  const auto sep = IntervalSeparation::from_maps(overlapping, 0, 1, true);
  Rng rng(1);
  EXPECT_EQ(kind_of([&] { affine_keygen(overlapping, sep, 4, rng); }), ErrorKind::kInvalidSystem);
}

TEST(AffineKeygenTest, RandomKeysRespectBound) {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto sys = random_affine_system(rng);
    const std::size_t n = 1 + rng() % 10;
    const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, n, rng);
    EXPECT_GT(Rational(keys.sec.p), affine_prime_bound(sys.f, sys.sep, keys.sec.lift_exponent));
    EXPECT_TRUE(is_probable_prime(keys.sec.p));
    EXPECT_GE(keys.sec.a, 2);
    EXPECT_GE(keys.sec.b, 2);
    EXPECT_NE(keys.sec.a, keys.sec.b);
  }
}

TEST(AffineKeygenTest, SameSeedSameKey) {
  const auto sys = triadic();
  Rng r1(5);
  Rng r2(5);
  const AffineKeyPair k1 = affine_keygen(sys.f, sys.sep, 8, r1);
  const AffineKeyPair k2 = affine_keygen(sys.f, sys.sep, 8, r2);
  EXPECT_EQ(k1.pub.p, k2.pub.p);
  EXPECT_EQ(k1.pub.g, k2.pub.g);
}

TEST(PadTest, Examples) {
  const PaddedWord a = pad(w2("101"), 8, 1);
  EXPECT_EQ(a.body.str(), "101");
  EXPECT_EQ(a.length_field.str(), "0011");
  EXPECT_EQ(a.joined().str(), "10100111");
  EXPECT_EQ(pad(Word(2), 8, 1).length_field.str(), "0000");
  EXPECT_EQ(pad(w2("11111111"), 8, 1).length_field.str(), "1000");
  EXPECT_EQ(kind_of([] { pad(w2("000000000"), 8, 1); }), ErrorKind::kMessageTooLong);
}

TEST(UnpadTest, Examples) {
  EXPECT_EQ(unpad(w2("10100111"), 8, 1), w2("101"));
  EXPECT_EQ(unpad(w2("00001"), 8, 1), Word(2));
  EXPECT_EQ(unpad(w2("10100110"), 8, 1), std::nullopt);  // wrong terminator
  EXPECT_EQ(unpad(w2("10101001"), 8, 1), std::nullopt);  // field says 4, body has 3
  EXPECT_EQ(unpad(w2("0001"), 8, 1), std::nullopt);      // shorter than field plus terminator
}

TEST(UnpadTest, InvertsPad) {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const unsigned nu = 2 + rng() % 4;
    const std::size_t n = 1 + rng() % 12;
    const Word w = random_word(rng() % (n + 1), nu, rng);
    const Symbol t = static_cast<Symbol>(rng() % nu);
    EXPECT_EQ(unpad(pad(w, n, t).joined(), n, t), w);
  }
}

TEST(TerminatorTest, SkipsMapsFixingAlpha) {
  const AffineKeyPair keys = triadic_19687();
  EXPECT_EQ(terminator_symbol(keys.sec), Symbol{1});  // f_0(0) = 0
  EXPECT_EQ(terminator_symbol(keys.pub), Symbol{1});
}

TEST(AffineEncryptTest, FixedLengthExamples) {
  const AffineKeyPair keys = triadic_19687();
  EXPECT_EQ(encrypt(keys.pub, w2("00000000")), keys.pub.gamma);

  // Oracle: Phi_{f,10000000}(0) = f_1(0) = 2/3, then c = psi(u^-1(2/3)).
  const auto sys = triadic();
  const Rational y = compose(std::span<const AffineMap>(sys.f), w2("10000000"))(0);
  EXPECT_EQ(y, make_rational(2, 3));
  const FieldElement expected = psi((y - 8026) / 15296, 19687);
  EXPECT_EQ(encrypt(keys.pub, w2("10000000")), expected);
  EXPECT_EQ(expected.value(), 14890);
}

TEST(AffineEncryptTest, FixedLengthRequiresExactLength) {
  const AffineKeyPair keys = triadic_19687();
  EXPECT_EQ(kind_of([&] { encrypt(keys.pub, w2("101")); }), ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([&] { encrypt(keys.pub, w2("101010101")); }), ErrorKind::kMessageTooLong);
}

TEST(AffineEncryptTest, EmptyMessageEncryptsThePadding) {
  const auto sys = triadic();
  Rng rng(33);
  const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, 8, rng);
  EXPECT_EQ(encrypt(keys.pub, Word(2)), evaluate(keys.pub, w2("00001")));
  EXPECT_EQ(decrypt(keys.sec, encrypt(keys.pub, Word(2))), Word(2));
}

TEST(AffineEncryptTest, Deterministic) {
  const auto sys = triadic();
  Rng rng(34);
  const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, 8, rng);
  EXPECT_EQ(encrypt(keys.pub, w2("0110")), encrypt(keys.pub, w2("0110")));
}

TEST(AffineDecryptTest, FixedLengthExamples) {
  const AffineKeyPair keys = triadic_19687();
  EXPECT_EQ(decrypt(keys.sec, keys.pub.gamma), w2("00000000"));
  EXPECT_EQ(decrypt(keys.sec, FieldElement(14890, 19687)), w2("10000000"));
  for (std::uint64_t rank = 0; rank < 256; ++rank) {
    const Word w = base_digits(rank, 2, 8);
    EXPECT_EQ(decrypt(keys.sec, encrypt(keys.pub, w)), w);
  }
}

TEST(AffineDecryptTest, RoundTripWithPadding) {
  const auto sys = triadic();
  Rng rng(35);
  const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, 8, rng);
  EXPECT_EQ(decrypt(keys.sec, encrypt(keys.pub, w2("101"))), w2("101"));
  // Without a terminator "1" and "10" would pad to words with the same image.
  EXPECT_NE(encrypt(keys.pub, w2("1")), encrypt(keys.pub, w2("10")));
  EXPECT_EQ(decrypt(keys.sec, encrypt(keys.pub, w2("10"))), w2("10"));
}

TEST(AffineDecryptTest, RandomRoundTrips) {
  Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    const auto sys = random_affine_system(rng);
    const std::size_t n = 1 + rng() % 10;
    const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, n, rng);
    const Word w = random_word(rng() % (n + 1), keys.pub.nu, rng);
    EXPECT_EQ(decrypt(keys.sec, encrypt(keys.pub, w)), w);
  }
}

TEST(AffineDecryptTest, SingleMapTamperingIsRejected) {
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    const auto sys = random_affine_system(rng);
    const std::size_t n = 1 + rng() % 10;
    const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, n, rng);
    const FieldElement c = encrypt(keys.pub, random_word(rng() % (n + 1), keys.pub.nu, rng));
    for (const FieldAffineMap& g : keys.pub.g) {
      EXPECT_EQ(kind_of([&] { decrypt(keys.sec, g(c)); }), ErrorKind::kTamperedOrCorrupt);
    }
  }
}

TEST(AffineDecryptTest, PublishedTamperExampleIsCaught) {
  const auto sys = triadic();
  Rng rng(38);
  const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, 8, rng);
  const FieldElement c = encrypt(keys.pub, w2("1101"));
  EXPECT_EQ(kind_of([&] { decrypt(keys.sec, keys.pub.g[0](c)); }), ErrorKind::kTamperedOrCorrupt);
}

TEST(AffineDecryptTest, LiftMatchesExactImage) {
  // D * (Phi_{f,w'}(alpha) - alpha) is an integer in [0, D * beta] for |w'| <= N.
  Rng rng(39);
  for (int i = 0; i < 100; ++i) {
    const auto sys = random_affine_system(rng);
    const std::size_t n = 1 + rng() % 8;
    const AffineKeyPair keys = affine_keygen(sys.f, sys.sep, n, rng);
    const Integer d = ipow(keys.sec.varpi, keys.sec.lift_exponent) * sys.sep.alpha.get_den();
    const Word w = random_word(rng() % (keys.sec.lift_exponent + 1), keys.pub.nu, rng);
    const Rational y = compose(std::span<const AffineMap>(sys.f), w)(sys.sep.alpha);
    const Rational scaled = (y - sys.sep.alpha) * Rational(d);
    EXPECT_EQ(scaled.get_den(), 1);
    EXPECT_GE(scaled, 0);
    EXPECT_LE(scaled, sys.sep.beta * Rational(d));
    EXPECT_EQ(lift_cryptogram(keys.sec, evaluate(keys.pub, w)), y);
  }
}

TEST(AffineDecryptTest, ForeignModulusIsRejected) {
  const AffineKeyPair keys = triadic_19687();
  EXPECT_EQ(kind_of([&] { decrypt(keys.sec, FieldElement(3, 7)); }), ErrorKind::kInvalidParameter);
}

}  // namespace
}  // namespace ifscrypt
