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

// Affine IFS cryptosystem over Q, conjugated into F_p by u(x) = a x + b.
//
// Padded messages are laid out as
//
//     body || length field (ell base-nu digits of |body|) || terminator
//
// where ell is the digit count of n and the terminator is the smallest
// symbol whose map does not fix alpha. The terminator keeps the last symbol
// of every padded word visible to the base-point decoder.
//
// Decryption clears denominators with D = varpi^N * den(alpha), N being the
// lift exponent stored in the secret key. N covers the longest padded word
// plus a tamper margin, so a cryptogram hit by up to `margin` extra maps
// still lifts exactly and is then rejected by the length check.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ifscrypt/ifs.hpp"
#include "ifscrypt/numeric.hpp"

namespace ifscrypt {

enum class AffineMode {
  kPadded,       // messages of length 0..n, length field appended
  kFixedLength,  // messages of length exactly n, fixed-length decoder
};

struct AffinePublicKey {
  AffineMode mode = AffineMode::kPadded;
  std::size_t n = 0;
  unsigned nu = 2;
  Integer p;
  FieldElement gamma{0, 2};
  std::vector<FieldAffineMap> g;
};

struct AffineSecretKey {
  AffineMode mode = AffineMode::kPadded;
  std::size_t n = 0;
  unsigned nu = 2;
  Integer p;
  Integer a;
  Integer b;
  std::vector<AffineMap> f;
  IntervalSeparation sep;
  Integer varpi;
  std::size_t lift_exponent = 0;
};

struct AffineKeyPair {
  AffinePublicKey pub;
  AffineSecretKey sec;
};

struct AffineKeygenOptions {
  AffineMode mode = AffineMode::kPadded;
  std::size_t tamper_margin = 1;  // ignored in fixed-length mode
  // Enforce 2 <= a, b < p, a != b, gcd(a, b) = 1. Only a != 0 (mod p) is
  // needed for correctness; turning this off allows e.g. the identity u.
  bool strict_conjugator = true;
};

struct ExplicitAffineParams {
  Integer p;
  Integer a;
  Integer b;
};

/// Width of the length field: the number of base-nu digits of n.
std::size_t length_field_width(std::size_t n, unsigned nu);

/// lcm of the denominators of every slope and intercept.
Integer coefficient_denominator(std::span<const AffineMap> f);

/// Exponent N used to clear denominators for the given mode.
std::size_t lift_exponent(AffineMode mode, std::size_t n, unsigned nu, std::size_t tamper_margin);

/// beta * varpi^N * den(alpha); the prime must be strictly larger.
Rational affine_prime_bound(std::span<const AffineMap> f, const IntervalSeparation& sep, std::size_t exponent);

AffineKeyPair affine_keygen(std::span<const AffineMap> f, const IntervalSeparation& sep, std::size_t n,
                            const ExplicitAffineParams& params, const AffineKeygenOptions& options = {});

AffineKeyPair affine_keygen(std::span<const AffineMap> f, const IntervalSeparation& sep, std::size_t n, Rng& rng,
                            const AffineKeygenOptions& options = {});

/// Smallest symbol whose map moves the base point (computed from either key).
Symbol terminator_symbol(const AffinePublicKey& pk);
Symbol terminator_symbol(const AffineSecretKey& sk);

struct PaddedWord {
  Word body;
  Word length_field;
  Symbol terminator = 0;

  Word joined() const;
};

/// Throws kMessageTooLong if |w| > n.
PaddedWord pad(const Word& w, std::size_t n, Symbol terminator);

/// Inverse of pad on a decoded word; nullopt when the terminator or the
/// length field is inconsistent with the body.
std::optional<Word> unpad(const Word& decoded, std::size_t n, Symbol terminator);

/// Phi_{g,w}(gamma) for the raw word w, no padding.
FieldElement evaluate(const AffinePublicKey& pk, const Word& w);

FieldElement encrypt(const AffinePublicKey& pk, const Word& w);

/// alpha + rem_p(D * (u(c) - psi(alpha))) / D: the point Phi_{f,w'}(alpha)
/// whenever c is a valid cryptogram.
Rational lift_cryptogram(const AffineSecretKey& sk, const FieldElement& c);

/// Throws kTamperedOrCorrupt when decoding or the length check fails.
Word decrypt(const AffineSecretKey& sk, const FieldElement& c);

}  // namespace ifscrypt
