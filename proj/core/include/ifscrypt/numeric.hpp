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

// Exact integer/rational arithmetic, the prime field F_p, the localisation
// R_p of the rationals at p and the reduction map psi : R_p -> F_p.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace ifscrypt {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: reduced, positive denominator
using Rng = std::mt19937_64;

Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);  // "m", "-m" or "m/n"
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer ipow(const Integer& base, unsigned long exponent);
Integer lcm(const Integer& a, const Integer& b);

/// Element of Z/pZ. The value is kept in {0,...,p-1}. Binary operations on
/// elements of different fields throw kInvalidModulus.
class FieldElement {
 public:
  FieldElement(const Integer& value, const Integer& modulus);

  const Integer& value() const noexcept { return value_; }
  const Integer& modulus() const noexcept { return modulus_; }

  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  void check_same_field(const FieldElement& other) const;

  Integer value_;
  Integer modulus_;
};

/// Miller-Rabin. Deterministic (first thirteen prime bases) below
/// 3.3e24; above that 64 rounds with witnesses from a fixed-seed generator so
/// the answer is reproducible.
bool is_probable_prime(const Integer& n);

/// True iff the reduced denominator of r is prime to p. Throws
/// kInvalidModulus if p is not prime.
bool is_in_rp(const Rational& r, const Integer& p);

/// num(r) * den(r)^-1 in F_p. Throws kNotInRp when p divides the denominator.
FieldElement psi(const Rational& r, const Integer& p);

/// Canonical representative in {0,...,p-1}.
Integer rem_p(const FieldElement& x);

/// Symmetric representative: the unique b = a (mod p) with |b| < p/2 (p odd).
Integer mods(const Integer& a, const Integer& p);

/// x in {1,...,p-1} with a*x = 1 (mod p). Throws kNoInverse.
Integer mod_inverse(const Integer& a, const Integer& p);

/// Smallest prime strictly greater than bound.
Integer gen_prime_above(const Integer& bound);

/// Uniformly random prime in (bound, 2*bound].
Integer gen_prime_above(const Integer& bound, Rng& rng);

/// Uniform in [0, bound). bound must be positive.
Integer random_below(const Integer& bound, Rng& rng);

/// Uniform in [lo, hi].
Integer random_between(const Integer& lo, const Integer& hi, Rng& rng);

}  // namespace ifscrypt
