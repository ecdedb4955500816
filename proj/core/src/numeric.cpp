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

#include "ifscrypt/numeric.hpp"

#include <array>
#include <string>

#include "ifscrypt/error.hpp"

namespace ifscrypt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidModulus: return "invalid-modulus";
    case ErrorKind::kNotInRp: return "not-in-Rp";
    case ErrorKind::kNoInverse: return "no-inverse";
    case ErrorKind::kInvalidWord: return "invalid-word";
    case ErrorKind::kInvalidSystem: return "invalid-system";
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kMessageTooLong: return "message-too-long";
    case ErrorKind::kEmptyMessage: return "empty-message";
    case ErrorKind::kTamperedOrCorrupt: return "tampered-or-corrupt";
    case ErrorKind::kRejectChallenge: return "reject-challenge";
    case ErrorKind::kNotABijection: return "not-a-bijection";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kParseError: return "parse-error";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw Error(ErrorKind::kParseError, "not a decimal integer: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::kParseError, "zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::kInvalidParameter, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const Integer& value, const Integer& modulus) : modulus_(modulus) {
  if (modulus_ < 2) throw Error(ErrorKind::kInvalidModulus, "modulus must be at least 2");
  mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

void FieldElement::check_same_field(const FieldElement& other) const {
  if (modulus_ != other.modulus_) {
    throw Error(ErrorKind::kInvalidModulus,
                "mixing F_" + to_string(modulus_) + " and F_" + to_string(other.modulus_));
  }
}

FieldElement FieldElement::inverse() const { return FieldElement(mod_inverse(value_, modulus_), modulus_); }

FieldElement FieldElement::operator-() const { return FieldElement(-value_, modulus_); }

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  value_ += rhs.value_;
  if (value_ >= modulus_) value_ -= modulus_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same_field(rhs);
  value_ -= rhs.value_;
  if (value_ < 0) value_ += modulus_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  value_ *= rhs.value_;
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

// ---------------------------------------------------------------------------
// Primality

namespace {

constexpr std::array<unsigned, 13> kDeterministicBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Bases 2..41 decide primality for every n below this value.
const Integer& deterministic_limit() {
  static const Integer limit("3317044064679887385961981", 10);
  return limit;
}

bool miller_rabin_round(const Integer& n, const Integer& n_minus_1, const Integer& d, unsigned long s,
                        const Integer& base) {
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned sp : kSmallPrimes) {
    if (n == sp) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), sp)) return false;
  }
  const Integer n_minus_1 = n - 1;
  Integer d = n_minus_1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (n < deterministic_limit()) {
    for (unsigned b : kDeterministicBases) {
      if (!miller_rabin_round(n, n_minus_1, d, s, Integer(b))) return false;
    }
    return true;
  }
  Rng witnesses(0x1f5c0de);
  const Integer span = n - 3;
  for (int round = 0; round < 64; ++round) {
    const Integer base = random_below(span, witnesses) + 2;
    if (!miller_rabin_round(n, n_minus_1, d, s, base)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// R_p, psi, residues

bool is_in_rp(const Rational& r, const Integer& p) {
  if (!is_probable_prime(p)) throw Error(ErrorKind::kInvalidModulus, to_string(p) + " is not prime");
  return !mpz_divisible_p(r.get_den_mpz_t(), p.get_mpz_t());
}

FieldElement psi(const Rational& r, const Integer& p) {
  if (!is_in_rp(r, p)) {
    throw Error(ErrorKind::kNotInRp, to_string(r) + " has a denominator divisible by " + to_string(p));
  }
  return FieldElement(r.get_num(), p) / FieldElement(r.get_den(), p);
}

Integer rem_p(const FieldElement& x) { return x.value(); }

Integer mods(const Integer& a, const Integer& p) {
  Integer b;
  mpz_fdiv_r(b.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (2 * b > p) b -= p;
  return b;
}

Integer mod_inverse(const Integer& a, const Integer& p) {
  Integer out;
  if (p < 2 || mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error(ErrorKind::kNoInverse, to_string(a) + " is not invertible modulo " + to_string(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primes and randomness

Integer gen_prime_above(const Integer& bound) {
  Integer candidate = bound + 1;
  if (candidate <= 2) return 2;
  if (mpz_even_p(candidate.get_mpz_t())) ++candidate;
  while (!is_probable_prime(candidate)) candidate += 2;
  return candidate;
}

Integer gen_prime_above(const Integer& bound, Rng& rng) {
  if (bound < 2) throw Error(ErrorKind::kInvalidParameter, "prime bound must be at least 2");
  // Bertrand: (bound, 2*bound] always holds a prime, so rejection sampling ends.
  while (true) {
    Integer candidate = random_between(bound + 1, 2 * bound, rng);
    if (is_probable_prime(candidate)) return candidate;
  }
}

Integer random_below(const Integer& bound, Rng& rng) {
  if (bound <= 0) throw Error(ErrorKind::kInvalidParameter, "random_below needs a positive bound");
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const size_t words = (bits + 63) / 64;
  Integer out;
  do {
    out = 0;
    for (size_t i = 0; i < words; ++i) {
      out <<= 64;
      const std::uint64_t limb = rng();
      out += Integer(static_cast<unsigned long>(limb >> 32)) << 32;
      out += static_cast<unsigned long>(limb & 0xffffffffu);
    }
    mpz_fdiv_r_2exp(out.get_mpz_t(), out.get_mpz_t(), bits);
  } while (out >= bound);
  return out;
}

Integer random_between(const Integer& lo, const Integer& hi, Rng& rng) {
  if (hi < lo) throw Error(ErrorKind::kInvalidParameter, "empty random range");
  return lo + random_below(hi - lo + 1, rng);
}

}  // namespace ifscrypt
