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

#include "ifscrypt/affine.hpp"

#include <string>

namespace ifscrypt {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += "; ";
    out += item;
  }
  return out;
}

void validate_system(std::span<const AffineMap> f, const IntervalSeparation& sep, std::size_t n) {
  const SeparationReport report = verify_separation(f, sep);
  if (!report.ok) throw Error(ErrorKind::kInvalidSystem, join(report.violations));
  if (sep.alpha < 0) throw Error(ErrorKind::kInvalidSystem, "alpha must be non-negative");
  if (n == 0) throw Error(ErrorKind::kInvalidParameter, "maximum message length must be positive");
}

// p is prime and psi is defined on alpha and on every coefficient.
bool prime_fits(const Integer& p, std::span<const AffineMap> f, const IntervalSeparation& sep) {
  if (!is_probable_prime(p)) return false;
  if (!is_in_rp(sep.alpha, p)) return false;
  for (const AffineMap& map : f) {
    if (!is_in_rp(map.slope, p) || !is_in_rp(map.intercept, p)) return false;
  }
  return true;
}

AffineKeyPair build_keys(std::span<const AffineMap> f, const IntervalSeparation& sep, std::size_t n,
                         const Integer& p, const Integer& a, const Integer& b, const AffineKeygenOptions& options,
                         std::size_t exponent) {
  const unsigned nu = static_cast<unsigned>(f.size());
  const AffineMap u{Rational(a), Rational(b)};
  const AffineMap u_inv = inverse(u);

  AffineKeyPair keys;
  keys.pub.mode = options.mode;
  keys.pub.n = n;
  keys.pub.nu = nu;
  keys.pub.p = p;
  keys.pub.gamma = psi(u_inv(sep.alpha), p);
  for (const AffineMap& fj : f) {
    const AffineMap conjugated = u_inv * fj * u;
    keys.pub.g.push_back({psi(conjugated.slope, p), psi(conjugated.intercept, p)});
  }

  keys.sec.mode = options.mode;
  keys.sec.n = n;
  keys.sec.nu = nu;
  keys.sec.p = p;
  keys.sec.a = a;
  keys.sec.b = b;
  keys.sec.f.assign(f.begin(), f.end());
  keys.sec.sep = sep;
  keys.sec.varpi = coefficient_denominator(f);
  keys.sec.lift_exponent = exponent;
  return keys;
}

void check_conjugator(const Integer& p, const Integer& a, const Integer& b, bool strict) {
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
    throw Error(ErrorKind::kInvalidParameter, "a must be invertible modulo p");
  }
  if (!strict) return;
  if (a < 2 || a >= p || b < 2 || b >= p) throw Error(ErrorKind::kInvalidParameter, "a and b must lie in [2, p)");
  if (a == b) throw Error(ErrorKind::kInvalidParameter, "a and b must differ");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw Error(ErrorKind::kInvalidParameter, "a and b must be coprime");
}

}  // namespace

std::size_t length_field_width(std::size_t n, unsigned nu) { return digit_count(n, nu); }

Integer coefficient_denominator(std::span<const AffineMap> f) {
  Integer out = 1;
  for (const AffineMap& map : f) {
    out = lcm(out, map.slope.get_den());
    out = lcm(out, map.intercept.get_den());
  }
  return out;
}

std::size_t lift_exponent(AffineMode mode, std::size_t n, unsigned nu, std::size_t tamper_margin) {
  if (mode == AffineMode::kFixedLength) return n;
  return n + length_field_width(n, nu) + 1 + tamper_margin;
}

Rational affine_prime_bound(std::span<const AffineMap> f, const IntervalSeparation& sep, std::size_t exponent) {
  const Integer scale = ipow(coefficient_denominator(f), exponent) * sep.alpha.get_den();
  return sep.beta * Rational(scale);
}

AffineKeyPair affine_keygen(std::span<const AffineMap> f, const IntervalSeparation& sep, std::size_t n,
                            const ExplicitAffineParams& params, const AffineKeygenOptions& options) {
  validate_system(f, sep, n);
  const std::size_t exponent = lift_exponent(options.mode, n, static_cast<unsigned>(f.size()), options.tamper_margin);
  const Rational bound = affine_prime_bound(f, sep, exponent);
  if (!is_probable_prime(params.p)) {
    throw Error(ErrorKind::kInvalidParameter, to_string(params.p) + " is not prime");
  }
  if (Rational(params.p) <= bound) {
    throw Error(ErrorKind::kInvalidParameter,
                "p = " + to_string(params.p) + " does not exceed the bound " + to_string(bound));
  }
  if (!prime_fits(params.p, f, sep)) {
    throw Error(ErrorKind::kInvalidParameter, "p divides a denominator of the system");
  }
  check_conjugator(params.p, params.a, params.b, options.strict_conjugator);
  return build_keys(f, sep, n, params.p, params.a, params.b, options, exponent);
}

AffineKeyPair affine_keygen(std::span<const AffineMap> f, const IntervalSeparation& sep, std::size_t n, Rng& rng,
                            const AffineKeygenOptions& options) {
  validate_system(f, sep, n);
  const std::size_t exponent = lift_exponent(options.mode, n, static_cast<unsigned>(f.size()), options.tamper_margin);
  Integer floor_bound;
  const Rational bound = affine_prime_bound(f, sep, exponent);
  mpz_fdiv_q(floor_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  if (floor_bound < 4) floor_bound = 4;  // leaves room for two distinct a, b in [2, p)

  Integer p;
  do {
    p = gen_prime_above(floor_bound, rng);
  } while (!prime_fits(p, f, sep));

  Integer a;
  Integer b;
  Integer g;
  do {
    a = random_between(2, p - 1, rng);
    b = random_between(2, p - 1, rng);
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  } while (a == b || g != 1);
  return build_keys(f, sep, n, p, a, b, options, exponent);
}

Symbol terminator_symbol(const AffinePublicKey& pk) {
  for (std::size_t j = 0; j < pk.g.size(); ++j) {
    if (!(pk.g[j](pk.gamma) == pk.gamma)) return static_cast<Symbol>(j);
  }
  throw Error(ErrorKind::kInvalidSystem, "every map fixes the base point");
}

Symbol terminator_symbol(const AffineSecretKey& sk) {
  for (std::size_t j = 0; j < sk.f.size(); ++j) {
    if (sk.f[j](sk.sep.alpha) != sk.sep.alpha) return static_cast<Symbol>(j);
  }
  throw Error(ErrorKind::kInvalidSystem, "every map fixes the base point");
}

Word PaddedWord::joined() const {
  Word out = body + length_field;
  out.push_back(terminator);
  return out;
}

PaddedWord pad(const Word& w, std::size_t n, Symbol terminator) {
  if (w.size() > n) {
    throw Error(ErrorKind::kMessageTooLong,
                "message has " + std::to_string(w.size()) + " symbols, the key allows " + std::to_string(n));
  }
  const unsigned nu = w.alphabet_size();
  return {w, base_digits(w.size(), nu, length_field_width(n, nu)), terminator};
}

std::optional<Word> unpad(const Word& decoded, std::size_t n, Symbol terminator) {
  const std::size_t width = length_field_width(n, decoded.alphabet_size());
  if (decoded.size() < width + 1) return std::nullopt;
  if (decoded[decoded.size() - 1] != terminator) return std::nullopt;
  const std::size_t body_len = decoded.size() - width - 1;
  if (body_len > n) return std::nullopt;
  if (digits_value(decoded, body_len, width) != body_len) return std::nullopt;
  return decoded.slice(0, body_len);
}

FieldElement evaluate(const AffinePublicKey& pk, const Word& w) {
  check_word(w, pk.g.size());
  FieldElement x = pk.gamma;
  for (auto it = w.symbols().rbegin(); it != w.symbols().rend(); ++it) x = pk.g[*it](x);
  return x;
}

FieldElement encrypt(const AffinePublicKey& pk, const Word& w) {
  if (pk.mode == AffineMode::kFixedLength) {
    if (w.size() > pk.n) throw Error(ErrorKind::kMessageTooLong, "message longer than n");
    if (w.size() != pk.n) {
      throw Error(ErrorKind::kInvalidParameter, "fixed-length keys encrypt words of exactly n symbols");
    }
    return evaluate(pk, w);
  }
  return evaluate(pk, pad(w, pk.n, terminator_symbol(pk)).joined());
}

Rational lift_cryptogram(const AffineSecretKey& sk, const FieldElement& c) {
  if (c.modulus() != sk.p) throw Error(ErrorKind::kInvalidParameter, "cryptogram is not an element of F_p");
  const Integer scale = ipow(sk.varpi, sk.lift_exponent) * sk.sep.alpha.get_den();
  const FieldElement u_c = FieldElement(sk.a, sk.p) * c + FieldElement(sk.b, sk.p);
  const Integer k = rem_p(FieldElement(scale, sk.p) * (u_c - psi(sk.sep.alpha, sk.p)));
  return sk.sep.alpha + make_rational(k, scale);
}

Word decrypt(const AffineSecretKey& sk, const FieldElement& c) {
  const Rational y = lift_cryptogram(sk, c);
  if (sk.mode == AffineMode::kFixedLength) {
    auto w = decode_fixed_length(sk.f, sk.sep, y, sk.n);
    if (!w) throw Error(ErrorKind::kTamperedOrCorrupt, "cryptogram does not decode");
    return *w;
  }
  const auto decoded = decode_until_base(sk.f, sk.sep, sk.sep.alpha, y, sk.lift_exponent);
  if (!decoded) throw Error(ErrorKind::kTamperedOrCorrupt, "cryptogram does not decode");
  auto body = unpad(*decoded, sk.n, terminator_symbol(sk));
  if (!body) throw Error(ErrorKind::kTamperedOrCorrupt, "length field does not match the decoded message");
  return *body;
}

}  // namespace ifscrypt
