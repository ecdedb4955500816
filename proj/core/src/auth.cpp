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

#include "ifscrypt/auth.hpp"

#include <algorithm>
#include <string>

namespace ifscrypt {

AuthContext auth_context(const ProjPublicKey& bob) { return {bob.p, bob.dim, bob.nu, bob.n}; }

void check_compatible(const ProjPublicKey& alice, const ProjPublicKey& bob) {
  if (alice.p != bob.p) throw Error(ErrorKind::kInvalidParameter, "Alice and Bob must share p");
  if (alice.dim != bob.dim) throw Error(ErrorKind::kInvalidParameter, "Alice and Bob must share the matrix size");
}

std::size_t auth_field_width(std::size_t bob_n, unsigned nu) { return digit_count(bob_n / 2, nu); }

std::size_t min_half_length(std::size_t bob_n, unsigned nu) {
  return std::max<std::size_t>(1, auth_field_width(bob_n, nu));
}

std::size_t max_half_length(std::size_t bob_n) { return bob_n == 0 ? 0 : (bob_n - 1) / 2; }

namespace {

Word random_word(std::size_t len, unsigned nu, Rng& rng) {
  std::uniform_int_distribution<Symbol> pick(0, nu - 1);
  Word w(nu);
  for (std::size_t i = 0; i < len; ++i) w.push_back(pick(rng));
  return w;
}

}  // namespace

std::pair<AuthSession, AuthChallenge> make_challenge(const ProjPublicKey& bob_pub, std::size_t m, Rng& rng) {
  const std::size_t lo = min_half_length(bob_pub.n, bob_pub.nu);
  const std::size_t hi = max_half_length(bob_pub.n);
  if (m < lo || m > hi) {
    throw Error(ErrorKind::kInvalidParameter, "half length " + std::to_string(m) + " outside [" +
                                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  const std::size_t width = auth_field_width(bob_pub.n, bob_pub.nu);
  Word first = base_digits(m, bob_pub.nu, width) + random_word(m - width, bob_pub.nu, rng);
  Word second = random_word(m, bob_pub.nu, rng);

  ModMatrix phi_first = evaluate(bob_pub, first);
  ModMatrix phi_second = evaluate(bob_pub, second);
  AuthChallenge chal{phi_first * phi_second, auth_context(bob_pub)};
  ModMatrix inv_first = phi_first.inverse();
  ModMatrix inv_second = phi_second.inverse();
  AuthSession session{std::move(first), std::move(second), std::move(phi_first),
                      std::move(phi_second), std::move(inv_first), std::move(inv_second)};
  return {std::move(session), std::move(chal)};
}

ModMatrix respond(const ProjSecretKey& bob_sec, const AuthChallenge& chal, const ModMatrix& c) {
  if (chal.context.p != bob_sec.p || chal.context.dim != bob_sec.dim) {
    throw Error(ErrorKind::kRejectChallenge, "challenge was made for a different key");
  }
  if (c.modulus() != bob_sec.p || c.dim() != bob_sec.dim) {
    throw Error(ErrorKind::kInvalidParameter, "cryptogram does not share p and dimension with Bob's key");
  }
  const auto decoded = decode_matrix(bob_sec.a, bob_sec.sep, bob_sec.base_point,
                                     lift_cryptogram(bob_sec, chal.chal), bob_sec.n);
  if (!decoded) throw Error(ErrorKind::kRejectChallenge, "challenge does not decode");
  if (decoded->size() % 2 != 0) throw Error(ErrorKind::kRejectChallenge, "challenge has odd length");
  const std::size_t m = decoded->size() / 2;
  const std::size_t width = auth_field_width(bob_sec.n, bob_sec.nu);
  if (m < width || digits_value(*decoded, 0, width) != m) {
    throw Error(ErrorKind::kRejectChallenge, "embedded length disagrees with the challenge");
  }

  const ModMatrix u(bob_sec.u, bob_sec.p);
  const ModMatrix u_inv = u.inverse();
  auto phi = [&](const Word& w) {
    ModMatrix prod = ModMatrix::identity(bob_sec.dim, bob_sec.p);
    for (Symbol s : w) prod = prod * ModMatrix(bob_sec.a[s], bob_sec.p);
    return u_inv * prod * u;
  };
  return phi(decoded->slice(0, m)) * c * phi(decoded->slice(m, m));
}

ModMatrix recover(const AuthSession& session, const ModMatrix& c_prime) {
  return session.inv_first * c_prime * session.inv_second;
}

}  // namespace ifscrypt
