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

// Sandwich authentication on top of the projective scheme.
//
//   Alice -> Bob : Phi_{B',w'} Phi_{B',w''}            (challenge)
//   Bob -> Alice : Phi_{B',w'} C Phi_{B',w''}          (response)
//   Alice        : C = Phi_{B',w'}^-1 C' Phi_{B',w''}^-1
//
// B' is Bob's public key; only Bob can split the challenge into w' and w''.
// The first ell' symbols of w' spell m = |w'| = |w''| in base nu', where
// ell' is the digit count of floor(n'/2).

#include <cstddef>
#include <utility>

#include "ifscrypt/ifs.hpp"
#include "ifscrypt/projective.hpp"

namespace ifscrypt {

/// What both parties share: the prime, the matrix size and Bob's n', nu'.
struct AuthContext {
  Integer p;
  std::size_t dim = 0;
  unsigned nu = 2;
  std::size_t n = 0;
};

AuthContext auth_context(const ProjPublicKey& bob);

/// Throws kInvalidParameter unless both keys use the same p and dimension.
void check_compatible(const ProjPublicKey& alice, const ProjPublicKey& bob);

/// Digits reserved for m inside w'.
std::size_t auth_field_width(std::size_t bob_n, unsigned nu);

/// Smallest and largest admissible half length m. The upper limit keeps one
/// symbol of headroom so a single injected factor still lifts exactly.
std::size_t min_half_length(std::size_t bob_n, unsigned nu);
std::size_t max_half_length(std::size_t bob_n);

struct AuthChallenge {
  ModMatrix chal;
  AuthContext context;
};

/// Alice's private session state.
struct AuthSession {
  Word first;   // w'
  Word second;  // w''
  ModMatrix phi_first;
  ModMatrix phi_second;
  ModMatrix inv_first;
  ModMatrix inv_second;
};

std::pair<AuthSession, AuthChallenge> make_challenge(const ProjPublicKey& bob_pub, std::size_t m, Rng& rng);

/// Bob decodes the challenge, checks the embedded half length and returns
/// Phi_{B',w'} C Phi_{B',w''}, with Phi_{B',v} = U'^-1 Phi_{A',v} U' mod p.
/// Throws kRejectChallenge.
ModMatrix respond(const ProjSecretKey& bob_sec, const AuthChallenge& chal, const ModMatrix& c);

ModMatrix recover(const AuthSession& session, const ModMatrix& c_prime);

}  // namespace ifscrypt
