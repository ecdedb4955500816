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

// Systems and random generators shared by the unit and acceptance tests.

#include <cstddef>
#include <vector>

#include "ifscrypt/affine.hpp"
#include "ifscrypt/projective.hpp"

namespace ifscrypt::testing {

struct AffineFixture {
  std::vector<AffineMap> f;
  IntervalSeparation sep;
};

struct ProjFixture {
  std::vector<IntMatrix> a;
  BoxSeparation sep;
};

/// f_0 = x/3, f_1 = (x + 2)/3 on [0, 1].
AffineFixture triadic();

/// The published parameters: n = 8, p = 19687, a = 15296, b = 8026,
/// fixed-length mode, lenient conjugator check.
AffineKeyPair triadic_19687();

/// Homographies [[1,0],[1,1]] and [[1,1],[0,2]] on [0, 1).
ProjFixture interval_2x2();

/// Four 3x3 homographies on [0, 1)^2 sending the square into its quarters.
ProjFixture square_quartet();

/// nu in {2, 3} contracting maps with random sign and ratio on a random
/// S = [alpha, alpha + beta]; the images sit inside disjoint slots of S.
AffineFixture random_affine_system(Rng& rng);

Word random_word(std::size_t len, unsigned nu, Rng& rng);

/// Exact product A_{w_1} ... A_{w_k}.
IntMatrix exact_product(const std::vector<IntMatrix>& a, const Word& w);

}  // namespace ifscrypt::testing
