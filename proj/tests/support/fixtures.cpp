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

#include "fixtures.hpp"

namespace ifscrypt::testing {

namespace {

IntMatrix mat(std::size_t dim, std::vector<long> entries) {
  return IntMatrix(dim, std::vector<Integer>(entries.begin(), entries.end()));
}

Interval half_open(const Rational& lo, const Rational& hi) { return {lo, hi, true, false}; }

}  // namespace

AffineFixture triadic() {
  std::vector<AffineMap> f{{make_rational(1, 3), Rational(0)}, {make_rational(1, 3), make_rational(2, 3)}};
  IntervalSeparation sep = IntervalSeparation::from_maps(f, Rational(0), Rational(1), true);
  return {std::move(f), std::move(sep)};
}

AffineKeyPair triadic_19687() {
  const AffineFixture sys = triadic();
  AffineKeygenOptions options;
  options.mode = AffineMode::kFixedLength;
  options.strict_conjugator = false;
  return affine_keygen(sys.f, sys.sep, 8, ExplicitAffineParams{19687, 15296, 8026}, options);
}

ProjFixture interval_2x2() {
  return {{mat(2, {1, 0, 1, 1}), mat(2, {1, 1, 0, 2})},
          {{half_open(0, 1)}, {{half_open(0, make_rational(1, 2))}, {half_open(make_rational(1, 2), 1)}}}};
}

ProjFixture square_quartet() {
  const Rational half = make_rational(1, 2);
  const Interval lo = half_open(0, half);
  const Interval hi = half_open(half, 1);
  return {{mat(3, {1, 0, 0, 0, 1, 0, 1, 1, 1}), mat(3, {1, 0, 1, 0, 1, 1, 0, 0, 2}),
           mat(3, {1, 0, 1, 0, 1, 0, 0, 0, 2}), mat(3, {1, 0, 0, 0, 1, 1, 0, 0, 2})},
          {{half_open(0, 1), half_open(0, 1)}, {{lo, lo}, {hi, hi}, {hi, lo}, {lo, hi}}}};
}

AffineFixture random_affine_system(Rng& rng) {
  const unsigned nu = 2 + static_cast<unsigned>(rng() % 2);
  static const Rational kAlphas[] = {Rational(0), Rational(1), make_rational(1, 2), make_rational(2, 3)};
  const Rational alpha = kAlphas[rng() % 4];
  const Rational beta(1 + static_cast<long>(rng() % 3));
  const Rational slot = beta / nu;

  std::vector<AffineMap> f;
  for (unsigned j = 0; j < nu; ++j) {
    // |slope| <= 1/(nu+1) keeps each image strictly inside its slot.
    const Rational s = make_rational(1, nu + 1 + static_cast<long>(rng() % 3));
    const Rational lo = alpha + slot * j;
    if (rng() % 2) {
      f.push_back({s, lo - s * alpha});
    } else {
      f.push_back({-s, lo + s * beta + s * alpha});
    }
  }
  IntervalSeparation sep = IntervalSeparation::from_maps(f, alpha, beta, true);
  return {std::move(f), std::move(sep)};
}

Word random_word(std::size_t len, unsigned nu, Rng& rng) {
  Word w(nu);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Symbol>(rng() % nu));
  return w;
}

IntMatrix exact_product(const std::vector<IntMatrix>& a, const Word& w) {
  IntMatrix out = IntMatrix::identity(a.front().dim());
  for (Symbol s : w) out = out * a[s];
  return out;
}

}  // namespace ifscrypt::testing
