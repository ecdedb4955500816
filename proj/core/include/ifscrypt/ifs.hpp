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

// Words, affine maps, interval separation structures and the two generic
// decoders for iterated function systems with a separation property.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifscrypt/error.hpp"
#include "ifscrypt/numeric.hpp"

namespace ifscrypt {

using Symbol = std::uint32_t;

/// A word over {0,...,nu-1}.
class Word {
 public:
  explicit Word(unsigned alphabet_size);
  Word(std::vector<Symbol> symbols, unsigned alphabet_size);

  /// Digits ("0110") for nu <= 10, comma separated ("3,11,0") otherwise.
  static Word parse(std::string_view text, unsigned alphabet_size);
  std::string str() const;

  unsigned alphabet_size() const noexcept { return nu_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  void push_back(Symbol s);
  Word slice(std::size_t pos, std::size_t len) const;
  Word operator+(const Word& rhs) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.nu_ == b.nu_ && a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  unsigned nu_;
};

/// Number of base-nu digits of value (1 for value 0).
std::size_t digit_count(std::uint64_t value, unsigned nu);

/// Base-nu expansion of value, most significant digit first, left-padded with
/// zeros to width. Throws kInvalidParameter if value does not fit.
Word base_digits(std::uint64_t value, unsigned nu, std::size_t width);

/// Inverse of base_digits on a slice of a word.
std::uint64_t digits_value(const Word& w, std::size_t pos, std::size_t len);

/// x -> slope * x + intercept over a ring T. `a * b` is the composite a o b.
template <class T>
struct AffineMapT {
  T slope;
  T intercept;

  T operator()(const T& x) const { return slope * x + intercept; }

  friend AffineMapT operator*(const AffineMapT& outer, const AffineMapT& inner) {
    return {outer.slope * inner.slope, outer.slope * inner.intercept + outer.intercept};
  }

  friend bool operator==(const AffineMapT& a, const AffineMapT& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }
};

using AffineMap = AffineMapT<Rational>;
using FieldAffineMap = AffineMapT<FieldElement>;

AffineMap identity_map();
FieldAffineMap identity_map(const Integer& p);
AffineMap inverse(const AffineMap& map);
FieldAffineMap inverse(const FieldAffineMap& map);

void check_word(const Word& w, std::size_t system_size);

/// Phi_{f,w} = f_{w_1} o f_{w_2} o ... o f_{w_n}. The first symbol is the
/// outermost map. Throws kInvalidWord on an alphabet mismatch.
template <class Map>
Map compose(std::span<const Map> f, const Word& w, Map identity) {
  check_word(w, f.size());
  Map out = std::move(identity);
  for (Symbol s : w) out = out * f[s];
  return out;
}

AffineMap compose(std::span<const AffineMap> f, const Word& w);
FieldAffineMap compose(std::span<const FieldAffineMap> g, const Word& w);

struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rational& x) const;
  bool empty() const;
  bool intersects(const Interval& other) const;
  bool contains(const Interval& other) const;
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Image of an interval under a non-constant affine map; a negative slope
/// swaps the endpoints and their closedness.
Interval image(const AffineMap& map, const Interval& interval);

/// S = [alpha, alpha+beta] (or [alpha, alpha+beta) when closed_right is false)
/// with one subinterval S_j per map.
struct IntervalSeparation {
  Rational alpha;
  Rational beta;
  bool closed_right = true;
  std::vector<Interval> subintervals;

  Interval base() const;

  /// Subintervals taken as the exact images f_j(S).
  static IntervalSeparation from_maps(std::span<const AffineMap> f, const Rational& alpha,
                                      const Rational& beta, bool closed_right);
};

struct SeparationReport {
  bool ok = true;
  bool proven = true;  // false when only a sampled check was possible
  std::vector<std::string> violations;
};

/// Exact check of the separation property: every f_j maps S bijectively onto
/// S_j, every S_j lies in S and the S_j are pairwise disjoint.
SeparationReport verify_separation(std::span<const AffineMap> f, const IntervalSeparation& sep);

/// The unique j with y in S_j.
std::optional<Symbol> classify(const IntervalSeparation& sep, const Rational& y);

/// Fixed-length decoder: peel n symbols off y. nullopt when an iterate falls
/// outside every S_j.
std::optional<Word> decode_fixed_length(std::span<const AffineMap> f, const IntervalSeparation& sep,
                                        Rational y, std::size_t n);

/// Peel symbols off y until the base point x is reached. Returns the shortest
/// word w with Phi_{f,w}(x) = y, or nullopt if an iterate leaves the S_j or
/// more than max_steps symbols would be needed. Trailing symbols whose map
/// fixes x are invisible to this decoder.
std::optional<Word> decode_until_base(std::span<const AffineMap> f, const IntervalSeparation& sep,
                                      const Rational& x, Rational y, std::size_t max_steps);

}  // namespace ifscrypt
