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

// Projective IFS cryptosystem: integer matrices acting as homographies,
// conjugated into GL(d+1, F_p). Cryptograms are matrix products mod p and
// are lifted back to Z with symmetric residues.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifscrypt/ifs.hpp"
#include "ifscrypt/numeric.hpp"

namespace ifscrypt {

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t dim, std::vector<Integer> entries);
  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  Integer determinant() const;  // fraction-free Bareiss elimination
  IntMatrix adjugate() const;
  Integer content() const;  // gcd of all entries
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_;
  std::vector<Integer> entries_;
};

/// Square matrix over F_p with entries kept in {0,...,p-1}.
class ModMatrix {
 public:
  ModMatrix(std::size_t dim, std::vector<Integer> entries, Integer p);
  ModMatrix(const IntMatrix& m, Integer p);
  static ModMatrix identity(std::size_t dim, const Integer& p);

  std::size_t dim() const noexcept { return dim_; }
  const Integer& modulus() const noexcept { return p_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  Integer determinant() const;
  /// Adjugate times det^-1; throws kNoInverse when singular mod p.
  ModMatrix inverse() const;
  /// Entrywise symmetric residues.
  IntMatrix lift_symmetric() const;

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.dim_ == b.dim_ && a.p_ == b.p_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_;
  std::vector<Integer> entries_;
  Integer p_;
};

/// Max absolute row sum (the l-infinity operator norm).
Integer norm_h(const IntMatrix& m);
/// Max absolute column sum (the l-1 operator norm).
Integer norm_v(const IntMatrix& m);

/// 2 * max over i of max(|A_i|_h^n, |A_i|_v^n). Every entry of every product
/// of at most n generators is bounded by half of it.
Integer prime_bound(std::span<const IntMatrix> a, std::size_t n);

/// Homogeneous coordinates, gcd-reduced, sign fixed so that the last nonzero
/// coordinate is positive. Equality is projective equality.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Integer> coords);

  const std::vector<Integer>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  /// Affine chart coordinates x_i / x_last; nullopt at infinity.
  std::optional<std::vector<Rational>> affine() const;
  std::string str() const;

  static ProjPoint from_affine(std::span<const Rational> x);

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<Integer> coords_;
};

ProjPoint apply_homography(const IntMatrix& m, const ProjPoint& point);

/// A box S in the affine chart and one disjoint sub-box per generator. Each
/// sub-box contains the image of S under its generator; it need not equal it.
struct BoxSeparation {
  std::vector<Interval> box;
  std::vector<std::vector<Interval>> subboxes;

  std::size_t dimension() const { return box.size(); }
  bool in_box(const ProjPoint& point) const;
  std::optional<Symbol> classify(const ProjPoint& point) const;
  /// Lower-left corner of S if it belongs to S, else the centre.
  ProjPoint base_point() const;
};

/// Exact when each generator's denominator keeps a strict sign on the corners
/// of the closed box (the image is then the hull of the corner images).
/// Otherwise falls back to 10^4 sampled rational points and reports
/// proven = false. Disjointness and containment of the sub-boxes are exact.
SeparationReport verify_separation(std::span<const IntMatrix> a, const BoxSeparation& sep, Rng* rng = nullptr);

struct ProjPublicKey {
  std::size_t n = 0;
  unsigned nu = 2;
  Integer p;
  std::size_t dim = 0;
  std::vector<ModMatrix> b;
};

struct ProjSecretKey {
  std::size_t n = 0;
  unsigned nu = 2;
  Integer p;
  std::size_t dim = 0;
  std::vector<IntMatrix> a;
  IntMatrix u = IntMatrix::identity(1);
  BoxSeparation sep;
  ProjPoint base_point{{Integer(1)}};
};

struct ProjKeyPair {
  ProjPublicKey pub;
  ProjSecretKey sec;
  std::vector<std::string> warnings;
};

ProjKeyPair proj_keygen(std::vector<IntMatrix> a, const BoxSeparation& sep, std::size_t n, const Integer& p,
                        const IntMatrix& u);

/// p is the smallest prime above prime_bound(a, n) and U is uniformly random
/// with det(U) invertible mod p.
ProjKeyPair proj_keygen(std::vector<IntMatrix> a, const BoxSeparation& sep, std::size_t n, Rng& rng);

/// Uniformly random matrix with entries in [0, p) and det invertible mod p.
IntMatrix random_conjugator(std::size_t dim, const Integer& p, Rng& rng);

/// Product of the public matrices along w, mod p. No length checks.
ModMatrix evaluate(const ProjPublicKey& pk, const Word& w);

/// Length framing for the integrity variant: the marker-delimited field
/// [1, 0, digits(|w|), 0, 1] is inserted at position floor(|w|/2).
Word frame_length(const Word& w, std::size_t n);
std::optional<Word> unframe_length(const Word& framed, std::size_t n);

/// C = B_{w_1} ... B_{w_k} mod p. Rejects empty words and words longer than
/// n. With with_length the framed word must leave one symbol of headroom so
/// that a single extra factor still lifts exactly.
ModMatrix encrypt(const ProjPublicKey& pk, const Word& w, bool with_length = false);

/// U C U^-1 mod p, then symmetric residues.
IntMatrix lift_cryptogram(const ProjSecretKey& sk, const ModMatrix& c);

/// Peels generators off M, reading each first symbol from the sub-box that
/// holds M(base). nullopt on a point outside every sub-box, an inexact
/// division or more than max_steps steps.
std::optional<Word> decode_matrix(std::span<const IntMatrix> a, const BoxSeparation& sep, const ProjPoint& base,
                                  IntMatrix m, std::size_t max_steps);

/// Throws kTamperedOrCorrupt, or kEmptyMessage when C lifts to the identity.
Word decrypt(const ProjSecretKey& sk, const ModMatrix& c, bool with_length = false);

}  // namespace ifscrypt
