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

#include "ifscrypt/projective.hpp"

#include <algorithm>
#include <utility>

namespace ifscrypt {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t dim, std::vector<Integer> entries) : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_) {
    throw Error(ErrorKind::kInvalidParameter, "matrix needs dim*dim entries with dim >= 1");
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  std::vector<Integer> e(dim * dim, Integer(0));
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1;
  return IntMatrix(dim, std::move(e));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::kInvalidParameter, "matrix dimension mismatch");
  const std::size_t d = a.dim_;
  std::vector<Integer> out(d * d, Integer(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Integer& aik = a.entries_[i * d + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] += aik * b.entries_[k * d + j];
    }
  }
  return IntMatrix(d, std::move(out));
}

Integer IntMatrix::determinant() const {
  std::vector<Integer> m = entries_;
  const std::size_t d = dim_;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m[k * d + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < d && m[swap_row * d + k] == 0) ++swap_row;
      if (swap_row == d) return 0;
      for (std::size_t j = 0; j < d; ++j) std::swap(m[k * d + j], m[swap_row * d + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        Integer t = m[i * d + j] * m[k * d + k] - m[i * d + k] * m[k * d + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i * d + j] = std::move(t);
      }
    }
    prev = m[k * d + k];
  }
  return sign * m[(d - 1) * d + (d - 1)];
}

IntMatrix IntMatrix::adjugate() const {
  const std::size_t d = dim_;
  if (d == 1) return IntMatrix(1, {Integer(1)});
  std::vector<Integer> out(d * d);
  std::vector<Integer> minor((d - 1) * (d - 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < d; ++j) {
          if (j != c) minor[idx++] = entries_[i * d + j];
        }
      }
      Integer cof = IntMatrix(d - 1, minor).determinant();
      if ((r + c) % 2) cof = -cof;
      out[c * d + r] = std::move(cof);  // transpose of the cofactor matrix
    }
  }
  return IntMatrix(d, std::move(out));
}

Integer IntMatrix::content() const {
  Integer g = 0;
  for (const Integer& e : entries_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  return g;
}

bool IntMatrix::is_identity() const { return *this == identity(dim_); }

// ---------------------------------------------------------------------------
// ModMatrix

ModMatrix::ModMatrix(std::size_t dim, std::vector<Integer> entries, Integer p)
    : dim_(dim), entries_(std::move(entries)), p_(std::move(p)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_) {
    throw Error(ErrorKind::kInvalidParameter, "matrix needs dim*dim entries with dim >= 1");
  }
  if (p_ < 2) throw Error(ErrorKind::kInvalidModulus, "modulus must be at least 2");
  for (Integer& e : entries_) mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
}

ModMatrix::ModMatrix(const IntMatrix& m, Integer p) : ModMatrix(m.dim(), m.entries(), std::move(p)) {}

ModMatrix ModMatrix::identity(std::size_t dim, const Integer& p) { return ModMatrix(IntMatrix::identity(dim), p); }

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim_ != b.dim_ || a.p_ != b.p_) throw Error(ErrorKind::kInvalidParameter, "matrix dimension or field mismatch");
  const IntMatrix prod = IntMatrix(a.dim_, a.entries_) * IntMatrix(b.dim_, b.entries_);
  return ModMatrix(prod, a.p_);
}

Integer ModMatrix::determinant() const {
  Integer det = IntMatrix(dim_, entries_).determinant();
  mpz_fdiv_r(det.get_mpz_t(), det.get_mpz_t(), p_.get_mpz_t());
  return det;
}

ModMatrix ModMatrix::inverse() const {
  const Integer det_inv = mod_inverse(determinant(), p_);
  std::vector<Integer> adj = IntMatrix(dim_, entries_).adjugate().entries();
  for (Integer& e : adj) e *= det_inv;
  return ModMatrix(dim_, std::move(adj), p_);
}

IntMatrix ModMatrix::lift_symmetric() const {
  std::vector<Integer> out;
  out.reserve(entries_.size());
  for (const Integer& e : entries_) out.push_back(mods(e, p_));
  return IntMatrix(dim_, std::move(out));
}

// ---------------------------------------------------------------------------
// Norms

Integer norm_h(const IntMatrix& m) {
  Integer best = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) sum += abs(m(i, j));
    best = std::max(best, sum);
  }
  return best;
}

Integer norm_v(const IntMatrix& m) {
  Integer best = 0;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Integer sum = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) sum += abs(m(i, j));
    best = std::max(best, sum);
  }
  return best;
}

Integer prime_bound(std::span<const IntMatrix> a, std::size_t n) {
  Integer best = 1;
  for (const IntMatrix& m : a) {
    best = std::max(best, ipow(norm_h(m), n));
    best = std::max(best, ipow(norm_v(m), n));
  }
  return 2 * best;
}

// ---------------------------------------------------------------------------
// Projective points

ProjPoint::ProjPoint(std::vector<Integer> coords) : coords_(std::move(coords)) {
  Integer g = 0;
  for (const Integer& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw Error(ErrorKind::kInvalidParameter, "homogeneous coordinates cannot all vanish");
  auto last_nonzero = std::find_if(coords_.rbegin(), coords_.rend(), [](const Integer& c) { return c != 0; });
  if (*last_nonzero < 0) g = -g;
  for (Integer& c : coords_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

std::optional<std::vector<Rational>> ProjPoint::affine() const {
  const Integer& w = coords_.back();
  if (w == 0) return std::nullopt;
  std::vector<Rational> out;
  for (std::size_t i = 0; i + 1 < coords_.size(); ++i) out.push_back(make_rational(coords_[i], w));
  return out;
}

std::string ProjPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += to_string(coords_[i]);
  }
  return out + ")";
}

ProjPoint ProjPoint::from_affine(std::span<const Rational> x) {
  Integer den = 1;
  for (const Rational& r : x) den = lcm(den, r.get_den());
  std::vector<Integer> coords;
  for (const Rational& r : x) coords.push_back(r.get_num() * (den / r.get_den()));
  coords.push_back(den);
  return ProjPoint(std::move(coords));
}

ProjPoint apply_homography(const IntMatrix& m, const ProjPoint& point) {
  if (m.dim() != point.size()) throw Error(ErrorKind::kInvalidParameter, "point and matrix dimensions differ");
  std::vector<Integer> out(m.dim(), Integer(0));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * point.coords()[j];
  }
  return ProjPoint(std::move(out));
}

// ---------------------------------------------------------------------------
// Box separation

namespace {

bool box_contains(std::span<const Interval> box, std::span<const Rational> x) {
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (!box[i].contains(x[i])) return false;
  }
  return true;
}

bool boxes_disjoint(std::span<const Interval> a, std::span<const Interval> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].intersects(b[i])) return true;
  }
  return false;
}

std::string box_str(std::span<const Interval> box) {
  std::string out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (i) out += " x ";
    out += box[i].str();
  }
  return out;
}

// Homogeneous image of the affine point x under m, as rationals.
std::vector<Rational> image_rows(const IntMatrix& m, std::span<const Rational> x) {
  const std::size_t d = x.size();
  std::vector<Rational> rows(d + 1, Rational(0));
  for (std::size_t i = 0; i <= d; ++i) {
    Rational acc = m(i, d);
    for (std::size_t k = 0; k < d; ++k) acc += Rational(m(i, k)) * x[k];
    rows[i] = acc;
  }
  return rows;
}

// Whether every box corner listed in `corners` lies on one face of the box
// that S excludes (an open side).
bool on_excluded_face(std::span<const Interval> box, const std::vector<std::size_t>& corners) {
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (box[k].lo == box[k].hi) continue;
    const bool all_hi = std::all_of(corners.begin(), corners.end(), [k](std::size_t c) { return (c >> k) & 1u; });
    const bool all_lo = std::all_of(corners.begin(), corners.end(), [k](std::size_t c) { return !((c >> k) & 1u); });
    if (all_hi && !box[k].hi_closed) return true;
    if (all_lo && !box[k].lo_closed) return true;
  }
  return false;
}

// Exact containment check of the image of S in the sub-box. Returns nullopt
// when the denominator changes sign over the closed box.
std::optional<std::vector<std::string>> exact_image_check(const IntMatrix& m, std::span<const Interval> box,
                                                          std::span<const Interval> target, std::size_t index) {
  const std::size_t d = box.size();
  const std::size_t corners = std::size_t{1} << d;
  std::vector<std::vector<Rational>> values(corners);
  int denominator_sign = 0;
  for (std::size_t c = 0; c < corners; ++c) {
    std::vector<Rational> x(d);
    for (std::size_t k = 0; k < d; ++k) x[k] = ((c >> k) & 1u) ? box[k].hi : box[k].lo;
    std::vector<Rational> rows = image_rows(m, x);
    const int s = sgn(rows[d]);
    if (s == 0 || (denominator_sign != 0 && s != denominator_sign)) return std::nullopt;
    denominator_sign = s;
    for (std::size_t i = 0; i < d; ++i) values[c].push_back(rows[i] / rows[d]);
  }

  std::vector<std::string> violations;
  const std::string name = "A_" + std::to_string(index);
  for (std::size_t i = 0; i < d; ++i) {
    Rational lo = values[0][i];
    Rational hi = values[0][i];
    for (std::size_t c = 1; c < corners; ++c) {
      lo = std::min(lo, values[c][i]);
      hi = std::max(hi, values[c][i]);
    }
    auto attaining = [&](const Rational& v) {
      std::vector<std::size_t> out;
      for (std::size_t c = 0; c < corners; ++c) {
        if (values[c][i] == v) out.push_back(c);
      }
      return out;
    };
    const Interval& t = target[i];
    if (lo < t.lo || (lo == t.lo && !t.lo_closed && !on_excluded_face(box, attaining(lo)))) {
      violations.push_back(name + ": image coordinate " + std::to_string(i) + " reaches " + to_string(lo) +
                           ", below " + t.str());
    }
    if (hi > t.hi || (hi == t.hi && !t.hi_closed && !on_excluded_face(box, attaining(hi)))) {
      violations.push_back(name + ": image coordinate " + std::to_string(i) + " reaches " + to_string(hi) +
                           ", above " + t.str());
    }
  }
  return violations;
}

std::vector<std::string> sampled_image_check(const IntMatrix& m, const BoxSeparation& sep, std::size_t index,
                                             Rng& rng) {
  constexpr int kSamples = 10000;
  const Integer resolution = Integer(1) << 20;
  std::vector<std::string> violations;
  const std::size_t d = sep.dimension();
  for (int s = 0; s < kSamples && violations.empty(); ++s) {
    std::vector<Rational> x(d);
    for (std::size_t k = 0; k < d; ++k) {
      const Interval& iv = sep.box[k];
      x[k] = iv.lo + (iv.hi - iv.lo) * make_rational(random_below(resolution + 1, rng), resolution);
    }
    if (!box_contains(sep.box, x)) continue;
    const ProjPoint img = apply_homography(m, ProjPoint::from_affine(x));
    const auto y = img.affine();
    if (!y || !box_contains(sep.subboxes[index], *y)) {
      violations.push_back("A_" + std::to_string(index) + " sends a sampled point of S to " + img.str() +
                           ", outside its sub-box");
    }
  }
  return violations;
}

}  // namespace

bool BoxSeparation::in_box(const ProjPoint& point) const {
  const auto x = point.affine();
  return x && x->size() == box.size() && box_contains(box, *x);
}

std::optional<Symbol> BoxSeparation::classify(const ProjPoint& point) const {
  const auto x = point.affine();
  if (!x || x->size() != box.size()) return std::nullopt;
  for (std::size_t j = 0; j < subboxes.size(); ++j) {
    if (box_contains(subboxes[j], *x)) return static_cast<Symbol>(j);
  }
  return std::nullopt;
}

ProjPoint BoxSeparation::base_point() const {
  std::vector<Rational> corner;
  for (const Interval& iv : box) corner.push_back(iv.lo);
  if (box_contains(box, corner)) return ProjPoint::from_affine(corner);
  std::vector<Rational> centre;
  for (const Interval& iv : box) centre.push_back((iv.lo + iv.hi) / 2);
  return ProjPoint::from_affine(centre);
}

SeparationReport verify_separation(std::span<const IntMatrix> a, const BoxSeparation& sep, Rng* rng) {
  SeparationReport report;
  auto fail = [&report](std::string what) {
    report.ok = false;
    report.violations.push_back(std::move(what));
  };
  const std::size_t d = sep.dimension();
  if (a.size() < 2) fail("a system needs at least two matrices");
  if (d == 0) {
    fail("empty box");
    return report;
  }
  if (sep.subboxes.size() != a.size()) {
    fail("expected " + std::to_string(a.size()) + " sub-boxes, got " + std::to_string(sep.subboxes.size()));
    return report;
  }
  for (const Interval& iv : sep.box) {
    if (iv.empty()) fail("S has an empty side " + iv.str());
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].dim() != d + 1) {
      fail("A_" + std::to_string(j) + " is not " + std::to_string(d + 1) + "x" + std::to_string(d + 1));
      return report;
    }
    if (sep.subboxes[j].size() != d) {
      fail("sub-box " + std::to_string(j) + " has the wrong dimension");
      return report;
    }
    if (a[j].determinant() == 0) fail("A_" + std::to_string(j) + " is singular");
    for (std::size_t k = 0; k < d; ++k) {
      if (!sep.box[k].contains(sep.subboxes[j][k])) {
        fail("sub-box " + std::to_string(j) + " = " + box_str(sep.subboxes[j]) + " leaves S = " + box_str(sep.box));
        break;
      }
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!boxes_disjoint(sep.subboxes[i], sep.subboxes[j])) {
        fail("sub-boxes " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
  if (!report.ok) return report;

  Rng fallback(0x5eed);
  Rng& gen = rng ? *rng : fallback;
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto exact = exact_image_check(a[j], sep.box, sep.subboxes[j], j);
    if (!exact) {
      report.proven = false;
      exact = sampled_image_check(a[j], sep, j, gen);
    }
    for (auto& v : *exact) fail(std::move(v));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Key generation, encryption, decryption

namespace {

void normalise_generators(std::vector<IntMatrix>& a, std::vector<std::string>& warnings) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Integer g = a[j].content();
    if (g == 0) throw Error(ErrorKind::kInvalidSystem, "A_" + std::to_string(j) + " is zero");
    if (g == 1) continue;
    std::vector<Integer> e = a[j].entries();
    for (Integer& x : e) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    a[j] = IntMatrix(a[j].dim(), std::move(e));
    warnings.push_back("A_" + std::to_string(j) + " divided by its content " + to_string(g));
  }
}

void validate_projective(const std::vector<IntMatrix>& a, const BoxSeparation& sep, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidParameter, "maximum message length must be positive");
  const SeparationReport report = verify_separation(a, sep);
  if (!report.ok) {
    std::string what;
    for (const auto& v : report.violations) what += (what.empty() ? "" : "; ") + v;
    throw Error(ErrorKind::kInvalidSystem, what);
  }
}

ProjKeyPair build_keys(std::vector<IntMatrix> a, const BoxSeparation& sep, std::size_t n, const Integer& p,
                       const IntMatrix& u, std::vector<std::string> warnings) {
  const std::size_t dim = a.front().dim();
  if (u.dim() != dim) throw Error(ErrorKind::kInvalidParameter, "U has the wrong dimension");
  const ModMatrix u_mod(u, p);
  if (u_mod.determinant() == 0) throw Error(ErrorKind::kInvalidParameter, "det(U) is a multiple of p");
  const ModMatrix u_inv = u_mod.inverse();

  ProjKeyPair keys;
  keys.pub.n = n;
  keys.pub.nu = static_cast<unsigned>(a.size());
  keys.pub.p = p;
  keys.pub.dim = dim;
  for (const IntMatrix& aj : a) keys.pub.b.push_back(u_inv * ModMatrix(aj, p) * u_mod);

  keys.sec.n = n;
  keys.sec.nu = keys.pub.nu;
  keys.sec.p = p;
  keys.sec.dim = dim;
  keys.sec.a = std::move(a);
  keys.sec.u = u;
  keys.sec.sep = sep;
  keys.sec.base_point = sep.base_point();
  keys.warnings = std::move(warnings);
  return keys;
}

}  // namespace

ProjKeyPair proj_keygen(std::vector<IntMatrix> a, const BoxSeparation& sep, std::size_t n, const Integer& p,
                        const IntMatrix& u) {
  std::vector<std::string> warnings;
  normalise_generators(a, warnings);
  validate_projective(a, sep, n);
  if (!is_probable_prime(p)) throw Error(ErrorKind::kInvalidParameter, to_string(p) + " is not prime");
  const Integer bound = prime_bound(a, n);
  if (p <= bound) {
    throw Error(ErrorKind::kInvalidParameter, "p = " + to_string(p) + " does not exceed the bound " + to_string(bound));
  }
  return build_keys(std::move(a), sep, n, p, u, std::move(warnings));
}

ProjKeyPair proj_keygen(std::vector<IntMatrix> a, const BoxSeparation& sep, std::size_t n, Rng& rng) {
  std::vector<std::string> warnings;
  normalise_generators(a, warnings);
  validate_projective(a, sep, n);
  const Integer p = gen_prime_above(prime_bound(a, n));
  const IntMatrix u = random_conjugator(a.front().dim(), p, rng);
  return build_keys(std::move(a), sep, n, p, u, std::move(warnings));
}

IntMatrix random_conjugator(std::size_t dim, const Integer& p, Rng& rng) {
  while (true) {
    std::vector<Integer> e;
    for (std::size_t i = 0; i < dim * dim; ++i) e.push_back(random_below(p, rng));
    IntMatrix u(dim, std::move(e));
    if (ModMatrix(u, p).determinant() != 0) return u;
  }
}

ModMatrix evaluate(const ProjPublicKey& pk, const Word& w) {
  check_word(w, pk.b.size());
  ModMatrix out = ModMatrix::identity(pk.dim, pk.p);
  for (Symbol s : w) out = out * pk.b[s];
  return out;
}

namespace {

constexpr std::size_t kFrameMarkers = 4;

}  // namespace

Word frame_length(const Word& w, std::size_t n) {
  const unsigned nu = w.alphabet_size();
  const std::size_t pos = w.size() / 2;
  Word field(std::vector<Symbol>{1, 0}, nu);
  field = field + base_digits(w.size(), nu, digit_count(n, nu)) + Word(std::vector<Symbol>{0, 1}, nu);
  return w.slice(0, pos) + field + w.slice(pos, w.size() - pos);
}

std::optional<Word> unframe_length(const Word& framed, std::size_t n) {
  const std::size_t digits = digit_count(n, framed.alphabet_size());
  const std::size_t width = digits + kFrameMarkers;
  if (framed.size() < width) return std::nullopt;
  const std::size_t body_len = framed.size() - width;
  const std::size_t pos = body_len / 2;
  if (framed[pos] != 1 || framed[pos + 1] != 0) return std::nullopt;
  if (framed[pos + width - 2] != 0 || framed[pos + width - 1] != 1) return std::nullopt;
  if (digits_value(framed, pos + 2, digits) != body_len) return std::nullopt;
  return framed.slice(0, pos) + framed.slice(pos + width, body_len - pos);
}

ModMatrix encrypt(const ProjPublicKey& pk, const Word& w, bool with_length) {
  check_word(w, pk.b.size());
  if (with_length) {
    const Word framed = frame_length(w, pk.n);
    if (framed.size() + 1 > pk.n) {
      throw Error(ErrorKind::kMessageTooLong, "framed message plus one spare symbol needs length " +
                                                  std::to_string(framed.size() + 1) + ", the key allows " +
                                                  std::to_string(pk.n));
    }
    return evaluate(pk, framed);
  }
  if (w.empty()) throw Error(ErrorKind::kEmptyMessage, "the identity matrix is reserved");
  if (w.size() > pk.n) {
    throw Error(ErrorKind::kMessageTooLong,
                "message has " + std::to_string(w.size()) + " symbols, the key allows " + std::to_string(pk.n));
  }
  return evaluate(pk, w);
}

IntMatrix lift_cryptogram(const ProjSecretKey& sk, const ModMatrix& c) {
  if (c.modulus() != sk.p || c.dim() != sk.dim) {
    throw Error(ErrorKind::kInvalidParameter, "cryptogram does not match the key");
  }
  const ModMatrix u(sk.u, sk.p);
  return (u * c * u.inverse()).lift_symmetric();
}

std::optional<Word> decode_matrix(std::span<const IntMatrix> a, const BoxSeparation& sep, const ProjPoint& base,
                                  IntMatrix m, std::size_t max_steps) {
  std::vector<IntMatrix> adj;
  std::vector<Integer> det;
  for (const IntMatrix& aj : a) {
    adj.push_back(aj.adjugate());
    det.push_back(aj.determinant());
  }
  Word w(static_cast<unsigned>(a.size()));
  while (!m.is_identity()) {
    if (w.size() >= max_steps) return std::nullopt;
    const auto j = sep.classify(apply_homography(m, base));
    if (!j) return std::nullopt;
    w.push_back(*j);
    std::vector<Integer> next = (adj[*j] * m).entries();
    for (Integer& e : next) {
      if (!mpz_divisible_p(e.get_mpz_t(), det[*j].get_mpz_t())) return std::nullopt;
      mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), det[*j].get_mpz_t());
    }
    m = IntMatrix(m.dim(), std::move(next));
  }
  return w;
}

Word decrypt(const ProjSecretKey& sk, const ModMatrix& c, bool with_length) {
  auto w = decode_matrix(sk.a, sk.sep, sk.base_point, lift_cryptogram(sk, c), sk.n);
  if (!w) throw Error(ErrorKind::kTamperedOrCorrupt, "cryptogram does not decode");
  if (with_length) {
    auto body = unframe_length(*w, sk.n);
    if (!body) throw Error(ErrorKind::kTamperedOrCorrupt, "length field does not match the decoded message");
    return *body;
  }
  if (w->empty()) throw Error(ErrorKind::kEmptyMessage, "cryptogram is the identity");
  return *w;
}

}  // namespace ifscrypt
