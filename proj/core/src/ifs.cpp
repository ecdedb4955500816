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

#include "ifscrypt/ifs.hpp"

#include <algorithm>
#include <sstream>

namespace ifscrypt {

// ---------------------------------------------------------------------------
// Word

Word::Word(unsigned alphabet_size) : nu_(alphabet_size) {
  if (nu_ < 2) throw Error(ErrorKind::kInvalidWord, "alphabet size must be at least 2");
}

Word::Word(std::vector<Symbol> symbols, unsigned alphabet_size) : Word(alphabet_size) {
  for (Symbol s : symbols) {
    if (s >= nu_) {
      throw Error(ErrorKind::kInvalidWord,
                  "symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(nu_));
    }
  }
  symbols_ = std::move(symbols);
}

Word Word::parse(std::string_view text, unsigned alphabet_size) {
  std::vector<Symbol> symbols;
  if (alphabet_size <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw Error(ErrorKind::kInvalidWord, std::string("not a digit: '") + c + "'");
      }
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
  } else if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      const std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
      const Integer v = parse_integer(item);
      if (v < 0 || !v.fits_uint_p()) throw Error(ErrorKind::kInvalidWord, "bad symbol '" + std::string(item) + "'");
      symbols.push_back(static_cast<Symbol>(v.get_ui()));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Word(std::move(symbols), alphabet_size);
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (nu_ <= 10) {
      out.push_back(static_cast<char>('0' + symbols_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(symbols_[i]);
    }
  }
  return out;
}

void Word::push_back(Symbol s) {
  if (s >= nu_) throw Error(ErrorKind::kInvalidWord, "symbol " + std::to_string(s) + " outside alphabet");
  symbols_.push_back(s);
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, symbols_.size());
  len = std::min(len, symbols_.size() - pos);
  Word out(nu_);
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

Word Word::operator+(const Word& rhs) const {
  if (rhs.nu_ != nu_) throw Error(ErrorKind::kInvalidWord, "concatenating words over different alphabets");
  Word out = *this;
  out.symbols_.insert(out.symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return out;
}

std::size_t digit_count(std::uint64_t value, unsigned nu) {
  std::size_t count = 1;
  while (value >= nu) {
    value /= nu;
    ++count;
  }
  return count;
}

Word base_digits(std::uint64_t value, unsigned nu, std::size_t width) {
  std::vector<Symbol> digits(width, 0);
  for (std::size_t i = width; i-- > 0;) {
    digits[i] = static_cast<Symbol>(value % nu);
    value /= nu;
  }
  if (value != 0) throw Error(ErrorKind::kInvalidParameter, "value does not fit in the digit field");
  return Word(std::move(digits), nu);
}

std::uint64_t digits_value(const Word& w, std::size_t pos, std::size_t len) {
  std::uint64_t value = 0;
  for (std::size_t i = pos; i < pos + len; ++i) value = value * w.alphabet_size() + w[i];
  return value;
}

// ---------------------------------------------------------------------------
// Maps

AffineMap identity_map() { return {Rational(1), Rational(0)}; }

FieldAffineMap identity_map(const Integer& p) { return {FieldElement(1, p), FieldElement(0, p)}; }

AffineMap inverse(const AffineMap& map) {
  if (map.slope == 0) throw Error(ErrorKind::kNotABijection, "affine map with zero slope");
  const Rational inv = 1 / map.slope;
  return {inv, -map.intercept * inv};
}

FieldAffineMap inverse(const FieldAffineMap& map) {
  const FieldElement inv = map.slope.inverse();
  return {inv, -(map.intercept * inv)};
}

void check_word(const Word& w, std::size_t system_size) {
  if (w.alphabet_size() != system_size) {
    throw Error(ErrorKind::kInvalidWord, "word over an alphabet of size " + std::to_string(w.alphabet_size()) +
                                             " used with a system of " + std::to_string(system_size) + " maps");
  }
}

AffineMap compose(std::span<const AffineMap> f, const Word& w) { return compose(f, w, identity_map()); }

FieldAffineMap compose(std::span<const FieldAffineMap> g, const Word& w) {
  if (g.empty()) throw Error(ErrorKind::kInvalidSystem, "empty system");
  return compose(g, w, identity_map(g.front().slope.modulus()));
}

// ---------------------------------------------------------------------------
// Intervals

bool Interval::contains(const Rational& x) const {
  const bool above = lo < x || (lo_closed && lo == x);
  const bool below = x < hi || (hi_closed && x == hi);
  return above && below;
}

bool Interval::empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

bool Interval::intersects(const Interval& other) const {
  Interval meet;
  if (lo > other.lo) {
    meet.lo = lo;
    meet.lo_closed = lo_closed;
  } else if (lo < other.lo) {
    meet.lo = other.lo;
    meet.lo_closed = other.lo_closed;
  } else {
    meet.lo = lo;
    meet.lo_closed = lo_closed && other.lo_closed;
  }
  if (hi < other.hi) {
    meet.hi = hi;
    meet.hi_closed = hi_closed;
  } else if (hi > other.hi) {
    meet.hi = other.hi;
    meet.hi_closed = other.hi_closed;
  } else {
    meet.hi = hi;
    meet.hi_closed = hi_closed && other.hi_closed;
  }
  return !meet.empty();
}

bool Interval::contains(const Interval& other) const {
  if (other.empty()) return true;
  const bool lo_ok = lo < other.lo || (lo == other.lo && (lo_closed || !other.lo_closed));
  const bool hi_ok = other.hi < hi || (hi == other.hi && (hi_closed || !other.hi_closed));
  return lo_ok && hi_ok;
}

std::string Interval::str() const {
  return std::string(lo_closed ? "[" : "(") + to_string(lo) + ", " + to_string(hi) + (hi_closed ? "]" : ")");
}

Interval image(const AffineMap& map, const Interval& interval) {
  if (map.slope == 0) throw Error(ErrorKind::kInvalidSystem, "affine map with zero slope");
  if (map.slope > 0) return {map(interval.lo), map(interval.hi), interval.lo_closed, interval.hi_closed};
  return {map(interval.hi), map(interval.lo), interval.hi_closed, interval.lo_closed};
}

Interval IntervalSeparation::base() const { return {alpha, alpha + beta, true, closed_right}; }

IntervalSeparation IntervalSeparation::from_maps(std::span<const AffineMap> f, const Rational& alpha,
                                                 const Rational& beta, bool closed_right) {
  IntervalSeparation sep{alpha, beta, closed_right, {}};
  const Interval s = sep.base();
  for (const AffineMap& map : f) sep.subintervals.push_back(image(map, s));
  return sep;
}

SeparationReport verify_separation(std::span<const AffineMap> f, const IntervalSeparation& sep) {
  SeparationReport report;
  auto fail = [&report](std::string what) {
    report.ok = false;
    report.violations.push_back(std::move(what));
  };
  if (f.size() < 2) fail("a system needs at least two maps");
  if (sep.beta <= 0) {
    fail("beta must be positive");
    return report;
  }
  if (sep.subintervals.size() != f.size()) {
    fail("expected " + std::to_string(f.size()) + " subintervals, got " + std::to_string(sep.subintervals.size()));
    return report;
  }
  const Interval s = sep.base();
  for (std::size_t j = 0; j < f.size(); ++j) {
    const Interval& sj = sep.subintervals[j];
    if (f[j].slope == 0) {
      fail("f_" + std::to_string(j) + " is constant");
      continue;
    }
    const Interval img = image(f[j], s);
    if (!(img == sj)) {
      fail("f_" + std::to_string(j) + " maps S onto " + img.str() + ", not onto S_" + std::to_string(j) + " = " +
           sj.str());
    }
    if (!s.contains(sj)) fail("S_" + std::to_string(j) + " = " + sj.str() + " is not contained in S = " + s.str());
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (sep.subintervals[i].intersects(sep.subintervals[j])) {
        fail("S_" + std::to_string(i) + " = " + sep.subintervals[i].str() + " meets S_" + std::to_string(j) + " = " +
             sep.subintervals[j].str());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Decoders

std::optional<Symbol> classify(const IntervalSeparation& sep, const Rational& y) {
  for (std::size_t j = 0; j < sep.subintervals.size(); ++j) {
    if (sep.subintervals[j].contains(y)) return static_cast<Symbol>(j);
  }
  return std::nullopt;
}

namespace {

std::vector<AffineMap> inverses(std::span<const AffineMap> f) {
  std::vector<AffineMap> out;
  out.reserve(f.size());
  for (const AffineMap& map : f) out.push_back(inverse(map));
  return out;
}

}  // namespace

std::optional<Word> decode_fixed_length(std::span<const AffineMap> f, const IntervalSeparation& sep, Rational y,
                                        std::size_t n) {
  const std::vector<AffineMap> inv = inverses(f);
  Word w(static_cast<unsigned>(f.size()));
  while (w.size() < n) {
    const auto j = classify(sep, y);
    if (!j) return std::nullopt;
    w.push_back(*j);
    y = inv[*j](y);
  }
  return w;
}

std::optional<Word> decode_until_base(std::span<const AffineMap> f, const IntervalSeparation& sep, const Rational& x,
                                      Rational y, std::size_t max_steps) {
  const std::vector<AffineMap> inv = inverses(f);
  Word w(static_cast<unsigned>(f.size()));
  while (y != x) {
    if (w.size() >= max_steps) return std::nullopt;
    const auto j = classify(sep, y);
    if (!j) return std::nullopt;
    w.push_back(*j);
    y = inv[*j](y);
  }
  return w;
}

}  // namespace ifscrypt
