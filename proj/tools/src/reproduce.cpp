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

// Worked examples: the triadic affine key over F_19687 with its cycle
// structure, and the 2x2 and 3x3 homographic systems.

#include <algorithm>
#include <array>

#include "ifscrypt/analysis.hpp"
#include "ifscrypt/serialize.hpp"
#include "ifscrypt_cli/cli.hpp"

namespace ifscrypt::cli {

namespace {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

class Report {
 public:
  void add(std::string name, const std::string& expected, const std::string& actual) {
    checks_.push_back({std::move(name), expected, actual, expected == actual});
  }
  void note(std::string line) { notes_.push_back(std::move(line)); }

  bool ok() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.ok; });
  }

  void print(bool json, std::ostream& out) const {
    if (json) {
      Json checks = Json::array();
      for (const Check& c : checks_) {
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
      }
      out << Json{{"checks", checks}, {"notes", notes_}, {"ok", ok()}}.dump(2) << "\n";
      return;
    }
    for (const Check& c : checks_) {
      out << c.name << " " << c.actual << " " << (c.ok ? "✓" : "✗ expected " + c.expected) << "\n";
    }
    for (const std::string& n : notes_) out << n << "\n";
    out << (ok() ? "all checks passed" : "MISMATCH") << "\n";
  }

 private:
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

std::string join_sizes(std::vector<std::uint64_t> sizes) {
  std::sort(sizes.begin(), sizes.end());
  std::string out = "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out + "}";
}

IntMatrix mat(std::size_t dim, std::vector<long> entries) {
  std::vector<Integer> e(entries.begin(), entries.end());
  return IntMatrix(dim, std::move(e));
}

Interval half_open(const Rational& lo, const Rational& hi) { return {lo, hi, true, false}; }

// Image of an interval under a 1-D homography without a pole on it.
Interval homography_image(const IntMatrix& m, const Interval& iv) {
  const auto at = [&m](const Rational& x) {
    const std::array<Rational, 1> pt{x};
    return (*apply_homography(m, ProjPoint::from_affine(pt)).affine())[0];
  };
  const Rational lo = at(iv.lo);
  const Rational hi = at(iv.hi);
  if (lo <= hi) return {lo, hi, iv.lo_closed, iv.hi_closed};
  return {hi, lo, iv.hi_closed, iv.lo_closed};
}

void affine_example(Report& report) {
  const std::vector<AffineMap> f{{make_rational(1, 3), Rational(0)}, {make_rational(1, 3), make_rational(2, 3)}};
  const IntervalSeparation sep = IntervalSeparation::from_maps(f, Rational(0), Rational(1), true);
  AffineKeygenOptions options;
  options.mode = AffineMode::kFixedLength;
  options.strict_conjugator = false;  // the published a and b share the factor 2
  const AffineKeyPair keys = affine_keygen(f, sep, 8, ExplicitAffineParams{19687, 15296, 8026}, options);

  report.add("g_0 slope", "13125", to_string(keys.pub.g[0].slope.value()));
  report.add("g_0 intercept", "8750", to_string(keys.pub.g[0].intercept.value()));
  report.add("g_1 slope", "13125", to_string(keys.pub.g[1].slope.value()));
  report.add("g_1 intercept", "10515", to_string(keys.pub.g[1].intercept.value()));

  const CycleDecomposition d0 = invariant_sets(keys.pub.g[0]);
  const CycleDecomposition d1 = invariant_sets(keys.pub.g[1]);
  const auto sizes = [](const CycleDecomposition& d) {
    std::vector<std::uint64_t> out;
    for (const Cycle& c : d.cycles) out.push_back(c.length);
    return join_sizes(out);
  };
  report.add("g_0 cycles", "{1,6562,6562,6562}", sizes(d0));
  report.add("g_1 cycles", "{1,6562,6562,6562}", sizes(d1));

  const IntersectionReport inter = intersection_report(d0, d1);
  report.add("large cycles pairwise intersect", "yes", inter.separation_impossible ? "yes" : "no");
  std::string table = "intersection table:";
  for (const auto& row : inter.sizes) {
    table += "\n ";
    for (const auto v : row) table += " " + std::to_string(v);
  }
  report.note(table);
}

void interval_example(Report& report, std::size_t n, const Integer& p) {
  const std::vector<IntMatrix> a{mat(2, {1, 0, 1, 1}), mat(2, {1, 1, 0, 2})};
  const Interval unit = half_open(0, 1);
  const BoxSeparation sep{{unit}, {{half_open(0, make_rational(1, 2))}, {half_open(make_rational(1, 2), 1)}}};

  report.add("2x2 image of [0, 1) under A_0", "[0, 1/2)", homography_image(a[0], unit).str());
  report.add("2x2 image of [0, 1) under A_1", "[1/2, 1)", homography_image(a[1], unit).str());
  report.add("2x2 separation", "ok", verify_separation(a, sep).ok ? "ok" : "violated");

  const Integer bound = prime_bound(a, n);
  report.add("2x2 p = " + to_string(p) + " above prime_bound(n = " + std::to_string(n) + ") = " + to_string(bound),
             "yes", p > bound && is_probable_prime(p) ? "yes" : "no");
  if (!(p > bound && is_probable_prime(p))) return;

  const ProjKeyPair keys = proj_keygen(a, sep, n, p, IntMatrix::identity(2));
  std::size_t words = 0;
  std::size_t recovered = 0;
  for (std::size_t len = 1; len <= n && len < 20; ++len) {
    for (std::uint64_t rank = 0; rank < (std::uint64_t{1} << len); ++rank) {
      const Word w = base_digits(rank, 2, len);
      ++words;
      if (decrypt(keys.sec, encrypt(keys.pub, w)) == w) ++recovered;
    }
  }
  report.add("2x2 round trip of every word up to length " + std::to_string(n), std::to_string(words),
             std::to_string(recovered));
}

void square_example(Report& report) {
  const std::vector<IntMatrix> a{mat(3, {1, 0, 0, 0, 1, 0, 1, 1, 1}), mat(3, {1, 0, 1, 0, 1, 1, 0, 0, 2}),
                                 mat(3, {1, 0, 1, 0, 1, 0, 0, 0, 2}), mat(3, {1, 0, 0, 0, 1, 1, 0, 0, 2})};
  const Rational half = make_rational(1, 2);
  const Interval lower = half_open(0, half);
  const Interval upper = half_open(half, 1);
  const BoxSeparation sep{{half_open(0, 1), half_open(0, 1)},
                          {{lower, lower}, {upper, upper}, {upper, lower}, {lower, upper}}};
  const SeparationReport r = verify_separation(a, sep);
  report.add("3x3 separation on [0, 1) x [0, 1)", "ok", r.ok ? "ok" : "violated");
  report.add("3x3 separation proven exactly", "yes", r.proven ? "yes" : "no");
}

}  // namespace

int reproduce(std::size_t n, const Integer& p, bool json, std::ostream& out) {
  Report report;
  affine_example(report);
  interval_example(report, n, p);
  square_example(report);
  report.print(json, out);
  return report.ok() ? kExitOk : kExitCryptoFailure;
}

}  // namespace ifscrypt::cli
