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

#include "ifscrypt/serialize.hpp"

#include <fstream>
#include <sstream>

namespace ifscrypt {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kParseError, "field '" + path + "': " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string child(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

Integer as_integer(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  } catch (const Error& e) {
    bad(path, e.what());
  }
  bad(path, "expected a decimal integer string");
}

Rational as_rational(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  return Rational(as_integer(j, path));
}

std::size_t as_size(const Json& j, const std::string& path) {
  const Integer v = as_integer(j, path);
  if (v < 0 || !v.fits_ulong_p()) bad(path, "expected a non-negative size");
  return v.get_ui();
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected true or false");
  return j.get<bool>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

Json str(const Integer& v) { return to_string(v); }
Json str(const Rational& v) { return to_string(v); }

Interval interval_from_json(const Json& j, const std::string& path) {
  Interval iv{as_rational(field(j, "lo", path), child(path, "lo")), as_rational(field(j, "hi", path), child(path, "hi"))};
  if (j.contains("lo_closed")) iv.lo_closed = as_bool(j["lo_closed"], child(path, "lo_closed"));
  if (j.contains("hi_closed")) iv.hi_closed = as_bool(j["hi_closed"], child(path, "hi_closed"));
  return iv;
}

std::vector<Interval> intervals_from_json(const Json& j, const std::string& path) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) out.push_back(interval_from_json(j[i], child(path, i)));
  return out;
}

IntervalSeparation interval_sep_from_json(const Json& j, const std::string& path, std::span<const AffineMap> f) {
  const Rational alpha = as_rational(field(j, "alpha", path), child(path, "alpha"));
  const Rational beta = as_rational(field(j, "beta", path), child(path, "beta"));
  const bool closed_right = j.contains("closed_right") ? as_bool(j["closed_right"], child(path, "closed_right")) : true;
  if (!j.contains("subintervals")) return IntervalSeparation::from_maps(f, alpha, beta, closed_right);
  return {alpha, beta, closed_right, intervals_from_json(j["subintervals"], child(path, "subintervals"))};
}

BoxSeparation box_sep_from_json(const Json& j, const std::string& path) {
  BoxSeparation sep;
  sep.box = intervals_from_json(field(j, "box", path), child(path, "box"));
  const Json& subs = as_array(field(j, "subboxes", path), child(path, "subboxes"));
  for (std::size_t i = 0; i < subs.size(); ++i) {
    sep.subboxes.push_back(intervals_from_json(subs[i], child(child(path, "subboxes"), i)));
  }
  return sep;
}

std::vector<AffineMap> affine_maps_from_json(const Json& j, const std::string& path) {
  std::vector<AffineMap> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    const std::string p = child(path, i);
    out.push_back({as_rational(field(j[i], "slope", p), child(p, "slope")),
                   as_rational(field(j[i], "intercept", p), child(p, "intercept"))});
  }
  return out;
}

std::vector<Integer> entries_from_json(const Json& j, std::size_t dim, const std::string& path) {
  as_array(j, path);
  std::vector<Integer> e;
  // Accept either a flat row-major array or an array of rows.
  if (!j.empty() && j[0].is_array()) {
    if (j.size() != dim) bad(path, "expected " + std::to_string(dim) + " rows");
    for (std::size_t r = 0; r < dim; ++r) {
      if (!j[r].is_array() || j[r].size() != dim) bad(child(path, r), "expected " + std::to_string(dim) + " entries");
      for (std::size_t c = 0; c < dim; ++c) e.push_back(as_integer(j[r][c], child(child(path, r), c)));
    }
  } else {
    if (j.size() != dim * dim) bad(path, "expected " + std::to_string(dim * dim) + " entries");
    for (std::size_t i = 0; i < j.size(); ++i) e.push_back(as_integer(j[i], child(path, i)));
  }
  return e;
}

IntMatrix int_matrix_from_json(const Json& j, std::size_t dim, const std::string& path) {
  return IntMatrix(dim, entries_from_json(j, dim, path));
}

std::vector<IntMatrix> int_matrices_from_json(const Json& j, std::size_t dim, const std::string& path) {
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) out.push_back(int_matrix_from_json(j[i], dim, child(path, i)));
  return out;
}

AffineMode mode_from_json(const Json& j) {
  if (!j.contains("mode")) return AffineMode::kPadded;
  const Json& m = j["mode"];
  if (m == "padded") return AffineMode::kPadded;
  if (m == "fixed-length") return AffineMode::kFixedLength;
  bad("mode", "expected \"padded\" or \"fixed-length\"");
}

void expect_scheme(const Json& j, const std::string& scheme) {
  if (scheme_of(j) != scheme) bad("scheme", "expected \"" + scheme + "\"");
}

}  // namespace

std::string scheme_of(const Json& j) {
  const Json& s = field(j, "scheme", "");
  if (s != "affine" && s != "projective") bad("scheme", "expected \"affine\" or \"projective\"");
  return s.get<std::string>();
}

Json to_json(const Interval& iv) {
  return {{"lo", str(iv.lo)}, {"hi", str(iv.hi)}, {"lo_closed", iv.lo_closed}, {"hi_closed", iv.hi_closed}};
}

Json to_json(const IntervalSeparation& sep) {
  Json subs = Json::array();
  for (const auto& iv : sep.subintervals) subs.push_back(to_json(iv));
  return {{"alpha", str(sep.alpha)}, {"beta", str(sep.beta)}, {"closed_right", sep.closed_right}, {"subintervals", subs}};
}

Json to_json(const BoxSeparation& sep) {
  Json box = Json::array();
  for (const auto& iv : sep.box) box.push_back(to_json(iv));
  Json subs = Json::array();
  for (const auto& sb : sep.subboxes) {
    Json one = Json::array();
    for (const auto& iv : sb) one.push_back(to_json(iv));
    subs.push_back(one);
  }
  return {{"box", box}, {"subboxes", subs}};
}

Json to_json(const ModMatrix& m) {
  Json out = Json::array();
  for (const auto& e : m.entries()) out.push_back(str(e));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& e : m.entries()) out.push_back(str(e));
  return out;
}

Json to_json(const AffinePublicKey& pk) {
  Json g = Json::array();
  for (const auto& map : pk.g) g.push_back({{"slope", str(map.slope.value())}, {"intercept", str(map.intercept.value())}});
  return {{"scheme", "affine"},
          {"mode", pk.mode == AffineMode::kPadded ? "padded" : "fixed-length"},
          {"n", std::to_string(pk.n)},
          {"nu", std::to_string(pk.nu)},
          {"p", str(pk.p)},
          {"gamma", str(pk.gamma.value())},
          {"g", g}};
}

Json to_json(const AffineSecretKey& sk) {
  Json f = Json::array();
  for (const auto& map : sk.f) f.push_back({{"slope", str(map.slope)}, {"intercept", str(map.intercept)}});
  return {{"scheme", "affine"},
          {"mode", sk.mode == AffineMode::kPadded ? "padded" : "fixed-length"},
          {"n", std::to_string(sk.n)},
          {"nu", std::to_string(sk.nu)},
          {"p", str(sk.p)},
          {"u", {{"a", str(sk.a)}, {"b", str(sk.b)}}},
          {"f", f},
          {"sep", to_json(sk.sep)},
          {"varpi", str(sk.varpi)},
          {"lift_exponent", std::to_string(sk.lift_exponent)}};
}

Json to_json(const AffineKeyPair& keys) {
  Json out = to_json(keys.pub);
  out.update(to_json(keys.sec));
  return out;
}

Json to_json(const ProjPublicKey& pk) {
  Json b = Json::array();
  for (const auto& m : pk.b) b.push_back(to_json(m));
  return {{"scheme", "projective"},
          {"n", std::to_string(pk.n)},
          {"nu", std::to_string(pk.nu)},
          {"p", str(pk.p)},
          {"dim", std::to_string(pk.dim)},
          {"B", b}};
}

Json to_json(const ProjKeyPair& keys) {
  Json out = to_json(keys.pub);
  Json a = Json::array();
  for (const auto& m : keys.sec.a) a.push_back(to_json(m));
  Json base = Json::array();
  for (const auto& c : keys.sec.base_point.coords()) base.push_back(str(c));
  out["A"] = a;
  out["U"] = to_json(keys.sec.u);
  out["sep"] = to_json(keys.sec.sep);
  out["base_point"] = base;
  return out;
}

AffinePublicKey affine_public_from_json(const Json& j) {
  expect_scheme(j, "affine");
  AffinePublicKey pk;
  pk.mode = mode_from_json(j);
  pk.n = as_size(field(j, "n", ""), "n");
  pk.nu = static_cast<unsigned>(as_size(field(j, "nu", ""), "nu"));
  pk.p = as_integer(field(j, "p", ""), "p");
  if (pk.p < 2) bad("p", "modulus must be at least 2");
  pk.gamma = FieldElement(as_integer(field(j, "gamma", ""), "gamma"), pk.p);
  const Json& g = as_array(field(j, "g", ""), "g");
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string path = child("g", i);
    pk.g.push_back({FieldElement(as_integer(field(g[i], "slope", path), child(path, "slope")), pk.p),
                    FieldElement(as_integer(field(g[i], "intercept", path), child(path, "intercept")), pk.p)});
  }
  if (pk.g.size() != pk.nu) bad("g", "expected " + std::to_string(pk.nu) + " maps");
  return pk;
}

AffineSecretKey affine_secret_from_json(const Json& j) {
  expect_scheme(j, "affine");
  AffineSecretKey sk;
  sk.mode = mode_from_json(j);
  sk.n = as_size(field(j, "n", ""), "n");
  sk.nu = static_cast<unsigned>(as_size(field(j, "nu", ""), "nu"));
  sk.p = as_integer(field(j, "p", ""), "p");
  const Json& u = field(j, "u", "");
  sk.a = as_integer(field(u, "a", "u"), "u.a");
  sk.b = as_integer(field(u, "b", "u"), "u.b");
  sk.f = affine_maps_from_json(field(j, "f", ""), "f");
  if (sk.f.size() != sk.nu) bad("f", "expected " + std::to_string(sk.nu) + " maps");
  sk.sep = interval_sep_from_json(field(j, "sep", ""), "sep", sk.f);
  sk.varpi = as_integer(field(j, "varpi", ""), "varpi");
  sk.lift_exponent = j.contains("lift_exponent") ? as_size(j["lift_exponent"], "lift_exponent")
                                                 : lift_exponent(sk.mode, sk.n, sk.nu, 1);
  return sk;
}

ModMatrix mod_matrix_from_json(const Json& j, std::size_t dim, const Integer& p) {
  return ModMatrix(dim, entries_from_json(j, dim, "cryptogram"), p);
}

ProjPublicKey proj_public_from_json(const Json& j) {
  expect_scheme(j, "projective");
  ProjPublicKey pk;
  pk.n = as_size(field(j, "n", ""), "n");
  pk.nu = static_cast<unsigned>(as_size(field(j, "nu", ""), "nu"));
  pk.p = as_integer(field(j, "p", ""), "p");
  if (pk.p < 2) bad("p", "modulus must be at least 2");
  pk.dim = as_size(field(j, "dim", ""), "dim");
  if (pk.dim == 0) bad("dim", "must be positive");
  const Json& b = as_array(field(j, "B", ""), "B");
  for (std::size_t i = 0; i < b.size(); ++i) {
    pk.b.emplace_back(pk.dim, entries_from_json(b[i], pk.dim, child("B", i)), pk.p);
  }
  if (pk.b.size() != pk.nu) bad("B", "expected " + std::to_string(pk.nu) + " matrices");
  return pk;
}

ProjSecretKey proj_secret_from_json(const Json& j) {
  const ProjPublicKey pk = proj_public_from_json(j);
  ProjSecretKey sk;
  sk.n = pk.n;
  sk.nu = pk.nu;
  sk.p = pk.p;
  sk.dim = pk.dim;
  sk.a = int_matrices_from_json(field(j, "A", ""), pk.dim, "A");
  if (sk.a.size() != sk.nu) bad("A", "expected " + std::to_string(sk.nu) + " matrices");
  sk.u = int_matrix_from_json(field(j, "U", ""), pk.dim, "U");
  sk.sep = box_sep_from_json(field(j, "sep", ""), "sep");
  if (j.contains("base_point")) {
    std::vector<Integer> coords;
    const Json& bp = as_array(j["base_point"], "base_point");
    for (std::size_t i = 0; i < bp.size(); ++i) coords.push_back(as_integer(bp[i], child("base_point", i)));
    if (coords.size() != pk.dim) bad("base_point", "expected " + std::to_string(pk.dim) + " coordinates");
    sk.base_point = ProjPoint(std::move(coords));
  } else {
    sk.base_point = sk.sep.base_point();
  }
  return sk;
}

SystemFile system_from_json(const Json& j) {
  const std::string scheme = scheme_of(j);
  if (scheme == "affine") {
    AffineSystem sys;
    sys.f = affine_maps_from_json(field(j, "f", ""), "f");
    sys.sep = interval_sep_from_json(field(j, "sep", ""), "sep", sys.f);
    if (j.contains("n")) sys.n = as_size(j["n"], "n");
    if (j.contains("mode")) sys.mode = mode_from_json(j);
    if (j.contains("p")) {
      sys.params = ExplicitAffineParams{as_integer(j["p"], "p"), as_integer(field(j, "a", ""), "a"),
                                        as_integer(field(j, "b", ""), "b")};
    }
    return sys;
  }
  ProjSystem sys;
  const std::size_t dim = as_size(field(j, "dim", ""), "dim");
  if (dim < 2) bad("dim", "projective systems need dim >= 2");
  sys.a = int_matrices_from_json(field(j, "A", ""), dim, "A");
  sys.sep = box_sep_from_json(field(j, "sep", ""), "sep");
  if (j.contains("n")) sys.n = as_size(j["n"], "n");
  if (j.contains("p")) sys.p = as_integer(j["p"], "p");
  if (j.contains("U")) sys.u = int_matrix_from_json(j["U"], dim, "U");
  return sys;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParseError, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParseError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace ifscrypt
