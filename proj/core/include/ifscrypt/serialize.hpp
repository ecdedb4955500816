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

// JSON key, system and cryptogram files. Every integer and rational is a
// decimal string ("m/n" for rationals); readers also accept plain JSON
// numbers for small integer fields.

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <variant>

#include "ifscrypt/affine.hpp"
#include "ifscrypt/projective.hpp"

namespace ifscrypt {

using Json = nlohmann::json;

Json to_json(const AffinePublicKey& pk);
Json to_json(const AffineSecretKey& sk);  // includes the public fields
Json to_json(const AffineKeyPair& keys);  // secret document
Json to_json(const ProjPublicKey& pk);
Json to_json(const ProjKeyPair& keys);    // secret document
Json to_json(const ModMatrix& m);         // flat row-major array
Json to_json(const IntMatrix& m);
Json to_json(const Interval& iv);
Json to_json(const IntervalSeparation& sep);
Json to_json(const BoxSeparation& sep);

// Readers throw kParseError with the offending field path in the message.
AffinePublicKey affine_public_from_json(const Json& j);
AffineSecretKey affine_secret_from_json(const Json& j);
ProjPublicKey proj_public_from_json(const Json& j);
ProjSecretKey proj_secret_from_json(const Json& j);
ModMatrix mod_matrix_from_json(const Json& j, std::size_t dim, const Integer& p);

/// A generator system ready for key generation.
struct AffineSystem {
  std::vector<AffineMap> f;
  IntervalSeparation sep;
  std::optional<ExplicitAffineParams> params;
  std::optional<std::size_t> n;
  std::optional<AffineMode> mode;
};

struct ProjSystem {
  std::vector<IntMatrix> a;
  BoxSeparation sep;
  std::optional<Integer> p;
  std::optional<IntMatrix> u;
  std::optional<std::size_t> n;
};

using SystemFile = std::variant<AffineSystem, ProjSystem>;

/// When an affine system omits "subintervals" they are taken as the images of S.
SystemFile system_from_json(const Json& j);

/// "affine" or "projective"; throws kParseError otherwise.
std::string scheme_of(const Json& j);

/// Reads and parses a file; parse errors carry the line and column.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace ifscrypt
