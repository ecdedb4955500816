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

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests can drive it in-process.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ifscrypt/ifs.hpp"

namespace ifscrypt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCryptoFailure = 1;  // tampered, rejected, not found
inline constexpr int kExitUsage = 2;          // bad flags or unreadable input

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Bytes to base-nu digits, most significant first, for nu in {2, 4, 16}.
Word text_to_word(std::string_view text, unsigned nu);
/// Inverse of text_to_word; throws kParseError on a ragged digit count.
std::string word_to_text(const Word& w);

/// Recomputes the published worked examples; nonzero on any mismatch.
/// n and p configure the 2x2 projective check.
int reproduce(std::size_t n, const Integer& p, bool json, std::ostream& out);

}  // namespace ifscrypt::cli
