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

#include <string>

#include "ifscrypt_cli/cli.hpp"

namespace ifscrypt::cli {

namespace {

unsigned bits_per_digit(unsigned nu) {
  switch (nu) {
    case 2: return 1;
    case 4: return 2;
    case 16: return 4;
    default:
      throw Error(ErrorKind::kInvalidParameter,
                  "--text needs an alphabet of size 2, 4 or 16, not " + std::to_string(nu));
  }
}

}  // namespace

Word text_to_word(std::string_view text, unsigned nu) {
  const unsigned bits = bits_per_digit(nu);
  Word w(nu);
  for (const char ch : text) {
    const auto byte = static_cast<unsigned char>(ch);
    for (int shift = 8 - static_cast<int>(bits); shift >= 0; shift -= static_cast<int>(bits)) {
      w.push_back((byte >> shift) & (nu - 1));
    }
  }
  return w;
}

std::string word_to_text(const Word& w) {
  const unsigned bits = bits_per_digit(w.alphabet_size());
  const std::size_t per_byte = 8 / bits;
  if (w.size() % per_byte != 0) {
    throw Error(ErrorKind::kParseError, "decoded word does not split into whole bytes");
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); i += per_byte) {
    unsigned byte = 0;
    for (std::size_t k = 0; k < per_byte; ++k) byte = (byte << bits) | w[i + k];
    out.push_back(static_cast<char>(byte));
  }
  return out;
}

}  // namespace ifscrypt::cli
