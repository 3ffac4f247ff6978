// Copyright 2026 The datalab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

// Minimal UTF-8 support: decoding, validation, and the handful of character
// classes the tokenizers and case folding need. No locale is consulted, so
// results are identical on every platform.
namespace datalab::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t code_point;
  std::size_t length;  // bytes consumed, >= 1
};

// Decodes the sequence starting at `pos`. Malformed input yields
// kReplacement with length 1 so callers always make progress.
Decoded decode(std::string_view text, std::size_t pos);

void append(std::string& out, char32_t code_point);

// Byte offset of the first malformed sequence, or nullopt if `text` is valid.
std::optional<std::size_t> first_invalid(std::string_view text);
inline bool is_valid(std::string_view text) { return !first_invalid(text); }

// Number of code points.
std::size_t length(std::string_view text);

bool is_space(char32_t c);
bool is_digit(char32_t c);
// Letters: ASCII letters plus every non-ASCII code point outside the
// punctuation, symbol, whitespace and control blocks.
bool is_letter(char32_t c);
bool is_apostrophe(char32_t c);

// Simple (one-to-one) lowercase mapping for Latin, Greek and Cyrillic.
char32_t to_lower(char32_t c);
std::string lowercase(std::string_view text);

}  // namespace datalab::utf8
