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
#include <string>
#include <string_view>
#include <vector>

namespace datalab::text {

enum class TokenScheme {
  Whitespace,  // split on runs of Unicode whitespace
  RegexWord,   // maximal runs of letters, digits and apostrophes
};

TokenScheme parse_scheme(std::string_view name);

// Half-open byte range into the tokenized string.
struct Span {
  std::size_t begin;
  std::size_t end;
};

std::vector<Span> token_spans(std::string_view text, TokenScheme scheme);
std::vector<std::string> tokenize(std::string_view text, TokenScheme scheme);

inline std::vector<std::string> whitespace_tokens(std::string_view text) {
  return tokenize(text, TokenScheme::Whitespace);
}
inline std::vector<std::string> word_tokens(std::string_view text) {
  return tokenize(text, TokenScheme::RegexWord);
}
// Lowercased regex-word tokens: the unit for vocabulary and lexicon lookups.
std::vector<std::string> folded_words(std::string_view text);

std::string lowercase(std::string_view text);

// Splits after '.', '!' or '?' (or a run of them) when followed by
// whitespace or end of text. Words in the abbreviation list never end a
// sentence. Sentences are returned trimmed; whitespace-only input gives [].
std::vector<std::string> sentence_split(std::string_view text);

std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ");

}  // namespace datalab::text
