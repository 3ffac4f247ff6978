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

#include "datalab/text.hpp"

#include <algorithm>
#include <array>

#include "datalab/error.hpp"
#include "datalab/utf8.hpp"

namespace datalab::text {

namespace {

constexpr std::array<std::string_view, 7> kAbbreviations = {
    "e.g.", "i.e.", "etc.", "mr.", "dr.", "ms.", "vs."};

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_word_char(char32_t c) {
  return utf8::is_letter(c) || utf8::is_digit(c) || utf8::is_apostrophe(c);
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size()) {
    auto d = utf8::decode(s, b);
    if (!utf8::is_space(d.code_point)) break;
    b += d.length;
  }
  std::size_t e = s.size();
  while (e > b) {
    // Step back to the start of the previous code point.
    std::size_t p = e - 1;
    while (p > b && (static_cast<unsigned char>(s[p]) & 0xC0) == 0x80) --p;
    if (!utf8::is_space(utf8::decode(s, p).code_point)) break;
    e = p;
  }
  return s.substr(b, e - b);
}

}  // namespace

TokenScheme parse_scheme(std::string_view name) {
  if (name == "whitespace") return TokenScheme::Whitespace;
  if (name == "regex-word") return TokenScheme::RegexWord;
  throw ValidationError("unknown token scheme '" + std::string(name) + "'");
}

std::vector<Span> token_spans(std::string_view text, TokenScheme scheme) {
  std::vector<Span> spans;
  std::size_t pos = 0;
  std::size_t start = 0;
  bool in_token = false;
  while (pos < text.size()) {
    const auto d = utf8::decode(text, pos);
    const bool member = scheme == TokenScheme::Whitespace ? !utf8::is_space(d.code_point)
                                                          : is_word_char(d.code_point);
    if (member && !in_token) {
      start = pos;
      in_token = true;
    } else if (!member && in_token) {
      spans.push_back({start, pos});
      in_token = false;
    }
    pos += d.length;
  }
  if (in_token) spans.push_back({start, text.size()});
  return spans;
}

std::vector<std::string> tokenize(std::string_view text, TokenScheme scheme) {
  std::vector<std::string> out;
  for (const auto& s : token_spans(text, scheme)) {
    out.emplace_back(text.substr(s.begin, s.end - s.begin));
  }
  return out;
}

std::vector<std::string> folded_words(std::string_view text) {
  auto tokens = tokenize(text, TokenScheme::RegexWord);
  for (auto& t : tokens) t = utf8::lowercase(t);
  return tokens;
}

std::string lowercase(std::string_view text) { return utf8::lowercase(text); }

std::vector<std::string> sentence_split(std::string_view text) {
  std::vector<std::string> out;
  std::size_t sentence_start = 0;
  std::size_t i = 0;
  auto emit = [&](std::size_t end) {
    auto s = trim(text.substr(sentence_start, end - sentence_start));
    if (!s.empty()) out.emplace_back(s);
    sentence_start = end;
  };
  while (i < text.size()) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < text.size() && is_terminator(text[run_end])) ++run_end;
    const bool at_boundary =
        run_end == text.size() || utf8::is_space(utf8::decode(text, run_end).code_point);
    if (at_boundary) {
      // The whitespace-delimited word that ends here.
      std::size_t word_start = run_end;
      while (word_start > sentence_start) {
        std::size_t p = word_start - 1;
        while (p > sentence_start && (static_cast<unsigned char>(text[p]) & 0xC0) == 0x80) --p;
        if (utf8::is_space(utf8::decode(text, p).code_point)) break;
        word_start = p;
      }
      const auto word = utf8::lowercase(text.substr(word_start, run_end - word_start));
      const bool abbreviation =
          std::find(kAbbreviations.begin(), kAbbreviations.end(), word) != kAbbreviations.end();
      if (!abbreviation) emit(run_end);
    }
    i = run_end;
  }
  emit(text.size());
  return out;
}

std::string join(const std::vector<std::string>& tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

}  // namespace datalab::text
