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

#include "datalab/edit.hpp"

#include <algorithm>
#include <utility>

#include "datalab/text.hpp"

namespace datalab::edit {

EditOutcome delete_token(std::string_view text, std::uint64_t seed) {
  auto tokens = text::whitespace_tokens(text);
  if (tokens.empty()) return {std::string(text), true};
  tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(seed % tokens.size()));
  return {text::join(tokens), false};
}

EditOutcome swap_adjacent(std::string_view text, std::uint64_t seed) {
  auto tokens = text::whitespace_tokens(text);
  if (tokens.size() < 2) return {std::string(text), true};
  const auto i = seed % (tokens.size() - 1);
  std::swap(tokens[i], tokens[i + 1]);
  return {text::join(tokens), false};
}

std::vector<std::size_t> pick_positions(std::size_t m, std::size_t limit, std::uint64_t seed) {
  std::vector<std::size_t> picks;
  if (m == 0) return picks;
  const std::size_t target = std::min(limit, m);
  std::vector<bool> taken(m, false);
  // kDispersion is prime, so k = 0..m-1 visits every residue when m < kDispersion.
  for (std::uint64_t k = 0; picks.size() < target && k < m; ++k) {
    const auto index = static_cast<std::size_t>(
        (static_cast<unsigned __int128>(seed) + static_cast<unsigned __int128>(k) * kDispersion) %
        m);
    if (taken[index]) continue;
    taken[index] = true;
    picks.push_back(index);
  }
  return picks;
}

EditOutcome dict_replace(std::string_view text, const Lexicon& lexicon,
                         std::size_t max_replacements, std::uint64_t seed) {
  if (lexicon.empty()) return {std::string(text), true};
  const auto spans = text::token_spans(text, text::TokenScheme::RegexWord);
  std::vector<std::pair<text::Span, const std::string*>> candidates;
  for (const auto& s : spans) {
    auto it = lexicon.find(std::string(text.substr(s.begin, s.end - s.begin)));
    if (it != lexicon.end()) candidates.emplace_back(s, &it->second);
  }
  auto picks = pick_positions(candidates.size(), max_replacements, seed);
  std::sort(picks.begin(), picks.end());

  std::string out;
  std::size_t cursor = 0;
  for (auto idx : picks) {
    const auto& [span, replacement] = candidates[idx];
    out.append(text.substr(cursor, span.begin - cursor));
    out.append(*replacement);
    cursor = span.end;
  }
  out.append(text.substr(cursor));
  return {std::move(out), false};
}

}  // namespace datalab::edit
