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

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

namespace datalab {

using WordSet = std::unordered_set<std::string>;

namespace resource {
inline constexpr std::string_view kBasicWords = "basic_words";
inline constexpr std::string_view kMaleWords = "male_words";
inline constexpr std::string_view kFemaleWords = "female_words";
inline constexpr std::string_view kSpellDictionary = "spell_dictionary";
inline constexpr std::string_view kHateLexicon = "hate_lexicon";
inline constexpr std::string_view kOffensiveLexicon = "offensive_lexicon";
}  // namespace resource

// One word per line, '#' starts a comment, blank lines ignored. Entries are
// lowercased since every lookup is against case-folded tokens.
WordSet parse_word_list(std::string_view content);

// Named word lists, loaded lazily from `<dir>/<name>.txt` or injected.
// Thread-safe; returned references stay valid for the object's lifetime.
class Resources {
 public:
  Resources() = default;
  explicit Resources(std::filesystem::path dir);

  Resources(const Resources&) = delete;
  Resources& operator=(const Resources&) = delete;

  void set(std::string_view name, WordSet words);

  // Throws ConfigError when the list is missing or empty.
  const WordSet& words(std::string_view name) const;
  bool available(std::string_view name) const;

  const std::optional<std::filesystem::path>& dir() const { return dir_; }

 private:
  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const WordSet>, std::less<>> cache_;
};

}  // namespace datalab
