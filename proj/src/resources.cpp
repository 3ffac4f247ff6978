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

#include "datalab/resources.hpp"

#include "datalab/error.hpp"
#include "datalab/serialization.hpp"
#include "datalab/utf8.hpp"

namespace datalab {

WordSet parse_word_list(std::string_view content) {
  WordSet out;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    auto nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    auto line = content.substr(pos, nl - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) out.insert(utf8::lowercase(line));
    pos = nl + 1;
  }
  return out;
}

Resources::Resources(std::filesystem::path dir) : dir_(std::move(dir)) {}

void Resources::set(std::string_view name, WordSet words) {
  std::lock_guard lock(mutex_);
  cache_.insert_or_assign(std::string(name), std::make_shared<const WordSet>(std::move(words)));
}

bool Resources::available(std::string_view name) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(name); it != cache_.end()) return !it->second->empty();
  }
  if (!dir_) return false;
  std::error_code ec;
  return std::filesystem::exists(*dir_ / (std::string(name) + ".txt"), ec) &&
         !parse_word_list(read_file(*dir_ / (std::string(name) + ".txt"))).empty();
}

const WordSet& Resources::words(std::string_view name) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(name);
  if (it == cache_.end()) {
    if (!dir_) throw ConfigError("resource '" + std::string(name) + "' is not configured");
    const auto path = *dir_ / (std::string(name) + ".txt");
    if (!std::filesystem::exists(path)) {
      throw ConfigError("resource file " + path.string() + " does not exist");
    }
    auto set = std::make_shared<const WordSet>(parse_word_list(read_file(path)));
    it = cache_.emplace(std::string(name), std::move(set)).first;
  }
  if (it->second->empty()) throw ConfigError("resource '" + std::string(name) + "' is empty");
  return *it->second;
}

}  // namespace datalab
