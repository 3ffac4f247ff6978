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
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "datalab/core.hpp"
#include "datalab/serialization.hpp"

namespace datalab::prompts {

// Free-form provenance; stored, never interpreted.
struct PerformanceRecord {
  std::string model;
  std::string setting;
  std::string metric;
  double value = 0;
  bool operator==(const PerformanceRecord&) const = default;
};

struct Prompt {
  std::string prompt_id;
  std::string language;
  std::set<Task> tasks;
  std::string template_text;                  // `{field}` and `{answer}` placeholders
  std::map<std::string, std::string> answers;  // label -> verbalizer
  std::vector<PerformanceRecord> performance;
  bool operator==(const Prompt&) const = default;
};

inline constexpr std::string_view kAnswer = "answer";

struct Placeholder {
  std::size_t begin;  // byte offset of '{'
  std::size_t end;    // one past '}'
  std::string name;
};

// `{identifier}` spans; any other brace is literal text.
std::vector<Placeholder> placeholders(std::string_view template_text);

struct PromptFeatures {
  std::size_t length = 0;          // whitespace tokens once placeholders are removed
  std::vector<std::string> shape;  // placeholder names in order
  bool operator==(const PromptFeatures&) const = default;
};
PromptFeatures prompt_features(const Prompt& prompt);

struct PromptViolation {
  std::string rule;
  std::string detail;
  bool operator==(const PromptViolation&) const = default;
};
std::vector<PromptViolation> validate_prompt(const Prompt& prompt, const TaskSchema& schema);

// One pass over the template; substituted text is never re-scanned. Without
// the answer, `{answer}` becomes empty and the space pair around it
// collapses to one space (or none at either end of the text).
// Throws ValidationError when the answer is requested for an unlabeled
// sample or the label has no verbalizer.
std::string apply_prompt(const Prompt& prompt, const Sample& sample, bool include_answer);

Prompt prompt_from_json(const Json& j);
Json to_json(const Prompt& prompt);
Prompt load_prompt(const std::filesystem::path& path);
// Every `<root>/<task>/<id>.json`, ordered by path.
std::vector<Prompt> load_prompt_dir(const std::filesystem::path& root);

}  // namespace datalab::prompts
