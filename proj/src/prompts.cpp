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

#include "datalab/prompts.hpp"

#include <algorithm>

#include "datalab/error.hpp"
#include "datalab/text.hpp"

namespace datalab::prompts {

namespace {

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

}  // namespace

std::vector<Placeholder> placeholders(std::string_view t) {
  std::vector<Placeholder> out;
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i] != '{' || i + 1 >= t.size() || !ident_start(t[i + 1])) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < t.size() && ident_char(t[j])) ++j;
    if (j < t.size() && t[j] == '}') {
      out.push_back({i, j + 1, std::string(t.substr(i + 1, j - i - 1))});
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

PromptFeatures prompt_features(const Prompt& prompt) {
  PromptFeatures f;
  std::string stripped;
  std::size_t cursor = 0;
  for (const auto& p : placeholders(prompt.template_text)) {
    stripped += prompt.template_text.substr(cursor, p.begin - cursor);
    stripped += ' ';
    cursor = p.end;
    f.shape.push_back(p.name);
  }
  stripped += prompt.template_text.substr(cursor);
  f.length = text::whitespace_tokens(stripped).size();
  return f;
}

std::vector<PromptViolation> validate_prompt(const Prompt& prompt, const TaskSchema& schema) {
  std::vector<PromptViolation> out;
  if (prompt.prompt_id.empty()) out.push_back({"prompt.missing-id", ""});
  if (!prompt.tasks.empty() && !prompt.tasks.count(schema.task)) {
    out.push_back({"task.not-applicable", std::string(to_string(schema.task))});
  }
  const auto& fields = schema.required_fields;
  for (const auto& p : placeholders(prompt.template_text)) {
    if (p.name == kAnswer) continue;
    if (std::find(fields.begin(), fields.end(), p.name) == fields.end()) {
      out.push_back({"placeholder.unknown", p.name});
    }
  }
  if (schema.label_domain) {
    for (const auto& label : *schema.label_domain) {
      if (!prompt.answers.count(label)) out.push_back({"answers.missing-label", label});
    }
  }
  return out;
}

std::string apply_prompt(const Prompt& prompt, const Sample& sample, bool include_answer) {
  const auto& t = prompt.template_text;
  std::string out;
  std::size_t cursor = 0;
  bool skip_space = false;
  for (const auto& p : placeholders(t)) {
    auto literal = std::string_view(t).substr(cursor, p.begin - cursor);
    if (skip_space && !literal.empty() && literal.front() == ' ') literal.remove_prefix(1);
    skip_space = false;
    out += literal;
    cursor = p.end;

    if (p.name != kAnswer) {
      out += sample.field(p.name);
      continue;
    }
    if (include_answer) {
      if (!sample.label) {
        throw ValidationError("sample " + std::to_string(sample.sample_id) +
                              " has no label to verbalize");
      }
      auto it = prompt.answers.find(*sample.label);
      if (it == prompt.answers.end()) {
        throw ValidationError("prompt '" + prompt.prompt_id + "' has no answer for label '" +
                              *sample.label + "'");
      }
      out += it->second;
      continue;
    }
    const bool space_after = p.end < t.size() && t[p.end] == ' ';
    if (!out.empty() && out.back() == ' ' && (space_after || p.end == t.size())) {
      out.pop_back();
    } else if (out.empty() && space_after) {
      skip_space = true;
    }
  }
  auto tail = std::string_view(t).substr(cursor);
  if (skip_space && !tail.empty() && tail.front() == ' ') tail.remove_prefix(1);
  out += tail;
  return out;
}

Prompt prompt_from_json(const Json& j) {
  try {
    Prompt p;
    p.prompt_id = j.at("prompt_id").get<std::string>();
    p.language = j.value("language", std::string("en"));
    if (j.contains("task_applicability")) {
      for (const auto& t : j["task_applicability"]) p.tasks.insert(parse_task(t.get<std::string>()));
    }
    p.template_text = j.at("template").get<std::string>();
    if (j.contains("answers")) {
      p.answers = j["answers"].get<std::map<std::string, std::string>>();
    }
    if (j.contains("performance")) {
      for (const auto& r : j["performance"]) {
        p.performance.push_back({r.value("model", std::string{}), r.value("setting", std::string{}),
                                 r.value("metric", std::string{}), r.value("value", 0.0)});
      }
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed prompt: ") + e.what());
  }
}

Json to_json(const Prompt& p) {
  Json j;
  j["prompt_id"] = p.prompt_id;
  j["language"] = p.language;
  j["task_applicability"] = Json::array();
  for (auto t : p.tasks) j["task_applicability"].push_back(to_string(t));
  j["template"] = p.template_text;
  j["answers"] = Json::object();
  for (const auto& [k, v] : p.answers) j["answers"][k] = v;
  const auto f = prompt_features(p);
  j["features"] = {{"length", f.length}, {"shape", f.shape}};
  j["performance"] = Json::array();
  for (const auto& r : p.performance) {
    j["performance"].push_back(
        {{"model", r.model}, {"setting", r.setting}, {"metric", r.metric}, {"value", r.value}});
  }
  return j;
}

Prompt load_prompt(const std::filesystem::path& path) {
  try {
    return prompt_from_json(read_json_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::vector<Prompt> load_prompt_dir(const std::filesystem::path& root) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Prompt> out;
  for (const auto& f : files) out.push_back(load_prompt(f));
  return out;
}

}  // namespace datalab::prompts
