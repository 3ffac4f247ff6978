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

#include "datalab/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "datalab/error.hpp"

namespace datalab {

Json value_to_json(const FeatureValue& value) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CategoryValue> || std::is_same_v<T, TextValue>) {
          return v.value;
        } else {
          return v;
        }
      },
      value);
}

FeatureValue value_from_json(ValueKind kind, const Json& j) {
  try {
    switch (kind) {
      case ValueKind::Number: {
        if (!j.is_number()) throw ValidationError("expected a number");
        return j.get<double>();
      }
      case ValueKind::Category: return CategoryValue{j.get<std::string>()};
      case ValueKind::Text: return TextValue{j.get<std::string>()};
      case ValueKind::NumberList: return j.get<NumberList>();
      case ValueKind::StringList: return j.get<StringList>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("value does not match value_type ") +
                          std::string(to_string(kind)) + ": " + e.what());
  }
  throw ValidationError("bad value kind");
}

Json to_json(const TaskSchema& schema) {
  Json j;
  j["task"] = to_string(schema.task);
  j["required_fields"] = schema.required_fields;
  if (schema.label_domain) j["label_domain"] = *schema.label_domain;
  return j;
}

TaskSchema schema_from_json(const Json& j) {
  try {
    std::optional<std::vector<std::string>> domain;
    if (j.contains("label_domain") && !j["label_domain"].is_null()) {
      domain = j["label_domain"].get<std::vector<std::string>>();
    }
    auto schema = TaskSchema::for_task(parse_task(j.at("task").get<std::string>()),
                                       std::move(domain));
    if (j.contains("required_fields")) {
      auto fields = j["required_fields"].get<std::vector<std::string>>();
      if (schema.task != Task::Generic && fields != schema.required_fields) {
        throw ValidationError("required_fields for task '" +
                              std::string(to_string(schema.task)) + "' are fixed");
      }
      schema.required_fields = std::move(fields);
    }
    return schema;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed schema: ") + e.what());
  }
}

Json to_json(const DatasetMetadata& m) {
  Json j;
  j["languages"] = m.languages;
  j["task"] = m.task;
  j["description"] = m.description;
  if (m.contributor) j["contributor"] = *m.contributor;
  if (m.source_url) j["source_url"] = *m.source_url;
  return j;
}

DatasetMetadata metadata_from_json(const Json& j) {
  try {
    DatasetMetadata m;
    m.languages = j.value("languages", std::vector<std::string>{});
    m.task = j.value("task", std::string{});
    m.description = j.value("description", std::string{});
    if (j.contains("contributor")) m.contributor = j["contributor"].get<std::string>();
    if (j.contains("source_url")) m.source_url = j["source_url"].get<std::string>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed metadata: ") + e.what());
  }
}

Json to_json(const Sample& s) {
  Json j;
  j["sample_id"] = s.sample_id;
  for (const auto& [k, v] : s.fields) j["fields"][k] = v;
  if (s.label) j["label"] = *s.label;
  if (!s.annotations.empty()) {
    for (const auto& [k, v] : s.annotations) j["annotations"][k] = v;
  }
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StorageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) {
  const auto text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StorageError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw StorageError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw StorageError("cannot replace " + path.string() + ": " + ec.message());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace datalab
