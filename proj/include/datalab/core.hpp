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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace datalab {

enum class Task { TextClassification, Nli, Summarization, ExtractiveQa, Generic };

std::string_view to_string(Task task);
Task parse_task(std::string_view name);

struct TaskSchema {
  Task task = Task::Generic;
  std::vector<std::string> required_fields;
  // Declaration order is the canonical label order in reports.
  std::optional<std::vector<std::string>> label_domain;

  // Default required fields for `task`. Generic schemas default to {"text"}.
  static TaskSchema for_task(Task task,
                             std::optional<std::vector<std::string>> label_domain = {});

  bool requires_label() const;
  // Required fields that carry free text (everything but "answer_start").
  std::vector<std::string> text_fields() const;

  bool operator==(const TaskSchema&) const = default;
};

struct Sample {
  std::uint64_t sample_id = 0;
  std::map<std::string, std::string> fields;
  std::optional<std::string> label;
  std::map<std::string, std::vector<std::string>> annotations;

  // Throws ValidationError when the field is absent.
  const std::string& field(std::string_view name) const;

  bool operator==(const Sample&) const = default;
};

struct DatasetMetadata {
  std::vector<std::string> languages;
  std::string task;
  std::string description;
  std::optional<std::string> contributor;
  std::optional<std::string> source_url;

  bool operator==(const DatasetMetadata&) const = default;
};

struct Dataset {
  std::string name;
  DatasetMetadata metadata;
  TaskSchema schema;
  std::map<std::string, std::vector<Sample>> splits;

  // Throws ValidationError naming the split when it does not exist.
  const std::vector<Sample>& split(std::string_view name) const;
  bool has_split(std::string_view name) const;
  std::size_t total_samples() const;

  bool operator==(const Dataset&) const = default;
};

struct Violation {
  std::string split;
  std::optional<std::uint64_t> sample_id;  // nullopt for dataset-level rules
  std::string rule;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

std::string describe(const Violation& v);

// Checks every Sample/TaskSchema invariant. Result order is
// (split, sample_id, rule) with dataset-level violations first.
std::vector<Violation> validate_dataset(const Dataset& dataset);

struct CategoryValue {
  std::string value;
  bool operator==(const CategoryValue&) const = default;
};

struct TextValue {
  std::string value;
  bool operator==(const TextValue&) const = default;
};

using NumberList = std::vector<double>;
using StringList = std::vector<std::string>;
using FeatureValue = std::variant<double, CategoryValue, TextValue, NumberList, StringList>;

enum class ValueKind { Number, Category, Text, NumberList, StringList };

ValueKind kind_of(const FeatureValue& value);
std::string_view to_string(ValueKind kind);
ValueKind parse_value_kind(std::string_view name);

struct FeatureRecord {
  std::string dataset;
  std::string split;
  std::uint64_t sample_id = 0;
  std::string feature;
  FeatureValue value;
  std::string operation_id;

  bool operator==(const FeatureRecord&) const = default;
};

// Dataset and split names become directory names in the store.
bool is_safe_name(std::string_view name);

// Throws ValidationError for unsafe names, empty feature/operation ids and
// non-finite numbers.
void validate_record(const FeatureRecord& record);

}  // namespace datalab
