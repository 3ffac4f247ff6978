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

#include "datalab/core.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "datalab/error.hpp"
#include "datalab/utf8.hpp"

namespace datalab {

std::string_view to_string(Task task) {
  switch (task) {
    case Task::TextClassification: return "text-classification";
    case Task::Nli: return "nli";
    case Task::Summarization: return "summarization";
    case Task::ExtractiveQa: return "extractive-qa";
    case Task::Generic: return "generic";
  }
  return "generic";
}

Task parse_task(std::string_view name) {
  for (auto t : {Task::TextClassification, Task::Nli, Task::Summarization,
                 Task::ExtractiveQa, Task::Generic}) {
    if (to_string(t) == name) return t;
  }
  throw ValidationError("unknown task '" + std::string(name) + "'");
}

TaskSchema TaskSchema::for_task(Task task,
                                std::optional<std::vector<std::string>> label_domain) {
  TaskSchema s;
  s.task = task;
  s.label_domain = std::move(label_domain);
  switch (task) {
    case Task::TextClassification: s.required_fields = {"text"}; break;
    case Task::Nli: s.required_fields = {"premise", "hypothesis"}; break;
    case Task::Summarization: s.required_fields = {"source", "summary"}; break;
    case Task::ExtractiveQa:
      s.required_fields = {"context", "question", "answer", "answer_start"};
      break;
    case Task::Generic: s.required_fields = {"text"}; break;
  }
  return s;
}

bool TaskSchema::requires_label() const {
  return task == Task::TextClassification || task == Task::Nli;
}

std::vector<std::string> TaskSchema::text_fields() const {
  std::vector<std::string> out;
  for (const auto& f : required_fields) {
    if (f != "answer_start") out.push_back(f);
  }
  return out;
}

const std::string& Sample::field(std::string_view name) const {
  auto it = fields.find(std::string(name));
  if (it == fields.end()) {
    throw ValidationError("sample " + std::to_string(sample_id) + " has no field '" +
                          std::string(name) + "'");
  }
  return it->second;
}

const std::vector<Sample>& Dataset::split(std::string_view name) const {
  auto it = splits.find(std::string(name));
  if (it == splits.end()) {
    throw ValidationError("dataset '" + this->name + "' has no split '" + std::string(name) +
                          "'");
  }
  return it->second;
}

bool Dataset::has_split(std::string_view name) const {
  return splits.count(std::string(name)) > 0;
}

std::size_t Dataset::total_samples() const {
  std::size_t n = 0;
  for (const auto& [_, samples] : splits) n += samples.size();
  return n;
}

std::string describe(const Violation& v) {
  std::string out = v.split.empty() ? std::string("<dataset>") : v.split;
  if (v.sample_id) out += "#" + std::to_string(*v.sample_id);
  out += ": " + v.rule;
  if (!v.detail.empty()) out += " (" + v.detail + ")";
  return out;
}

std::vector<Violation> validate_dataset(const Dataset& dataset) {
  std::vector<Violation> out;
  const auto& schema = dataset.schema;

  bool any_samples = false;
  for (const auto& [name, samples] : dataset.splits) any_samples |= !samples.empty();
  if (!any_samples) out.push_back({"", std::nullopt, "dataset.empty", "no non-empty split"});
  if (schema.requires_label() && schema.label_domain && schema.label_domain->empty()) {
    out.push_back({"", std::nullopt, "schema.empty-label-domain", ""});
  }

  for (const auto& [split, samples] : dataset.splits) {
    if (!is_safe_name(split)) {
      out.push_back({split, std::nullopt, "split.bad-name", "'" + split + "'"});
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      auto add = [&](std::string rule, std::string detail) {
        out.push_back({split, s.sample_id, std::move(rule), std::move(detail)});
      };
      if (s.sample_id != i) {
        add("sample.id-not-contiguous", "expected " + std::to_string(i));
      }
      for (const auto& f : schema.required_fields) {
        auto it = s.fields.find(f);
        if (it == s.fields.end()) {
          add("field.missing", f);
        } else if (!utf8::is_valid(it->second)) {
          add("field.invalid-utf8", f);
        }
      }
      if (!s.label) {
        if (schema.requires_label()) add("label.missing", "");
      } else if (schema.label_domain) {
        const auto& dom = *schema.label_domain;
        if (std::find(dom.begin(), dom.end(), *s.label) == dom.end()) {
          add("label.outside-domain", "'" + *s.label + "'");
        }
      }
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.split, a.sample_id, a.rule) < std::tie(b.split, b.sample_id, b.rule);
  });
  return out;
}

ValueKind kind_of(const FeatureValue& value) {
  return static_cast<ValueKind>(value.index());
}

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Number: return "number";
    case ValueKind::Category: return "category";
    case ValueKind::Text: return "text";
    case ValueKind::NumberList: return "number_list";
    case ValueKind::StringList: return "string_list";
  }
  return "number";
}

ValueKind parse_value_kind(std::string_view name) {
  for (auto k : {ValueKind::Number, ValueKind::Category, ValueKind::Text,
                 ValueKind::NumberList, ValueKind::StringList}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("unknown value_type '" + std::string(name) + "'");
}

bool is_safe_name(std::string_view name) {
  if (name.empty() || name.front() == '.') return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '/' || c == '\\' || c == '\0' || static_cast<unsigned char>(c) < 0x20;
  });
}

void validate_record(const FeatureRecord& r) {
  if (!is_safe_name(r.dataset)) throw ValidationError("bad dataset name '" + r.dataset + "'");
  if (!is_safe_name(r.split)) throw ValidationError("bad split name '" + r.split + "'");
  if (r.feature.empty()) throw ValidationError("feature name is empty");
  if (r.operation_id.empty()) throw ValidationError("operation_id is empty");
  auto finite = [&](double v) {
    if (!std::isfinite(v)) {
      throw ValidationError("non-finite value for feature '" + r.feature + "'");
    }
  };
  if (const auto* d = std::get_if<double>(&r.value)) finite(*d);
  if (const auto* l = std::get_if<NumberList>(&r.value)) {
    for (double v : *l) finite(v);
  }
}

}  // namespace datalab
