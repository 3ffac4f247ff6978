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

#include "datalab/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "datalab/error.hpp"
#include "datalab/text.hpp"

namespace datalab::aggregate {

Mean mean_of(const std::map<std::uint64_t, FeatureValue>& column, const std::string& feature) {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& [_, value] : column) {
    if (const auto* d = std::get_if<double>(&value)) {
      sum += *d;
      ++n;
    }
  }
  if (n == 0) throw ValidationError("no numeric records for feature '" + feature + "'");
  return {sum / static_cast<double>(n), n};
}

Mean mean_feature(const FeatureStore& store, const std::string& dataset,
                  const std::string& split, const std::string& feature) {
  return mean_of(store.column(dataset, split, feature), feature);
}

std::vector<LabelShare> label_distribution(const Dataset& dataset, const std::string& split) {
  const auto& samples = dataset.split(split);
  const auto& schema = dataset.schema;
  const bool labeled = schema.requires_label() || schema.label_domain ||
                       std::any_of(samples.begin(), samples.end(),
                                   [](const Sample& s) { return s.label.has_value(); });
  if (!labeled) {
    throw ValidationError("dataset '" + dataset.name + "' has no labels");
  }
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const auto& s : samples) {
    if (!s.label) continue;
    ++counts[*s.label];
    ++total;
  }
  std::vector<LabelShare> out;
  if (schema.label_domain) {
    for (const auto& label : *schema.label_domain) {
      auto it = counts.find(label);
      out.push_back({label, it == counts.end() ? 0 : it->second, 0});
      if (it != counts.end()) counts.erase(it);
    }
  }
  for (const auto& [label, count] : counts) out.push_back({label, count, 0});
  for (auto& row : out) {
    row.proportion =
        total == 0 ? 0.0 : static_cast<double>(row.count) / static_cast<double>(total);
  }
  return out;
}

std::string joined_text(const Sample& sample, const TaskSchema& schema) {
  std::string out;
  for (const auto& f : schema.text_fields()) {
    auto it = sample.fields.find(f);
    if (it == sample.fields.end()) continue;
    if (!out.empty()) out += ' ';
    out += it->second;
  }
  return out;
}

WordCounts vocabulary(const Dataset& dataset, const std::string& split) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& s : dataset.split(split)) {
    for (auto& t : text::folded_words(joined_text(s, dataset.schema))) ++counts[std::move(t)];
  }
  WordCounts out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return out;
}

TfIdf tfidf(const Dataset& dataset, const std::string& split) {
  const auto& samples = dataset.split(split);
  if (samples.size() < 2) throw ValidationError("tf-idf needs at least two samples");
  TfIdf out;
  for (const auto& [word, _] : vocabulary(dataset, split)) out.vocabulary.push_back(word);

  std::unordered_map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < out.vocabulary.size(); ++i) column[out.vocabulary[i]] = i;

  std::vector<std::vector<double>> tf(samples.size(), std::vector<double>(column.size(), 0.0));
  std::vector<double> df(column.size(), 0.0);
  for (std::size_t d = 0; d < samples.size(); ++d) {
    for (const auto& t : text::folded_words(joined_text(samples[d], dataset.schema))) {
      tf[d][column.at(t)] += 1;
    }
    for (std::size_t c = 0; c < column.size(); ++c) {
      if (tf[d][c] > 0) df[c] += 1;
    }
  }
  const double n = static_cast<double>(samples.size());
  for (auto& row : tf) {
    for (std::size_t c = 0; c < row.size(); ++c) row[c] *= std::log(n / df[c]);
  }
  out.weights = std::move(tf);
  return out;
}

std::map<std::string, std::size_t> split_sizes(const Dataset& dataset) {
  std::map<std::string, std::size_t> out;
  for (const auto& [name, samples] : dataset.splits) out[name] = samples.size();
  return out;
}

}  // namespace datalab::aggregate
