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
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "datalab/core.hpp"
#include "datalab/feature_store.hpp"

// Dataset-level statistics over one split.
namespace datalab::aggregate {

struct Mean {
  double mean = 0;
  std::size_t count = 0;
  bool operator==(const Mean&) const = default;
};

// Mean over the Number values of `column`; throws ValidationError naming
// `feature` when there are none.
Mean mean_of(const std::map<std::uint64_t, FeatureValue>& column, const std::string& feature);
Mean mean_feature(const FeatureStore& store, const std::string& dataset,
                  const std::string& split, const std::string& feature);

struct LabelShare {
  std::string label;
  std::size_t count = 0;
  double proportion = 0;
  bool operator==(const LabelShare&) const = default;
};

// Domain labels first in declaration order (zero rows included), then any
// other observed labels lexicographically. Throws for unlabeled tasks.
std::vector<LabelShare> label_distribution(const Dataset& dataset, const std::string& split);

using WordCounts = std::vector<std::pair<std::string, std::size_t>>;

// Folded regex-word counts over all schema text fields, ordered by
// descending count then lexicographically.
WordCounts vocabulary(const Dataset& dataset, const std::string& split);

struct TfIdf {
  std::vector<std::string> vocabulary;        // vocabulary() order
  std::vector<std::vector<double>> weights;   // one row per sample
};

// tf = raw count, idf = ln(N / df). Requires at least two samples.
TfIdf tfidf(const Dataset& dataset, const std::string& split);

std::map<std::string, std::size_t> split_sizes(const Dataset& dataset);

// Concatenation of a sample's schema text fields, separated by spaces.
std::string joined_text(const Sample& sample, const TaskSchema& schema);

}  // namespace datalab::aggregate
