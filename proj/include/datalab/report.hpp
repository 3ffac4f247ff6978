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

#include <optional>
#include <string>
#include <vector>

#include "datalab/core.hpp"
#include "datalab/diagnostics.hpp"
#include "datalab/feature_store.hpp"
#include "datalab/ops.hpp"
#include "datalab/resources.hpp"
#include "datalab/serialization.hpp"

namespace datalab::report {

inline constexpr const char* kToolkitVersion = DATALAB_VERSION;

struct Histogram {
  std::string feature;
  bool categorical = false;
  std::vector<double> edges;            // numeric: B+1 strictly increasing edges
  std::vector<std::string> categories;  // categorical: one label per bin
  std::vector<std::size_t> counts;
};

// Equal-width bins over [min, max], each bin [lo, hi) except the last,
// which is closed. A single-valued feature yields one bin [v-0.5, v+0.5].
// Category features get one bin per distinct value, in lexicographic order.
Histogram build_histogram(const FeatureStore& store, const std::string& dataset,
                          const std::string& split, const std::string& feature, std::size_t bins);
Histogram numeric_histogram(const std::string& feature, const std::vector<double>& values,
                            std::size_t bins);

Json to_json(const Histogram& h);

struct Axis {
  std::string name;
  std::optional<double> raw_a;
  std::optional<double> raw_b;
  // Min-max over the pair; equal raw values map to 0.5 for both.
  std::optional<double> normalized_a;
  std::optional<double> normalized_b;
};

struct ComparisonVector {
  std::string dataset_a;
  std::string dataset_b;
  std::string split;
  std::vector<Axis> axes;
};

// Summarization pairs compare mean density, novelty and coverage; other
// tasks compare mean length, mean lexical richness and label entropy (nats).
ComparisonVector compare_datasets(const Dataset& a, const Dataset& b, const std::string& split);

Json to_json(const ComparisonVector& c);

struct ReportConfig {
  std::string generated_at;  // injected so reports stay reproducible
  std::size_t histogram_bins = 10;
  double artifact_threshold = 0.1;
  std::size_t artifact_bins = 4;
  diagnostics::LogBase log_base = diagnostics::LogBase::E;
  // Features scanned for artifacts; empty means the length features.
  std::vector<std::string> artifact_features;
  unsigned jobs = 1;
  const Dataset* compare_with = nullptr;
  // Section names to build; empty builds all of kSectionNames.
  std::vector<std::string> sections;
};

inline const std::vector<std::string> kSectionNames{
    "characteristics", "label_distribution", "gender_bias", "speech_bias", "artifacts",
    "comparison"};

enum class SectionStatus { Ok, Skipped, Error };
std::string_view to_string(SectionStatus status);

struct Section {
  std::string name;
  SectionStatus status = SectionStatus::Ok;
  std::string reason;  // set for skipped and error sections
  Json data;
  std::vector<std::string> operations;  // ids of the operations behind `data`
};

struct DiagnosticReport {
  std::string dataset;
  std::string split;
  std::string task;
  std::size_t num_samples = 0;
  std::string metadata_digest;
  std::string generated_at;
  std::string toolkit_version;
  std::vector<Section> sections;
  std::vector<ops::Provenance> provenance;
};

// Computes missing per-sample features through the registry (writing them
// to `store`). A failing section is recorded as an error; the rest still run.
DiagnosticReport build_report(const ops::Registry& registry, const Dataset& dataset,
                              const std::string& split, FeatureStore& store,
                              const Resources& resources, const ReportConfig& config);

std::string metadata_digest(const Dataset& dataset);

Json to_json(const DiagnosticReport& report);
std::string render_markdown(const DiagnosticReport& report);

}  // namespace datalab::report
