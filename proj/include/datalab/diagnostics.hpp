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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datalab/core.hpp"
#include "datalab/feature_store.hpp"
#include "datalab/resources.hpp"
#include "datalab/serialization.hpp"

// Artifact and bias analyses over one split.
namespace datalab::diagnostics {

// Pseudo-feature name resolving to sample labels.
inline constexpr std::string_view kLabelFeature = "label";

enum class BinKind { Categorical, EqualFrequency };

struct BinningScheme {
  BinKind kind = BinKind::EqualFrequency;
  std::size_t bin_count = 4;  // equal-frequency only, >= 2

  static BinningScheme categorical() { return {BinKind::Categorical, 0}; }
  static BinningScheme equal_frequency(std::size_t bins) { return {BinKind::EqualFrequency, bins}; }
};

struct Bin {
  std::string label;
  std::optional<double> lower;  // numeric bins only
  std::optional<double> upper;
  bool closed_upper = false;
  bool operator==(const Bin&) const = default;
};

// A fitted binning: either numeric edges or a category list.
class Binning {
 public:
  // Sorted positions j go to bin floor(j * B / n); edges are the first value
  // of each bin. Bins are [lo, hi) except the last, which is closed. Equal
  // edges merge, so ties can shrink the bin count.
  static Binning equal_frequency(std::vector<double> values, std::size_t bin_count);
  // One bin per category, in `order` first and lexicographically after.
  static Binning categorical(const std::vector<std::string>& values,
                             const std::vector<std::string>& order = {});

  std::size_t assign(const FeatureValue& value) const;
  const std::vector<Bin>& bins() const { return bins_; }
  bool numeric() const { return numeric_; }
  bool degenerate() const { return bins_.size() <= 1; }

 private:
  bool numeric_ = false;
  std::vector<double> interior_edges_;
  std::vector<std::string> categories_;
  std::vector<Bin> bins_;
};

enum class LogBase { E, Two };
LogBase parse_log_base(std::string_view name);
std::string_view to_string(LogBase base);

using CountMatrix = std::vector<std::vector<std::size_t>>;

struct PmiTable {
  std::string feature_x;
  std::string feature_y;
  std::vector<Bin> bins_x;
  std::vector<Bin> bins_y;
  CountMatrix joint_counts;                             // [x][y]
  std::vector<std::vector<std::optional<double>>> pmi;  // nullopt = undefined (zero count)
  std::size_t total = 0;
  LogBase base = LogBase::E;
  std::vector<std::string> warnings;
};

// PMI of every cell from maximum-likelihood probabilities of `counts`.
PmiTable pmi_from_counts(const CountMatrix& counts, LogBase base = LogBase::E);

// Pairs (xs[i], ys[i]) are one observation each.
PmiTable pmi_table(const std::vector<FeatureValue>& xs, const std::vector<FeatureValue>& ys,
                   const std::string& feature_x, const std::string& feature_y,
                   const BinningScheme& binning_x, const BinningScheme& binning_y,
                   LogBase base = LogBase::E, const std::vector<std::string>& y_order = {},
                   const std::vector<std::string>& x_order = {});

// Features are read from `store` (or sample labels for "label"); samples
// missing either value are skipped.
PmiTable pmi_table(const Dataset& dataset, const std::string& split, const FeatureStore& store,
                   const std::string& feature_x, const std::string& feature_y,
                   const BinningScheme& binning_x, const BinningScheme& binning_y,
                   LogBase base = LogBase::E);

struct Artifact {
  std::string feature;
  std::size_t bin_index = 0;
  std::string bin;
  std::size_t label_index = 0;
  std::string label;
  double pmi = 0;
  std::size_t count = 0;
  bool operator==(const Artifact&) const = default;
};

// Defined cells with pmi >= threshold and pmi > 0, by descending pmi then
// (feature, bin index, label index).
std::vector<Artifact> rank_artifacts(const std::vector<PmiTable>& tables, double threshold);

struct ArtifactScan {
  std::vector<PmiTable> tables;
  std::vector<Artifact> artifacts;
};

// Numeric features use equal-frequency binning with `bins`, categorical
// ones pass through.
ArtifactScan detect_artifacts(const Dataset& dataset, const std::string& split,
                              const FeatureStore& store, const std::vector<std::string>& features,
                              const std::string& label_feature, double threshold,
                              std::size_t bins = 4, LogBase base = LogBase::E);

struct GenderBiasReport {
  double b_male = 0;
  double b_female = 0;
  std::optional<double> gb;  // undefined when b_female == 0
  std::size_t n_samples = 0;
  std::size_t n_male = 0;
  std::size_t n_female = 0;
};

// A sample counts toward a gender when any of its text-field tokens hits
// that lexicon; it may count toward both.
GenderBiasReport gender_bias(const Dataset& dataset, const std::string& split,
                             const WordSet& male, const WordSet& female);

enum class SpeechClass { Hate, Offensive, Neither };
std::string_view to_string(SpeechClass c);

// Hate takes precedence over offensive.
SpeechClass classify_speech(std::string_view text, const WordSet& hate, const WordSet& offensive);

struct SpeechBiasReport {
  double hate_ratio = 0;
  double offensive_ratio = 0;
  double neither_ratio = 0;
  std::size_t n_samples = 0;
  std::vector<SpeechClass> per_sample;  // indexed by sample_id
};

SpeechBiasReport speech_bias(const Dataset& dataset, const std::string& split,
                             const WordSet& hate, const WordSet& offensive);

// Entropy of the label distribution over ln(K), K = |label_domain| (or the
// number of observed labels without a domain).
double label_imbalance(const Dataset& dataset, const std::string& split);

Json to_json(const Bin& bin);
Json to_json(const PmiTable& table);
Json to_json(const Artifact& artifact);
Json to_json(const GenderBiasReport& report);
// Ratios only; per-sample classes are stored as features instead.
Json to_json(const SpeechBiasReport& report);

}  // namespace datalab::diagnostics
