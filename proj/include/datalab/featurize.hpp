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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datalab/core.hpp"
#include "datalab/resources.hpp"

// Sample-level feature functions. Missing values are std::nullopt; callers
// never store a placeholder number for them.
//
// Token units: lengths count whitespace tokens; everything that looks words
// up (richness, lexica, vocabulary, overlap metrics, fragments) uses
// lowercased regex-word tokens.
namespace datalab::features {

double get_length(std::string_view text);

// Distinct folded tokens over token count.
std::optional<double> lexical_richness(std::string_view text);

// Throws ConfigError for an empty list.
std::optional<double> basic_words_ratio(std::string_view text, const WordSet& basic);

std::optional<double> oov_density(std::string_view text, const WordSet& train_vocab);

// Folded regex-word vocabulary of `fields` over `samples`.
WordSet build_vocabulary(const std::vector<Sample>& samples,
                         const std::vector<std::string>& fields);

struct GenderCounts {
  double male = 0;
  double female = 0;
  bool operator==(const GenderCounts&) const = default;
};
// Throws ConfigError if either lexicon is empty.
GenderCounts gender_word_counts(std::string_view text, const WordSet& male,
                                const WordSet& female);

// Vowel groups (aeiouy), minus a terminal silent 'e' when more than one
// group, never below 1.
std::size_t count_syllables(std::string_view word);

// 206.835 - 1.015 (words / sentences) - 84.6 (syllables / words).
std::optional<double> flesch_reading_ease(std::string_view text);

struct LengthComparison {
  double sum = 0;
  double difference = 0;  // first minus second
  std::optional<double> ratio;
};
LengthComparison length_comparison(std::string_view first, std::string_view second);

enum class SimilarityMetric { Bleu, Rouge2 };
SimilarityMetric parse_metric(std::string_view name);

// Sentence BLEU-4 of `hypothesis` against `reference`: add-one smoothing on
// 2..4-gram precisions, brevity penalty. nullopt if either side is empty.
std::optional<double> bleu(const std::vector<std::string>& hypothesis,
                           const std::vector<std::string>& reference);
// Bigram F1; nullopt unless both sides have >= 2 tokens.
std::optional<double> rouge2(const std::vector<std::string>& a,
                             const std::vector<std::string>& b);
std::optional<double> text_similarity(std::string_view a, std::string_view b,
                                      SimilarityMetric metric);

// answer_start / max(1, code points in context). Throws ValidationError when
// answer_start is outside [0, len(context)].
double answer_position(std::string_view context, std::int64_t answer_start);

// Folded-word fraction absent from `dictionary`, counting only alphabetic
// tokens. Throws ConfigError for an empty dictionary.
std::optional<double> spelling_miss_ratio(std::string_view text, const WordSet& dictionary);

struct Fragment {
  std::size_t summary_start;
  std::size_t source_start;
  std::size_t length;
  bool operator==(const Fragment&) const = default;
};
using FragmentAlignment = std::vector<Fragment>;

// Greedy left-to-right over the summary: longest source match at each
// uncovered position, earliest source position on ties.
FragmentAlignment fragments(const std::vector<std::string>& source,
                            const std::vector<std::string>& summary);
FragmentAlignment fragments(std::string_view source, std::string_view summary);

struct ExtractiveStats {
  std::optional<double> coverage;
  std::optional<double> density;
  std::optional<double> copy_length;
  std::optional<double> novelty;
  std::optional<double> compression;
};
ExtractiveStats extractive_stats(std::string_view source, std::string_view summary);

struct OracleSummary {
  std::vector<std::size_t> sentences;  // selected source sentence indexes, ascending
  std::string text;
  double score = 0;
};
// Greedy ROUGE-2 sentence selection. nullopt when the reference has fewer
// than two tokens (ROUGE-2 undefined).
std::optional<OracleSummary> get_oracle(std::string_view source, std::string_view reference);

}  // namespace datalab::features
