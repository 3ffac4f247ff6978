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

#include "datalab/featurize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "datalab/error.hpp"
#include "datalab/text.hpp"
#include "datalab/utf8.hpp"

namespace datalab::features {

namespace {

using Bigram = std::pair<std::string, std::string>;

std::map<Bigram, std::size_t> bigram_counts(const std::vector<std::string>& tokens) {
  std::map<Bigram, std::size_t> out;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) ++out[{tokens[i], tokens[i + 1]}];
  return out;
}

std::map<std::vector<std::string>, std::size_t> ngram_counts(
    const std::vector<std::string>& tokens, std::size_t n) {
  std::map<std::vector<std::string>, std::size_t> out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return out;
}

void require_nonempty(const WordSet& set, std::string_view what) {
  if (set.empty()) throw ConfigError(std::string(what) + " is empty");
}

}  // namespace

double get_length(std::string_view text) {
  return static_cast<double>(text::token_spans(text, text::TokenScheme::Whitespace).size());
}

std::optional<double> lexical_richness(std::string_view text) {
  const auto tokens = text::folded_words(text);
  if (tokens.empty()) return std::nullopt;
  const std::set<std::string> unique(tokens.begin(), tokens.end());
  return static_cast<double>(unique.size()) / static_cast<double>(tokens.size());
}

std::optional<double> basic_words_ratio(std::string_view text, const WordSet& basic) {
  require_nonempty(basic, "basic word list");
  const auto tokens = text::folded_words(text);
  if (tokens.empty()) return std::nullopt;
  const auto hits = std::count_if(tokens.begin(), tokens.end(),
                                  [&](const auto& t) { return basic.count(t) > 0; });
  return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

std::optional<double> oov_density(std::string_view text, const WordSet& train_vocab) {
  const auto tokens = text::folded_words(text);
  if (tokens.empty()) return std::nullopt;
  const auto misses = std::count_if(tokens.begin(), tokens.end(),
                                    [&](const auto& t) { return train_vocab.count(t) == 0; });
  return static_cast<double>(misses) / static_cast<double>(tokens.size());
}

WordSet build_vocabulary(const std::vector<Sample>& samples,
                         const std::vector<std::string>& fields) {
  WordSet vocab;
  for (const auto& s : samples) {
    for (const auto& f : fields) {
      auto it = s.fields.find(f);
      if (it == s.fields.end()) continue;
      for (auto& t : text::folded_words(it->second)) vocab.insert(std::move(t));
    }
  }
  return vocab;
}

GenderCounts gender_word_counts(std::string_view text, const WordSet& male,
                                const WordSet& female) {
  require_nonempty(male, "male lexicon");
  require_nonempty(female, "female lexicon");
  GenderCounts c;
  for (const auto& t : text::folded_words(text)) {
    if (male.count(t)) c.male += 1;
    if (female.count(t)) c.female += 1;
  }
  return c;
}

std::size_t count_syllables(std::string_view word) {
  const auto w = utf8::lowercase(word);
  auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : w) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  if (groups > 1 && !w.empty() && w.back() == 'e') --groups;
  return std::max<std::size_t>(groups, 1);
}

std::optional<double> flesch_reading_ease(std::string_view input) {
  const auto words = text::word_tokens(input);
  if (words.empty()) return std::nullopt;
  const auto sentences = std::max<std::size_t>(text::sentence_split(input).size(), 1);
  std::size_t syllables = 0;
  for (const auto& w : words) syllables += count_syllables(w);
  const double n_words = static_cast<double>(words.size());
  return 206.835 - 1.015 * (n_words / static_cast<double>(sentences)) -
         84.6 * (static_cast<double>(syllables) / n_words);
}

LengthComparison length_comparison(std::string_view first, std::string_view second) {
  const double a = get_length(first);
  const double b = get_length(second);
  LengthComparison out{a + b, a - b, std::nullopt};
  if (b >= 1) out.ratio = a / b;
  return out;
}

SimilarityMetric parse_metric(std::string_view name) {
  if (name == "bleu") return SimilarityMetric::Bleu;
  if (name == "rouge2") return SimilarityMetric::Rouge2;
  throw ValidationError("unknown similarity metric '" + std::string(name) + "'");
}

std::optional<double> bleu(const std::vector<std::string>& hypothesis,
                           const std::vector<std::string>& reference) {
  if (hypothesis.empty() || reference.empty()) return std::nullopt;
  double log_sum = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto hyp = ngram_counts(hypothesis, n);
    const auto ref = ngram_counts(reference, n);
    double matched = 0;
    double total = 0;
    for (const auto& [gram, count] : hyp) {
      total += static_cast<double>(count);
      if (auto it = ref.find(gram); it != ref.end()) {
        matched += static_cast<double>(std::min(count, it->second));
      }
    }
    const double smooth = n == 1 ? 0.0 : 1.0;
    const double precision = (matched + smooth) / (total + smooth);
    if (precision <= 0) return 0.0;
    log_sum += std::log(precision);
  }
  const double c = static_cast<double>(hypothesis.size());
  const double r = static_cast<double>(reference.size());
  const double brevity = c > r ? 1.0 : std::exp(1.0 - r / c);
  return std::min(1.0, brevity * std::exp(log_sum / 4.0));
}

std::optional<double> rouge2(const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
  if (a.size() < 2 || b.size() < 2) return std::nullopt;
  const auto ca = bigram_counts(a);
  const auto cb = bigram_counts(b);
  double overlap = 0;
  for (const auto& [gram, count] : ca) {
    if (auto it = cb.find(gram); it != cb.end()) {
      overlap += static_cast<double>(std::min(count, it->second));
    }
  }
  if (overlap == 0) return 0.0;
  const double p = overlap / static_cast<double>(a.size() - 1);
  const double r = overlap / static_cast<double>(b.size() - 1);
  return 2 * p * r / (p + r);
}

std::optional<double> text_similarity(std::string_view a, std::string_view b,
                                      SimilarityMetric metric) {
  const auto ta = text::folded_words(a);
  const auto tb = text::folded_words(b);
  return metric == SimilarityMetric::Bleu ? bleu(ta, tb) : rouge2(ta, tb);
}

double answer_position(std::string_view context, std::int64_t answer_start) {
  const auto len = static_cast<std::int64_t>(utf8::length(context));
  if (answer_start < 0 || answer_start > len) {
    throw ValidationError("answer_start " + std::to_string(answer_start) +
                          " outside context of length " + std::to_string(len));
  }
  return static_cast<double>(answer_start) / static_cast<double>(std::max<std::int64_t>(1, len));
}

std::optional<double> spelling_miss_ratio(std::string_view input, const WordSet& dictionary) {
  require_nonempty(dictionary, "spelling dictionary");
  std::size_t considered = 0;
  std::size_t misses = 0;
  for (const auto& token : text::folded_words(input)) {
    bool has_letter = false;
    bool alphabetic = true;
    for (std::size_t pos = 0; pos < token.size();) {
      const auto d = utf8::decode(token, pos);
      if (utf8::is_letter(d.code_point)) {
        has_letter = true;
      } else if (!utf8::is_apostrophe(d.code_point)) {
        alphabetic = false;
      }
      pos += d.length;
    }
    if (!alphabetic || !has_letter) continue;
    ++considered;
    if (!dictionary.count(token)) ++misses;
  }
  if (considered == 0) return std::nullopt;
  return static_cast<double>(misses) / static_cast<double>(considered);
}

FragmentAlignment fragments(const std::vector<std::string>& source,
                            const std::vector<std::string>& summary) {
  FragmentAlignment out;
  std::size_t i = 0;
  while (i < summary.size()) {
    std::size_t best_len = 0;
    std::size_t best_start = 0;
    for (std::size_t j = 0; j < source.size(); ++j) {
      std::size_t len = 0;
      while (i + len < summary.size() && j + len < source.size() &&
             summary[i + len] == source[j + len]) {
        ++len;
      }
      if (len > best_len) {
        best_len = len;
        best_start = j;
      }
    }
    if (best_len == 0) {
      ++i;
      continue;
    }
    out.push_back({i, best_start, best_len});
    i += best_len;
  }
  return out;
}

FragmentAlignment fragments(std::string_view source, std::string_view summary) {
  return fragments(text::folded_words(source), text::folded_words(summary));
}

ExtractiveStats extractive_stats(std::string_view source_text, std::string_view summary_text) {
  const auto source = text::folded_words(source_text);
  const auto summary = text::folded_words(summary_text);
  ExtractiveStats out;
  if (source.empty() || summary.empty()) return out;

  const auto frags = fragments(source, summary);
  const double n = static_cast<double>(summary.size());
  double covered = 0;
  double squared = 0;
  for (const auto& f : frags) {
    const double len = static_cast<double>(f.length);
    covered += len;
    squared += len * len;
  }
  out.coverage = covered / n;
  out.density = squared / n;
  out.copy_length = frags.empty() ? 0.0 : covered / static_cast<double>(frags.size());
  out.compression = static_cast<double>(source.size()) / n;

  if (summary.size() >= 2) {
    const auto source_bigrams = bigram_counts(source);
    std::size_t novel = 0;
    for (std::size_t k = 0; k + 1 < summary.size(); ++k) {
      if (!source_bigrams.count({summary[k], summary[k + 1]})) ++novel;
    }
    out.novelty = static_cast<double>(novel) / static_cast<double>(summary.size() - 1);
  }
  return out;
}

std::optional<OracleSummary> get_oracle(std::string_view source, std::string_view reference) {
  const auto ref = text::folded_words(reference);
  if (ref.size() < 2) return std::nullopt;
  const auto sentences = text::sentence_split(source);
  std::vector<std::vector<std::string>> sentence_tokens;
  sentence_tokens.reserve(sentences.size());
  for (const auto& s : sentences) sentence_tokens.push_back(text::folded_words(s));

  std::vector<bool> selected(sentences.size(), false);
  auto score_of = [&](const std::vector<bool>& set) {
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i]) tokens.insert(tokens.end(), sentence_tokens[i].begin(), sentence_tokens[i].end());
    }
    return rouge2(tokens, ref).value_or(0.0);
  };

  double current = 0;
  while (true) {
    double best = current;
    std::optional<std::size_t> best_index;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (selected[i]) continue;
      selected[i] = true;
      const double s = score_of(selected);
      selected[i] = false;
      if (s > best) {
        best = s;
        best_index = i;
      }
    }
    if (!best_index) break;
    selected[*best_index] = true;
    current = best;
  }

  OracleSummary out;
  out.score = current;
  std::vector<std::string> chosen;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!selected[i]) continue;
    out.sentences.push_back(i);
    chosen.push_back(sentences[i]);
  }
  out.text = text::join(chosen);
  return out;
}

}  // namespace datalab::features
