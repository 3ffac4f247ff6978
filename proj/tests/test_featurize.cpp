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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "datalab/error.hpp"
#include "datalab/featurize.hpp"
#include "datalab/text.hpp"
#include "oracles.hpp"

namespace datalab {
namespace {

using namespace features;

TEST(Length, Examples) {
  EXPECT_EQ(get_length("You"), 1.0);
  EXPECT_EQ(get_length(""), 0.0);
  EXPECT_EQ(get_length("I love this movie"), 4.0);
}

TEST(LexicalRichness, Examples) {
  EXPECT_DOUBLE_EQ(*lexical_richness("the the the"), 1.0 / 3);
  EXPECT_DOUBLE_EQ(*lexical_richness("one two three"), 1.0);
  EXPECT_DOUBLE_EQ(*lexical_richness("A a b"), 2.0 / 3);
  EXPECT_FALSE(lexical_richness("!!"));
}

TEST(BasicWords, Ratios) {
  const WordSet basic{"the", "cat", "is"};
  EXPECT_EQ(*basic_words_ratio("The cat", basic), 1.0);
  EXPECT_EQ(*basic_words_ratio("quantum chromodynamics", basic), 0.0);
  EXPECT_EQ(*basic_words_ratio("the cat ate quinoa", basic), 0.5);
  EXPECT_THROW(basic_words_ratio("x", WordSet{}), ConfigError);
}

TEST(OovDensity, Ratios) {
  const WordSet vocab{"good", "movie"};
  EXPECT_EQ(*oov_density("good movie", vocab), 0.0);
  EXPECT_EQ(*oov_density("bad film", vocab), 1.0);
  EXPECT_EQ(*oov_density("good film", vocab), 0.5);
  Sample s;
  s.fields["text"] = "Good Movie";
  EXPECT_EQ(build_vocabulary({s}, {"text"}), vocab);
}

TEST(GenderWords, Counts) {
  const WordSet male{"he", "his", "brother"};
  const WordSet female{"she", "her"};
  EXPECT_EQ(gender_word_counts("he and his brother", male, female), (GenderCounts{3, 0}));
  EXPECT_EQ(gender_word_counts("nobody", male, female), (GenderCounts{0, 0}));
  const WordSet both{"they"};
  EXPECT_EQ(gender_word_counts("they and they", both, both), (GenderCounts{2, 2}));
  EXPECT_THROW(gender_word_counts("x", WordSet{}, female), ConfigError);
}

TEST(Flesch, Examples) {
  EXPECT_NEAR(*flesch_reading_ease("Go."), 206.835 - 1.015 - 84.6, 1e-9);
  EXPECT_NEAR(*flesch_reading_ease("Go."), 121.22, 1e-9);
  EXPECT_NEAR(*flesch_reading_ease("The cat sat. The cat sat."),
              *flesch_reading_ease("The cat sat."), 1e-9);
  EXPECT_LT(*flesch_reading_ease("The cat sat incomprehensibly."),
            *flesch_reading_ease("The cat sat."));
  EXPECT_FALSE(flesch_reading_ease(""));
  EXPECT_EQ(count_syllables("cake"), 1u);
  EXPECT_EQ(count_syllables("the"), 1u);
  EXPECT_EQ(count_syllables("syllable"), 2u);
}

TEST(LengthComparison, Examples) {
  const auto c = length_comparison("a b c d e f g h i j", "a b c d e");
  EXPECT_EQ(c.sum, 15);
  EXPECT_EQ(c.difference, 5);
  EXPECT_EQ(*c.ratio, 2.0);
  const auto eq = length_comparison("x y", "z w");
  EXPECT_EQ(eq.difference, 0);
  EXPECT_EQ(*eq.ratio, 1.0);
  EXPECT_FALSE(length_comparison("x", "").ratio);
}

TEST(Similarity, Examples) {
  EXPECT_DOUBLE_EQ(*text_similarity("the cat sat on it", "the cat sat on it",
                                    SimilarityMetric::Bleu), 1.0);
  EXPECT_DOUBLE_EQ(*text_similarity("the cat sat", "the cat sat", SimilarityMetric::Rouge2),
                   1.0);
  EXPECT_EQ(*text_similarity("a b", "c d", SimilarityMetric::Rouge2), 0.0);
  EXPECT_DOUBLE_EQ(*text_similarity("the cat sat", "the cat ran", SimilarityMetric::Rouge2), 0.5);
  EXPECT_FALSE(text_similarity("a", "a b", SimilarityMetric::Rouge2));
  EXPECT_THROW(parse_metric("meteor"), ValidationError);
}

TEST(Similarity, Rouge2MatchesBruteForce) {
  std::mt19937 rng(21);
  const std::vector<std::string> vocab{"a", "b", "c", "d"};
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> x, y;
    for (auto n = rng() % 8; n > 0; --n) x.push_back(vocab[rng() % 4]);
    for (auto n = rng() % 8; n > 0; --n) y.push_back(vocab[rng() % 4]);
    const auto got = rouge2(x, y);
    const auto want = oracle::rouge2(x, y);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) EXPECT_NEAR(*got, *want, 1e-12);
  }
}

TEST(AnswerPosition, Examples) {
  const std::string context(100, 'x');
  EXPECT_EQ(answer_position(context, 0), 0.0);
  EXPECT_EQ(answer_position(context, 100), 1.0);
  EXPECT_EQ(answer_position(context, 25), 0.25);
  EXPECT_EQ(answer_position("", 0), 0.0);
  EXPECT_THROW(answer_position(context, 101), ValidationError);
  EXPECT_THROW(answer_position(context, -1), ValidationError);
}

TEST(Spelling, Examples) {
  const WordSet dict{"the", "cat"};
  EXPECT_EQ(*spelling_miss_ratio("The cat", dict), 0.0);
  EXPECT_EQ(*spelling_miss_ratio("teh cat", dict), 0.5);
  EXPECT_EQ(*spelling_miss_ratio("123 cat", dict), 0.0);
  EXPECT_FALSE(spelling_miss_ratio("123", dict));
}

TEST(Fragments, Examples) {
  EXPECT_EQ(fragments("a b c d", "a b x d"), (FragmentAlignment{{0, 0, 2}, {3, 3, 1}}));
  EXPECT_EQ(fragments("a b c", "a b c"), (FragmentAlignment{{0, 0, 3}}));
  EXPECT_TRUE(fragments("a b", "c d").empty());
}

TEST(Extractive, Examples) {
  const auto s = extractive_stats("a b c d", "a b x d");
  EXPECT_DOUBLE_EQ(*s.coverage, 0.75);
  EXPECT_DOUBLE_EQ(*s.density, 1.25);
  EXPECT_DOUBLE_EQ(*s.copy_length, 1.5);

  const auto same = extractive_stats("x y z", "x y z");
  EXPECT_EQ(*same.coverage, 1.0);
  EXPECT_EQ(*same.novelty, 0.0);
  EXPECT_EQ(*same.compression, 1.0);

  const auto disjoint = extractive_stats("a b c", "d e");
  EXPECT_EQ(*disjoint.coverage, 0.0);
  EXPECT_EQ(*disjoint.density, 0.0);
  EXPECT_EQ(*disjoint.novelty, 1.0);

  EXPECT_FALSE(extractive_stats("a b", "").coverage);
  EXPECT_FALSE(extractive_stats("a b", "a").novelty);
}

TEST(Extractive, MatchesBruteForceOracle) {
  std::mt19937 rng(99);
  const std::vector<std::string> vocab{"a", "b", "c", "d", "e"};
  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> src, sum;
    for (auto n = 1 + rng() % 30; n > 0; --n) src.push_back(vocab[rng() % vocab.size()]);
    for (auto n = 1 + rng() % 30; n > 0; --n) sum.push_back(vocab[rng() % vocab.size()]);
    const auto got = features::fragments(src, sum);
    const auto want = oracle::fragments(src, sum);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      EXPECT_EQ(got[k].summary_start, want[k].summary_start);
      EXPECT_EQ(got[k].source_start, want[k].source_start);
      EXPECT_EQ(got[k].length, want[k].length);
    }
    const auto stats = extractive_stats(text::join(src), text::join(sum));
    const auto ref = oracle::extractive(src, sum);
    EXPECT_EQ(*stats.coverage, ref.coverage);
    EXPECT_EQ(*stats.density, ref.density);
    EXPECT_EQ(*stats.copy_length, ref.copy_length);
    EXPECT_EQ(stats.novelty, ref.novelty);
  }
}

TEST(Oracle, Examples) {
  const auto exact = get_oracle("The cat sat. A dog ran off. Birds sing loudly.", "A dog ran off.");
  ASSERT_TRUE(exact);
  EXPECT_EQ(exact->sentences, (std::vector<std::size_t>{1}));
  EXPECT_EQ(exact->text, "A dog ran off.");
  EXPECT_DOUBLE_EQ(exact->score, 1.0);

  const auto none = get_oracle("The cat sat. A dog ran.", "zebras gallop wildly");
  ASSERT_TRUE(none);
  EXPECT_TRUE(none->sentences.empty());
  EXPECT_EQ(none->text, "");
  EXPECT_EQ(none->score, 0.0);

  const auto pair = get_oracle("Red apples grow well. Blue sky today. Green pears ripen fast.",
                               "red apples grow green pears ripen");
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->sentences, (std::vector<std::size_t>{0, 2}));

  EXPECT_FALSE(get_oracle("Some text.", "one"));
}

}  // namespace
}  // namespace datalab
