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

#include <algorithm>
#include <random>

#include "datalab/edit.hpp"
#include "datalab/text.hpp"

namespace datalab {
namespace {

using text::TokenScheme;

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Tokenize, Whitespace) {
  EXPECT_EQ(text::whitespace_tokens("Not bad"), (std::vector<std::string>{"Not", "bad"}));
  EXPECT_TRUE(text::whitespace_tokens("").empty());
  EXPECT_EQ(text::whitespace_tokens("  a\t b\n"), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(text::whitespace_tokens("a b").size(), 2u);
}

TEST(Tokenize, RegexWord) {
  EXPECT_EQ(text::word_tokens("don't stop-me"),
            (std::vector<std::string>{"don't", "stop", "me"}));
  EXPECT_EQ(text::word_tokens("Café, 42!"), (std::vector<std::string>{"Café", "42"}));
  EXPECT_EQ(text::folded_words("The CAT"), (std::vector<std::string>{"the", "cat"}));
  EXPECT_EQ(text::parse_scheme("regex-word"), TokenScheme::RegexWord);
}

TEST(Tokenize, SpansIndexOriginalText) {
  const std::string s = "ab  cd";
  const auto spans = text::token_spans(s, TokenScheme::Whitespace);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(s.substr(spans[1].begin, spans[1].end - spans[1].begin), "cd");
}

TEST(Lowercase, ExamplesAndIdempotence) {
  EXPECT_EQ(text::lowercase("You"), "you");
  EXPECT_EQ(text::lowercase("ÉCOLE"), "école");
  const std::vector<std::string> alphabet{"A", "b", "É", "Ω", "Ж", " ", "1", "ß", "İ"};
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::string s;
    for (int k = 0; k < 12; ++k) s += alphabet[rng() % alphabet.size()];
    const auto once = text::lowercase(s);
    EXPECT_EQ(text::lowercase(once), once) << s;
  }
}

TEST(SentenceSplit, Examples) {
  EXPECT_EQ(text::sentence_split("A b. C d."), (std::vector<std::string>{"A b.", "C d."}));
  EXPECT_EQ(text::sentence_split("e.g. this one."),
            (std::vector<std::string>{"e.g. this one."}));
  EXPECT_EQ(text::sentence_split("Really?! Yes."),
            (std::vector<std::string>{"Really?!", "Yes."}));
  EXPECT_TRUE(text::sentence_split("   ").empty());
  EXPECT_EQ(text::sentence_split("no terminator"),
            (std::vector<std::string>{"no terminator"}));
}

// Joining the pieces must give the input back modulo whitespace between
// sentences.
TEST(SentenceSplit, ReconstructionProperty) {
  const std::vector<std::string> pieces{"The cat sat.", "Is it?", "Wow!", "Dr. Who came.",
                                        "It rained", "Mr. Smith left.", "3.5 is a number."};
  const std::vector<std::string> gaps{" ", "  ", "\n", "\t "};
  std::mt19937 rng(11);
  auto squash = [](const std::string& s) {
    std::string out;
    for (const auto& t : text::whitespace_tokens(s)) out += t;
    return out;
  };
  for (int i = 0; i < 100; ++i) {
    std::string x;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < n; ++k) {
      if (k) x += gaps[rng() % gaps.size()];
      x += pieces[rng() % pieces.size()];
    }
    const auto parts = text::sentence_split(x);
    EXPECT_EQ(squash(text::join(parts)), squash(x)) << x;
    for (const auto& p : parts) {
      EXPECT_FALSE(p.empty());
      EXPECT_EQ(text::whitespace_tokens(p).front().front(), p.front());
    }
  }
}

TEST(DeleteToken, Examples) {
  EXPECT_EQ(edit::delete_token("hello world foo", 4).text, "hello foo");
  EXPECT_EQ(edit::delete_token("one", 17).text, "");
  const auto empty = edit::delete_token("", 3);
  EXPECT_TRUE(empty.warning);
  EXPECT_EQ(empty.text, "");
}

TEST(DeleteToken, RemovesExactlyOneTokenForEverySeed) {
  const std::string s = "the quick brown fox jumps over the lazy dog";
  const auto n = text::whitespace_tokens(s).size();
  for (std::uint64_t seed = 0; seed <= 3 * n; ++seed) {
    const auto out = edit::delete_token(s, seed);
    EXPECT_FALSE(out.warning);
    auto tokens = text::whitespace_tokens(s);
    tokens.erase(tokens.begin() + static_cast<long>(seed % n));
    EXPECT_EQ(out.text, text::join(tokens));
  }
}

TEST(SwapAdjacent, Examples) {
  EXPECT_EQ(edit::swap_adjacent("a b c", 0).text, "b a c");
  EXPECT_EQ(edit::swap_adjacent("a b c", 1).text, "a c b");
  EXPECT_EQ(edit::swap_adjacent("a b c", 2).text, "b a c");
  const auto single = edit::swap_adjacent("solo", 0);
  EXPECT_TRUE(single.warning);
  EXPECT_EQ(single.text, "solo");
}

TEST(SwapAdjacent, PreservesMultiset) {
  std::mt19937 rng(5);
  const std::vector<std::string> words{"a", "b", "b", "see", "d'oh", "é"};
  for (int i = 0; i < 200; ++i) {
    std::string s;
    const int n = 2 + static_cast<int>(rng() % 8);
    for (int k = 0; k < n; ++k) s += (k ? " " : "") + words[rng() % words.size()];
    const auto out = edit::swap_adjacent(s, rng());
    EXPECT_EQ(sorted(text::whitespace_tokens(out.text)), sorted(text::whitespace_tokens(s)));
  }
}

TEST(PickPositions, DistinctAndBounded) {
  for (std::size_t m = 1; m < 12; ++m) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto picks = edit::pick_positions(m, 5, seed);
      EXPECT_EQ(picks.size(), std::min<std::size_t>(m, 5));
      EXPECT_EQ(picks.front(), seed % m);
      std::set<std::size_t> distinct(picks.begin(), picks.end());
      EXPECT_EQ(distinct.size(), picks.size());
      for (auto p : picks) EXPECT_LT(p, m);
    }
  }
  EXPECT_TRUE(edit::pick_positions(0, 3, 1).empty());
}

TEST(DictReplace, Examples) {
  const edit::Lexicon lex{{"cat", "dog"}, {"beer", "ale"}};
  EXPECT_EQ(edit::dict_replace("the cat sat", lex, 1, 9).text, "the dog sat");
  const auto none = edit::dict_replace("nothing here", lex, 1, 0);
  EXPECT_EQ(none.text, "nothing here");
  EXPECT_FALSE(none.warning);
  EXPECT_EQ(edit::dict_replace("Cat, cat!", lex, 5, 0).text, "Cat, dog!");
}

TEST(DictReplace, ReplacesAllWhenMaxCoversCandidates) {
  const edit::Lexicon lex{{"beer", "ale"}, {"man", "woman"}};
  const std::string s = "a beer and another beer for the man";
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(edit::dict_replace(s, lex, 3, seed).text, "a ale and another ale for the woman");
    EXPECT_EQ(edit::dict_replace(s, lex, 10, seed).text, "a ale and another ale for the woman");
  }
}

TEST(DictReplace, AtMostMaxReplacementsAndSpacingKept) {
  const edit::Lexicon lex{{"x", "y"}};
  const std::string s = "x  x,x\tx";
  for (std::size_t max = 0; max <= 5; ++max) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto out = edit::dict_replace(s, lex, max, seed).text;
      ASSERT_EQ(out.size(), s.size());
      std::size_t changed = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != out[i]) {
          EXPECT_EQ(s[i], 'x');
          EXPECT_EQ(out[i], 'y');
          ++changed;
        }
      }
      EXPECT_EQ(changed, std::min<std::size_t>(max, 4));
    }
  }
}

}  // namespace
}  // namespace datalab
