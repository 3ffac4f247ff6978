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

#include <random>

#include "datalab/error.hpp"
#include "datalab/ingest.hpp"
#include "datalab/langmap.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace datalab {
namespace {

using namespace langmap;

DatasetMetadata tagged(std::vector<std::string> languages) {
  DatasetMetadata m;
  m.languages = std::move(languages);
  return m;
}

TEST(Counts, PerLanguage) {
  EXPECT_EQ(count_datasets_per_language({tagged({"en"}), tagged({"en"}), tagged({"en"})}),
            (LanguageCounts{{"en", 3}}));
  EXPECT_EQ(count_datasets_per_language({tagged({"en", "fr"})}),
            (LanguageCounts{{"en", 1}, {"fr", 1}}));
  EXPECT_EQ(count_datasets_per_language({tagged({"en", "en"})}), (LanguageCounts{{"en", 1}}));
  EXPECT_TRUE(count_datasets_per_language(ingest::Registry::in_memory()).empty());
}

TEST(Scores, WeightedSums) {
  const CountryLanguageTable single({{"XA", "ll", 1.0}});
  EXPECT_EQ(compute_language_map({{"ll", 5}}, single).scores.at("XA"), 5.0);
  const CountryLanguageTable mixed({{"XB", "la", 0.5}, {"XB", "lb", 0.5}});
  EXPECT_EQ(compute_language_map({{"la", 4}, {"lb", 2}}, mixed).scores.at("XB"), 3.0);
}

TEST(Scores, UnrepresentedLanguagesScoreZero) {
  const auto table = CountryLanguageTable::load(testing::source_path("resources/country_languages.csv"));
  const auto map = compute_language_map({{"en", 10}, {"zz", 4}}, table);
  EXPECT_EQ(map.scores.size(), table.countries().size());
  EXPECT_EQ(map.scores.at("ML"), 0.0);
  EXPECT_GT(map.scores.at("US"), 0.0);
  const CountryLanguageTable only({{"ML", "bm", 0.8}, {"GH", "ee", 0.13}, {"NE", "kr", 0.04}});
  for (const auto& [country, score] : compute_language_map({{"en", 3}}, only).scores) {
    EXPECT_EQ(score, 0.0) << country;
  }
}

TEST(Scores, MatchDotProduct) {
  std::mt19937 rng(12);
  const std::vector<std::string> langs{"en", "fr", "es", "sw", "hi"};
  for (int trial = 0; trial < 20; ++trial) {
    LanguageCounts counts;
    for (const auto& l : langs) counts[l] = rng() % 50;
    std::vector<CountryLanguage> rows;
    std::map<std::string, std::vector<double>> shares;
    for (char c = 'A'; c < 'K'; ++c) {
      const std::string country = std::string("Q") + c;
      std::vector<double> p(langs.size(), 0.0);
      double left = 1.0;
      for (std::size_t i = 0; i < langs.size(); ++i) {
        if (rng() % 2) continue;
        p[i] = left * static_cast<double>(rng() % 100) / 100.0;
        left -= p[i];
        rows.push_back({country, langs[i], p[i]});
      }
      if (rows.empty() || rows.back().country != country) rows.push_back({country, "en", 0.0});
      shares[country] = p;
    }
    std::vector<double> count_vec;
    for (const auto& l : langs) count_vec.push_back(static_cast<double>(counts[l]));
    const auto map = compute_language_map(counts, CountryLanguageTable(rows));
    for (const auto& [country, p] : shares) {
      EXPECT_NEAR(map.scores.at(country), oracle::dot(p, count_vec), 1e-12);
    }
  }
}

TEST(Table, Validation) {
  EXPECT_THROW(CountryLanguageTable({{"usa", "en", 0.5}}), ValidationError);
  EXPECT_THROW(CountryLanguageTable({{"US", "EN", 0.5}}), ValidationError);
  EXPECT_THROW(CountryLanguageTable({{"US", "en", 1.5}}), ValidationError);
  EXPECT_THROW(CountryLanguageTable({{"US", "en", 0.7}, {"US", "es", 0.7}}), ValidationError);
  EXPECT_THROW(CountryLanguageTable({{"US", "en", 0.2}, {"US", "en", 0.2}}), ValidationError);
  EXPECT_THROW(CountryLanguageTable::parse("a,b,c\nUS,en,1\n"), ValidationError);
  EXPECT_THROW(CountryLanguageTable::parse("country,language,proportion\nUS,en,lots\n"),
               ValidationError);
  const auto t = CountryLanguageTable::parse("country,language,proportion\nUS,en,0.8\nCA,fr,0.2\n");
  EXPECT_EQ(t.countries(), (std::vector<std::string>{"CA", "US"}));
  EXPECT_THROW(compute_language_map({}, CountryLanguageTable()), ValidationError);
}

TEST(Json, Shape) {
  const auto j = to_json(compute_language_map({{"en", 2}}, CountryLanguageTable({{"US", "en", 0.5}})));
  EXPECT_EQ(j["schema"], "datalab.langmap.v1");
  EXPECT_EQ(j["countries"].dump(), j["countries"].dump());
  EXPECT_NE(j.dump().find("\"US\""), std::string::npos);
}

}  // namespace
}  // namespace datalab
