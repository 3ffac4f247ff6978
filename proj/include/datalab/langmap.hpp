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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "datalab/ingest.hpp"
#include "datalab/serialization.hpp"

namespace datalab::langmap {

using LanguageCounts = std::map<std::string, std::size_t>;

// A dataset tagged with k languages adds one to each of them.
LanguageCounts count_datasets_per_language(const std::vector<DatasetMetadata>& datasets);
LanguageCounts count_datasets_per_language(const ingest::Registry& registry);

struct CountryLanguage {
  std::string country;   // ISO 3166-1 alpha-2
  std::string language;  // ISO 639-1/3
  double proportion = 0.0;
};

class CountryLanguageTable {
 public:
  CountryLanguageTable() = default;
  // Throws ValidationError on bad codes, proportions outside [0,1],
  // duplicate rows or per-country totals above 1.
  explicit CountryLanguageTable(std::vector<CountryLanguage> rows);

  // CSV with header `country,language,proportion`.
  static CountryLanguageTable parse(std::string_view csv, const std::string& source = "table");
  static CountryLanguageTable load(const std::filesystem::path& path);

  const std::vector<CountryLanguage>& rows() const { return rows_; }
  std::vector<std::string> countries() const;
  bool empty() const { return rows_.empty(); }

 private:
  std::vector<CountryLanguage> rows_;
};

struct LanguageMap {
  LanguageCounts counts;
  std::map<std::string, double> scores;  // country -> weighted dataset count
};

// score(country) = sum over its listed languages of proportion * count.
LanguageMap compute_language_map(const LanguageCounts& counts, const CountryLanguageTable& table);

Json to_json(const LanguageMap& map);

}  // namespace datalab::langmap
