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

#include "datalab/langmap.hpp"

#include <cctype>
#include <cmath>
#include <set>

#include "datalab/error.hpp"

namespace datalab::langmap {

LanguageCounts count_datasets_per_language(const std::vector<DatasetMetadata>& datasets) {
  LanguageCounts counts;
  for (const auto& m : datasets) {
    const std::set<std::string> langs(m.languages.begin(), m.languages.end());
    for (const auto& l : langs) ++counts[l];
  }
  return counts;
}

LanguageCounts count_datasets_per_language(const ingest::Registry& registry) {
  std::vector<DatasetMetadata> all;
  for (const auto& [name, e] : registry.entries()) all.push_back(e.metadata);
  return count_datasets_per_language(all);
}

namespace {

bool is_country_code(const std::string& s) {
  return s.size() == 2 && std::isupper(static_cast<unsigned char>(s[0])) &&
         std::isupper(static_cast<unsigned char>(s[1]));
}

bool is_language_code(const std::string& s) {
  if (s.size() < 2 || s.size() > 3) return false;
  for (char c : s) {
    if (!std::islower(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

CountryLanguageTable::CountryLanguageTable(std::vector<CountryLanguage> rows)
    : rows_(std::move(rows)) {
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, double> totals;
  for (const auto& r : rows_) {
    if (!is_country_code(r.country)) {
      throw ValidationError("'" + r.country + "' is not an ISO 3166-1 alpha-2 country code");
    }
    if (!is_language_code(r.language)) {
      throw ValidationError("'" + r.language + "' is not a lowercase ISO 639 language code");
    }
    if (!std::isfinite(r.proportion) || r.proportion < 0.0 || r.proportion > 1.0) {
      throw ValidationError(r.country + "/" + r.language + ": proportion outside [0,1]");
    }
    if (!seen.emplace(r.country, r.language).second) {
      throw ValidationError("duplicate row " + r.country + "/" + r.language);
    }
    totals[r.country] += r.proportion;
  }
  for (const auto& [country, total] : totals) {
    if (total > 1.0 + 1e-6) {
      throw ValidationError(country + ": language proportions sum to more than 1");
    }
  }
}

CountryLanguageTable CountryLanguageTable::parse(std::string_view csv, const std::string& source) {
  const auto records = ingest::parse_delimited(csv, ',');
  if (records.empty()) throw ValidationError(source + ": empty country-language table");
  const std::vector<std::string> header{"country", "language", "proportion"};
  if (records.front().cells != header) {
    throw ValidationError(source + ": header must be country,language,proportion");
  }
  std::vector<CountryLanguage> rows;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    const auto where = source + ":" + std::to_string(rec.line);
    if (rec.cells.size() != 3) throw ValidationError(where + ": expected 3 cells");
    CountryLanguage row{rec.cells[0], rec.cells[1], 0.0};
    try {
      std::size_t used = 0;
      row.proportion = std::stod(rec.cells[2], &used);
      if (used != rec.cells[2].size()) throw std::invalid_argument(rec.cells[2]);
    } catch (const std::exception&) {
      throw ValidationError(where + ": proportion '" + rec.cells[2] + "' is not a number");
    }
    try {
      CountryLanguageTable{{row}};
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
    rows.push_back(std::move(row));
  }
  try {
    return CountryLanguageTable(std::move(rows));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

CountryLanguageTable CountryLanguageTable::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

std::vector<std::string> CountryLanguageTable::countries() const {
  std::set<std::string> all;
  for (const auto& r : rows_) all.insert(r.country);
  return {all.begin(), all.end()};
}

LanguageMap compute_language_map(const LanguageCounts& counts, const CountryLanguageTable& table) {
  if (table.empty()) throw ValidationError("country-language table is empty");
  LanguageMap map;
  map.counts = counts;
  for (const auto& r : table.rows()) {
    auto& score = map.scores[r.country];
    const auto it = counts.find(r.language);
    if (it != counts.end()) score += r.proportion * static_cast<double>(it->second);
  }
  return map;
}

Json to_json(const LanguageMap& map) {
  Json counts = Json::object();
  for (const auto& [lang, n] : map.counts) counts[lang] = n;
  Json scores = Json::object();
  for (const auto& [country, s] : map.scores) scores[country] = s;
  return Json{{"schema", "datalab.langmap.v1"}, {"languages", counts}, {"countries", scores}};
}

}  // namespace datalab::langmap
