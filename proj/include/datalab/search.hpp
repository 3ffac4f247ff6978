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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "datalab/ingest.hpp"
#include "datalab/resources.hpp"

namespace datalab::search {

enum class QueryMode { Keywords, Description, Similar };

std::string_view to_string(QueryMode mode);
QueryMode parse_mode(std::string_view name);

struct Document {
  std::string name;
  std::string description;
  std::map<std::string, std::size_t> tf;
  std::size_t length = 0;
};

struct SearchIndex {
  std::vector<Document> docs;  // sorted by name
  std::map<std::string, std::size_t> df;
  double avgdl = 0.0;
  double k1 = 1.2;
  double b = 0.75;
  WordSet stopwords;
};

// Folded regex-word tokens with stopwords removed.
std::vector<std::string> index_tokens(std::string_view text, const WordSet& stopwords);

// Documents are description + task + languages. Entries with an empty
// description are not indexed. Throws ValidationError when nothing is left.
SearchIndex build_index(const std::vector<ingest::RegistryEntry>& entries, double k1 = 1.2,
                        double b = 0.75, WordSet stopwords = {});
SearchIndex build_index(const ingest::Registry& registry, double k1 = 1.2, double b = 0.75,
                        WordSet stopwords = {});

double idf(const SearchIndex& index, const std::string& term);
double bm25(const SearchIndex& index, const Document& doc, const std::vector<std::string>& terms);

struct Hit {
  std::string dataset;
  double score = 0.0;
};

// In Similar mode `text` names a dataset whose description becomes the
// query; that dataset is always listed first.
std::vector<Hit> query(const SearchIndex& index, std::string_view text, QueryMode mode,
                       std::size_t top_k);

}  // namespace datalab::search
