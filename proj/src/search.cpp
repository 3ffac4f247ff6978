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

#include "datalab/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "datalab/error.hpp"
#include "datalab/text.hpp"

namespace datalab::search {

std::string_view to_string(QueryMode mode) {
  switch (mode) {
    case QueryMode::Keywords: return "keywords";
    case QueryMode::Description: return "description";
    case QueryMode::Similar: return "similar";
  }
  return "keywords";
}

QueryMode parse_mode(std::string_view name) {
  if (name == "keywords") return QueryMode::Keywords;
  if (name == "description") return QueryMode::Description;
  if (name == "similar") return QueryMode::Similar;
  throw ValidationError("unknown search mode '" + std::string(name) +
                        "' (keywords, description, similar)");
}

std::vector<std::string> index_tokens(std::string_view text, const WordSet& stopwords) {
  auto tokens = text::folded_words(text);
  if (!stopwords.empty()) {
    std::erase_if(tokens, [&](const std::string& t) { return stopwords.count(t) > 0; });
  }
  return tokens;
}

SearchIndex build_index(const std::vector<ingest::RegistryEntry>& entries, double k1, double b,
                        WordSet stopwords) {
  SearchIndex index;
  index.k1 = k1;
  index.b = b;
  index.stopwords = std::move(stopwords);
  std::vector<const ingest::RegistryEntry*> sorted;
  for (const auto& e : entries) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* x, const auto* y) { return x->name < y->name; });

  std::size_t total = 0;
  for (const auto* e : sorted) {
    if (e->metadata.description.empty()) continue;
    Document doc;
    doc.name = e->name;
    doc.description = e->metadata.description;
    std::string body = e->metadata.description;
    body += " " + (e->metadata.task.empty() ? std::string(to_string(e->schema.task))
                                            : e->metadata.task);
    for (const auto& lang : e->metadata.languages) body += " " + lang;
    for (auto& t : index_tokens(body, index.stopwords)) ++doc.tf[t];
    for (const auto& [t, n] : doc.tf) {
      doc.length += n;
      ++index.df[t];
    }
    total += doc.length;
    index.docs.push_back(std::move(doc));
  }
  if (index.docs.empty()) {
    throw ValidationError("no registered dataset has a description to search");
  }
  index.avgdl = static_cast<double>(total) / static_cast<double>(index.docs.size());
  return index;
}

SearchIndex build_index(const ingest::Registry& registry, double k1, double b,
                        WordSet stopwords) {
  std::vector<ingest::RegistryEntry> entries;
  for (const auto& [name, e] : registry.entries()) entries.push_back(e);
  return build_index(entries, k1, b, std::move(stopwords));
}

double idf(const SearchIndex& index, const std::string& term) {
  const auto it = index.df.find(term);
  const double df = it == index.df.end() ? 0.0 : static_cast<double>(it->second);
  const double n = static_cast<double>(index.docs.size());
  return std::log((n - df + 0.5) / (df + 0.5) + 1.0);
}

double bm25(const SearchIndex& index, const Document& doc, const std::vector<std::string>& terms) {
  double score = 0.0;
  const double norm = index.k1 * (1.0 - index.b +
                                  index.b * static_cast<double>(doc.length) / index.avgdl);
  for (const auto& t : terms) {
    const auto it = doc.tf.find(t);
    if (it == doc.tf.end()) continue;
    const double tf = static_cast<double>(it->second);
    score += idf(index, t) * tf * (index.k1 + 1.0) / (tf + norm);
  }
  return score;
}

std::vector<Hit> query(const SearchIndex& index, std::string_view text, QueryMode mode,
                       std::size_t top_k) {
  std::string query_text(text);
  const Document* reference = nullptr;
  if (mode == QueryMode::Similar) {
    for (const auto& d : index.docs) {
      if (d.name == text) reference = &d;
    }
    if (!reference) {
      throw ValidationError("unknown reference dataset '" + std::string(text) + "'");
    }
    query_text = reference->description;
  }
  const auto tokens = index_tokens(query_text, index.stopwords);
  const std::set<std::string> distinct(tokens.begin(), tokens.end());
  if (distinct.empty()) throw ValidationError("query has no searchable terms");
  const std::vector<std::string> terms(distinct.begin(), distinct.end());

  std::vector<Hit> hits;
  for (const auto& d : index.docs) {
    const double s = bm25(index, d, terms);
    if (s > 0.0 || &d == reference) hits.push_back({d.name, s});
  }
  std::stable_sort(hits.begin(), hits.end(), [&](const Hit& x, const Hit& y) {
    if (reference) {
      const bool xr = x.dataset == reference->name;
      const bool yr = y.dataset == reference->name;
      if (xr != yr) return xr;
    }
    if (x.score != y.score) return x.score > y.score;
    return x.dataset < y.dataset;
  });
  if (hits.size() > top_k) hits.resize(top_k);
  return hits;
}

}  // namespace datalab::search
