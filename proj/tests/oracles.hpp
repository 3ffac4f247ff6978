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

// Brute-force reference implementations. They share no code with the
// library beyond plain types so a bug cannot cancel out on both sides.

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace datalab::oracle {

// ln(p_xy / (p_x p_y)) with probabilities as doubles; nullopt where c_xy = 0.
inline std::vector<std::vector<std::optional<double>>> pmi(
    const std::vector<std::vector<std::size_t>>& counts) {
  double n = 0;
  const std::size_t rows = counts.size();
  const std::size_t cols = rows ? counts[0].size() : 0;
  std::vector<double> px(rows, 0), py(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      n += static_cast<double>(counts[i][j]);
      px[i] += static_cast<double>(counts[i][j]);
      py[j] += static_cast<double>(counts[i][j]);
    }
  }
  std::vector<std::vector<std::optional<double>>> out(rows,
                                                      std::vector<std::optional<double>>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (counts[i][j] == 0) continue;
      const double pxy = static_cast<double>(counts[i][j]) / n;
      out[i][j] = std::log(pxy / ((px[i] / n) * (py[j] / n)));
    }
  }
  return out;
}

// Per-term BM25 over pre-tokenized documents.
inline std::vector<double> bm25(const std::vector<std::vector<std::string>>& docs,
                                const std::set<std::string>& query, double k1, double b) {
  const double n = static_cast<double>(docs.size());
  double total = 0;
  for (const auto& d : docs) total += static_cast<double>(d.size());
  const double avgdl = total / n;
  std::vector<double> scores;
  for (const auto& d : docs) {
    double score = 0;
    for (const auto& t : query) {
      double df = 0;
      for (const auto& other : docs) {
        for (const auto& w : other) {
          if (w == t) {
            df += 1;
            break;
          }
        }
      }
      double tf = 0;
      for (const auto& w : d) tf += w == t ? 1 : 0;
      const double idf = std::log((n - df + 0.5) / (df + 0.5) + 1.0);
      score += idf * (tf * (k1 + 1)) /
               (tf + k1 * (1 - b + b * static_cast<double>(d.size()) / avgdl));
    }
    scores.push_back(score);
  }
  return scores;
}

struct Fragment {
  std::size_t summary_start, source_start, length;
  bool operator==(const Fragment&) const = default;
};

// Greedy extraction driven by a suffix-match table M[i][j] = length of the
// common run starting at summary[i] and source[j].
inline std::vector<Fragment> fragments(const std::vector<std::string>& source,
                                       const std::vector<std::string>& summary) {
  const std::size_t n = summary.size(), m = source.size();
  std::vector<std::vector<std::size_t>> match(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      match[i][j] = summary[i] == source[j] ? match[i + 1][j + 1] + 1 : 0;
    }
  }
  std::vector<Fragment> out;
  std::size_t i = 0;
  while (i < n) {
    std::size_t best = 0, where = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (match[i][j] > best) {
        best = match[i][j];
        where = j;
      }
    }
    if (best == 0) {
      ++i;
      continue;
    }
    out.push_back({i, where, best});
    i += best;
  }
  return out;
}

struct Extractive {
  double coverage, density, copy_length;
  std::optional<double> novelty;
};

inline Extractive extractive(const std::vector<std::string>& source,
                             const std::vector<std::string>& summary) {
  const auto frags = fragments(source, summary);
  double sum = 0, sq = 0;
  for (const auto& f : frags) {
    sum += static_cast<double>(f.length);
    sq += static_cast<double>(f.length * f.length);
  }
  const double n = static_cast<double>(summary.size());
  Extractive e{sum / n, sq / n, frags.empty() ? 0.0 : sum / static_cast<double>(frags.size()),
               std::nullopt};
  if (summary.size() >= 2) {
    std::set<std::pair<std::string, std::string>> src;
    for (std::size_t k = 0; k + 1 < source.size(); ++k) src.insert({source[k], source[k + 1]});
    double novel = 0;
    for (std::size_t k = 0; k + 1 < summary.size(); ++k) {
      novel += src.count({summary[k], summary[k + 1]}) ? 0 : 1;
    }
    e.novelty = novel / static_cast<double>(summary.size() - 1);
  }
  return e;
}

// Bigram F1 via explicit multiset intersection.
inline std::optional<double> rouge2(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  if (a.size() < 2 || b.size() < 2) return std::nullopt;
  std::multiset<std::pair<std::string, std::string>> ma, mb;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) ma.insert({a[k], a[k + 1]});
  for (std::size_t k = 0; k + 1 < b.size(); ++k) mb.insert({b[k], b[k + 1]});
  double overlap = 0;
  for (auto it = ma.begin(); it != ma.end(); it = ma.upper_bound(*it)) {
    overlap += static_cast<double>(std::min(ma.count(*it), mb.count(*it)));
  }
  if (overlap == 0) return 0.0;
  const double p = overlap / static_cast<double>(a.size() - 1);
  const double r = overlap / static_cast<double>(b.size() - 1);
  return 2 * p * r / (p + r);
}

// Best ROUGE-2 over every subset of sentences (concatenated in order).
inline double best_subset_rouge2(const std::vector<std::vector<std::string>>& sentences,
                                 const std::vector<std::string>& reference) {
  double best = 0;
  const std::size_t k = sentences.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        tokens.insert(tokens.end(), sentences[i].begin(), sentences[i].end());
      }
    }
    best = std::max(best, rouge2(tokens, reference).value_or(0.0));
  }
  return best;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace datalab::oracle
