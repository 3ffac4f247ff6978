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

#include "datalab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "datalab/aggregate.hpp"
#include "datalab/error.hpp"
#include "datalab/serialization.hpp"
#include "datalab/text.hpp"

namespace datalab::diagnostics {

namespace {

std::string format_number(double v) { return Json(v).dump(); }

std::string category_of(const FeatureValue& v) {
  if (const auto* c = std::get_if<CategoryValue>(&v)) return c->value;
  if (const auto* t = std::get_if<TextValue>(&v)) return t->value;
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
  throw ValidationError("list-valued features cannot be binned");
}

bool all_numeric(const std::vector<FeatureValue>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](const FeatureValue& v) { return std::holds_alternative<double>(v); });
}

Binning fit(const std::vector<FeatureValue>& values, const BinningScheme& scheme,
            const std::string& feature, const std::vector<std::string>& order) {
  for (const auto& v : values) {
    const auto k = kind_of(v);
    if (k == ValueKind::NumberList || k == ValueKind::StringList) {
      throw ValidationError("feature '" + feature + "' is list-valued and cannot be binned");
    }
  }
  if (scheme.kind == BinKind::EqualFrequency) {
    if (!all_numeric(values)) {
      throw ValidationError("feature '" + feature + "' is not numeric; use categorical binning");
    }
    if (scheme.bin_count < 2) throw ValidationError("bin_count must be >= 2");
    std::vector<double> xs;
    xs.reserve(values.size());
    for (const auto& v : values) xs.push_back(std::get<double>(v));
    return Binning::equal_frequency(std::move(xs), scheme.bin_count);
  }
  std::vector<std::string> cats;
  cats.reserve(values.size());
  for (const auto& v : values) cats.push_back(category_of(v));
  return Binning::categorical(cats, order);
}

}  // namespace

Binning Binning::equal_frequency(std::vector<double> values, std::size_t bin_count) {
  Binning b;
  b.numeric_ = true;
  if (values.empty()) return b;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const double lo = values.front();
  const double hi = values.back();
  for (std::size_t k = 1; k < bin_count; ++k) {
    const double edge = values[k * n / bin_count];
    if (edge > lo && (b.interior_edges_.empty() || edge > b.interior_edges_.back())) {
      b.interior_edges_.push_back(edge);
    }
  }
  std::vector<double> edges{lo};
  edges.insert(edges.end(), b.interior_edges_.begin(), b.interior_edges_.end());
  edges.push_back(hi);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const bool last = i + 2 == edges.size();
    Bin bin;
    bin.lower = edges[i];
    bin.upper = edges[i + 1];
    bin.closed_upper = last;
    bin.label = "[" + format_number(edges[i]) + "," + format_number(edges[i + 1]) +
                (last ? "]" : ")");
    b.bins_.push_back(std::move(bin));
  }
  return b;
}

Binning Binning::categorical(const std::vector<std::string>& values,
                             const std::vector<std::string>& order) {
  Binning b;
  std::set<std::string> seen(values.begin(), values.end());
  for (const auto& c : order) {
    if (std::find(b.categories_.begin(), b.categories_.end(), c) == b.categories_.end()) {
      b.categories_.push_back(c);
    }
  }
  for (const auto& c : seen) {
    if (std::find(b.categories_.begin(), b.categories_.end(), c) == b.categories_.end()) {
      b.categories_.push_back(c);
    }
  }
  for (const auto& c : b.categories_) b.bins_.push_back({c, std::nullopt, std::nullopt, false});
  return b;
}

std::size_t Binning::assign(const FeatureValue& value) const {
  if (numeric_) {
    const double x = std::get<double>(value);
    return static_cast<std::size_t>(
        std::upper_bound(interior_edges_.begin(), interior_edges_.end(), x) -
        interior_edges_.begin());
  }
  const auto c = category_of(value);
  auto it = std::find(categories_.begin(), categories_.end(), c);
  if (it == categories_.end()) throw ValidationError("unseen category '" + c + "'");
  return static_cast<std::size_t>(it - categories_.begin());
}

LogBase parse_log_base(std::string_view name) {
  if (name == "e" || name == "ln") return LogBase::E;
  if (name == "2" || name == "log2") return LogBase::Two;
  throw ValidationError("unknown log base '" + std::string(name) + "'");
}

std::string_view to_string(LogBase base) { return base == LogBase::E ? "e" : "2"; }

PmiTable pmi_from_counts(const CountMatrix& counts, LogBase base) {
  PmiTable t;
  t.base = base;
  t.joint_counts = counts;
  const std::size_t nx = counts.size();
  const std::size_t ny = nx ? counts.front().size() : 0;
  std::vector<std::uint64_t> row(nx, 0);
  std::vector<std::uint64_t> col(ny, 0);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < nx; ++i) {
    if (counts[i].size() != ny) throw ValidationError("ragged count matrix");
    for (std::size_t j = 0; j < ny; ++j) {
      row[i] += counts[i][j];
      col[j] += counts[i][j];
      total += counts[i][j];
    }
  }
  t.total = total;
  t.pmi.assign(nx, std::vector<std::optional<double>>(ny));
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      if (counts[i][j] == 0) continue;
      // p_xy / (p_x p_y) = c_xy N / (c_x c_y); integer products keep exact
      // independence at exactly 1.
      const double ratio = static_cast<double>(counts[i][j] * total) /
                           static_cast<double>(row[i] * col[j]);
      t.pmi[i][j] = base == LogBase::E ? std::log(ratio) : std::log2(ratio);
    }
  }
  return t;
}

PmiTable pmi_table(const std::vector<FeatureValue>& xs, const std::vector<FeatureValue>& ys,
                   const std::string& feature_x, const std::string& feature_y,
                   const BinningScheme& binning_x, const BinningScheme& binning_y, LogBase base,
                   const std::vector<std::string>& y_order,
                   const std::vector<std::string>& x_order) {
  if (xs.size() != ys.size()) throw ValidationError("observation columns differ in length");
  if (xs.empty()) {
    throw ValidationError("no samples with both '" + feature_x + "' and '" + feature_y + "'");
  }
  const auto bx = fit(xs, binning_x, feature_x, x_order);
  const auto by = fit(ys, binning_y, feature_y, y_order);
  CountMatrix counts(bx.bins().size(), std::vector<std::size_t>(by.bins().size(), 0));
  for (std::size_t i = 0; i < xs.size(); ++i) ++counts[bx.assign(xs[i])][by.assign(ys[i])];

  auto t = pmi_from_counts(counts, base);
  t.feature_x = feature_x;
  t.feature_y = feature_y;
  t.bins_x = bx.bins();
  t.bins_y = by.bins();
  if (bx.degenerate()) t.warnings.push_back("single bin for '" + feature_x + "'");
  if (by.degenerate()) t.warnings.push_back("single bin for '" + feature_y + "'");
  return t;
}

namespace {

std::map<std::uint64_t, FeatureValue> resolve_column(const Dataset& dataset,
                                                     const std::string& split,
                                                     const FeatureStore& store,
                                                     const std::string& feature) {
  if (feature == kLabelFeature) {
    std::map<std::uint64_t, FeatureValue> out;
    for (const auto& s : dataset.split(split)) {
      if (s.label) out.emplace(s.sample_id, CategoryValue{*s.label});
    }
    if (out.empty()) throw ValidationError("split '" + split + "' has no labels");
    return out;
  }
  auto column = store.column(dataset.name, split, feature);
  if (column.empty()) {
    throw ValidationError("unknown feature '" + feature + "' (no stored records for " +
                          dataset.name + "/" + split + ")");
  }
  return column;
}

std::vector<std::string> order_for(const Dataset& dataset, const std::string& feature) {
  if (feature == kLabelFeature && dataset.schema.label_domain) return *dataset.schema.label_domain;
  return {};
}

}  // namespace

PmiTable pmi_table(const Dataset& dataset, const std::string& split, const FeatureStore& store,
                   const std::string& feature_x, const std::string& feature_y,
                   const BinningScheme& binning_x, const BinningScheme& binning_y,
                   LogBase base) {
  const auto cx = resolve_column(dataset, split, store, feature_x);
  const auto cy = resolve_column(dataset, split, store, feature_y);
  std::vector<FeatureValue> xs;
  std::vector<FeatureValue> ys;
  for (const auto& [id, vx] : cx) {
    auto it = cy.find(id);
    if (it == cy.end()) continue;
    xs.push_back(vx);
    ys.push_back(it->second);
  }
  return pmi_table(xs, ys, feature_x, feature_y, binning_x, binning_y, base,
                   order_for(dataset, feature_y), order_for(dataset, feature_x));
}

std::vector<Artifact> rank_artifacts(const std::vector<PmiTable>& tables, double threshold) {
  std::vector<Artifact> out;
  for (const auto& t : tables) {
    for (std::size_t i = 0; i < t.pmi.size(); ++i) {
      for (std::size_t j = 0; j < t.pmi[i].size(); ++j) {
        const auto& v = t.pmi[i][j];
        if (!v || *v < threshold || *v <= 0) continue;
        out.push_back({t.feature_x, i, t.bins_x[i].label, j, t.bins_y[j].label, *v,
                       t.joint_counts[i][j]});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Artifact& a, const Artifact& b) {
    if (a.pmi != b.pmi) return a.pmi > b.pmi;
    return std::tie(a.feature, a.bin_index, a.label_index) <
           std::tie(b.feature, b.bin_index, b.label_index);
  });
  return out;
}

ArtifactScan detect_artifacts(const Dataset& dataset, const std::string& split,
                              const FeatureStore& store, const std::vector<std::string>& features,
                              const std::string& label_feature, double threshold,
                              std::size_t bins, LogBase base) {
  ArtifactScan scan;
  for (const auto& feature : features) {
    const auto column = resolve_column(dataset, split, store, feature);
    const bool numeric = std::all_of(column.begin(), column.end(), [](const auto& kv) {
      return std::holds_alternative<double>(kv.second);
    });
    const auto scheme =
        numeric ? BinningScheme::equal_frequency(bins) : BinningScheme::categorical();
    scan.tables.push_back(pmi_table(dataset, split, store, feature, label_feature, scheme,
                                    BinningScheme::categorical(), base));
  }
  scan.artifacts = rank_artifacts(scan.tables, threshold);
  return scan;
}

GenderBiasReport gender_bias(const Dataset& dataset, const std::string& split,
                             const WordSet& male, const WordSet& female) {
  if (male.empty() || female.empty()) throw ConfigError("gender lexicon is empty");
  const auto& samples = dataset.split(split);
  if (samples.empty()) throw ValidationError("split '" + split + "' is empty");
  GenderBiasReport r;
  r.n_samples = samples.size();
  for (const auto& s : samples) {
    bool m = false;
    bool f = false;
    for (const auto& t : text::folded_words(aggregate::joined_text(s, dataset.schema))) {
      m = m || male.count(t);
      f = f || female.count(t);
    }
    r.n_male += m;
    r.n_female += f;
  }
  const double n = static_cast<double>(r.n_samples);
  r.b_male = static_cast<double>(r.n_male) / n;
  r.b_female = static_cast<double>(r.n_female) / n;
  if (r.n_female > 0) r.gb = r.b_male / r.b_female;
  return r;
}

std::string_view to_string(SpeechClass c) {
  switch (c) {
    case SpeechClass::Hate: return "hate";
    case SpeechClass::Offensive: return "offensive";
    case SpeechClass::Neither: return "neither";
  }
  return "neither";
}

SpeechClass classify_speech(std::string_view input, const WordSet& hate,
                            const WordSet& offensive) {
  bool offensive_hit = false;
  for (const auto& t : text::folded_words(input)) {
    if (hate.count(t)) return SpeechClass::Hate;
    offensive_hit = offensive_hit || offensive.count(t);
  }
  return offensive_hit ? SpeechClass::Offensive : SpeechClass::Neither;
}

SpeechBiasReport speech_bias(const Dataset& dataset, const std::string& split,
                             const WordSet& hate, const WordSet& offensive) {
  if (hate.empty() || offensive.empty()) throw ConfigError("speech lexicon is empty");
  const auto& samples = dataset.split(split);
  if (samples.empty()) throw ValidationError("split '" + split + "' is empty");
  SpeechBiasReport r;
  r.n_samples = samples.size();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& s : samples) {
    const auto c = classify_speech(aggregate::joined_text(s, dataset.schema), hate, offensive);
    r.per_sample.push_back(c);
    ++counts[static_cast<int>(c)];
  }
  const double n = static_cast<double>(r.n_samples);
  r.hate_ratio = static_cast<double>(counts[0]) / n;
  r.offensive_ratio = static_cast<double>(counts[1]) / n;
  r.neither_ratio = static_cast<double>(counts[2]) / n;
  return r;
}

double label_imbalance(const Dataset& dataset, const std::string& split) {
  const auto dist = aggregate::label_distribution(dataset, split);
  const std::size_t k = dist.size();
  if (k < 2) throw ValidationError("label imbalance needs at least two labels");
  double h = 0;
  for (const auto& row : dist) {
    if (row.proportion > 0) h -= row.proportion * std::log(row.proportion);
  }
  return h / std::log(static_cast<double>(k));
}

Json to_json(const Bin& bin) {
  Json j;
  j["label"] = bin.label;
  if (bin.lower) j["lower"] = *bin.lower;
  if (bin.upper) j["upper"] = *bin.upper;
  if (bin.lower) j["closed_upper"] = bin.closed_upper;
  return j;
}

Json to_json(const PmiTable& t) {
  Json j;
  j["feature_x"] = t.feature_x;
  j["feature_y"] = t.feature_y;
  j["log_base"] = to_string(t.base);
  j["total"] = t.total;
  j["bins_x"] = Json::array();
  for (const auto& b : t.bins_x) j["bins_x"].push_back(to_json(b));
  j["bins_y"] = Json::array();
  for (const auto& b : t.bins_y) j["bins_y"].push_back(to_json(b));
  j["joint_counts"] = t.joint_counts;
  j["pmi"] = Json::array();
  for (const auto& row : t.pmi) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v ? Json(*v) : Json("undefined"));
    j["pmi"].push_back(std::move(r));
  }
  j["warnings"] = t.warnings;
  return j;
}

Json to_json(const Artifact& a) {
  Json j;
  j["feature"] = a.feature;
  j["bin_index"] = a.bin_index;
  j["bin"] = a.bin;
  j["label"] = a.label;
  j["pmi"] = a.pmi;
  j["count"] = a.count;
  return j;
}

Json to_json(const GenderBiasReport& r) {
  Json j;
  j["b_male"] = r.b_male;
  j["b_female"] = r.b_female;
  j["gb"] = r.gb ? Json(*r.gb) : Json("undefined");
  j["n_samples"] = r.n_samples;
  j["n_male"] = r.n_male;
  j["n_female"] = r.n_female;
  return j;
}

Json to_json(const SpeechBiasReport& r) {
  Json j;
  j["hate_ratio"] = r.hate_ratio;
  j["offensive_ratio"] = r.offensive_ratio;
  j["neither_ratio"] = r.neither_ratio;
  j["n_samples"] = r.n_samples;
  return j;
}

}  // namespace datalab::diagnostics
