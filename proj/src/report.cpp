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

#include "datalab/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "datalab/aggregate.hpp"
#include "datalab/error.hpp"
#include "datalab/featurize.hpp"
#include "datalab/ingest.hpp"

namespace datalab::report {

Histogram numeric_histogram(const std::string& feature, const std::vector<double>& values,
                            std::size_t bins) {
  if (values.empty()) throw ValidationError("feature '" + feature + "' has no values");
  if (bins == 0) throw ValidationError("histogram needs at least one bin");
  Histogram h;
  h.feature = feature;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (lo == hi) {
    h.edges = {lo - 0.5, lo + 0.5};
    h.counts = {values.size()};
    return h;
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i < bins; ++i) h.edges.push_back(lo + width * static_cast<double>(i));
  h.edges.push_back(hi);
  h.counts.assign(bins, 0);
  for (double v : values) {
    auto idx = static_cast<std::size_t>(std::upper_bound(h.edges.begin(), h.edges.end(), v) -
                                        h.edges.begin());
    idx = std::min(idx == 0 ? 0 : idx - 1, bins - 1);
    ++h.counts[idx];
  }
  return h;
}

Histogram build_histogram(const FeatureStore& store, const std::string& dataset,
                          const std::string& split, const std::string& feature,
                          std::size_t bins) {
  const auto column = store.column(dataset, split, feature);
  if (column.empty()) {
    throw ValidationError("unknown feature '" + feature + "' for " + dataset + "/" + split);
  }
  std::vector<double> numbers;
  std::map<std::string, std::size_t> categories;
  for (const auto& [id, value] : column) {
    if (const auto* d = std::get_if<double>(&value)) {
      numbers.push_back(*d);
    } else if (const auto* c = std::get_if<CategoryValue>(&value)) {
      ++categories[c->value];
    } else {
      throw ValidationError("feature '" + feature + "' holds " +
                            std::string(to_string(kind_of(value))) +
                            " values, which cannot be histogrammed");
    }
  }
  if (!numbers.empty() && !categories.empty()) {
    throw ValidationError("feature '" + feature + "' mixes numbers and categories");
  }
  if (numbers.empty()) {
    Histogram h;
    h.feature = feature;
    h.categorical = true;
    for (const auto& [label, n] : categories) {
      h.categories.push_back(label);
      h.counts.push_back(n);
    }
    return h;
  }
  return numeric_histogram(feature, numbers, bins);
}

Json to_json(const Histogram& h) {
  Json j;
  j["feature"] = h.feature;
  j["kind"] = h.categorical ? "category" : "number";
  if (h.categorical) {
    j["categories"] = h.categories;
  } else {
    j["edges"] = h.edges;
  }
  j["counts"] = h.counts;
  return j;
}

namespace {

std::optional<double> mean(const std::vector<double>& xs) {
  if (xs.empty()) return std::nullopt;
  double sum = 0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

std::optional<double> label_entropy(const Dataset& ds, const std::string& split) {
  std::map<std::string, std::size_t> counts;
  std::size_t n = 0;
  for (const auto& s : ds.split(split)) {
    if (!s.label) continue;
    ++counts[*s.label];
    ++n;
  }
  if (n == 0) return std::nullopt;
  double h = 0;
  for (const auto& [label, c] : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(n);
    h -= p * std::log(p);
  }
  return h;
}

std::map<std::string, std::optional<double>> axis_values(const Dataset& ds,
                                                         const std::string& split) {
  std::map<std::string, std::optional<double>> out;
  const auto& samples = ds.split(split);
  if (ds.schema.task == Task::Summarization) {
    std::vector<double> den, nov, cov;
    for (const auto& s : samples) {
      const auto st = features::extractive_stats(s.field("source"), s.field("summary"));
      if (st.density) den.push_back(*st.density);
      if (st.novelty) nov.push_back(*st.novelty);
      if (st.coverage) cov.push_back(*st.coverage);
    }
    out["density"] = mean(den);
    out["novelty"] = mean(nov);
    out["coverage"] = mean(cov);
    return out;
  }
  std::vector<double> len, rich;
  for (const auto& s : samples) {
    const auto text = aggregate::joined_text(s, ds.schema);
    len.push_back(features::get_length(text));
    if (auto r = features::lexical_richness(text)) rich.push_back(*r);
  }
  out["length"] = mean(len);
  out["lexical_richness"] = mean(rich);
  out["label_entropy"] = label_entropy(ds, split);
  return out;
}

std::vector<std::string> axis_order(Task task) {
  if (task == Task::Summarization) return {"density", "novelty", "coverage"};
  return {"length", "lexical_richness", "label_entropy"};
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

ComparisonVector compare_datasets(const Dataset& a, const Dataset& b, const std::string& split) {
  if (a.schema.task != b.schema.task) {
    throw ValidationError("cannot compare task '" + std::string(to_string(a.schema.task)) +
                          "' with task '" + std::string(to_string(b.schema.task)) + "'");
  }
  ComparisonVector c{a.name, b.name, split, {}};
  const auto va = axis_values(a, split);
  const auto vb = axis_values(b, split);
  for (const auto& name : axis_order(a.schema.task)) {
    Axis axis{name, va.at(name), vb.at(name), std::nullopt, std::nullopt};
    if (axis.raw_a && axis.raw_b) {
      const double lo = std::min(*axis.raw_a, *axis.raw_b);
      const double hi = std::max(*axis.raw_a, *axis.raw_b);
      if (hi == lo) {
        axis.normalized_a = axis.normalized_b = 0.5;
      } else {
        axis.normalized_a = (*axis.raw_a - lo) / (hi - lo);
        axis.normalized_b = (*axis.raw_b - lo) / (hi - lo);
      }
    }
    c.axes.push_back(std::move(axis));
  }
  return c;
}

Json to_json(const ComparisonVector& c) {
  Json axes = Json::array();
  for (const auto& a : c.axes) {
    axes.push_back({{"name", a.name},
                    {"raw", Json::array({optional_json(a.raw_a), optional_json(a.raw_b)})},
                    {"normalized", Json::array({optional_json(a.normalized_a),
                                                optional_json(a.normalized_b)})}});
  }
  return Json{{"datasets", Json::array({c.dataset_a, c.dataset_b})},
              {"split", c.split},
              {"axes", axes}};
}

std::string_view to_string(SectionStatus status) {
  switch (status) {
    case SectionStatus::Ok: return "ok";
    case SectionStatus::Skipped: return "skipped";
    case SectionStatus::Error: return "error";
  }
  return "ok";
}

std::string metadata_digest(const Dataset& dataset) {
  const Json j{{"name", dataset.name},
               {"metadata", to_json(dataset.metadata)},
               {"schema", to_json(dataset.schema)}};
  return ingest::sha256_hex(j.dump());
}

namespace {

class Builder {
 public:
  Builder(const ops::Registry& registry, const Dataset& dataset, const std::string& split,
          FeatureStore& store, const Resources& resources, const ReportConfig& config,
          DiagnosticReport& report)
      : registry_(registry),
        dataset_(dataset),
        split_(split),
        store_(store),
        resources_(resources),
        config_(config),
        report_(report) {}

  // Runs the featurize op unless every named feature already has stored values.
  void ensure(const std::string& op_id, const std::vector<std::string>& names,
              Section& section) {
    const bool present = std::all_of(names.begin(), names.end(), [&](const std::string& n) {
      return !store_.column(dataset_.name, split_, n).empty();
    });
    if (!present) run(op_id, {}, section);
    else note(op_id, section, ops::Provenance{op_id, resolved_defaults(op_id), std::nullopt});
  }

  Json run(const std::string& op_id, const ops::RawParams& params, Section& section) {
    ops::ApplyOptions options;
    options.store = &store_;
    options.resources = &resources_;
    options.jobs = config_.jobs;
    auto result = ops::apply(registry_, dataset_, split_, op_id, params, options);
    note(op_id, section, result.provenance);
    if (auto* j = std::get_if<Json>(&result.produced)) return std::move(*j);
    return Json();
  }

 private:
  ops::RawParams resolved_defaults(const std::string& op_id) const {
    ops::RawParams out;
    for (const auto& [name, spec] : registry_.at(op_id).parameters) out[name] = spec.default_value;
    return out;
  }

  void note(const std::string& op_id, Section& section, const ops::Provenance& p) {
    section.operations.push_back(op_id);
    if (std::find(report_.provenance.begin(), report_.provenance.end(), p) ==
        report_.provenance.end()) {
      report_.provenance.push_back(p);
    }
  }

  const ops::Registry& registry_;
  const Dataset& dataset_;
  const std::string& split_;
  FeatureStore& store_;
  const Resources& resources_;
  const ReportConfig& config_;
  DiagnosticReport& report_;
};

bool has_labels(const Dataset& ds, const std::string& split) {
  const auto& samples = ds.split(split);
  return std::any_of(samples.begin(), samples.end(), [](const Sample& s) { return s.label; });
}

std::string join_csv(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

}  // namespace

DiagnosticReport build_report(const ops::Registry& registry, const Dataset& dataset,
                              const std::string& split, FeatureStore& store,
                              const Resources& resources, const ReportConfig& config) {
  DiagnosticReport report;
  report.dataset = dataset.name;
  report.split = split;
  report.task = std::string(to_string(dataset.schema.task));
  report.num_samples = dataset.split(split).size();
  report.metadata_digest = metadata_digest(dataset);
  report.generated_at = config.generated_at;
  report.toolkit_version = kToolkitVersion;

  Builder b(registry, dataset, split, store, resources, config, report);
  const bool labeled = has_labels(dataset, split);
  const auto length_names = ops::feature_names("general.length", dataset.schema);
  const auto richness_names = ops::feature_names("general.lexical_richness", dataset.schema);

  auto section = [&](const std::string& name, auto&& body) {
    if (!config.sections.empty() &&
        std::find(config.sections.begin(), config.sections.end(), name) ==
            config.sections.end()) {
      return;
    }
    Section s;
    s.name = name;
    try {
      body(s);
    } catch (const std::exception& e) {
      s.status = SectionStatus::Error;
      s.reason = e.what();
      s.data = Json();
    }
    report.sections.push_back(std::move(s));
  };
  auto skip = [](Section& s, std::string reason) {
    s.status = SectionStatus::Skipped;
    s.reason = std::move(reason);
  };

  section("characteristics", [&](Section& s) {
    b.ensure("featurize.get_length.v1", length_names, s);
    b.ensure("featurize.lexical_richness.v1", richness_names, s);
    Json list = Json::array();
    for (const auto* names : {&length_names, &richness_names}) {
      for (const auto& f : *names) {
        if (store.column(dataset.name, split, f).empty()) continue;
        list.push_back(to_json(build_histogram(store, dataset.name, split, f,
                                               config.histogram_bins)));
      }
    }
    s.data = Json{{"bins", config.histogram_bins}, {"histograms", list}};
  });

  section("label_distribution", [&](Section& s) {
    if (!labeled) return skip(s, "split has no labels");
    s.data = b.run("aggregate.label_distribution.v1", {}, s);
  });

  section("gender_bias", [&](Section& s) { s.data = b.run("aggregate.gender_bias.v1", {}, s); });
  section("speech_bias", [&](Section& s) { s.data = b.run("aggregate.speech_bias.v1", {}, s); });

  section("artifacts", [&](Section& s) {
    if (!labeled) return skip(s, "split has no labels");
    auto features = config.artifact_features;
    if (features.empty()) {
      b.ensure("featurize.get_length.v1", length_names, s);
      features = length_names;
    }
    s.data = b.run("aggregate.detect_artifacts.v1",
                   {{"features", join_csv(features)},
                    {"threshold", Json(config.artifact_threshold).dump()},
                    {"bins", std::to_string(config.artifact_bins)},
                    {"log_base", std::string(diagnostics::to_string(config.log_base))}},
                   s);
  });

  section("comparison", [&](Section& s) {
    if (!config.compare_with) return skip(s, "no comparison dataset requested");
    s.data = to_json(compare_datasets(dataset, *config.compare_with, split));
  });
  return report;
}

Json to_json(const DiagnosticReport& r) {
  Json sections = Json::array();
  for (const auto& s : r.sections) {
    Json j;
    j["name"] = s.name;
    j["status"] = to_string(s.status);
    if (!s.reason.empty()) j["reason"] = s.reason;
    j["operations"] = s.operations;
    j["data"] = s.data;
    sections.push_back(std::move(j));
  }
  Json provenance = Json::array();
  for (const auto& p : r.provenance) provenance.push_back(ops::to_json(p));
  return Json{{"schema", "datalab.report.v1"},
              {"dataset",
               {{"name", r.dataset},
                {"split", r.split},
                {"task", r.task},
                {"num_samples", r.num_samples},
                {"metadata_digest", r.metadata_digest}}},
              {"generated_at", r.generated_at},
              {"toolkit_version", r.toolkit_version},
              {"sections", sections},
              {"provenance", provenance}};
}

namespace {

std::string fmt(const Json& v) {
  if (v.is_number_float()) {
    std::ostringstream ss;
    ss.precision(4);
    ss << std::fixed << v.get<double>();
    return ss.str();
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_histogram(std::ostringstream& md, const Json& h) {
  md << "\n**" << h["feature"].get<std::string>() << "**\n\n| bin | count |\n|---|---|\n";
  const auto& counts = h["counts"];
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (h["kind"] == "category") {
      md << "| " << fmt(h["categories"][i]) << " | " << counts[i] << " |\n";
    } else {
      const bool last = i + 1 == counts.size();
      md << "| [" << fmt(h["edges"][i]) << ", " << fmt(h["edges"][i + 1]) << (last ? "]" : ")")
         << " | " << counts[i] << " |\n";
    }
  }
}

void render_section(std::ostringstream& md, const Section& s) {
  md << "\n## " << s.name << "\n\n";
  if (s.status != SectionStatus::Ok) {
    md << "_" << to_string(s.status) << ": " << s.reason << "_\n";
    return;
  }
  const auto& d = s.data;
  if (s.name == "characteristics") {
    for (const auto& h : d["histograms"]) render_histogram(md, h);
  } else if (s.name == "label_distribution") {
    md << "| label | count | proportion |\n|---|---|---|\n";
    for (const auto& row : d["labels"]) {
      md << "| " << fmt(row["label"]) << " | " << row["count"] << " | " << fmt(row["proportion"])
         << " |\n";
    }
  } else if (s.name == "artifacts") {
    const auto& list = d["artifacts"];
    if (list.empty()) {
      md << "No feature bin is associated with a label above the threshold.\n";
      return;
    }
    md << "| feature | bin | label | pmi | count |\n|---|---|---|---|---|\n";
    for (const auto& a : list) {
      md << "| " << fmt(a["feature"]) << " | " << fmt(a["bin"]) << " | " << fmt(a["label"])
         << " | " << fmt(a["pmi"]) << " | " << a["count"] << " |\n";
    }
  } else if (s.name == "comparison") {
    md << "| axis | " << fmt(d["datasets"][0]) << " | " << fmt(d["datasets"][1])
       << " | normalized |\n|---|---|---|---|\n";
    for (const auto& a : d["axes"]) {
      md << "| " << fmt(a["name"]) << " | " << fmt(a["raw"][0]) << " | " << fmt(a["raw"][1])
         << " | " << fmt(a["normalized"][0]) << " / " << fmt(a["normalized"][1]) << " |\n";
    }
  } else {
    md << "| metric | value |\n|---|---|\n";
    for (const auto& [k, v] : d.items()) {
      if (v.is_primitive()) md << "| " << k << " | " << fmt(v) << " |\n";
    }
  }
}

}  // namespace

std::string render_markdown(const DiagnosticReport& r) {
  std::ostringstream md;
  md << "# Diagnostic report: " << r.dataset << " (" << r.split << ")\n\n"
     << "- task: " << r.task << "\n"
     << "- samples: " << r.num_samples << "\n"
     << "- metadata digest: `" << r.metadata_digest << "`\n"
     << "- generated at: " << r.generated_at << "\n"
     << "- toolkit version: " << r.toolkit_version << "\n";
  for (const auto& s : r.sections) render_section(md, s);
  return md.str();
}

}  // namespace datalab::report
