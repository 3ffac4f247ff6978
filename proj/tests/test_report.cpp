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

#include <algorithm>

#include <gtest/gtest.h>

#include "datalab/aggregate.hpp"
#include "datalab/error.hpp"
#include "datalab/featurize.hpp"
#include "datalab/ingest.hpp"
#include "datalab/report.hpp"
#include "datalab/serialization.hpp"
#include "support.hpp"

namespace datalab {
namespace {

using namespace report;
using testing::fixture;

Dataset load_fixture(const std::string& name, Task task, const std::string& file,
                     const std::string& split) {
  ingest::LoaderSpec spec;
  spec.split_files[split] = fixture(file);
  const auto schema = TaskSchema::for_task(task);
  ingest::fill_identity_mapping(spec, schema);
  DatasetMetadata m{{"en"}, std::string(to_string(task)), "", std::nullopt, std::nullopt};
  return ingest::load_dataset(name, spec, schema, m);
}

Dataset toy_sentiment() {
  const auto cfg = ingest::read_config(fixture("toy_sentiment/dataset.json"));
  return ingest::load_dataset(cfg.name, cfg.loader, cfg.schema, cfg.metadata);
}

ReportConfig fixed_config() {
  ReportConfig c;
  c.generated_at = "1970-01-01T00:00:00Z";
  return c;
}

std::string render(const Dataset& ds, const ReportConfig& config) {
  const auto registry = ops::Registry::with_builtins();
  const auto resources = testing::bundled_resources();
  auto store = FeatureStore::in_memory();
  return to_json(build_report(registry, ds, "train", store, resources, config)).dump(2) + "\n";
}

TEST(Histogram, EqualWidth) {
  const auto h = numeric_histogram("general.length", {1, 2, 3, 4}, 2);
  EXPECT_EQ(h.edges, (std::vector<double>{1, 2.5, 4}));
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{2, 2}));
  const auto flat = numeric_histogram("x", {3, 3, 3}, 5);
  EXPECT_EQ(flat.counts, (std::vector<std::size_t>{3}));
  const auto spread = numeric_histogram("x", {0, 0.5, 9.99, 10, 3, 7}, 4);
  std::size_t total = 0;
  for (auto c : spread.counts) total += c;
  EXPECT_EQ(total, 6u);
  EXPECT_EQ(spread.counts.back(), 2u);
}

TEST(Histogram, FromStoreSkipsMissingAndHandlesCategories) {
  auto store = FeatureStore::in_memory();
  store.put({"d", "train", 0, "f", 1.0, "op"});
  store.put({"d", "train", 2, "f", 3.0, "op"});
  store.put({"d", "train", 0, "c", CategoryValue{"hate"}, "op"});
  store.put({"d", "train", 1, "c", CategoryValue{"neither"}, "op"});
  store.put({"d", "train", 2, "c", CategoryValue{"neither"}, "op"});
  const auto h = build_histogram(store, "d", "train", "f", 2);
  EXPECT_EQ(h.counts[0] + h.counts[1], 2u);
  const auto c = build_histogram(store, "d", "train", "c", 2);
  EXPECT_TRUE(c.categorical);
  EXPECT_EQ(c.categories, (std::vector<std::string>{"hate", "neither"}));
  EXPECT_EQ(c.counts, (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(build_histogram(store, "d", "train", "missing", 2), ValidationError);
}

TEST(Report, ToySentimentGolden) {
  const auto json = render(toy_sentiment(), fixed_config());
  EXPECT_TRUE(testing::matches_golden("report/toy_sentiment.json", json)) << json;
  const auto j = Json::parse(json);
  std::vector<std::string> names;
  for (const auto& s : j["sections"]) {
    names.push_back(s["name"]);
    EXPECT_EQ(s["status"], s["name"] == "comparison" ? "skipped" : "ok") << s["name"];
  }
  EXPECT_EQ(names, kSectionNames);
}

TEST(Report, MatchesShippedSchema) {
  const auto schema = read_json_file(testing::source_path("schemas/report.v1.json"));
  const auto j = Json::parse(render(toy_sentiment(), fixed_config()));
  EXPECT_EQ(j["schema"], schema["properties"]["schema"]["const"]);
  for (const auto& key : schema["required"]) EXPECT_TRUE(j.contains(key)) << key;
  const auto& item = schema["properties"]["sections"]["items"];
  const auto& statuses = item["properties"]["status"]["enum"];
  for (const auto& s : j["sections"]) {
    for (const auto& key : item["required"]) EXPECT_TRUE(s.contains(key)) << key;
    EXPECT_NE(std::find(statuses.begin(), statuses.end(), s["status"]), statuses.end());
  }
  for (const auto& p : j["provenance"]) {
    for (const auto& [k, v] : p["params"].items()) EXPECT_TRUE(v.is_string()) << k;
  }
}

TEST(Report, MarkdownGolden) {
  const auto registry = ops::Registry::with_builtins();
  const auto resources = testing::bundled_resources();
  auto store = FeatureStore::in_memory();
  const auto md = render_markdown(
      build_report(registry, toy_sentiment(), "train", store, resources, fixed_config()));
  EXPECT_TRUE(testing::matches_golden("report/toy_sentiment.md", md)) << md;
}

TEST(Report, Deterministic) {
  const auto ds = toy_sentiment();
  auto config = fixed_config();
  const auto first = render(ds, config);
  EXPECT_EQ(render(ds, config), first);
  config.jobs = 8;
  EXPECT_EQ(render(ds, config), first);
}

TEST(Report, UnlabeledSectionsSkipped) {
  const auto ds = load_fixture("toy_generic", Task::Generic, "toy_generic/all.jsonl", "train");
  const auto j = Json::parse(render(ds, fixed_config()));
  for (const auto& s : j["sections"]) {
    if (s["name"] == "label_distribution" || s["name"] == "artifacts" ||
        s["name"] == "comparison") {
      EXPECT_EQ(s["status"], "skipped");
      EXPECT_FALSE(s["reason"].get<std::string>().empty());
    } else {
      EXPECT_EQ(s["status"], "ok") << s["name"];
    }
  }
  EXPECT_EQ(j["dataset"]["num_samples"], 3);
}

TEST(Report, ProvenanceListsOperations) {
  const auto j = Json::parse(render(toy_sentiment(), fixed_config()));
  std::set<std::string> ids;
  for (const auto& p : j["provenance"]) ids.insert(p["operation_id"]);
  EXPECT_TRUE(ids.count("featurize.get_length.v1"));
  EXPECT_TRUE(ids.count("aggregate.detect_artifacts.v1"));
  EXPECT_EQ(j["schema"], "datalab.report.v1");
  EXPECT_EQ(j["dataset"]["metadata_digest"].get<std::string>().size(), 64u);
}

TEST(Report, SectionSelectionAndComparison) {
  const auto ds = toy_sentiment();
  auto config = fixed_config();
  config.sections = {"characteristics", "comparison"};
  config.compare_with = &ds;
  const auto j = Json::parse(render(ds, config));
  ASSERT_EQ(j["sections"].size(), 2u);
  EXPECT_EQ(j["sections"][1]["name"], "comparison");
  EXPECT_EQ(j["sections"][1]["status"], "ok");
}

TEST(Compare, IdenticalDatasetsTie) {
  const auto ds = toy_sentiment();
  const auto c = compare_datasets(ds, ds, "train");
  ASSERT_EQ(c.axes.size(), 3u);
  for (const auto& a : c.axes) {
    EXPECT_EQ(*a.normalized_a, 0.5) << a.name;
    EXPECT_EQ(*a.normalized_b, 0.5) << a.name;
  }
}

TEST(Compare, CopiedSummariesHaveFullCoverage) {
  const auto copy = load_fixture("copy", Task::Summarization, "toy_summ/copy.jsonl", "test");
  const auto orig = load_fixture("orig", Task::Summarization, "toy_summ/test.jsonl", "test");
  const auto c = compare_datasets(copy, orig, "test");
  const auto it = std::find_if(c.axes.begin(), c.axes.end(),
                               [](const Axis& a) { return a.name == "coverage"; });
  ASSERT_NE(it, c.axes.end());
  EXPECT_EQ(*it->raw_a, 1.0);
  EXPECT_EQ(*it->normalized_a, 1.0);
  EXPECT_EQ(*it->normalized_b, 0.0);

  // Recompute the density axis directly.
  double density = 0;
  for (const auto& s : orig.split("test")) {
    density += *features::extractive_stats(s.field("source"), s.field("summary")).density;
  }
  const auto d = std::find_if(c.axes.begin(), c.axes.end(),
                              [](const Axis& a) { return a.name == "density"; });
  EXPECT_NEAR(*d->raw_b, density / static_cast<double>(orig.split("test").size()), 1e-12);
}

TEST(Compare, RawLengthIsDatasetMean) {
  const auto a = testing::text_dataset("a", {"one two", "three"}, {"x", "y"});
  const auto b = testing::text_dataset("b", {"one two three four"}, {"x"});
  const auto c = compare_datasets(a, b, "train");
  EXPECT_EQ(c.axes[0].name, "length");
  EXPECT_EQ(*c.axes[0].raw_a, 1.5);
  EXPECT_EQ(*c.axes[0].raw_b, 4.0);
  EXPECT_EQ(*c.axes[0].normalized_a, 0.0);
  EXPECT_NEAR(*c.axes[2].raw_a, std::log(2.0), 1e-12);
  EXPECT_EQ(*c.axes[2].raw_b, 0.0);
}

TEST(Compare, TaskMismatch) {
  const auto summ = load_fixture("s", Task::Summarization, "toy_summ/test.jsonl", "train");
  EXPECT_THROW(compare_datasets(toy_sentiment(), summ, "train"), ValidationError);
}

}  // namespace
}  // namespace datalab
