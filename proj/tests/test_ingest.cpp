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

#include <fstream>

#include "datalab/error.hpp"
#include "datalab/ingest.hpp"
#include "support.hpp"

namespace datalab {
namespace {

using namespace ingest;
using testing::TempDir;
using testing::fixture;

void write(const std::filesystem::path& p, const std::string& content) {
  std::ofstream(p, std::ios::binary) << content;
}

DatasetMetadata meta(const std::string& task, const std::string& description = "") {
  return {{"en"}, task, description, std::nullopt, std::nullopt};
}

TaskSchema classification() {
  return TaskSchema::for_task(Task::TextClassification,
                              std::vector<std::string>{"positive", "negative"});
}

LoaderSpec jsonl_spec(const std::filesystem::path& file, const TaskSchema& schema) {
  LoaderSpec spec;
  spec.split_files["train"] = file;
  fill_identity_mapping(spec, schema);
  return spec;
}

TEST(Load, Jsonl) {
  TempDir dir;
  write(dir / "a.jsonl",
        "{\"text\":\"good\",\"label\":\"positive\"}\n"
        "\n"
        "{\"text\":\"bad\",\"label\":\"negative\"}\n"
        "{\"text\":\"fine\",\"label\":\"positive\"}\n");
  LoadStats stats;
  const auto ds = load_dataset("a", jsonl_spec(dir / "a.jsonl", classification()),
                               classification(), meta("text-classification"), &stats);
  const auto& train = ds.split("train");
  ASSERT_EQ(train.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(train[i].sample_id, i);
  EXPECT_EQ(train[1].field("text"), "bad");
  EXPECT_EQ(train[1].label, "negative");
  EXPECT_EQ(stats.skipped_empty_lines.at("train"), 1u);
}

TEST(Load, CsvWithMappedLabel) {
  LoaderSpec spec;
  spec.format = SourceFormat::Csv;
  spec.split_files["dev"] = fixture("nli_csv/dev.csv");
  spec.field_mapping = {{"premise", "premise"}, {"hypothesis", "hypothesis"}};
  spec.label_field = "gold";
  const auto ds = load_dataset("nli", spec, TaskSchema::for_task(Task::Nli), meta("nli"));
  const auto& dev = ds.split("dev");
  ASSERT_EQ(dev.size(), 3u);
  EXPECT_EQ(dev[0].fields.size(), 2u);
  EXPECT_EQ(dev[0].field("premise"), "A man, wearing a hat, plays guitar.");
  EXPECT_EQ(dev[0].label, "entailment");
  EXPECT_NE(dev[1].field("hypothesis").find('\n'), std::string::npos);
}

TEST(Load, MissingKeyCitesLine) {
  TempDir dir;
  write(dir / "a.jsonl",
        "{\"text\":\"good\",\"label\":\"positive\"}\n"
        "{\"label\":\"negative\"}\n");
  try {
    load_dataset("a", jsonl_spec(dir / "a.jsonl", classification()), classification(),
                 meta("text-classification"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("a.jsonl:2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("'text'"), std::string::npos) << msg;
  }
}

TEST(Load, InvalidUtf8AndBadJson) {
  TempDir dir;
  write(dir / "bad.jsonl", "{\"text\":\"ok\"}\n{\"text\":\"\xff\"}\n");
  const auto generic = TaskSchema::for_task(Task::Generic);
  EXPECT_THROW(load_dataset("b", jsonl_spec(dir / "bad.jsonl", generic), generic, meta("generic")),
               ValidationError);
  write(dir / "broken.jsonl", "{\"text\":\n");
  EXPECT_THROW(
      load_dataset("b", jsonl_spec(dir / "broken.jsonl", generic), generic, meta("generic")),
      ValidationError);
}

TEST(Load, LabelOutsideDomainIsRejected) {
  TempDir dir;
  write(dir / "a.jsonl", "{\"text\":\"good\",\"label\":\"positiv\"}\n");
  EXPECT_THROW(load_dataset("a", jsonl_spec(dir / "a.jsonl", classification()), classification(),
                            meta("text-classification")),
               ValidationError);
}

TEST(Load, BomAndNumbers) {
  TempDir dir;
  write(dir / "a.jsonl", "\xEF\xBB\xBF{\"context\":\"abc\",\"question\":\"q\",\"answer\":\"b\","
                         "\"answer_start\":1}\n");
  const auto schema = TaskSchema::for_task(Task::ExtractiveQa);
  const auto ds = load_dataset("qa", jsonl_spec(dir / "a.jsonl", schema), schema,
                               meta("extractive-qa"));
  EXPECT_EQ(ds.split("train")[0].field("answer_start"), "1");
}

TEST(Delimited, QuotingRules) {
  const auto rows = parse_delimited("a,b\n\"x, y\",\"say \"\"hi\"\"\"\n\"multi\nline\",z\n", ',');
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].cells, (std::vector<std::string>{"x, y", "say \"hi\""}));
  EXPECT_EQ(rows[2].cells[0], "multi\nline");
  EXPECT_EQ(rows[2].line, 3u);
  const auto tsv = parse_delimited("a\tb\r\n1\t2\r\n", '\t');
  EXPECT_EQ(tsv[1].cells, (std::vector<std::string>{"1", "2"}));
}

TEST(Digest, Sha256) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(RegistryTest, RegisterListAndDuplicate) {
  TempDir dir;
  auto reg = Registry::open(dir / "registry.json");
  EXPECT_TRUE(reg.entries().empty());
  const auto schema = classification();
  LoaderSpec spec;
  spec.split_files["train"] = fixture("toy_sentiment/train.jsonl");
  spec.field_mapping = {{"text", "review"}};
  spec.label_field = "rating";
  register_dataset(reg, "toy", spec, schema, meta("text-classification", "beer reviews"));
  ASSERT_NE(reg.find("toy"), nullptr);
  EXPECT_EQ(reg.at("toy").metadata.description, "beer reviews");
  EXPECT_EQ(reg.at("toy").digest.size(), 64u);
  EXPECT_THROW(register_dataset(reg, "toy", spec, schema, meta("text-classification")),
               ValidationError);
  register_dataset(reg, "toy", spec, schema, meta("text-classification", "v2"), true);
  EXPECT_EQ(reg.at("toy").metadata.description, "v2");
}

TEST(RegistryTest, PersistenceRoundTrip) {
  TempDir dir;
  const auto generic = TaskSchema::for_task(Task::Generic);
  write(dir / "g.jsonl", "{\"text\":\"x\"}\n");
  {
    auto reg = Registry::open(dir / "registry.json");
    register_dataset(reg, "first", jsonl_spec(dir / "g.jsonl", generic), generic, meta("generic"));
    register_dataset(reg, "second", jsonl_spec(dir / "g.jsonl", generic), generic,
                     meta("generic", "again"));
    const auto before = reg.entries();
    const auto reopened = Registry::open(dir / "registry.json");
    EXPECT_EQ(reopened.entries(), before);
  }
  const auto reg = Registry::open(dir / "registry.json");
  EXPECT_EQ(reg.entries().size(), 2u);
  const auto ds = load_registered(reg.at("second"));
  EXPECT_EQ(ds.name, "second");
  EXPECT_EQ(ds.metadata.description, "again");
}

TEST(RegistryTest, RegisterValidates) {
  TempDir dir;
  auto reg = Registry::in_memory();
  const auto generic = TaskSchema::for_task(Task::Generic);
  write(dir / "g.jsonl", "{\"text\":\"x\"}\n");
  EXPECT_THROW(register_dataset(reg, "bad/name", jsonl_spec(dir / "g.jsonl", generic), generic,
                                meta("generic")),
               ValidationError);
  auto no_lang = meta("generic");
  no_lang.languages.clear();
  EXPECT_THROW(register_dataset(reg, "g", jsonl_spec(dir / "g.jsonl", generic), generic, no_lang),
               ValidationError);
  EXPECT_THROW(register_dataset(reg, "g", jsonl_spec(dir / "missing.jsonl", generic), generic,
                                meta("generic")),
               Error);
}

TEST(RegistryTest, DigestTracksContent) {
  TempDir dir;
  const auto generic = TaskSchema::for_task(Task::Generic);
  write(dir / "g.jsonl", "{\"text\":\"x\"}\n");
  const auto spec = jsonl_spec(dir / "g.jsonl", generic);
  const auto d1 = content_digest(spec);
  EXPECT_EQ(content_digest(spec), d1);
  write(dir / "g.jsonl", "{\"text\":\"y\"}\n");
  EXPECT_NE(content_digest(spec), d1);
}

TEST(Config, ReadsRelativePaths) {
  const auto cfg = read_config(fixture("toy_sentiment/dataset.json"));
  EXPECT_EQ(cfg.name, "toy_sentiment");
  EXPECT_EQ(cfg.loader.split_files.at("train"), fixture("toy_sentiment/train.jsonl"));
  EXPECT_EQ(cfg.loader.label_field, "rating");
  const auto ds = load_dataset(cfg.name, cfg.loader, cfg.schema, cfg.metadata);
  EXPECT_EQ(ds.split("train").size(), 16u);
  EXPECT_EQ(ds.split("test").size(), 4u);
  EXPECT_EQ(loader_from_json(to_json(cfg.loader)), cfg.loader);
}

}  // namespace
}  // namespace datalab
