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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "datalab/core.hpp"
#include "datalab/serialization.hpp"

namespace datalab::ingest {

enum class SourceFormat { Jsonl, Csv, Tsv };

std::string_view to_string(SourceFormat format);
SourceFormat parse_format(std::string_view name);

struct LoaderSpec {
  SourceFormat format = SourceFormat::Jsonl;
  // Schema field name -> source key (jsonl) or header column (csv/tsv).
  std::map<std::string, std::string> field_mapping;
  std::optional<std::string> label_field;
  std::map<std::string, std::filesystem::path> split_files;
  bool operator==(const LoaderSpec&) const = default;
};

Json to_json(const LoaderSpec& spec);
// Relative split paths are resolved against `base_dir`.
LoaderSpec loader_from_json(const Json& j, const std::filesystem::path& base_dir = {});

// Adds identity mappings for required fields the loader leaves unmapped.
void fill_identity_mapping(LoaderSpec& spec, const TaskSchema& schema);

struct LoadStats {
  std::map<std::string, std::size_t> skipped_empty_lines;  // per split
};

// Reads every split file. Throws StorageError for unreadable files and
// ValidationError for malformed input or a dataset that fails validation.
Dataset load_dataset(const std::string& name, const LoaderSpec& spec, const TaskSchema& schema,
                     const DatasetMetadata& metadata, LoadStats* stats = nullptr);

struct DelimitedRecord {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> cells;
};

// RFC-4180 style: quoted cells may contain delimiters, doubled quotes and
// newlines. Blank lines outside quotes yield no record.
std::vector<DelimitedRecord> parse_delimited(std::string_view text, char delimiter);

// SHA-256 (hex) of the split files concatenated in split-name order.
std::string content_digest(const LoaderSpec& spec);
std::string sha256_hex(std::string_view bytes);

struct RegistryEntry {
  std::string name;
  DatasetMetadata metadata;
  TaskSchema schema;
  LoaderSpec loader;
  std::string digest;
  bool operator==(const RegistryEntry&) const = default;
};

Json to_json(const RegistryEntry& entry);
RegistryEntry entry_from_json(const Json& j, const std::filesystem::path& base_dir = {});

class Registry {
 public:
  // A missing file yields an empty registry; it is created on save().
  static Registry open(const std::filesystem::path& file);
  static Registry in_memory();

  const std::map<std::string, RegistryEntry>& entries() const { return entries_; }
  const RegistryEntry* find(std::string_view name) const;
  const RegistryEntry& at(std::string_view name) const;
  void put(RegistryEntry entry, bool overwrite);
  void save() const;
  const std::optional<std::filesystem::path>& file() const { return file_; }

 private:
  std::optional<std::filesystem::path> file_;
  std::map<std::string, RegistryEntry> entries_;
};

// Loads the dataset to check it, computes its digest and persists the entry.
void register_dataset(Registry& registry, const std::string& name, const LoaderSpec& spec,
                      const TaskSchema& schema, const DatasetMetadata& metadata,
                      bool overwrite = false);

Dataset load_registered(const RegistryEntry& entry, LoadStats* stats = nullptr);

// Declarative dataset config: {"name", "metadata", "schema", "loader"}.
struct DatasetConfig {
  std::string name;
  DatasetMetadata metadata;
  TaskSchema schema;
  LoaderSpec loader;
};

DatasetConfig read_config(const std::filesystem::path& path);

}  // namespace datalab::ingest
