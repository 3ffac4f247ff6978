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

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "datalab/core.hpp"
#include "datalab/serialization.hpp"

namespace datalab {

// Per-sample feature cache.
//
// Layout on disk:
//   <root>/<dataset>/meta.json
//   <root>/<dataset>/<split>/features.jsonl
//
// Each partition file is append-only; a line holds exactly the keys
// sample_id, feature, operation_id, value_type, value. The in-memory index is
// the left-to-right replay of the file, so a repeated key resolves to its
// last write. compact() rewrites a partition atomically with one line per
// live key.
//
// Writers take an advisory flock on <partition>/features.lock the first time
// they put into a partition and keep it until the store is destroyed. A
// second writer (in this or another process) gets a StorageError.
class FeatureStore {
 public:
  struct Entry {
    FeatureValue value;
    std::string operation_id;
    bool operator==(const Entry&) const = default;
  };
  using Key = std::pair<std::uint64_t, std::string>;  // (sample_id, feature)
  using Index = std::map<Key, Entry>;

  explicit FeatureStore(std::filesystem::path root);
  // A store that never touches the filesystem.
  static FeatureStore in_memory();

  FeatureStore(FeatureStore&&) noexcept;
  FeatureStore& operator=(FeatureStore&&) noexcept;
  FeatureStore(const FeatureStore&) = delete;
  FeatureStore& operator=(const FeatureStore&) = delete;
  ~FeatureStore();

  void put(const FeatureRecord& record);
  std::optional<FeatureValue> get(const std::string& dataset, const std::string& split,
                                  std::uint64_t sample_id, const std::string& feature) const;

  // sample_id -> value for one feature of one partition.
  std::map<std::uint64_t, FeatureValue> column(const std::string& dataset,
                                               const std::string& split,
                                               const std::string& feature) const;
  // Distinct feature names present in a partition, sorted.
  std::vector<std::string> features(const std::string& dataset, const std::string& split) const;
  // Full snapshot of a partition's index.
  Index snapshot(const std::string& dataset, const std::string& split) const;

  // Appends buffered writes to their partition files.
  void flush();
  void compact(const std::string& dataset, const std::string& split);

  void write_meta(const std::string& dataset, const Json& meta);
  std::optional<Json> read_meta(const std::string& dataset) const;

  bool persistent() const { return root_.has_value(); }
  std::filesystem::path partition_file(const std::string& dataset,
                                       const std::string& split) const;

  // Serializes one record line (no trailing newline) in the on-disk format.
  static std::string encode_line(const FeatureRecord& record);

 private:
  FeatureStore() = default;

  struct Partition {
    Index index;
    std::vector<std::string> pending;
    int lock_fd = -1;
  };

  Partition& load(const std::string& dataset, const std::string& split) const;
  void acquire_lock(Partition& p, const std::string& dataset, const std::string& split);
  void flush_locked();

  std::optional<std::filesystem::path> root_;
  mutable std::map<std::pair<std::string, std::string>, Partition> partitions_;
  mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
};

}  // namespace datalab
