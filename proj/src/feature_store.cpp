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

#include "datalab/feature_store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <set>

#include "datalab/error.hpp"

namespace datalab {

namespace fs = std::filesystem;

FeatureStore::FeatureStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(*root_, ec);
  if (ec) throw StorageError("cannot create store root " + root_->string() + ": " + ec.message());
}

FeatureStore FeatureStore::in_memory() { return FeatureStore(); }

FeatureStore::FeatureStore(FeatureStore&&) noexcept = default;

FeatureStore& FeatureStore::operator=(FeatureStore&& other) noexcept {
  if (this != &other) {
    try {
      flush();
    } catch (...) {
    }
    for (auto& [_, p] : partitions_) {
      if (p.lock_fd >= 0) ::close(p.lock_fd);
    }
    root_ = std::move(other.root_);
    partitions_ = std::move(other.partitions_);
    mutex_ = std::move(other.mutex_);
  }
  return *this;
}

FeatureStore::~FeatureStore() {
  if (!mutex_) return;  // moved-from
  try {
    flush();
  } catch (...) {
    // Destructors must not throw; callers wanting errors call flush().
  }
  for (auto& [_, p] : partitions_) {
    if (p.lock_fd >= 0) ::close(p.lock_fd);
  }
}

fs::path FeatureStore::partition_file(const std::string& dataset,
                                      const std::string& split) const {
  if (!root_) return {};
  return *root_ / dataset / split / "features.jsonl";
}

std::string FeatureStore::encode_line(const FeatureRecord& r) {
  Json j;
  j["sample_id"] = r.sample_id;
  j["feature"] = r.feature;
  j["operation_id"] = r.operation_id;
  j["value_type"] = to_string(kind_of(r.value));
  j["value"] = value_to_json(r.value);
  return j.dump();
}

FeatureStore::Partition& FeatureStore::load(const std::string& dataset,
                                            const std::string& split) const {
  auto key = std::make_pair(dataset, split);
  auto it = partitions_.find(key);
  if (it != partitions_.end()) return it->second;

  Partition p;
  if (root_) {
    const auto path = partition_file(dataset, split);
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fail = [&](const std::string& why) {
          throw StorageError(path.string() + ":" + std::to_string(lineno) +
                             ": corrupted record: " + why);
        };
        Json j;
        try {
          j = Json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
          fail(e.what());
        }
        try {
          if (!j.is_object() || j.size() != 5) fail("expected exactly 5 keys");
          const auto kind = parse_value_kind(j.at("value_type").get<std::string>());
          FeatureRecord r{dataset,
                          split,
                          j.at("sample_id").get<std::uint64_t>(),
                          j.at("feature").get<std::string>(),
                          value_from_json(kind, j.at("value")),
                          j.at("operation_id").get<std::string>()};
          validate_record(r);
          p.index.insert_or_assign({r.sample_id, r.feature},
                                   Entry{std::move(r.value), std::move(r.operation_id)});
        } catch (const nlohmann::json::exception& e) {
          fail(e.what());
        } catch (const ValidationError& e) {
          fail(e.what());
        }
      }
    }
  }
  return partitions_.emplace(std::move(key), std::move(p)).first->second;
}

void FeatureStore::acquire_lock(Partition& p, const std::string& dataset,
                                const std::string& split) {
  if (!root_ || p.lock_fd >= 0) return;
  const auto dir = *root_ / dataset / split;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw StorageError("cannot create " + dir.string() + ": " + ec.message());
  const auto lock_path = dir / "features.lock";
  int fd = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw StorageError("cannot open lock " + lock_path.string() + ": " + std::strerror(errno));
  }
  if (::flock(fd, LOCK_EX | LOCK_NB) != 0) {
    const int err = errno;
    ::close(fd);
    if (err == EWOULDBLOCK) {
      throw StorageError("partition " + dataset + "/" + split +
                         " is locked by another writer");
    }
    throw StorageError("cannot lock " + lock_path.string() + ": " + std::strerror(err));
  }
  p.lock_fd = fd;
}

void FeatureStore::put(const FeatureRecord& record) {
  validate_record(record);
  std::lock_guard lock(*mutex_);
  auto& p = load(record.dataset, record.split);
  acquire_lock(p, record.dataset, record.split);
  p.index.insert_or_assign({record.sample_id, record.feature},
                           Entry{record.value, record.operation_id});
  if (root_) p.pending.push_back(encode_line(record));
}

std::optional<FeatureValue> FeatureStore::get(const std::string& dataset,
                                              const std::string& split,
                                              std::uint64_t sample_id,
                                              const std::string& feature) const {
  std::lock_guard lock(*mutex_);
  const auto& p = load(dataset, split);
  auto it = p.index.find({sample_id, feature});
  if (it == p.index.end()) return std::nullopt;
  return it->second.value;
}

std::map<std::uint64_t, FeatureValue> FeatureStore::column(const std::string& dataset,
                                                           const std::string& split,
                                                           const std::string& feature) const {
  std::lock_guard lock(*mutex_);
  const auto& p = load(dataset, split);
  std::map<std::uint64_t, FeatureValue> out;
  for (const auto& [key, entry] : p.index) {
    if (key.second == feature) out.emplace(key.first, entry.value);
  }
  return out;
}

std::vector<std::string> FeatureStore::features(const std::string& dataset,
                                                const std::string& split) const {
  std::lock_guard lock(*mutex_);
  const auto& p = load(dataset, split);
  std::set<std::string> names;
  for (const auto& [key, _] : p.index) names.insert(key.second);
  return {names.begin(), names.end()};
}

FeatureStore::Index FeatureStore::snapshot(const std::string& dataset,
                                           const std::string& split) const {
  std::lock_guard lock(*mutex_);
  return load(dataset, split).index;
}

void FeatureStore::flush_locked() {
  if (!root_) return;
  for (auto& [key, p] : partitions_) {
    if (p.pending.empty()) continue;
    const auto path = partition_file(key.first, key.second);
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw StorageError("cannot open " + path.string() + " for append");
    for (const auto& line : p.pending) out << line << '\n';
    out.flush();
    if (!out) throw StorageError("write failed for " + path.string());
    p.pending.clear();
  }
}

void FeatureStore::flush() {
  if (!mutex_) return;
  std::lock_guard lock(*mutex_);
  flush_locked();
}

void FeatureStore::compact(const std::string& dataset, const std::string& split) {
  std::lock_guard lock(*mutex_);
  auto& p = load(dataset, split);
  if (!root_) return;
  acquire_lock(p, dataset, split);
  flush_locked();
  std::string content;
  for (const auto& [key, entry] : p.index) {
    content += encode_line({dataset, split, key.first, key.second, entry.value,
                            entry.operation_id});
    content += '\n';
  }
  write_file_atomic(partition_file(dataset, split), content);
}

void FeatureStore::write_meta(const std::string& dataset, const Json& meta) {
  if (!is_safe_name(dataset)) throw ValidationError("bad dataset name '" + dataset + "'");
  if (!root_) return;
  write_json_file(*root_ / dataset / "meta.json", meta);
}

std::optional<Json> FeatureStore::read_meta(const std::string& dataset) const {
  if (!root_) return std::nullopt;
  const auto path = *root_ / dataset / "meta.json";
  if (!fs::exists(path)) return std::nullopt;
  return read_json_file(path);
}

}  // namespace datalab
