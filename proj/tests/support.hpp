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

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <optional>
#include <string>
#include <vector>

#include "datalab/core.hpp"
#include "datalab/resources.hpp"

namespace datalab::testing {

inline std::filesystem::path source_path(const std::string& rel) {
  return std::filesystem::path(DATALAB_SOURCE_DIR) / rel;
}

inline std::filesystem::path fixture(const std::string& rel) {
  return source_path("tests/fixtures/" + rel);
}

inline std::filesystem::path golden(const std::string& rel) {
  return source_path("tests/golden/" + rel);
}

// Removed with its contents on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("datalab-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

inline Sample text_sample(std::uint64_t id, std::string text,
                          std::optional<std::string> label = std::nullopt) {
  Sample s;
  s.sample_id = id;
  s.fields["text"] = std::move(text);
  s.label = std::move(label);
  return s;
}

// Single-split text dataset; ids follow vector order.
inline Dataset text_dataset(const std::string& name, const std::vector<std::string>& texts,
                            const std::vector<std::string>& labels = {},
                            std::optional<std::vector<std::string>> domain = std::nullopt,
                            const std::string& split = "train") {
  Dataset ds;
  ds.name = name;
  ds.metadata.languages = {"en"};
  ds.metadata.task = labels.empty() ? "generic" : "text-classification";
  ds.schema = labels.empty() ? TaskSchema::for_task(Task::Generic)
                             : TaskSchema::for_task(Task::TextClassification, domain);
  auto& samples = ds.splits[split];
  for (std::size_t i = 0; i < texts.size(); ++i) {
    samples.push_back(text_sample(i, texts[i],
                                  labels.empty() ? std::nullopt
                                                 : std::optional<std::string>(labels[i])));
  }
  return ds;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Compares `actual` with tests/golden/<rel>. With DATALAB_UPDATE_GOLDEN set
// the file is rewritten instead and the comparison trivially passes.
inline bool matches_golden(const std::string& rel, const std::string& actual) {
  const auto path = golden(rel);
  if (std::getenv("DATALAB_UPDATE_GOLDEN")) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << actual;
    return true;
  }
  return std::filesystem::exists(path) && slurp(path) == actual;
}

inline Resources bundled_resources() { return Resources(source_path("resources")); }

}  // namespace datalab::testing
