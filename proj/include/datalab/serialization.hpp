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
#include <string>

#include <json.hpp>

#include "datalab/core.hpp"

namespace datalab {

// Insertion-ordered JSON keeps every serialized document byte-stable.
using Json = nlohmann::ordered_json;

Json value_to_json(const FeatureValue& value);
FeatureValue value_from_json(ValueKind kind, const Json& j);

Json to_json(const TaskSchema& schema);
TaskSchema schema_from_json(const Json& j);

Json to_json(const DatasetMetadata& metadata);
DatasetMetadata metadata_from_json(const Json& j);

Json to_json(const Sample& sample);

// Reads and parses a whole JSON file; errors name the path.
Json read_json_file(const std::filesystem::path& path);
// Writes `j` (indented, trailing newline) via a temporary file and rename.
void write_json_file(const std::filesystem::path& path, const Json& j);
// Replaces `path` atomically with `content`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace datalab
