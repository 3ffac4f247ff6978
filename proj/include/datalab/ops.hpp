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

#include <any>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "datalab/core.hpp"
#include "datalab/feature_store.hpp"
#include "datalab/resources.hpp"
#include "datalab/serialization.hpp"

namespace datalab::ops {

enum class Category { Preprocess, Edit, Featurize, Aggregate, Prompt };
enum class Arity { PerSample, PerDataset };
enum class ParamType { Int, Float, String, Bool };

std::string_view to_string(Category c);
Category parse_category(std::string_view name);
std::string_view to_string(Arity a);
std::string_view to_string(ParamType t);

struct ParamSpec {
  ParamType type = ParamType::String;
  std::string default_value;
  std::string description;
};

using RawParams = std::map<std::string, std::string>;

// Parameters after defaults are filled in and every value type-checked.
class Params {
 public:
  Params() = default;
  // Throws ValidationError for unknown names or ill-typed values.
  Params(const std::map<std::string, ParamSpec>& specs, const RawParams& raw);

  std::int64_t integer(const std::string& name) const;
  double number(const std::string& name) const;
  const std::string& string(const std::string& name) const;
  bool flag(const std::string& name) const;

  const RawParams& resolved() const { return values_; }

 private:
  RawParams values_;
};

// Everything an operation may read besides the sample itself.
struct Environment {
  const Dataset& dataset;
  const std::string& split;
  const Params& params;
  std::optional<std::uint64_t> seed;
  const Resources& resources;
  const FeatureStore* store = nullptr;
  const WordSet* train_vocab = nullptr;  // set for requires_training_split ops
  std::any state;                        // result of Operation::prepare
};

struct NamedFeature {
  std::string name;
  FeatureValue value;
};

struct Transformed {
  Sample sample;
  bool warning = false;
};

using FeatureFn = std::function<std::vector<NamedFeature>(const Sample&, const Environment&)>;
using TransformFn = std::function<Transformed(const Sample&, const Environment&)>;
using DatasetFn = std::function<Json(const Environment&)>;
using PrepareFn = std::function<std::any(const Environment&)>;

struct Operation {
  std::string id;  // <category>.<name>.v<N>
  Category category = Category::Featurize;
  std::string contributor;
  std::string description;
  std::set<Task> tasks;  // empty: any task
  Arity arity = Arity::PerSample;
  std::map<std::string, ParamSpec> parameters;
  bool stochastic = false;
  bool requires_training_split = false;
  std::vector<std::string> produces;  // base feature names (featurize only)
  std::variant<std::monostate, FeatureFn, TransformFn, DatasetFn> impl;
  PrepareFn prepare;  // optional, runs once per apply before fan-out
};

// Validates `<category>.<name>.v<N>` with a lowercase snake_case name.
bool is_valid_operation_id(std::string_view id);

class Registry {
 public:
  // Throws ConfigError for duplicate ids, malformed ids, or an
  // implementation that does not fit the category/arity.
  void add(Operation op);

  const Operation& at(std::string_view id) const;
  const Operation* find(std::string_view id) const;
  std::vector<const Operation*> list() const;
  std::vector<const Operation*> list(Category category) const;
  std::size_t size() const { return ops_.size(); }

  static Registry with_builtins();

 private:
  std::map<std::string, Operation, std::less<>> ops_;
};

void register_builtins(Registry& registry);

struct Provenance {
  std::string operation_id;
  RawParams params;  // resolved, including defaults
  std::optional<std::uint64_t> seed;
  bool operator==(const Provenance&) const = default;
};

struct TransformedSample {
  std::uint64_t original_id = 0;
  Sample sample;
  bool warning = false;
  bool operator==(const TransformedSample&) const = default;
};

using Produced = std::variant<std::vector<TransformedSample>, std::vector<FeatureRecord>, Json>;

struct ApplyResult {
  Provenance provenance;
  Produced produced;
  std::size_t warnings = 0;
  bool operator==(const ApplyResult&) const = default;
};

struct ApplyOptions {
  std::optional<std::uint64_t> seed;
  FeatureStore* store = nullptr;  // featurize results are written through
  const Resources* resources = nullptr;
  unsigned jobs = 1;
};

ApplyResult apply(const Registry& registry, const Dataset& dataset, const std::string& split,
                  const std::string& operation_id, const RawParams& params,
                  const ApplyOptions& options = {});

// Re-runs an operation from its provenance.
ApplyResult reapply(const Registry& registry, const Dataset& dataset, const std::string& split,
                    const Provenance& provenance, const ApplyOptions& options = {});

Json to_json(const Provenance& provenance);
Json describe(const Operation& op);

// Name of a per-field feature: the bare base when the schema has a single
// text field, otherwise "<base>.<field>" (e.g. "general.length.hypothesis").
std::string feature_name(const std::string& base, const std::string& field,
                         const TaskSchema& schema);
std::vector<std::string> feature_names(const std::string& base, const TaskSchema& schema);

}  // namespace datalab::ops
