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

#include "datalab/ops.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <regex>

#include "datalab/error.hpp"
#include "datalab/featurize.hpp"
#include "datalab/parallel.hpp"

namespace datalab::ops {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Preprocess: return "preprocess";
    case Category::Edit: return "edit";
    case Category::Featurize: return "featurize";
    case Category::Aggregate: return "aggregate";
    case Category::Prompt: return "prompt";
  }
  return "featurize";
}

Category parse_category(std::string_view name) {
  for (auto c : {Category::Preprocess, Category::Edit, Category::Featurize, Category::Aggregate,
                 Category::Prompt}) {
    if (to_string(c) == name) return c;
  }
  throw ValidationError("unknown operation category '" + std::string(name) + "'");
}

std::string_view to_string(Arity a) {
  return a == Arity::PerSample ? "per-sample" : "per-dataset";
}

std::string_view to_string(ParamType t) {
  switch (t) {
    case ParamType::Int: return "int";
    case ParamType::Float: return "float";
    case ParamType::String: return "string";
    case ParamType::Bool: return "bool";
  }
  return "string";
}

namespace {

std::optional<std::int64_t> parse_int(const std::string& s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<bool> parse_bool(const std::string& s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  return std::nullopt;
}

}  // namespace

Params::Params(const std::map<std::string, ParamSpec>& specs, const RawParams& raw) {
  for (const auto& [name, _] : raw) {
    if (!specs.count(name)) throw ValidationError("unknown parameter '" + name + "'");
  }
  for (const auto& [name, spec] : specs) {
    auto it = raw.find(name);
    const std::string value = it == raw.end() ? spec.default_value : it->second;
    bool ok = true;
    switch (spec.type) {
      case ParamType::Int: ok = parse_int(value).has_value(); break;
      case ParamType::Float: ok = parse_double(value).has_value(); break;
      case ParamType::Bool: ok = parse_bool(value).has_value(); break;
      case ParamType::String: break;
    }
    if (!ok) {
      throw ValidationError("parameter '" + name + "' expects " +
                            std::string(to_string(spec.type)) + ", got '" + value + "'");
    }
    values_[name] = value;
  }
}

std::int64_t Params::integer(const std::string& name) const { return *parse_int(string(name)); }
double Params::number(const std::string& name) const { return *parse_double(string(name)); }
bool Params::flag(const std::string& name) const { return *parse_bool(string(name)); }

const std::string& Params::string(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw ConfigError("operation has no parameter '" + name + "'");
  return it->second;
}

bool is_valid_operation_id(std::string_view id) {
  static const std::regex pattern(
      R"(^(preprocess|edit|featurize|aggregate|prompt)\.[a-z][a-z0-9_]*\.v[1-9][0-9]*$)");
  return std::regex_match(id.begin(), id.end(), pattern);
}

void Registry::add(Operation op) {
  if (!is_valid_operation_id(op.id)) {
    throw ConfigError("operation id '" + op.id + "' does not match <category>.<name>.v<N>");
  }
  if (op.id.substr(0, op.id.find('.')) != to_string(op.category)) {
    throw ConfigError("operation id '" + op.id + "' does not match category '" +
                      std::string(to_string(op.category)) + "'");
  }
  bool fits = false;
  switch (op.category) {
    case Category::Featurize:
      fits = op.arity == Arity::PerSample && std::holds_alternative<FeatureFn>(op.impl);
      break;
    case Category::Preprocess:
    case Category::Edit:
    case Category::Prompt:
      fits = op.arity == Arity::PerSample && std::holds_alternative<TransformFn>(op.impl);
      break;
    case Category::Aggregate:
      fits = op.arity == Arity::PerDataset && std::holds_alternative<DatasetFn>(op.impl);
      break;
  }
  if (!fits) {
    throw ConfigError("operation '" + op.id + "': implementation does not match its " +
                      "category/arity");
  }
  if (ops_.count(op.id)) throw ConfigError("duplicate operation id '" + op.id + "'");
  auto id = op.id;
  ops_.emplace(std::move(id), std::move(op));
}

const Operation* Registry::find(std::string_view id) const {
  auto it = ops_.find(id);
  return it == ops_.end() ? nullptr : &it->second;
}

const Operation& Registry::at(std::string_view id) const {
  if (const auto* op = find(id)) return *op;
  throw ConfigError("unknown operation '" + std::string(id) + "'");
}

std::vector<const Operation*> Registry::list() const {
  std::vector<const Operation*> out;
  for (const auto& [_, op] : ops_) out.push_back(&op);
  return out;
}

std::vector<const Operation*> Registry::list(Category category) const {
  std::vector<const Operation*> out;
  for (const auto& [_, op] : ops_) {
    if (op.category == category) out.push_back(&op);
  }
  return out;
}

Registry Registry::with_builtins() {
  Registry r;
  register_builtins(r);
  return r;
}

ApplyResult apply(const Registry& registry, const Dataset& dataset, const std::string& split,
                  const std::string& operation_id, const RawParams& raw,
                  const ApplyOptions& options) {
  const auto& op = registry.at(operation_id);
  if (!op.tasks.empty() && !op.tasks.count(dataset.schema.task)) {
    throw ValidationError("operation '" + op.id + "' does not apply to task '" +
                          std::string(to_string(dataset.schema.task)) + "'");
  }
  const Params params(op.parameters, raw);
  if (op.stochastic && !options.seed) {
    throw ValidationError("operation '" + op.id + "' is stochastic and needs a seed");
  }
  const auto& samples = dataset.split(split);

  static const Resources no_resources;
  const Resources& resources = options.resources ? *options.resources : no_resources;

  WordSet train_vocab;
  if (op.requires_training_split) {
    if (!dataset.has_split("train")) {
      throw ValidationError("operation '" + op.id + "' requires a 'train' split");
    }
    train_vocab = features::build_vocabulary(dataset.split("train"),
                                             dataset.schema.text_fields());
  }

  ApplyResult result;
  result.provenance = {op.id, params.resolved(),
                       op.stochastic ? options.seed : std::optional<std::uint64_t>{}};

  Environment env{dataset,   split,         params,
                  options.seed, resources,  options.store,
                  op.requires_training_split ? &train_vocab : nullptr, {}};

  if (const auto* fn = std::get_if<DatasetFn>(&op.impl)) {
    if (op.prepare) env.state = op.prepare(env);
    result.produced = (*fn)(env);
    return result;
  }
  if (samples.empty()) {
    if (op.category == Category::Featurize) {
      result.produced = std::vector<FeatureRecord>{};
    } else {
      result.produced = std::vector<TransformedSample>{};
    }
    return result;
  }
  if (op.prepare) env.state = op.prepare(env);

  if (const auto* fn = std::get_if<FeatureFn>(&op.impl)) {
    std::vector<std::vector<NamedFeature>> per_sample(samples.size());
    parallel_for(samples.size(), options.jobs,
                 [&](std::size_t i) { per_sample[i] = (*fn)(samples[i], env); });
    std::vector<FeatureRecord> records;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (auto& f : per_sample[i]) {
        records.push_back({dataset.name, split, samples[i].sample_id, std::move(f.name),
                           std::move(f.value), op.id});
      }
    }
    if (options.store) {
      for (const auto& r : records) options.store->put(r);
      options.store->flush();
    }
    result.produced = std::move(records);
    return result;
  }

  const auto& fn = std::get<TransformFn>(op.impl);
  std::vector<TransformedSample> out(samples.size());
  parallel_for(samples.size(), options.jobs, [&](std::size_t i) {
    auto t = fn(samples[i], env);
    out[i] = {samples[i].sample_id, std::move(t.sample), t.warning};
  });
  for (const auto& t : out) result.warnings += t.warning;
  result.produced = std::move(out);
  return result;
}

ApplyResult reapply(const Registry& registry, const Dataset& dataset, const std::string& split,
                    const Provenance& provenance, const ApplyOptions& options) {
  auto opts = options;
  opts.seed = provenance.seed;
  return apply(registry, dataset, split, provenance.operation_id, provenance.params, opts);
}

Json to_json(const Provenance& p) {
  Json j;
  j["operation_id"] = p.operation_id;
  j["params"] = Json::object();
  for (const auto& [k, v] : p.params) j["params"][k] = v;
  j["seed"] = p.seed ? Json(*p.seed) : Json(nullptr);
  return j;
}

std::string feature_name(const std::string& base, const std::string& field,
                         const TaskSchema& schema) {
  if (schema.text_fields().size() == 1) return base;
  return base + "." + field;
}

std::vector<std::string> feature_names(const std::string& base, const TaskSchema& schema) {
  std::vector<std::string> out;
  for (const auto& f : schema.text_fields()) out.push_back(feature_name(base, f, schema));
  return out;
}

Json describe(const Operation& op) {
  Json j;
  j["operation_id"] = op.id;
  j["category"] = to_string(op.category);
  j["contributor"] = op.contributor;
  j["description"] = op.description;
  if (op.tasks.empty()) {
    j["task_applicability"] = "any";
  } else {
    j["task_applicability"] = Json::array();
    for (auto t : op.tasks) j["task_applicability"].push_back(to_string(t));
  }
  j["arity"] = to_string(op.arity);
  j["parameters"] = Json::object();
  for (const auto& [name, spec] : op.parameters) {
    j["parameters"][name] = {{"type", to_string(spec.type)},
                             {"default", spec.default_value},
                             {"description", spec.description}};
  }
  j["stochastic"] = op.stochastic;
  j["requires_training_split"] = op.requires_training_split;
  if (!op.produces.empty()) j["produces"] = op.produces;
  return j;
}

}  // namespace datalab::ops
