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

#include "datalab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "datalab/error.hpp"
#include "datalab/feature_store.hpp"
#include "datalab/ingest.hpp"
#include "datalab/langmap.hpp"
#include "datalab/ops.hpp"
#include "datalab/prompts.hpp"
#include "datalab/report.hpp"
#include "datalab/resources.hpp"
#include "datalab/search.hpp"

namespace datalab::cli {

namespace fs = std::filesystem;

namespace {

// Missing or inconsistent flags that CLI11 cannot express declaratively.
struct UsageError : Error {
  using Error::Error;
};

enum class Level { Error, Warn, Info, Debug };

struct Logger {
  std::ostream& err;
  Level level = Level::Warn;
  void log(Level at, const char* tag, const std::string& msg) const {
    if (at <= level) err << "datalab: " << tag << ": " << msg << "\n";
  }
  void warn(const std::string& msg) const { log(Level::Warn, "warning", msg); }
  void info(const std::string& msg) const { log(Level::Info, "info", msg); }
};

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

struct Globals {
  std::string root;
  std::string store;
  std::string registry;
  std::string resources;
  unsigned jobs = 1;
  std::string format = "json";
  std::string log_level = "warn";
  std::string timestamp;

  void resolve() {
    if (root.empty()) root = env_or("DATALAB_ROOT", ".datalab");
    if (store.empty()) store = root;
    if (registry.empty()) registry = (fs::path(root) / "registry.json").string();
    if (resources.empty()) {
      resources = env_or("DATALAB_RESOURCES", std::string(DATALAB_SOURCE_DIR) + "/resources");
    }
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    if (timestamp.empty()) {
      if (std::getenv("DATALAB_TEST_MODE")) {
        timestamp = "1970-01-01T00:00:00Z";
      } else {
        const std::time_t now = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::ostringstream ss;
        ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
        timestamp = ss.str();
      }
    }
  }

  Level level() const {
    if (log_level == "error") return Level::Error;
    if (log_level == "info") return Level::Info;
    if (log_level == "debug") return Level::Debug;
    return Level::Warn;
  }
};

std::pair<std::string, std::string> split_pair(const std::string& item, const char* flag) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError(std::string(flag) + " expects KEY=VALUE, got '" + item + "'");
  }
  return {item.substr(0, eq), item.substr(eq + 1)};
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(std::ostream& out, const std::string& path, const std::string& content,
          const Logger& log) {
  if (path.empty()) {
    out << content;
  } else {
    write_file_atomic(path, content);
    log.info("wrote " + path);
  }
}

void emit_json(std::ostream& out, const std::string& path, const Json& j, const Logger& log) {
  emit(out, path, j.dump(2) + "\n", log);
}

// Left-aligned plain-text table.
std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream ss;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      ss << r[c];
      if (c + 1 < r.size()) ss << std::string(width[c] - r[c].size() + 2, ' ');
    }
    ss << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return ss.str();
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

// Dataset definition shared by `ingest` and `register`.
struct DatasetFlags {
  std::string config;
  std::string name;
  std::string task;
  std::string source_format = "jsonl";
  std::vector<std::string> splits;
  std::vector<std::string> mappings;
  std::string label_field;
  std::string label_domain;
  std::vector<std::string> languages;
  std::string description;
  std::string contributor;
  std::string source_url;
  bool overwrite = false;

  void add_to(CLI::App* cmd) {
    auto* cfg = cmd->add_option("--config", config, "dataset config file (JSON)");
    cmd->add_option("--name", name, "dataset name (overrides the config)");
    cmd->add_option("--task", task, "text-classification | nli | summarization | extractive-qa | generic")
        ->excludes(cfg);
    cmd->add_option("--source-format", source_format, "jsonl | csv | tsv")
        ->check(CLI::IsMember({"jsonl", "csv", "tsv"}));
    cmd->add_option("--split", splits, "SPLIT=PATH, repeatable")->default_str("")->excludes(cfg);
    cmd->add_option("--map", mappings, "FIELD=SOURCE_KEY, repeatable (default: identity)")
        ->default_str("");
    cmd->add_option("--label-field", label_field, "source key holding the label");
    cmd->add_option("--label-domain", label_domain, "comma-separated closed label set");
    cmd->add_option("--language", languages, "ISO 639 language code, repeatable")
        ->default_str("");
    cmd->add_option("--description", description, "free-text description");
    cmd->add_option("--contributor", contributor, "contributor name");
    cmd->add_option("--source-url", source_url, "where the data comes from");
    cmd->add_flag("--overwrite", overwrite, "replace an existing registry entry");
  }

  ingest::DatasetConfig build() const {
    ingest::DatasetConfig c;
    if (!config.empty()) {
      c = ingest::read_config(config);
      if (!name.empty()) c.name = name;
    } else {
      if (name.empty() || task.empty() || splits.empty()) {
        throw UsageError("give --config, or --name, --task and at least one --split");
      }
      c.name = name;
      std::optional<std::vector<std::string>> domain;
      if (!label_domain.empty()) domain = split_csv(label_domain);
      c.schema = TaskSchema::for_task(parse_task(task), domain);
      c.loader.format = ingest::parse_format(source_format);
      for (const auto& s : splits) {
        auto [split, path] = split_pair(s, "--split");
        c.loader.split_files[split] = path;
      }
    }
    for (const auto& m : mappings) {
      auto [field, key] = split_pair(m, "--map");
      c.loader.field_mapping[field] = key;
    }
    if (!label_field.empty()) c.loader.label_field = label_field;
    if (!languages.empty()) c.metadata.languages = languages;
    if (!description.empty()) c.metadata.description = description;
    if (!contributor.empty()) c.metadata.contributor = contributor;
    if (!source_url.empty()) c.metadata.source_url = source_url;
    if (c.metadata.task.empty()) c.metadata.task = std::string(to_string(c.schema.task));
    ingest::fill_identity_mapping(c.loader, c.schema);
    return c;
  }
};

struct Context {
  Globals& g;
  Logger log;
  std::ostream& out;

  ingest::Registry registry() const { return ingest::Registry::open(g.registry); }
  Dataset dataset(const std::string& name) const {
    return ingest::load_registered(registry().at(name));
  }
  Resources resources() const { return Resources(g.resources); }
  bool table() const { return g.format == "table"; }
};

int cmd_ingest(Context& ctx, const DatasetFlags& flags, bool summary) {
  const auto c = flags.build();
  auto reg = ctx.registry();
  ingest::register_dataset(reg, c.name, c.loader, c.schema, c.metadata, flags.overwrite);
  const auto& entry = reg.at(c.name);
  ingest::LoadStats stats;
  const auto ds = ingest::load_registered(entry, &stats);
  Json splits = Json::object();
  Json skipped = Json::object();
  for (const auto& [name, samples] : ds.splits) {
    splits[name] = samples.size();
    skipped[name] = stats.skipped_empty_lines[name];
    if (stats.skipped_empty_lines[name] > 0) {
      ctx.log.warn(name + ": skipped " + std::to_string(stats.skipped_empty_lines[name]) +
                   " empty lines");
    }
  }
  FeatureStore store(ctx.g.store);
  store.write_meta(c.name, Json{{"name", c.name},
                                {"metadata", to_json(c.metadata)},
                                {"schema", to_json(c.schema)},
                                {"splits", splits},
                                {"digest", entry.digest}});
  ctx.log.info("registered '" + c.name + "' in " + ctx.g.registry);
  Json j{{"schema", summary ? "datalab.ingest.v1" : "datalab.register.v1"},
         {"dataset", c.name},
         {"digest", entry.digest},
         {"splits", splits}};
  if (summary) j["skipped_empty_lines"] = skipped;
  emit_json(ctx.out, "", j, ctx.log);
  return kExitOk;
}

int cmd_register_list(Context& ctx) {
  const auto reg = ctx.registry();
  if (ctx.table()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [name, e] : reg.entries()) {
      std::string langs;
      for (const auto& l : e.metadata.languages) langs += (langs.empty() ? "" : ",") + l;
      rows.push_back({name, std::string(to_string(e.schema.task)), langs});
    }
    ctx.out << table({"dataset", "task", "languages"}, rows);
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& [name, e] : reg.entries()) list.push_back(ingest::to_json(e));
  emit_json(ctx.out, "", Json{{"schema", "datalab.register.v1"}, {"datasets", list}}, ctx.log);
  return kExitOk;
}

int cmd_ops_list(Context& ctx, const std::string& category) {
  const auto registry = ops::Registry::with_builtins();
  const auto list = category.empty() ? registry.list() : registry.list(ops::parse_category(category));
  if (ctx.table()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto* op : list) {
      rows.push_back({op->id, std::string(ops::to_string(op->category)), op->contributor,
                      op->description});
    }
    ctx.out << table({"operation", "category", "contributor", "description"}, rows);
    return kExitOk;
  }
  Json arr = Json::array();
  for (const auto* op : list) arr.push_back(ops::describe(*op));
  emit_json(ctx.out, "", Json{{"schema", "datalab.ops.v1"}, {"operations", arr}}, ctx.log);
  return kExitOk;
}

struct ApplyFlags {
  std::string dataset;
  std::string split;
  std::string op;
  std::vector<std::string> params;
  std::optional<std::uint64_t> seed;
  std::string out;
};

Json transformed_line(const ops::TransformedSample& ts) {
  Json line{{"sample_id", ts.sample.sample_id}, {"original_id", ts.original_id}};
  const auto sample = to_json(ts.sample);
  for (const auto& [k, v] : sample.items()) {
    if (k != "sample_id") line[k] = v;
  }
  if (ts.warning) line["warning"] = true;
  return line;
}

int cmd_apply(Context& ctx, const ApplyFlags& f) {
  const auto registry = ops::Registry::with_builtins();
  const auto& op = registry.at(f.op);
  const bool transforms = std::holds_alternative<ops::TransformFn>(op.impl);
  if (transforms && f.out.empty()) {
    throw UsageError(f.op + " produces a derived dataset; pass --out FILE.jsonl");
  }
  ops::RawParams params;
  for (const auto& p : f.params) {
    auto [k, v] = split_pair(p, "--param");
    params[k] = v;
  }
  const auto ds = ctx.dataset(f.dataset);
  const auto resources = ctx.resources();
  FeatureStore store(ctx.g.store);
  ops::ApplyOptions options;
  options.seed = f.seed;
  options.store = &store;
  options.resources = &resources;
  options.jobs = ctx.g.jobs;
  auto result = ops::apply(registry, ds, f.split, f.op, params, options);
  if (result.warnings > 0) {
    ctx.log.warn(std::to_string(result.warnings) + " samples were left unchanged by " + f.op);
  }
  Json summary{{"schema", "datalab.apply.v1"},
               {"dataset", f.dataset},
               {"split", f.split},
               {"provenance", ops::to_json(result.provenance)},
               {"warnings", result.warnings}};
  if (auto* samples = std::get_if<std::vector<ops::TransformedSample>>(&result.produced)) {
    std::string body;
    for (const auto& ts : *samples) body += transformed_line(ts).dump() + "\n";
    write_file_atomic(f.out, body);
    ctx.log.info("wrote " + std::to_string(samples->size()) + " samples to " + f.out);
    summary["samples"] = samples->size();
    summary["out"] = f.out;
    emit_json(ctx.out, "", summary, ctx.log);
  } else if (auto* records = std::get_if<std::vector<FeatureRecord>>(&result.produced)) {
    summary["records"] = records->size();
    emit_json(ctx.out, "", summary, ctx.log);
  } else {
    summary["result"] = std::get<Json>(result.produced);
    emit_json(ctx.out, f.out, summary, ctx.log);
  }
  return kExitOk;
}

struct ReportFlags {
  std::string dataset;
  std::string split;
  std::string compare;
  std::size_t bins = 10;
  std::size_t pmi_bins = 4;
  std::string log_base = "e";
  double threshold = 0.1;
  std::string features;
  std::string out;
  std::string markdown;
};

report::DiagnosticReport make_report(Context& ctx, const ReportFlags& f, const Dataset& ds,
                                     const Dataset* other, std::vector<std::string> sections) {
  const auto registry = ops::Registry::with_builtins();
  const auto resources = ctx.resources();
  FeatureStore store(ctx.g.store);
  report::ReportConfig config;
  config.generated_at = ctx.g.timestamp;
  config.histogram_bins = f.bins;
  config.artifact_bins = f.pmi_bins;
  config.artifact_threshold = f.threshold;
  config.log_base = diagnostics::parse_log_base(f.log_base);
  config.artifact_features = split_csv(f.features);
  config.jobs = ctx.g.jobs;
  config.compare_with = other;
  config.sections = std::move(sections);
  auto r = report::build_report(registry, ds, f.split, store, resources, config);
  for (const auto& s : r.sections) {
    if (s.status == report::SectionStatus::Error) {
      ctx.log.warn("section '" + s.name + "' failed: " + s.reason);
    }
  }
  return r;
}

int cmd_report(Context& ctx, const ReportFlags& f) {
  const auto ds = ctx.dataset(f.dataset);
  std::optional<Dataset> other;
  if (!f.compare.empty()) other = ctx.dataset(f.compare);
  const auto r = make_report(ctx, f, ds, other ? &*other : nullptr, {});
  emit_json(ctx.out, f.out, report::to_json(r), ctx.log);
  if (!f.markdown.empty()) emit(ctx.out, f.markdown, report::render_markdown(r), ctx.log);
  return kExitOk;
}

int cmd_diagnose(Context& ctx, const ReportFlags& f) {
  const auto ds = ctx.dataset(f.dataset);
  const auto r = make_report(ctx, f, ds, nullptr, {"artifacts", "gender_bias", "speech_bias"});
  auto j = report::to_json(r);
  j["schema"] = "datalab.diagnose.v1";
  j.erase("generated_at");
  emit_json(ctx.out, f.out, j, ctx.log);
  return kExitOk;
}

int cmd_compare(Context& ctx, const std::string& a, const std::string& b,
                const std::string& split, const std::string& out) {
  const auto c = report::compare_datasets(ctx.dataset(a), ctx.dataset(b), split);
  if (ctx.table() && out.empty()) {
    auto str = [](const std::optional<double>& v) { return v ? fixed(*v) : std::string("-"); };
    std::vector<std::vector<std::string>> rows;
    for (const auto& axis : c.axes) {
      rows.push_back({axis.name, str(axis.raw_a), str(axis.raw_b), str(axis.normalized_a),
                      str(axis.normalized_b)});
    }
    ctx.out << table({"axis", a, b, a + " (norm)", b + " (norm)"}, rows);
    return kExitOk;
  }
  const auto j = report::to_json(c);
  Json wrapped{{"schema", "datalab.compare.v1"}};
  for (const auto& [k, v] : j.items()) wrapped[k] = v;
  emit_json(ctx.out, out, wrapped, ctx.log);
  return kExitOk;
}

struct SearchFlags {
  std::string query;
  std::string mode = "description";
  std::size_t top_k = 10;
  double k1 = 1.2;
  double b = 0.75;
  std::string stopwords;
};

int cmd_search(Context& ctx, const SearchFlags& f) {
  WordSet stop;
  if (!f.stopwords.empty()) stop = parse_word_list(read_file(f.stopwords));
  const auto index = search::build_index(ctx.registry(), f.k1, f.b, std::move(stop));
  const auto mode = search::parse_mode(f.mode);
  const auto hits = search::query(index, f.query, mode, f.top_k);
  if (ctx.table()) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      rows.push_back({std::to_string(i + 1), hits[i].dataset, fixed(hits[i].score)});
    }
    ctx.out << table({"rank", "dataset", "score"}, rows);
    return kExitOk;
  }
  Json results = Json::array();
  for (const auto& h : hits) results.push_back({{"dataset", h.dataset}, {"score", h.score}});
  emit_json(ctx.out, "",
            Json{{"schema", "datalab.search.v1"},
                 {"query", f.query},
                 {"mode", search::to_string(mode)},
                 {"k1", f.k1},
                 {"b", f.b},
                 {"results", results}},
            ctx.log);
  return kExitOk;
}

int cmd_langmap(Context& ctx, std::string table_path, const std::string& out) {
  if (table_path.empty()) table_path = (fs::path(ctx.g.resources) / "country_languages.csv").string();
  const auto table_data = langmap::CountryLanguageTable::load(table_path);
  const auto map = langmap::compute_language_map(
      langmap::count_datasets_per_language(ctx.registry()), table_data);
  if (ctx.table() && out.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [country, score] : map.scores) rows.push_back({country, fixed(score, 3)});
    ctx.out << table({"country", "score"}, rows);
    return kExitOk;
  }
  emit_json(ctx.out, out, langmap::to_json(map), ctx.log);
  return kExitOk;
}

struct PromptFlags {
  std::string dataset;
  std::string split;
  std::string prompt_file;
  bool with_answer = false;
  std::string out;
};

int cmd_prompt_apply(Context& ctx, const PromptFlags& f) {
  const auto ds = ctx.dataset(f.dataset);
  const auto prompt = prompts::load_prompt(f.prompt_file);
  const auto violations = prompts::validate_prompt(prompt, ds.schema);
  if (!violations.empty()) {
    std::string msg = "prompt '" + prompt.prompt_id + "' does not fit " + f.dataset + ":";
    for (const auto& v : violations) msg += "\n  " + v.rule + ": " + v.detail;
    throw ValidationError(msg);
  }
  std::string body;
  for (const auto& s : ds.split(f.split)) {
    body += Json{{"sample_id", s.sample_id}, {"text", prompts::apply_prompt(prompt, s, f.with_answer)}}
                .dump() +
            "\n";
  }
  emit(ctx.out, f.out, body, ctx.log);
  return kExitOk;
}

void dataset_split_flags(CLI::App* cmd, std::string& dataset, std::string& split) {
  cmd->add_option("--dataset", dataset, "registered dataset name")->required();
  cmd->add_option("--split", split, "split name")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"datalab: dataset diagnostics and standardized data operations", "datalab"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(report::kToolkitVersion));

  Globals g;
  app.add_option("--root", g.root, "state directory (default: $DATALAB_ROOT or .datalab)");
  app.add_option("--store", g.store, "feature store root (default: <root>)");
  app.add_option("--registry", g.registry, "registry file (default: <root>/registry.json)");
  app.add_option("--resources", g.resources,
                 "word-list directory (default: $DATALAB_RESOURCES or the bundled resources)");
  app.add_option("--jobs", g.jobs, "worker threads; 0 uses every core");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--log-level", g.log_level, "diagnostic verbosity")
      ->check(CLI::IsMember({"error", "warn", "info", "debug"}));
  app.add_option("--timestamp", g.timestamp,
                 "generated_at for reports (default: now, or fixed under $DATALAB_TEST_MODE)");

  DatasetFlags ingest_flags;
  auto* ingest_cmd = app.add_subcommand("ingest", "load, validate and register a dataset");
  ingest_flags.add_to(ingest_cmd);

  DatasetFlags register_flags;
  bool register_list = false;
  auto* register_cmd = app.add_subcommand("register", "add a dataset to the registry, or list it");
  register_flags.add_to(register_cmd);
  register_cmd->add_flag("--list", register_list, "list registered datasets instead");

  std::string category;
  auto* ops_cmd = app.add_subcommand("ops", "operation catalog");
  ops_cmd->require_subcommand(1);
  auto* ops_list = ops_cmd->add_subcommand("list", "list registered operations");
  ops_list->add_option("--category", category, "only this category")
      ->check(CLI::IsMember({"", "preprocess", "edit", "featurize", "aggregate", "prompt"}));

  ApplyFlags apply_flags;
  auto* apply_cmd = app.add_subcommand("apply", "apply one operation to a dataset split");
  dataset_split_flags(apply_cmd, apply_flags.dataset, apply_flags.split);
  apply_cmd->add_option("--op", apply_flags.op, "operation id")->required();
  apply_cmd->add_option("--param", apply_flags.params, "KEY=VALUE, repeatable")->default_str("");
  apply_cmd->add_option("--seed", apply_flags.seed, "seed for stochastic operations");
  apply_cmd->add_option("--out", apply_flags.out, "output file (required for derived datasets)");

  ReportFlags diagnose_flags;
  diagnose_flags.bins = 4;
  auto* diagnose_cmd = app.add_subcommand("diagnose", "PMI artifacts and bias diagnostics");
  dataset_split_flags(diagnose_cmd, diagnose_flags.dataset, diagnose_flags.split);
  diagnose_cmd->add_option("--bins", diagnose_flags.pmi_bins, "equal-frequency bins per feature");
  diagnose_cmd->add_option("--log-base", diagnose_flags.log_base, "PMI logarithm base")
      ->check(CLI::IsMember({"e", "2"}));
  diagnose_cmd->add_option("--pmi-threshold", diagnose_flags.threshold, "minimum PMI to report");
  diagnose_cmd->add_option("--features", diagnose_flags.features,
                           "comma-separated stored features (default: length features)");
  diagnose_cmd->add_option("--out", diagnose_flags.out, "output file (default: stdout)");

  ReportFlags report_flags;
  auto* report_cmd = app.add_subcommand("report", "full diagnostic report");
  dataset_split_flags(report_cmd, report_flags.dataset, report_flags.split);
  report_cmd->add_option("--compare", report_flags.compare, "second dataset for the comparison");
  report_cmd->add_option("--bins", report_flags.bins, "histogram bins");
  report_cmd->add_option("--pmi-bins", report_flags.pmi_bins, "equal-frequency bins for PMI");
  report_cmd->add_option("--log-base", report_flags.log_base, "PMI logarithm base")
      ->check(CLI::IsMember({"e", "2"}));
  report_cmd->add_option("--pmi-threshold", report_flags.threshold, "minimum PMI to report");
  report_cmd->add_option("--out", report_flags.out, "report JSON file (default: stdout)");
  report_cmd->add_option("--markdown", report_flags.markdown, "also write a Markdown summary");

  std::string cmp_a, cmp_b, cmp_split, cmp_out;
  auto* compare_cmd = app.add_subcommand("compare", "compare two datasets of the same task");
  compare_cmd->add_option("--dataset", cmp_a, "first dataset")->required();
  compare_cmd->add_option("--with", cmp_b, "second dataset")->required();
  compare_cmd->add_option("--split", cmp_split, "split present in both")->required();
  compare_cmd->add_option("--out", cmp_out, "output file (default: stdout)");

  SearchFlags search_flags;
  auto* search_cmd = app.add_subcommand("search", "rank registered datasets for a query");
  search_cmd->add_option("--query", search_flags.query,
                         "keywords, a description, or a dataset name (similar mode)")
      ->required();
  search_cmd->add_option("--mode", search_flags.mode, "query mode")
      ->check(CLI::IsMember({"keywords", "description", "similar"}));
  search_cmd->add_option("--top-k", search_flags.top_k, "maximum results");
  search_cmd->add_option("--k1", search_flags.k1, "BM25 term saturation");
  search_cmd->add_option("--b", search_flags.b, "BM25 length normalization");
  search_cmd->add_option("--stopwords", search_flags.stopwords, "word list removed from queries and documents");

  std::string lm_table, lm_out;
  auto* langmap_cmd = app.add_subcommand("langmap", "per-country weighted dataset counts");
  langmap_cmd->add_option("--table", lm_table,
                          "country,language,proportion CSV (default: <resources>/country_languages.csv)");
  langmap_cmd->add_option("--out", lm_out, "output file (default: stdout)");

  PromptFlags prompt_flags;
  auto* prompt_cmd = app.add_subcommand("prompt", "prompt templates");
  prompt_cmd->require_subcommand(1);
  auto* prompt_apply = prompt_cmd->add_subcommand("apply", "render a prompt for every sample");
  dataset_split_flags(prompt_apply, prompt_flags.dataset, prompt_flags.split);
  prompt_apply->add_option("--prompt-file", prompt_flags.prompt_file, "prompt JSON file")
      ->required();
  prompt_apply->add_flag("--with-answer", prompt_flags.with_answer, "append the verbalized label");
  prompt_apply->add_option("--out", prompt_flags.out, "prompted jsonl file (default: stdout)");

  for (auto* sub : app.get_subcommands({})) {
    sub->footer("Global options (--root, --store, --registry, --resources, --jobs, --format,\n"
                "--log-level, --timestamp) are described by 'datalab --help'.");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help / --version
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "datalab: error: " << e.what() << "\n";
    // help() describes the deepest subcommand that was reached.
    err << app.help();
    return kExitUsage;
  }

  g.resolve();
  Context ctx{g, Logger{err, g.level()}, out};
  try {
    if (*ingest_cmd) return cmd_ingest(ctx, ingest_flags, true);
    if (*register_cmd) {
      if (register_list) return cmd_register_list(ctx);
      return cmd_ingest(ctx, register_flags, false);
    }
    if (*ops_list) return cmd_ops_list(ctx, category);
    if (*apply_cmd) return cmd_apply(ctx, apply_flags);
    if (*diagnose_cmd) return cmd_diagnose(ctx, diagnose_flags);
    if (*report_cmd) return cmd_report(ctx, report_flags);
    if (*compare_cmd) return cmd_compare(ctx, cmp_a, cmp_b, cmp_split, cmp_out);
    if (*search_cmd) return cmd_search(ctx, search_flags);
    if (*langmap_cmd) return cmd_langmap(ctx, lm_table, lm_out);
    if (*prompt_apply) return cmd_prompt_apply(ctx, prompt_flags);
  } catch (const UsageError& e) {
    err << "datalab: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "datalab: error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace datalab::cli
