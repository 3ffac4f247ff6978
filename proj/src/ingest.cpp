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

#include "datalab/ingest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>

#include "datalab/error.hpp"
#include "datalab/utf8.hpp"

namespace datalab::ingest {

namespace fs = std::filesystem;

std::string_view to_string(SourceFormat format) {
  switch (format) {
    case SourceFormat::Jsonl: return "jsonl";
    case SourceFormat::Csv: return "csv";
    case SourceFormat::Tsv: return "tsv";
  }
  return "jsonl";
}

SourceFormat parse_format(std::string_view name) {
  if (name == "jsonl") return SourceFormat::Jsonl;
  if (name == "csv") return SourceFormat::Csv;
  if (name == "tsv") return SourceFormat::Tsv;
  throw ConfigError("unknown source format '" + std::string(name) + "' (jsonl, csv, tsv)");
}

Json to_json(const LoaderSpec& spec) {
  Json j;
  j["format"] = to_string(spec.format);
  j["field_mapping"] = Json::object();
  for (const auto& [k, v] : spec.field_mapping) j["field_mapping"][k] = v;
  if (spec.label_field) j["label_field"] = *spec.label_field;
  j["split_files"] = Json::object();
  for (const auto& [k, v] : spec.split_files) j["split_files"][k] = v.string();
  return j;
}

LoaderSpec loader_from_json(const Json& j, const fs::path& base_dir) {
  try {
    LoaderSpec spec;
    spec.format = parse_format(j.value("format", std::string("jsonl")));
    if (j.contains("field_mapping")) {
      for (const auto& [k, v] : j["field_mapping"].items()) {
        spec.field_mapping[k] = v.get<std::string>();
      }
    }
    if (j.contains("label_field") && !j["label_field"].is_null()) {
      spec.label_field = j["label_field"].get<std::string>();
    }
    for (const auto& [k, v] : j.at("split_files").items()) {
      fs::path p = v.get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      spec.split_files[k] = p.lexically_normal();
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed loader spec: ") + e.what());
  }
}

void fill_identity_mapping(LoaderSpec& spec, const TaskSchema& schema) {
  for (const auto& f : schema.required_fields) spec.field_mapping.try_emplace(f, f);
  if (!spec.label_field && schema.requires_label()) spec.label_field = "label";
}

namespace {

void check_spec(const LoaderSpec& spec, const TaskSchema& schema) {
  for (const auto& f : schema.required_fields) {
    if (!spec.field_mapping.count(f)) {
      throw ConfigError("field_mapping does not cover required field '" + f + "'");
    }
  }
  if (spec.split_files.empty()) throw ConfigError("loader spec lists no split files");
}

std::string strip_bom(std::string text) {
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
  return text;
}

std::size_t line_of(std::string_view text, std::size_t offset) {
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

void require_utf8(std::string_view text, const fs::path& path) {
  if (auto bad = utf8::first_invalid(text)) {
    throw ValidationError(path.string() + ":" + std::to_string(line_of(text, *bad)) +
                          ": invalid UTF-8 byte sequence");
  }
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

std::string where(const fs::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

std::string scalar_text(const Json& v, const fs::path& path, std::size_t line,
                        const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  throw ValidationError(where(path, line) + ": key '" + key + "' must hold a string or number");
}

std::vector<Sample> load_jsonl(const std::string& text, const LoaderSpec& spec,
                               const fs::path& path, std::size_t& skipped) {
  std::vector<Sample> out;
  std::size_t start = 0;
  std::size_t line = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++line;
    std::string_view raw(text.data() + start, end - start);
    start = end + 1;
    if (is_blank(raw)) {
      if (end < text.size() || !raw.empty()) ++skipped;
      continue;
    }
    Json j;
    try {
      j = Json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(where(path, line) + ": malformed JSON line: " + e.what());
    }
    if (!j.is_object()) throw ValidationError(where(path, line) + ": line is not a JSON object");
    Sample s;
    s.sample_id = out.size();
    for (const auto& [field, key] : spec.field_mapping) {
      if (!j.contains(key) || j[key].is_null()) {
        throw ValidationError(where(path, line) + ": missing key '" + key + "' mapped to field '" +
                              field + "'");
      }
      s.fields[field] = scalar_text(j[key], path, line, key);
    }
    if (spec.label_field && j.contains(*spec.label_field) && !j[*spec.label_field].is_null()) {
      s.label = scalar_text(j[*spec.label_field], path, line, *spec.label_field);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Sample> load_delimited(const std::string& text, const LoaderSpec& spec, char delim,
                                   const fs::path& path) {
  auto records = parse_delimited(text, delim);
  if (records.empty()) return {};
  const auto& header = records.front().cells;
  auto column = [&](const std::string& key) {
    auto it = std::find(header.begin(), header.end(), key);
    if (it == header.end()) {
      throw ValidationError(path.string() + ": header has no column '" + key + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  std::vector<std::pair<std::string, std::size_t>> columns;
  for (const auto& [field, key] : spec.field_mapping) columns.emplace_back(field, column(key));
  std::optional<std::size_t> label_col;
  if (spec.label_field) label_col = column(*spec.label_field);

  std::vector<Sample> out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.cells.size() != header.size()) {
      throw ValidationError(where(path, rec.line) + ": expected " + std::to_string(header.size()) +
                            " cells, found " + std::to_string(rec.cells.size()));
    }
    Sample s;
    s.sample_id = out.size();
    for (const auto& [field, col] : columns) s.fields[field] = rec.cells[col];
    if (label_col) s.label = rec.cells[*label_col];
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<DelimitedRecord> parse_delimited(std::string_view text, char delimiter) {
  std::vector<DelimitedRecord> out;
  DelimitedRecord current;
  std::string cell;
  std::size_t line = 1;
  bool in_quotes = false;
  bool quoted_cell = false;
  bool row_has_content = false;
  current.line = 1;

  auto end_cell = [&] {
    current.cells.push_back(std::move(cell));
    cell.clear();
    quoted_cell = false;
  };
  auto end_row = [&] {
    if (row_has_content) {
      end_cell();
      out.push_back(std::move(current));
    }
    current = DelimitedRecord{};
    cell.clear();
    quoted_cell = false;
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        cell += c;
      }
      continue;
    }
    if (!row_has_content && c != '\n' && c != '\r') {
      row_has_content = true;
      current.line = line;
    }
    if (c == '"' && cell.empty() && !quoted_cell) {
      in_quotes = true;
      quoted_cell = true;
    } else if (c == delimiter) {
      end_cell();
    } else if (c == '\n') {
      end_row();
      ++line;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      // CRLF: the newline ends the row.
    } else {
      cell += c;
    }
  }
  if (in_quotes) {
    throw ValidationError("line " + std::to_string(current.line) + ": unterminated quoted cell");
  }
  end_row();
  return out;
}

Dataset load_dataset(const std::string& name, const LoaderSpec& spec, const TaskSchema& schema,
                     const DatasetMetadata& metadata, LoadStats* stats) {
  check_spec(spec, schema);
  Dataset ds;
  ds.name = name;
  ds.metadata = metadata;
  ds.schema = schema;
  for (const auto& [split, path] : spec.split_files) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
      throw StorageError("split '" + split + "': cannot read " + path.string());
    }
    const auto text = strip_bom(read_file(path));
    require_utf8(text, path);
    std::size_t skipped = 0;
    std::vector<Sample> samples;
    try {
      switch (spec.format) {
        case SourceFormat::Jsonl: samples = load_jsonl(text, spec, path, skipped); break;
        case SourceFormat::Csv: samples = load_delimited(text, spec, ',', path); break;
        case SourceFormat::Tsv: samples = load_delimited(text, spec, '\t', path); break;
      }
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw ValidationError(path.string() + ": " + msg);
      throw;
    }
    if (stats) stats->skipped_empty_lines[split] = skipped;
    ds.splits[split] = std::move(samples);
  }
  const auto violations = validate_dataset(ds);
  if (!violations.empty()) {
    std::string msg = "dataset '" + name + "' failed validation (" +
                      std::to_string(violations.size()) + " violations):";
    for (const auto& v : violations) msg += "\n  " + describe(v);
    throw ValidationError(msg);
  }
  return ds;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw StorageError("SHA-256 computation failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string content_digest(const LoaderSpec& spec) {
  std::string all;
  for (const auto& [split, path] : spec.split_files) all += read_file(path);
  return sha256_hex(all);
}

Json to_json(const RegistryEntry& e) {
  Json j;
  j["name"] = e.name;
  j["metadata"] = to_json(e.metadata);
  j["schema"] = to_json(e.schema);
  j["loader"] = to_json(e.loader);
  j["digest"] = e.digest;
  return j;
}

RegistryEntry entry_from_json(const Json& j, const fs::path& base_dir) {
  try {
    RegistryEntry e;
    e.name = j.at("name").get<std::string>();
    e.metadata = metadata_from_json(j.at("metadata"));
    e.schema = schema_from_json(j.at("schema"));
    e.loader = loader_from_json(j.at("loader"), base_dir);
    e.digest = j.value("digest", std::string{});
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("malformed registry entry: ") + ex.what());
  }
}

Registry Registry::open(const fs::path& file) {
  Registry r;
  r.file_ = file;
  std::error_code ec;
  if (!fs::exists(file, ec)) return r;
  const auto j = read_json_file(file);
  if (!j.is_object() || !j.contains("datasets") || !j["datasets"].is_array()) {
    throw ConfigError(file.string() + ": not a dataset registry");
  }
  for (const auto& item : j["datasets"]) {
    auto e = entry_from_json(item, file.parent_path());
    auto name = e.name;
    if (!r.entries_.emplace(name, std::move(e)).second) {
      throw ConfigError(file.string() + ": duplicate dataset '" + name + "'");
    }
  }
  return r;
}

Registry Registry::in_memory() { return Registry{}; }

const RegistryEntry* Registry::find(std::string_view name) const {
  auto it = entries_.find(std::string(name));
  return it == entries_.end() ? nullptr : &it->second;
}

const RegistryEntry& Registry::at(std::string_view name) const {
  if (const auto* e = find(name)) return *e;
  throw ValidationError("dataset '" + std::string(name) + "' is not registered");
}

void Registry::put(RegistryEntry entry, bool overwrite) {
  if (!overwrite && entries_.count(entry.name)) {
    throw ValidationError("dataset '" + entry.name +
                          "' is already registered (use overwrite to replace it)");
  }
  auto name = entry.name;
  entries_.insert_or_assign(name, std::move(entry));
}

void Registry::save() const {
  if (!file_) return;
  Json list = Json::array();
  for (const auto& [name, e] : entries_) list.push_back(to_json(e));
  write_json_file(*file_, Json{{"schema", "datalab.registry.v1"}, {"datasets", list}});
}

void register_dataset(Registry& registry, const std::string& name, const LoaderSpec& spec,
                      const TaskSchema& schema, const DatasetMetadata& metadata, bool overwrite) {
  if (!is_safe_name(name)) throw ValidationError("'" + name + "' is not a valid dataset name");
  if (!overwrite && registry.find(name)) {
    throw ValidationError("dataset '" + name +
                          "' is already registered (use overwrite to replace it)");
  }
  if (metadata.languages.empty()) {
    throw ValidationError("registered datasets need at least one language");
  }
  RegistryEntry e;
  e.name = name;
  e.metadata = metadata;
  e.schema = schema;
  e.loader = spec;
  for (auto& [split, path] : e.loader.split_files) path = fs::absolute(path).lexically_normal();
  load_dataset(name, e.loader, schema, metadata);
  e.digest = content_digest(e.loader);
  registry.put(std::move(e), overwrite);
  registry.save();
}

Dataset load_registered(const RegistryEntry& entry, LoadStats* stats) {
  return load_dataset(entry.name, entry.loader, entry.schema, entry.metadata, stats);
}

DatasetConfig read_config(const fs::path& path) {
  const auto j = read_json_file(path);
  try {
    DatasetConfig c;
    c.name = j.at("name").get<std::string>();
    c.schema = schema_from_json(j.at("schema"));
    c.metadata = metadata_from_json(j.value("metadata", Json::object()));
    c.loader = loader_from_json(j.at("loader"), path.parent_path());
    fill_identity_mapping(c.loader, c.schema);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace datalab::ingest
