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

#include <algorithm>
#include <sstream>

#include "datalab/aggregate.hpp"
#include "datalab/diagnostics.hpp"
#include "datalab/edit.hpp"
#include "datalab/error.hpp"
#include "datalab/featurize.hpp"
#include "datalab/ops.hpp"
#include "datalab/prompts.hpp"
#include "datalab/text.hpp"

namespace datalab::ops {

namespace {

const std::string kContributor = "datalab";

using Scalar = std::function<std::optional<double>(std::string_view, const Environment&)>;

ParamSpec field_param(std::string what = "schema text field; empty means every text field") {
  return {ParamType::String, "", std::move(what)};
}

// Fields a per-field featurizer runs on.
std::vector<std::string> target_fields(const Environment& env) {
  const auto fields = env.dataset.schema.text_fields();
  const auto& chosen = env.params.string("field");
  if (chosen.empty()) return fields;
  if (std::find(fields.begin(), fields.end(), chosen) == fields.end()) {
    throw ValidationError("'" + chosen + "' is not a text field of the schema");
  }
  return {chosen};
}

std::string feature_name(const std::string& base, const std::string& field,
                         const Environment& env) {
  return ops::feature_name(base, field, env.dataset.schema);
}

std::string edit_field(const Sample& sample, const Environment& env) {
  const auto& chosen = env.params.string("field");
  if (!chosen.empty()) {
    sample.field(chosen);
    return chosen;
  }
  const auto fields = env.dataset.schema.text_fields();
  if (fields.empty()) throw ValidationError("schema has no text field to edit");
  return fields.front();
}

std::pair<std::string, std::string> pair_fields(const Environment& env) {
  const auto fields = env.dataset.schema.text_fields();
  if (fields.size() < 2) throw ValidationError("pair features need two text fields");
  return {fields[0], fields[1]};
}

Operation scalar_feature(std::string id, std::string base, std::string description, Scalar fn,
                         PrepareFn prepare = {}, bool requires_train = false) {
  Operation op;
  op.id = std::move(id);
  op.category = Category::Featurize;
  op.contributor = kContributor;
  op.description = std::move(description);
  op.parameters = {{"field", field_param()}};
  op.produces = {base};
  op.requires_training_split = requires_train;
  op.prepare = std::move(prepare);
  op.impl = FeatureFn([base, fn](const Sample& s, const Environment& env) {
    std::vector<NamedFeature> out;
    for (const auto& f : target_fields(env)) {
      if (auto v = fn(s.field(f), env)) out.push_back({feature_name(base, f, env), *v});
    }
    return out;
  });
  return op;
}

PrepareFn needs(std::vector<std::string_view> names) {
  return [names](const Environment& env) -> std::any {
    for (auto n : names) env.resources.words(n);
    return {};
  };
}

Operation summarization_feature(std::string id, std::string name, std::string description,
                                std::optional<double> features::ExtractiveStats::*member) {
  Operation op;
  op.id = std::move(id);
  op.category = Category::Featurize;
  op.contributor = kContributor;
  op.description = std::move(description);
  op.tasks = {Task::Summarization};
  op.produces = {name};
  op.impl = FeatureFn([name, member](const Sample& s, const Environment&) {
    const auto stats = features::extractive_stats(s.field("source"), s.field("summary"));
    std::vector<NamedFeature> out;
    if (auto v = stats.*member) out.push_back({name, *v});
    return out;
  });
  return op;
}

Operation transform(std::string id, Category category, std::string description,
                    std::map<std::string, ParamSpec> params, TransformFn fn,
                    bool stochastic = false) {
  Operation op;
  op.id = std::move(id);
  op.category = category;
  op.contributor = kContributor;
  op.description = std::move(description);
  op.parameters = std::move(params);
  op.stochastic = stochastic;
  op.impl = std::move(fn);
  return op;
}

Operation aggregate_op(std::string id, std::string description,
                       std::map<std::string, ParamSpec> params, DatasetFn fn) {
  Operation op;
  op.id = std::move(id);
  op.category = Category::Aggregate;
  op.arity = Arity::PerDataset;
  op.contributor = kContributor;
  op.description = std::move(description);
  op.parameters = std::move(params);
  op.impl = std::move(fn);
  return op;
}

const FeatureStore& require_store(const Environment& env) {
  if (!env.store) throw ConfigError("this operation reads stored features; supply a store");
  return *env.store;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Stored features of a partition whose every value is a Number.
std::vector<std::string> numeric_features(const FeatureStore& store, const Environment& env) {
  std::vector<std::string> out;
  for (const auto& name : store.features(env.dataset.name, env.split)) {
    const auto col = store.column(env.dataset.name, env.split, name);
    if (std::all_of(col.begin(), col.end(),
                    [](const auto& kv) { return std::holds_alternative<double>(kv.second); })) {
      out.push_back(name);
    }
  }
  return out;
}

void register_preprocess(Registry& r) {
  r.add(transform(
      "preprocess.tokenize.v1", Category::Preprocess,
      "Tokenizes text fields into annotations 'tokens.<field>'.",
      {{"scheme", {ParamType::String, "whitespace", "whitespace | regex-word"}},
       {"field", field_param()}},
      [](const Sample& s, const Environment& env) {
        const auto scheme = text::parse_scheme(env.params.string("scheme"));
        Transformed t{s, false};
        for (const auto& f : target_fields(env)) {
          t.sample.annotations["tokens." + f] = text::tokenize(s.field(f), scheme);
        }
        return t;
      }));
  r.add(transform("preprocess.lowercase.v1", Category::Preprocess,
                  "Applies simple Unicode lowercase mapping to text fields.",
                  {{"field", field_param()}},
                  [](const Sample& s, const Environment& env) {
                    Transformed t{s, false};
                    for (const auto& f : target_fields(env)) {
                      t.sample.fields[f] = text::lowercase(s.field(f));
                    }
                    return t;
                  }));
  r.add(transform("preprocess.sentence_split.v1", Category::Preprocess,
                  "Splits text fields into annotations 'sentences.<field>'.",
                  {{"field", field_param()}},
                  [](const Sample& s, const Environment& env) {
                    Transformed t{s, false};
                    for (const auto& f : target_fields(env)) {
                      t.sample.annotations["sentences." + f] = text::sentence_split(s.field(f));
                    }
                    return t;
                  }));
}

void register_edits(Registry& r) {
  const ParamSpec edit_field_param{ParamType::String, "",
                                   "field to edit; empty means the first text field"};
  r.add(transform("edit.delete_token.v1", Category::Edit,
                  "Deletes whitespace token (seed mod n).", {{"field", edit_field_param}},
                  [](const Sample& s, const Environment& env) {
                    const auto f = edit_field(s, env);
                    auto e = edit::delete_token(s.field(f), *env.seed);
                    Transformed t{s, e.warning};
                    t.sample.fields[f] = std::move(e.text);
                    return t;
                  },
                  true));
  r.add(transform("edit.swap_adjacent.v1", Category::Edit,
                  "Swaps whitespace tokens i and i+1, i = seed mod (n-1).",
                  {{"field", edit_field_param}},
                  [](const Sample& s, const Environment& env) {
                    const auto f = edit_field(s, env);
                    auto e = edit::swap_adjacent(s.field(f), *env.seed);
                    Transformed t{s, e.warning};
                    t.sample.fields[f] = std::move(e.text);
                    return t;
                  },
                  true));
  auto dict = transform(
      "edit.dict_replace.v1", Category::Edit,
      "Replaces lexicon words (hyponyms, entities) at seeded candidate positions.",
      {{"field", edit_field_param},
       {"lexicon", {ParamType::String, "", "JSON object file mapping word to replacement"}},
       {"max_replacements", {ParamType::Int, "1", "upper bound on replaced tokens"}}},
      [](const Sample& s, const Environment& env) {
        const auto& lexicon = std::any_cast<const edit::Lexicon&>(env.state);
        const auto max = env.params.integer("max_replacements");
        if (max < 0) throw ValidationError("max_replacements must be >= 0");
        const auto f = edit_field(s, env);
        auto e = edit::dict_replace(s.field(f), lexicon, static_cast<std::size_t>(max), *env.seed);
        Transformed t{s, e.warning};
        t.sample.fields[f] = std::move(e.text);
        return t;
      },
      true);
  dict.prepare = [](const Environment& env) -> std::any {
    const auto& path = env.params.string("lexicon");
    if (path.empty()) throw ConfigError("edit.dict_replace.v1 needs a 'lexicon' file");
    const auto j = read_json_file(path);
    if (!j.is_object()) throw ConfigError(path + ": lexicon must be a JSON object");
    edit::Lexicon lexicon;
    for (const auto& [k, v] : j.items()) lexicon[k] = v.get<std::string>();
    return lexicon;
  };
  r.add(std::move(dict));
}

void register_features(Registry& r) {
  using namespace features;
  r.add(scalar_feature("featurize.get_length.v1", "general.length",
                       "Number of whitespace tokens.",
                       [](std::string_view t, const Environment&) -> std::optional<double> {
                         return get_length(t);
                       }));
  r.add(scalar_feature("featurize.lexical_richness.v1", "general.lexical_richness",
                       "Unique folded words over total words.",
                       [](std::string_view t, const Environment&) { return lexical_richness(t); }));
  r.add(scalar_feature(
      "featurize.basic_words_ratio.v1", "general.basic_words_ratio",
      "Fraction of words in the basic English word list.",
      [](std::string_view t, const Environment& env) {
        return basic_words_ratio(t, env.resources.words(resource::kBasicWords));
      },
      needs({resource::kBasicWords})));
  r.add(scalar_feature(
      "featurize.oov_density.v1", "general.oov_density",
      "Fraction of words absent from the training-split vocabulary.",
      [](std::string_view t, const Environment& env) { return oov_density(t, *env.train_vocab); },
      {}, true));
  r.add(scalar_feature("featurize.flesch_reading_ease.v1", "general.flesch_reading_ease",
                       "Flesch reading ease with vowel-group syllables.",
                       [](std::string_view t, const Environment&) {
                         return flesch_reading_ease(t);
                       }));
  r.add(scalar_feature(
      "featurize.spelling_miss_ratio.v1", "general.spelling_miss_ratio",
      "Fraction of alphabetic words missing from the spelling dictionary.",
      [](std::string_view t, const Environment& env) {
        return spelling_miss_ratio(t, env.resources.words(resource::kSpellDictionary));
      },
      needs({resource::kSpellDictionary})));

  {
    Operation op;
    op.id = "featurize.gender_word_counts.v1";
    op.category = Category::Featurize;
    op.contributor = kContributor;
    op.description = "Male and female lexicon hits per text field.";
    op.parameters = {{"field", field_param()}};
    op.produces = {"bias.gender_word_counts", "bias.male_words", "bias.female_words"};
    op.prepare = needs({resource::kMaleWords, resource::kFemaleWords});
    op.impl = FeatureFn([](const Sample& s, const Environment& env) {
      std::vector<NamedFeature> out;
      for (const auto& f : target_fields(env)) {
        const auto c = gender_word_counts(s.field(f), env.resources.words(resource::kMaleWords),
                                          env.resources.words(resource::kFemaleWords));
        out.push_back({feature_name("bias.gender_word_counts", f, env), NumberList{c.male, c.female}});
        out.push_back({feature_name("bias.male_words", f, env), c.male});
        out.push_back({feature_name("bias.female_words", f, env), c.female});
      }
      return out;
    });
    r.add(std::move(op));
  }
  {
    Operation op;
    op.id = "featurize.length_comparison.v1";
    op.category = Category::Featurize;
    op.contributor = kContributor;
    op.description = "Sum, difference and ratio of the two text fields' lengths.";
    op.tasks = {Task::Nli, Task::Summarization};
    op.produces = {"pair.length_comparison", "pair.length_sum", "pair.length_diff",
                   "pair.length_ratio"};
    op.impl = FeatureFn([](const Sample& s, const Environment& env) {
      const auto [a, b] = pair_fields(env);
      const auto c = length_comparison(s.field(a), s.field(b));
      std::vector<NamedFeature> out{{"pair.length_sum", c.sum}, {"pair.length_diff", c.difference}};
      if (c.ratio) {
        out.push_back({"pair.length_ratio", *c.ratio});
        out.push_back({"pair.length_comparison", NumberList{c.sum, c.difference, *c.ratio}});
      }
      return out;
    });
    r.add(std::move(op));
  }
  {
    Operation op;
    op.id = "featurize.text_similarity.v1";
    op.category = Category::Featurize;
    op.contributor = kContributor;
    op.description = "BLEU-4 or ROUGE-2 F1 between the two text fields.";
    op.tasks = {Task::Nli, Task::Summarization};
    op.parameters = {{"metric", {ParamType::String, "rouge2", "bleu | rouge2"}}};
    op.produces = {"pair.bleu", "pair.rouge2"};
    op.impl = FeatureFn([](const Sample& s, const Environment& env) {
      const auto& metric_name = env.params.string("metric");
      const auto metric = parse_metric(metric_name);
      const auto [a, b] = pair_fields(env);
      std::vector<NamedFeature> out;
      if (auto v = text_similarity(s.field(a), s.field(b), metric)) {
        out.push_back({"pair." + metric_name, *v});
      }
      return out;
    });
    r.add(std::move(op));
  }
  {
    Operation op;
    op.id = "featurize.answer_position.v1";
    op.category = Category::Featurize;
    op.contributor = kContributor;
    op.description = "Relative character position where the answer starts.";
    op.tasks = {Task::ExtractiveQa};
    op.produces = {"qa.answer_position"};
    op.impl = FeatureFn([](const Sample& s, const Environment&) {
      const auto& raw = s.field("answer_start");
      std::int64_t start = 0;
      try {
        std::size_t used = 0;
        start = std::stoll(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
      } catch (const std::exception&) {
        throw ValidationError("sample " + std::to_string(s.sample_id) +
                              ": answer_start is not an integer");
      }
      return std::vector<NamedFeature>{
          {"qa.answer_position", answer_position(s.field("context"), start)}};
    });
    r.add(std::move(op));
  }
  {
    Operation op;
    op.id = "featurize.fragments.v1";
    op.category = Category::Featurize;
    op.contributor = kContributor;
    op.description = "Extractive fragments as flattened (summary_start, source_start, length).";
    op.tasks = {Task::Summarization};
    op.produces = {"summarization.fragments"};
    op.impl = FeatureFn([](const Sample& s, const Environment&) {
      const auto src = text::folded_words(s.field("source"));
      const auto sum = text::folded_words(s.field("summary"));
      std::vector<NamedFeature> out;
      if (src.empty() || sum.empty()) return out;
      NumberList flat;
      for (const auto& f : fragments(src, sum)) {
        flat.push_back(static_cast<double>(f.summary_start));
        flat.push_back(static_cast<double>(f.source_start));
        flat.push_back(static_cast<double>(f.length));
      }
      out.push_back({"summarization.fragments", std::move(flat)});
      return out;
    });
    r.add(std::move(op));
  }
  r.add(summarization_feature("featurize.coverage.v1", "summarization.coverage",
                              "Share of summary tokens inside extractive fragments.",
                              &ExtractiveStats::coverage));
  r.add(summarization_feature("featurize.density.v1", "summarization.density",
                              "Sum of squared fragment lengths over summary length.",
                              &ExtractiveStats::density));
  r.add(summarization_feature("featurize.copy_length.v1", "summarization.copy_length",
                              "Mean extractive fragment length.", &ExtractiveStats::copy_length));
  r.add(summarization_feature("featurize.novelty.v1", "summarization.novelty",
                              "Share of summary bigrams absent from the source.",
                              &ExtractiveStats::novelty));
  r.add(summarization_feature("featurize.compression.v1", "summarization.compression",
                              "Source length over summary length.",
                              &ExtractiveStats::compression));
  {
    Operation op;
    op.id = "featurize.get_oracle.v1";
    op.category = Category::Featurize;
    op.contributor = kContributor;
    op.description = "Greedy ROUGE-2 oracle extractive summary of the source.";
    op.tasks = {Task::Summarization};
    op.produces = {"summarization.oracle", "summarization.oracle_rouge2"};
    op.impl = FeatureFn([](const Sample& s, const Environment&) {
      std::vector<NamedFeature> out;
      if (auto o = get_oracle(s.field("source"), s.field("summary"))) {
        out.push_back({"summarization.oracle", TextValue{o->text}});
        out.push_back({"summarization.oracle_rouge2", o->score});
      }
      return out;
    });
    r.add(std::move(op));
  }
  {
    Operation op;
    op.id = "featurize.speech_class.v1";
    op.category = Category::Featurize;
    op.contributor = kContributor;
    op.description = "Lexicon-based hate / offensive / neither class of a sample.";
    op.produces = {"bias.speech_class"};
    op.prepare = needs({resource::kHateLexicon, resource::kOffensiveLexicon});
    op.impl = FeatureFn([](const Sample& s, const Environment& env) {
      const auto c = diagnostics::classify_speech(
          aggregate::joined_text(s, env.dataset.schema),
          env.resources.words(resource::kHateLexicon),
          env.resources.words(resource::kOffensiveLexicon));
      return std::vector<NamedFeature>{
          {"bias.speech_class", CategoryValue{std::string(diagnostics::to_string(c))}}};
    });
    r.add(std::move(op));
  }
}

void register_aggregates(Registry& r) {
  r.add(aggregate_op("aggregate.mean_feature.v1", "Mean of a stored numeric feature.",
                     {{"feature", {ParamType::String, "general.length", "feature name"}}},
                     [](const Environment& env) {
                       const auto& name = env.params.string("feature");
                       const auto m = aggregate::mean_feature(require_store(env),
                                                              env.dataset.name, env.split, name);
                       return Json{{"feature", name}, {"mean", m.mean}, {"count", m.count}};
                     }));
  r.add(aggregate_op("aggregate.label_distribution.v1", "Count and share of each label.", {},
                     [](const Environment& env) {
                       Json rows = Json::array();
                       for (const auto& row :
                            aggregate::label_distribution(env.dataset, env.split)) {
                         rows.push_back({{"label", row.label},
                                         {"count", row.count},
                                         {"proportion", row.proportion}});
                       }
                       return Json{{"labels", rows}};
                     }));
  r.add(aggregate_op(
      "aggregate.vocabulary.v1", "Folded word frequencies over text fields.",
      {{"top_k", {ParamType::Int, "0", "keep the first k words; 0 keeps all"}}},
      [](const Environment& env) {
        const auto words = aggregate::vocabulary(env.dataset, env.split);
        const auto k = env.params.integer("top_k");
        Json list = Json::array();
        for (std::size_t i = 0; i < words.size(); ++i) {
          if (k > 0 && i >= static_cast<std::size_t>(k)) break;
          list.push_back(Json::array({words[i].first, words[i].second}));
        }
        return Json{{"size", words.size()}, {"words", list}};
      }));
  r.add(aggregate_op("aggregate.tfidf.v1", "Per-sample TF-IDF over the split vocabulary.", {},
                     [](const Environment& env) {
                       const auto t = aggregate::tfidf(env.dataset, env.split);
                       return Json{{"vocabulary", t.vocabulary}, {"weights", t.weights}};
                     }));
  r.add(aggregate_op("aggregate.split_sizes.v1", "Sample count of every split.", {},
                     [](const Environment& env) {
                       Json j = Json::object();
                       std::size_t total = 0;
                       for (const auto& [name, n] : aggregate::split_sizes(env.dataset)) {
                         j[name] = n;
                         total += n;
                       }
                       return Json{{"splits", j}, {"total", total}};
                     }));
  r.add(aggregate_op("aggregate.gender_bias.v1", "Share of samples hitting each gender lexicon.",
                     {}, [](const Environment& env) {
                       return diagnostics::to_json(diagnostics::gender_bias(
                           env.dataset, env.split, env.resources.words(resource::kMaleWords),
                           env.resources.words(resource::kFemaleWords)));
                     }));
  r.add(aggregate_op("aggregate.speech_bias.v1", "Hate / offensive / neither sample shares.", {},
                     [](const Environment& env) {
                       return diagnostics::to_json(diagnostics::speech_bias(
                           env.dataset, env.split, env.resources.words(resource::kHateLexicon),
                           env.resources.words(resource::kOffensiveLexicon)));
                     }));
  r.add(aggregate_op("aggregate.label_imbalance.v1", "Normalized label entropy.", {},
                     [](const Environment& env) {
                       return Json{{"normalized_entropy",
                                    diagnostics::label_imbalance(env.dataset, env.split)}};
                     }));
  r.add(aggregate_op(
      "aggregate.pmi_table.v1", "PMI between two stored features (or 'label').",
      {{"feature_x", {ParamType::String, "general.length", "first feature"}},
       {"feature_y", {ParamType::String, "label", "second feature"}},
       {"bins_x", {ParamType::Int, "4", "equal-frequency bins; 0 = categorical"}},
       {"bins_y", {ParamType::Int, "0", "equal-frequency bins; 0 = categorical"}},
       {"log_base", {ParamType::String, "e", "e | 2"}}},
      [](const Environment& env) {
        auto scheme = [&](const char* name) {
          const auto n = env.params.integer(name);
          return n == 0 ? diagnostics::BinningScheme::categorical()
                        : diagnostics::BinningScheme::equal_frequency(static_cast<std::size_t>(n));
        };
        return diagnostics::to_json(diagnostics::pmi_table(
            env.dataset, env.split, require_store(env), env.params.string("feature_x"),
            env.params.string("feature_y"), scheme("bins_x"), scheme("bins_y"),
            diagnostics::parse_log_base(env.params.string("log_base"))));
      }));
  r.add(aggregate_op(
      "aggregate.detect_artifacts.v1", "Ranks feature-bin/label cells by PMI.",
      {{"features", {ParamType::String, "", "comma list; empty = every numeric stored feature"}},
       {"label_feature", {ParamType::String, "label", "feature treated as the label"}},
       {"threshold", {ParamType::Float, "0.1", "minimum PMI"}},
       {"bins", {ParamType::Int, "4", "equal-frequency bins for numeric features"}},
       {"log_base", {ParamType::String, "e", "e | 2"}}},
      [](const Environment& env) {
        const auto& store = require_store(env);
        auto names = split_list(env.params.string("features"));
        if (names.empty()) names = numeric_features(store, env);
        const auto scan = diagnostics::detect_artifacts(
            env.dataset, env.split, store, names, env.params.string("label_feature"),
            env.params.number("threshold"), static_cast<std::size_t>(env.params.integer("bins")),
            diagnostics::parse_log_base(env.params.string("log_base")));
        Json list = Json::array();
        for (const auto& a : scan.artifacts) list.push_back(diagnostics::to_json(a));
        return Json{{"features", names}, {"artifacts", list}};
      }));
}

void register_prompt_ops(Registry& r) {
  auto op = transform(
      "prompt.apply_template.v1", Category::Prompt,
      "Renders a prompt template per sample into field 'prompted'.",
      {{"prompt_file", {ParamType::String, "", "prompt JSON document"}},
       {"with_answer", {ParamType::Bool, "false", "substitute the label verbalizer"}}},
      [](const Sample& s, const Environment& env) {
        const auto& prompt = std::any_cast<const prompts::Prompt&>(env.state);
        Transformed t{s, false};
        t.sample.fields["prompted"] =
            prompts::apply_prompt(prompt, s, env.params.flag("with_answer"));
        return t;
      });
  op.prepare = [](const Environment& env) -> std::any {
    const auto& path = env.params.string("prompt_file");
    if (path.empty()) throw ConfigError("prompt.apply_template.v1 needs 'prompt_file'");
    auto prompt = prompts::load_prompt(path);
    const auto violations = prompts::validate_prompt(prompt, env.dataset.schema);
    if (!violations.empty()) {
      std::string msg = "prompt '" + prompt.prompt_id + "' is invalid for this dataset:";
      for (const auto& v : violations) msg += " " + v.rule + "(" + v.detail + ")";
      throw ValidationError(msg);
    }
    return prompt;
  };
  r.add(std::move(op));
}

}  // namespace

void register_builtins(Registry& registry) {
  register_preprocess(registry);
  register_edits(registry);
  register_features(registry);
  register_aggregates(registry);
  register_prompt_ops(registry);
}

}  // namespace datalab::ops
