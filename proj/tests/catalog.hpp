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

#include <string>
#include <vector>

#include "datalab/ingest.hpp"

namespace datalab::testing {

inline ingest::RegistryEntry catalog_entry(const std::string& name, const std::string& task,
                                           const std::string& description,
                                           std::vector<std::string> languages = {"en"}) {
  ingest::RegistryEntry e;
  e.name = name;
  e.metadata.languages = std::move(languages);
  e.metadata.task = task;
  e.metadata.description = description;
  e.schema = TaskSchema::for_task(parse_task(task));
  return e;
}

// A small catalog of well-known public datasets with one-line descriptions.
inline std::vector<ingest::RegistryEntry> review_catalog() {
  return {
      catalog_entry("beer_advocate", "text-classification",
                    "Beer reviews from the BeerAdvocate community. Each beer review rates "
                    "appearance, aroma, palate and taste, with an overall positive or negative "
                    "rating."),
      catalog_entry("imdb", "text-classification",
                    "Movie reviews from IMDB labeled with positive or negative sentiment."),
      catalog_entry("sst2", "text-classification",
                    "Sentences from movie reviews with binary sentiment labels."),
      catalog_entry("yelp_polarity", "text-classification",
                    "Yelp business reviews labeled as positive or negative."),
      catalog_entry("amazon_reviews_multi", "text-classification",
                    "Product reviews from Amazon in several languages with star ratings.",
                    {"en", "de", "es", "fr", "ja", "zh"}),
      catalog_entry("snli", "nli",
                    "Sentence pairs labeled entailment, contradiction or neutral, written "
                    "from image captions."),
      catalog_entry("cnn_dailymail", "summarization",
                    "News articles paired with multi-sentence highlight summaries."),
      catalog_entry("squad", "extractive-qa",
                    "Questions on Wikipedia articles where the answer is a span of the "
                    "passage."),
      catalog_entry("ag_news", "text-classification",
                    "News titles and descriptions from four topic categories."),
      catalog_entry("xnli", "nli",
                    "Cross-lingual natural language inference in fifteen languages.",
                    {"en", "fr", "es", "de", "el", "bg", "ru", "tr", "ar", "vi", "th", "zh",
                     "hi", "sw", "ur"}),
  };
}

inline const char* kBeerQuery =
    "I want to train a model that can recognize the positive and negative sentiments "
    "contained in a beer review.";

}  // namespace datalab::testing
