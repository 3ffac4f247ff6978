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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

// Seeded text perturbations. Randomness is a pure function of the integer
// seed (modular index selection), so outputs are reproducible in any
// language without agreeing on an RNG.
namespace datalab::edit {

struct EditOutcome {
  std::string text;
  bool warning = false;  // precondition unmet; text returned unchanged
  bool operator==(const EditOutcome&) const = default;
};

// Removes whitespace token (seed mod n) and rejoins with single spaces.
EditOutcome delete_token(std::string_view text, std::uint64_t seed);

// Swaps whitespace tokens i and i+1 with i = seed mod (n - 1).
EditOutcome swap_adjacent(std::string_view text, std::uint64_t seed);

using Lexicon = std::map<std::string, std::string>;

inline constexpr std::uint64_t kDispersion = 2654435761ULL;

// Positions in [0, m) chosen by index_k = (seed + k * kDispersion) mod m,
// skipping repeats, until min(limit, m) are picked. Pick order.
std::vector<std::size_t> pick_positions(std::size_t m, std::size_t limit, std::uint64_t seed);

// Replaces up to `max_replacements` regex-word tokens that are (case
// sensitive) lexicon keys. Everything between tokens is kept byte-exact.
EditOutcome dict_replace(std::string_view text, const Lexicon& lexicon,
                         std::size_t max_replacements, std::uint64_t seed);

}  // namespace datalab::edit
