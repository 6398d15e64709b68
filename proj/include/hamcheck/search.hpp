// Copyright 2026 The hamcheck Authors
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

// Exhaustive enumeration of small candidate fixed-point data in canonical
// form, filtered by the necessary conditions and classified.

#include "hamcheck/criteria.hpp"
#include "hamcheck/fixed_point.hpp"
#include "hamcheck/laurent.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamcheck {

enum class Filter { ChiConsistency, PairingLadder, AdjacentIndices };
enum class SearchMode { AllData, NonHamiltonianCandidates };

std::string to_string(Filter filter);
std::string to_string(SearchMode mode);

struct SearchSpec {
  int n = 1;
  int points = 1;
  Weight max_weight = 1;
  std::set<Filter> filters = {Filter::ChiConsistency, Filter::PairingLadder,
                              Filter::AdjacentIndices};
  SearchMode mode = SearchMode::AllData;
  /// Largest raw canonical space the enumerator will touch.
  std::uint64_t ceiling = 1'000'000'000;
  /// Worker count; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws InputError unless n, points and max_weight are all >= 1.
  void validate() const;
};

struct Survivor {
  FixedPointData data;
  Evaluation evaluation;
};

struct SearchStats {
  std::uint64_t space = 0;             // raw canonical data
  std::uint64_t pruned_extreme_index = 0;
  std::uint64_t pruned_histogram = 0;  // N^i != N^{n-i}
  std::uint64_t pruned_adjacent = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t rejected_chi = 0;
  std::uint64_t rejected_ladder = 0;
  std::uint64_t rejected_adjacent = 0;
  std::uint64_t rejected_mode = 0;
  std::uint64_t survivors = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchResult {
  std::vector<Survivor> survivors;
  SearchStats stats;
};

class CeilingExceeded : public std::runtime_error {
 public:
  CeilingExceeded(BigInt space, std::uint64_t ceiling);
  const BigInt& space() const { return space_; }

 private:
  BigInt space_;
};

/// Sorts weights within each point, then points lexicographically.
FixedPointData canonicalize(const FixedPointData& data);

/// All nondecreasing n-tuples over {-W..-1, 1..W}, in lexicographic order.
std::vector<std::vector<Weight>> canonical_tuples(int n, Weight max_weight);

/// Number of canonical data with the given shape: multisets of `points`
/// tuples drawn from the canonical tuples.
BigInt canonical_space_size(int n, int points, Weight max_weight);

/// Visits every canonical datum in lexicographic order.
void for_each_canonical(int n, int points, Weight max_weight,
                        const std::function<void(const FixedPointData&)>& visit);

enum class PruneReason { ExtremeIndex, HistogramAsymmetry, NoAdjacentIndices };

std::string to_string(PruneReason reason);

/// Histogram-only rejections applied before any polynomial arithmetic.
std::optional<PruneReason> cheap_prune(const FixedPointData& data, const SearchSpec& spec);

/// Whether an evaluated datum passes every enabled filter and the mode.
bool passes_filters(const Evaluation& evaluation, const SearchSpec& spec);

/// Throws CeilingExceeded before doing any work if the space is too large.
SearchResult enumerate(const SearchSpec& spec);

Evaluation classify_survivor(const FixedPointData& data);

}  // namespace hamcheck
