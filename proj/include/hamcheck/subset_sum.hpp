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

// Subset sums over a multiset, tracked by cardinality. Values may be signed;
// positions are distinct, so repeated values can be used once per copy.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hamcheck::subset {

using Value = std::int64_t;

class CardinalitySums {
 public:
  explicit CardinalitySums(std::span<const Value> values);

  std::size_t size() const { return values_.size(); }
  /// Sorted distinct sums of exactly `count` positions.
  const std::vector<Value>& sums(std::size_t count) const;
  bool contains(std::size_t count, Value target) const;
  /// Values (not positions) of one subset of `count` positions summing to
  /// `target`, or nullopt.
  std::optional<std::vector<Value>> find(std::size_t count, Value target) const;

 private:
  std::vector<Value> values_;
  // layers_[k][c]: sums of c positions chosen among the first k values.
  std::vector<std::vector<std::vector<Value>>> layers_;
};

/// Rough state count of a CardinalitySums table; used to pick between the
/// table and the split enumeration below.
double table_cost(std::span<const Value> values);

/// Smallest odd-cardinality sub-multiset summing to zero, by table.
std::optional<std::vector<Value>> min_odd_zero_sum_table(std::span<const Value> values);

/// Same answer by meet-in-the-middle over the two halves of `values`.
/// Requires values.size() <= 48.
std::optional<std::vector<Value>> min_odd_zero_sum_split(std::span<const Value> values);

/// Dispatches to the table or the split enumeration depending on cost.
std::optional<std::vector<Value>> min_odd_zero_sum(std::span<const Value> values);

}  // namespace hamcheck::subset
