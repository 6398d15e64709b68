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

#include "hamcheck/subset_sum.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace hamcheck::subset {

namespace {

constexpr double kTableBudget = 4e6;
constexpr std::size_t kSplitLimit = 40;

bool sorted_contains(const std::vector<Value>& v, Value x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

CardinalitySums::CardinalitySums(std::span<const Value> values)
    : values_(values.begin(), values.end()) {
  const std::size_t m = values_.size();
  layers_.assign(m + 1, std::vector<std::vector<Value>>(m + 1));
  layers_[0][0] = {0};
  for (std::size_t k = 0; k < m; ++k) {
    const Value v = values_[k];
    auto& next = layers_[k + 1];
    const auto& prev = layers_[k];
    for (std::size_t c = 0; c <= k + 1; ++c) {
      std::vector<Value> taken;
      if (c > 0) {
        taken.reserve(prev[c - 1].size());
        for (Value s : prev[c - 1]) taken.push_back(s + v);
      }
      std::vector<Value>& out = next[c];
      out.reserve(prev[c].size() + taken.size());
      std::set_union(prev[c].begin(), prev[c].end(), taken.begin(), taken.end(),
                     std::back_inserter(out));
    }
  }
}

const std::vector<Value>& CardinalitySums::sums(std::size_t count) const {
  static const std::vector<Value> kEmpty;
  if (count > values_.size()) return kEmpty;
  return layers_.back()[count];
}

bool CardinalitySums::contains(std::size_t count, Value target) const {
  return sorted_contains(sums(count), target);
}

std::optional<std::vector<Value>> CardinalitySums::find(std::size_t count, Value target) const {
  if (!contains(count, target)) return std::nullopt;
  std::vector<Value> picked;
  std::size_t c = count;
  Value t = target;
  for (std::size_t k = values_.size(); k > 0 && c > 0; --k) {
    if (sorted_contains(layers_[k - 1][c], t)) continue;
    picked.push_back(values_[k - 1]);
    t -= values_[k - 1];
    --c;
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

double table_cost(std::span<const Value> values) {
  double range = 1;
  for (Value v : values) range += static_cast<double>(std::llabs(v));
  const double m = static_cast<double>(values.size()) + 1;
  return m * m * range;
}

std::optional<std::vector<Value>> min_odd_zero_sum_table(std::span<const Value> values) {
  CardinalitySums table(values);
  for (std::size_t c = 1; c <= values.size(); c += 2) {
    if (auto found = table.find(c, 0)) return found;
  }
  return std::nullopt;
}

std::optional<std::vector<Value>> min_odd_zero_sum_split(std::span<const Value> values) {
  if (values.size() > kSplitLimit) {
    throw std::length_error("split subset-sum enumeration limited to 40 values");
  }
  const std::size_t half = values.size() / 2;
  const auto left = values.subspan(0, half);
  const auto right = values.subspan(half);

  auto enumerate = [](std::span<const Value> part, auto&& visit) {
    const std::uint64_t limit = std::uint64_t{1} << part.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      Value sum = 0;
      for (std::size_t i = 0; i < part.size(); ++i) {
        if (mask >> i & 1) sum += part[i];
      }
      visit(mask, sum);
    }
  };

  // Best right-half mask per (sum, parity): fewest elements, then smallest mask.
  struct Key {
    Value sum;
    int parity;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<Value>{}(k.sum) * 2 + static_cast<std::size_t>(k.parity);
    }
  };
  std::unordered_map<Key, std::uint64_t, KeyHash> best_right;
  enumerate(right, [&](std::uint64_t mask, Value sum) {
    const Key key{sum, std::popcount(mask) & 1};
    auto [it, inserted] = best_right.try_emplace(key, mask);
    if (!inserted) {
      const int old_count = std::popcount(it->second);
      const int new_count = std::popcount(mask);
      if (new_count < old_count || (new_count == old_count && mask < it->second)) it->second = mask;
    }
  });

  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  int best_count = 0;
  enumerate(left, [&](std::uint64_t mask, Value sum) {
    const int parity = std::popcount(mask) & 1;
    auto it = best_right.find(Key{-sum, 1 - parity});
    if (it == best_right.end()) return;
    const int count = std::popcount(mask) + std::popcount(it->second);
    if (!best || count < best_count) {
      best = std::make_pair(mask, it->second);
      best_count = count;
    }
  });
  if (!best) return std::nullopt;

  std::vector<Value> picked;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (best->first >> i & 1) picked.push_back(left[i]);
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    if (best->second >> i & 1) picked.push_back(right[i]);
  }
  return picked;
}

std::optional<std::vector<Value>> min_odd_zero_sum(std::span<const Value> values) {
  if (table_cost(values) <= kTableBudget || values.size() > kSplitLimit) {
    return min_odd_zero_sum_table(values);
  }
  return min_odd_zero_sum_split(values);
}

}  // namespace hamcheck::subset
