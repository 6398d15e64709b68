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

#include <nlohmann/json.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamcheck {

using Weight = std::int64_t;

/// Raised for malformed or invalid fixed-point input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weights of the isotropy representation at one isolated fixed point.
class FixedPoint {
 public:
  /// Throws InputError if any weight is zero.
  explicit FixedPoint(std::vector<Weight> weights);

  const std::vector<Weight>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  int negative_count() const { return negative_count_; }
  /// Twice the number of negative weights.
  int index() const { return 2 * negative_count_; }

  friend bool operator==(const FixedPoint& a, const FixedPoint& b) {
    return a.weights_ == b.weights_;
  }
  friend auto operator<=>(const FixedPoint& a, const FixedPoint& b) {
    return a.weights_ <=> b.weights_;
  }

 private:
  std::vector<Weight> weights_;
  int negative_count_ = 0;
};

/// Candidate fixed-point data of a circle action on a 2n-manifold.
class FixedPointData {
 public:
  /// Throws InputError when n < 1, the point list is empty, or a tuple
  /// does not have exactly n weights.
  FixedPointData(int n, std::vector<FixedPoint> points);

  int n() const { return n_; }
  const std::vector<FixedPoint>& points() const { return points_; }

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;

 private:
  int n_;
  std::vector<FixedPoint> points_;
};

/// Weight multisets derived from a datum.
///
/// A holds absolute values where each value a appears
///     max_p |{ i : |w_p^i| = a }|
/// times, i.e. the largest multiplicity at any single point, not the total
/// over points. W is the signed analogue. With this convention every point's
/// absolute weights embed in A, so prod_{a in A}(1 - t^a) clears every
/// point's denominator and B_p = A minus {|w_p^i|} is a genuine multiset.
struct WeightTables {
  std::vector<Weight> A;                  // sorted ascending
  std::vector<std::vector<Weight>> sums;  // sums[i]: distinct sums of i positions of A; sums[0] = {0}
  std::vector<std::vector<Weight>> B;     // per point, sorted ascending
  std::vector<Weight> W;                  // sorted ascending

  /// True when `value` is a sum of exactly i distinct positions of A.
  bool has_sum(std::size_t i, Weight value) const;
};

WeightTables build_tables(const FixedPointData& data);

std::size_t occurrence_count(const FixedPoint& point, Weight w);

/// N[i] = number of points of index 2i, for 0 <= i <= n.
std::vector<std::size_t> index_histogram(const FixedPointData& data);

/// Parses {"n": ..., "fixed_points": [{"weights": [...]}, ...]}. Unknown
/// keys are ignored so that emitted reports can be read back.
FixedPointData from_json(const nlohmann::json& document);
FixedPointData parse(std::string_view text);

nlohmann::json to_json(const FixedPointData& data);

}  // namespace hamcheck
