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

#include "hamcheck/fixed_point.hpp"

#include "hamcheck/subset_sum.hpp"

#include <algorithm>
#include <map>

namespace hamcheck {

FixedPoint::FixedPoint(std::vector<Weight> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == 0) throw InputError("zero weight at slot " + std::to_string(i));
    if (weights_[i] < 0) ++negative_count_;
  }
}

FixedPointData::FixedPointData(int n, std::vector<FixedPoint> points)
    : n_(n), points_(std::move(points)) {
  if (n_ < 1) throw InputError("dimension must be positive");
  if (points_.empty()) throw InputError("fixed point set must be nonempty");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (points_[k].size() != static_cast<std::size_t>(n_)) {
      throw InputError("point " + std::to_string(k) + " has " +
                       std::to_string(points_[k].size()) + " weights, expected " +
                       std::to_string(n_));
    }
  }
}

bool WeightTables::has_sum(std::size_t i, Weight value) const {
  if (i >= sums.size()) return false;
  return std::binary_search(sums[i].begin(), sums[i].end(), value);
}

namespace {

// Multiset as value -> max multiplicity over points.
template <typename Key>
std::vector<Weight> max_multiplicity(const FixedPointData& data, Key key) {
  std::map<Weight, std::size_t> best;
  for (const auto& p : data.points()) {
    std::map<Weight, std::size_t> here;
    for (Weight w : p.weights()) ++here[key(w)];
    for (const auto& [value, count] : here) best[value] = std::max(best[value], count);
  }
  std::vector<Weight> out;
  for (const auto& [value, count] : best) out.insert(out.end(), count, value);
  return out;
}

}  // namespace

WeightTables build_tables(const FixedPointData& data) {
  WeightTables t;
  t.A = max_multiplicity(data, [](Weight w) { return w < 0 ? -w : w; });
  t.W = max_multiplicity(data, [](Weight w) { return w; });

  subset::CardinalitySums table(t.A);
  t.sums.reserve(t.A.size() + 1);
  for (std::size_t i = 0; i <= t.A.size(); ++i) t.sums.push_back(table.sums(i));

  t.B.reserve(data.points().size());
  for (const auto& p : data.points()) {
    std::vector<Weight> own;
    for (Weight w : p.weights()) own.push_back(w < 0 ? -w : w);
    std::sort(own.begin(), own.end());
    std::vector<Weight> rest;
    std::set_difference(t.A.begin(), t.A.end(), own.begin(), own.end(),
                        std::back_inserter(rest));
    t.B.push_back(std::move(rest));
  }
  return t;
}

std::size_t occurrence_count(const FixedPoint& point, Weight w) {
  return static_cast<std::size_t>(std::count(point.weights().begin(), point.weights().end(), w));
}

std::vector<std::size_t> index_histogram(const FixedPointData& data) {
  std::vector<std::size_t> hist(static_cast<std::size_t>(data.n()) + 1, 0);
  for (const auto& p : data.points()) ++hist[static_cast<std::size_t>(p.negative_count())];
  return hist;
}

FixedPointData from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InputError("missing integer field \"n\"");
  }
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 1) throw InputError("dimension must be positive");
  if (!doc.contains("fixed_points") || !doc["fixed_points"].is_array()) {
    throw InputError("missing array field \"fixed_points\"");
  }
  const auto& list = doc["fixed_points"];
  if (list.empty()) throw InputError("fixed point set must be nonempty");

  std::vector<FixedPoint> points;
  points.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    const auto& entry = list[k];
    if (!entry.is_object() || !entry.contains("weights") || !entry["weights"].is_array()) {
      throw InputError("point " + std::to_string(k) + " lacks a \"weights\" array");
    }
    const auto& ws = entry["weights"];
    if (ws.size() != static_cast<std::size_t>(n)) {
      throw InputError("point " + std::to_string(k) + " has " + std::to_string(ws.size()) +
                       " weights, expected " + std::to_string(n));
    }
    std::vector<Weight> weights;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (!ws[i].is_number_integer()) {
        throw InputError("non-integer weight at point " + std::to_string(k) + ", slot " +
                         std::to_string(i));
      }
      const auto w = ws[i].get<Weight>();
      if (w == 0) {
        throw InputError("zero weight at point " + std::to_string(k) + ", slot " +
                         std::to_string(i));
      }
      weights.push_back(w);
    }
    points.emplace_back(std::move(weights));
  }
  return FixedPointData(static_cast<int>(n), std::move(points));
}

FixedPointData parse(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  return from_json(doc);
}

nlohmann::json to_json(const FixedPointData& data) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : data.points()) points.push_back({{"weights", p.weights()}});
  return {{"n", data.n()}, {"fixed_points", std::move(points)}};
}

}  // namespace hamcheck
