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

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hamcheck;

namespace {

FixedPointData data_of(int n, std::vector<std::vector<Weight>> tuples) {
  std::vector<FixedPoint> pts;
  for (auto& t : tuples) pts.emplace_back(std::move(t));
  return FixedPointData(n, std::move(pts));
}

std::string parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixed point index") {
  CHECK(FixedPoint({-3, 1, 2}).index() == 2);
  CHECK(FixedPoint({-1, -2, 3}).index() == 4);
  CHECK(FixedPoint({1, 2}).index() == 0);
  CHECK_THROWS_AS(FixedPoint({1, 0}), InputError);
}

TEST_CASE("build_tables on the six-dimensional pair") {
  const auto t = build_tables(data_of(3, {{-3, 1, 2}, {-1, -2, 3}}));
  CHECK(t.A == std::vector<Weight>{1, 2, 3});
  CHECK(t.sums[1] == std::vector<Weight>{1, 2, 3});
  CHECK(t.sums[2] == std::vector<Weight>{3, 4, 5});
  CHECK(t.sums[3] == std::vector<Weight>{6});
  CHECK(t.B[0].empty());
  CHECK(t.B[1].empty());
  CHECK(t.W == std::vector<Weight>{-3, -2, -1, 1, 2, 3});
}

TEST_CASE("build_tables on the two-sphere") {
  const auto t = build_tables(data_of(1, {{1}, {-1}}));
  CHECK(t.A == std::vector<Weight>{1});
  CHECK(t.sums[1] == std::vector<Weight>{1});
  CHECK(t.W == std::vector<Weight>{-1, 1});
}

TEST_CASE("A uses the largest multiplicity at one point, not the total") {
  const auto t = build_tables(data_of(2, {{1, 1}, {-1, 1}}));
  CHECK(t.A == std::vector<Weight>{1, 1});
  CHECK(t.sums[2] == std::vector<Weight>{2});
  CHECK(t.W == std::vector<Weight>{-1, 1, 1});
  CHECK(t.B[0].empty());
  CHECK(t.B[1].empty());

  const auto u = build_tables(data_of(2, {{1, 2}, {3, -1}}));
  CHECK(u.A == std::vector<Weight>{1, 2, 3});
  CHECK(u.B[0] == std::vector<Weight>{3});
  CHECK(u.B[1] == std::vector<Weight>{2});
}

TEST_CASE("occurrence_count") {
  CHECK(occurrence_count(FixedPoint({-3, 1, 2}), 1) == 1);
  CHECK(occurrence_count(FixedPoint({-3, 1, 2}), -1) == 0);
  CHECK(occurrence_count(FixedPoint({1, 1, -2}), 1) == 2);
}

TEST_CASE("index_histogram") {
  CHECK(index_histogram(data_of(3, {{-3, 1, 2}, {-1, -2, 3}})) ==
        std::vector<std::size_t>{0, 1, 1, 0});
  CHECK(index_histogram(data_of(1, {{1}, {-1}})) == std::vector<std::size_t>{1, 1});
  CHECK(index_histogram(data_of(2, {{1, 2}, {-1, 1}, {-2, -1}})) ==
        std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("parse") {
  const auto d = parse(R"({"n":3,"fixed_points":[{"weights":[-3,1,2]},{"weights":[-1,-2,3]}]})");
  CHECK(d.n() == 3);
  CHECK(d.points().size() == 2);
  CHECK(d.points()[1].weights() == std::vector<Weight>{-1, -2, 3});
  CHECK(parse(to_json(d).dump()) == d);

  CHECK(parse_error(R"({"n":2,"fixed_points":[{"weights":[0,1]}]})") ==
        "zero weight at point 0, slot 0");
  CHECK(parse_error(R"({"n":2,"fixed_points":[]})") == "fixed point set must be nonempty");
  CHECK(parse_error(R"({"n":0,"fixed_points":[{"weights":[]}]})") == "dimension must be positive");
  CHECK(parse_error(R"({"n":2,"fixed_points":[{"weights":[1,2]},{"weights":[1]}]})") ==
        "point 1 has 1 weights, expected 2");
  CHECK(parse_error("{not json").starts_with("malformed document"));
  CHECK(parse_error(R"({"n":1,"fixed_points":[{"weights":[1.5]}]})") ==
        "non-integer weight at point 0, slot 0");
  // Emitted reports carry an extra "report" key.
  CHECK_NOTHROW(parse(R"({"n":1,"fixed_points":[{"weights":[1]}],"report":{}})"));
}

TEST_CASE("CardinalitySums against bitmask enumeration") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto values = oracle::random_weights(rng, len(rng), 9);
    subset::CardinalitySums table(values);
    for (std::size_t c = 0; c <= values.size(); ++c) {
      const auto expected = oracle::subset_sums(values, c);
      const auto& got = table.sums(c);
      REQUIRE(std::vector<Weight>(expected.begin(), expected.end()) == got);
      for (Weight s : got) {
        auto found = table.find(c, s);
        REQUIRE(found);
        REQUIRE(found->size() == c);
        Weight total = 0;
        for (Weight v : *found) total += v;
        REQUIRE(total == s);
        // The witness is a sub-multiset of values.
        auto pool = values;
        for (Weight v : *found) {
          auto it = std::find(pool.begin(), pool.end(), v);
          REQUIRE(it != pool.end());
          pool.erase(it);
        }
      }
    }
  }
}

TEST_CASE("odd zero sums: table, split and brute force agree") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> len(1, 14);
  for (int trial = 0; trial < 400; ++trial) {
    const auto values = oracle::random_weights(rng, len(rng), 12);
    const bool expected = oracle::has_odd_zero_sum(values);
    const auto table = subset::min_odd_zero_sum_table(values);
    const auto split = subset::min_odd_zero_sum_split(values);
    REQUIRE(table.has_value() == expected);
    REQUIRE(split.has_value() == expected);
    if (expected) {
      CHECK(table->size() % 2 == 1);
      CHECK(table->size() == split->size());
      Weight a = 0;
      for (Weight v : *split) a += v;
      CHECK(a == 0);
    }
  }
}

TEST_CASE("table invariants on random data") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto data = oracle::random_data(rng, 4, 5, 8);
    const auto t = build_tables(data);

    // A matches a brute recount.
    CHECK(t.A == oracle::absolute_multiset(data));

    // Permutation invariance.
    auto pts = data.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<FixedPoint> shuffled;
    for (const auto& p : pts) {
      auto ws = p.weights();
      std::shuffle(ws.begin(), ws.end(), rng);
      shuffled.emplace_back(std::move(ws));
    }
    const auto u = build_tables(FixedPointData(data.n(), shuffled));
    CHECK(u.A == t.A);
    CHECK(u.W == t.W);
    CHECK(u.sums == t.sums);

    // A_1 is the distinct values of A; A_|A| is the full sum.
    std::vector<Weight> distinct = t.A;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    CHECK(t.sums[1] == distinct);
    Weight total = 0;
    for (Weight a : t.A) total += a;
    CHECK(t.sums[t.A.size()] == std::vector<Weight>{total});

    // Bounds on A_i.
    for (std::size_t i = 1; i <= t.A.size(); ++i) {
      Weight top = 0;
      for (std::size_t k = 0; k < i; ++k) top += t.A[t.A.size() - 1 - k];
      for (Weight s : t.sums[i]) {
        CHECK(s >= static_cast<Weight>(i) * t.A.front());
        CHECK(s <= top);
      }
    }

    // Histogram totals.
    std::size_t count = 0;
    for (auto c : index_histogram(data)) count += c;
    CHECK(count == data.points().size());

    // B_p multiplicities.
    for (std::size_t k = 0; k < data.points().size(); ++k) {
      for (Weight a : distinct) {
        const auto in_a = std::count(t.A.begin(), t.A.end(), a);
        const auto in_b = std::count(t.B[k].begin(), t.B[k].end(), a);
        const auto at_p = static_cast<std::ptrdiff_t>(occurrence_count(data.points()[k], a) +
                                                      occurrence_count(data.points()[k], -a));
        CHECK(in_b == in_a - at_p);
        CHECK(in_b >= 0);
      }
    }
  }
}
