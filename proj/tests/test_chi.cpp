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

#include "hamcheck/chi.hpp"
#include "hamcheck/search.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hamcheck;

namespace {

FixedPointData data_of(int n, std::vector<std::vector<Weight>> tuples) {
  std::vector<FixedPoint> pts;
  for (auto& t : tuples) pts.emplace_back(std::move(t));
  return FixedPointData(n, std::move(pts));
}

LaurentPoly poly(std::initializer_list<std::pair<Exponent, long>> terms) {
  LaurentPoly::Terms t;
  for (auto [e, c] : terms) t[e] += c;
  return LaurentPoly::from_terms(std::move(t));
}

const FixedPointData kSphere = data_of(1, {{1}, {-1}});
const FixedPointData kPair = data_of(3, {{-3, 1, 2}, {-1, -2, 3}});
const FixedPointData kProjectivePlane = data_of(2, {{1, 2}, {-1, 1}, {-2, -1}});

}  // namespace

TEST_CASE("sigma_poly") {
  const FixedPoint p({-3, 1, 2});
  CHECK(sigma_poly(p, 0) == poly({{3, 1}}));
  CHECK(sigma_poly(p, 1) == poly({{0, 1}, {4, 1}, {5, 1}}));
  CHECK(sigma_poly(p, 2) == poly({{1, 1}, {2, 1}, {6, 1}}));
  CHECK(sigma_poly(p, 3) == poly({{3, 1}}));
  CHECK(sigma_poly(FixedPoint({2, 2}), 1) == poly({{2, 2}}));
  CHECK_THROWS_AS(sigma_poly(p, 4), std::out_of_range);
  CHECK_THROWS_AS(sigma_poly(p, -1), std::out_of_range);
}

TEST_CASE("chi_value on golden data") {
  CHECK(chi_value(kSphere, 0).constant == BigInt(1));
  CHECK(chi_value(kPair, 0).constant == BigInt(0));
  CHECK(chi_value(kPair, 1).constant == BigInt(-1));
  CHECK(chi_value(kProjectivePlane, 0).constant == BigInt(1));

  // The cleared numerator for chi^1 of the pair is -D.
  const auto tables = build_tables(kPair);
  CHECK(cleared_numerator(kPair, tables, 1) ==
        poly({{0, -1}, {1, 1}, {2, 1}, {4, -1}, {5, -1}, {6, 1}}));
}

TEST_CASE("chi_value reports a residual when chi is not constant") {
  const auto single = data_of(1, {{1}});
  const auto v = chi_value(single, 0);
  CHECK_FALSE(v.is_constant());
  // 1/(1 - t) cleared by (1 - t) is 1; minus 1 * (1 - t) leaves t.
  CHECK(v.residual == poly({{1, 1}}));
}

TEST_CASE("full_report") {
  SUBCASE("two-sphere") {
    const auto r = full_report(kSphere);
    REQUIRE(r.failures.empty());
    CHECK(r.chi == std::vector<std::optional<BigInt>>{BigInt(1), BigInt(-1)});
    CHECK(r.N == std::vector<std::size_t>{1, 1});
    CHECK(r.flag == HamiltonianFlag::Hamiltonian);
  }
  SUBCASE("six-dimensional pair") {
    const auto r = full_report(kPair);
    REQUIRE(r.failures.empty());
    CHECK(r.chi == std::vector<std::optional<BigInt>>{BigInt(0), BigInt(-1), BigInt(1), BigInt(0)});
    CHECK(r.N == std::vector<std::size_t>{0, 1, 1, 0});
    CHECK(r.flag == HamiltonianFlag::NonHamiltonian);
  }
  SUBCASE("projective plane") {
    const auto r = full_report(kProjectivePlane);
    REQUIRE(r.failures.empty());
    CHECK(r.chi == std::vector<std::optional<BigInt>>{BigInt(1), BigInt(-1), BigInt(1)});
    CHECK(r.flag == HamiltonianFlag::Hamiltonian);
  }
  SUBCASE("single point") {
    const auto r = full_report(data_of(1, {{1}}));
    CHECK(r.flag == HamiltonianFlag::Inconsistent);
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures[0].kind == IdentityFailure::Kind::NonConstant);
    CHECK(r.failures[0].degree == 0);
  }
  SUBCASE("two copies of the sphere have chi^0 = 2") {
    const auto r = full_report(data_of(1, {{1}, {-1}, {1}, {-1}}));
    CHECK(r.flag == HamiltonianFlag::Inconsistent);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].kind == IdentityFailure::Kind::ChiZeroRange);
  }
}

TEST_CASE("chi_series matches the per-factor oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const auto data = oracle::random_data(rng, 3, 4, 5);
    const std::size_t order = oracle::decisive_order(data);
    for (int i = 0; i <= data.n(); ++i) {
      const auto lib = chi_series(data, i, static_cast<Exponent>(order));
      const auto ref = oracle::chi_series(data, i, order);
      for (std::size_t k = 0; k <= order; ++k) {
        REQUIRE(lib.coefficient(static_cast<Exponent>(k)) == ref[k]);
      }
    }
  }
}

TEST_CASE("constant term of the cleared numerator counts points of index 2i") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto data = oracle::random_data(rng, 4, 5, 8);
    const auto tables = build_tables(data);
    const auto hist = index_histogram(data);
    for (int i = 0; i <= data.n(); ++i) {
      BigInt expected(hist[static_cast<std::size_t>(i)]);
      if (i % 2) expected = -expected;
      REQUIRE(cleared_numerator(data, tables, i).constant_term() == expected);
    }
  }
}

TEST_CASE("consistent data: point count and mirror symmetry") {
  // Every chi-consistent canonical datum of a few small shapes.
  std::size_t seen = 0;
  for (auto [n, k, w] : {std::tuple{1, 2, 3}, {2, 3, 2}, {2, 4, 2}, {3, 2, 3}}) {
    for_each_canonical(n, k, w, [&](const FixedPointData& data) {
      const auto r = full_report(data);
      if (r.flag == HamiltonianFlag::Inconsistent) return;
      ++seen;
      std::size_t total = 0;
      BigInt alternating = 0;
      for (int i = 0; i <= n; ++i) {
        total += r.N[static_cast<std::size_t>(i)];
        alternating += (i % 2 ? -1 : 1) * *r.chi[static_cast<std::size_t>(i)];
      }
      CHECK(total == data.points().size());
      CHECK(alternating == BigInt(data.points().size()));
      for (int i = 0; i <= n; ++i) {
        CHECK(abs(*r.chi[static_cast<std::size_t>(i)]) ==
              abs(*r.chi[static_cast<std::size_t>(n - i)]));
      }
    });
  }
  CHECK(seen > 0);
}
