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

#include <stdexcept>

namespace hamcheck {

namespace {

void check_degree(const FixedPointData& data, int i) {
  if (i < 0 || i > data.n()) {
    throw std::out_of_range("degree " + std::to_string(i) + " outside [0, " +
                            std::to_string(data.n()) + "]");
  }
}

BigInt signed_count(std::size_t count, int i) {
  BigInt v(count);
  return i % 2 == 0 ? v : BigInt(-v);
}

}  // namespace

LaurentPoly sigma_poly(const FixedPoint& point, int i) {
  const int n = static_cast<int>(point.size());
  if (i < 0 || i > n) throw std::out_of_range("sigma degree out of range");

  Exponent shift = 0;
  for (Weight w : point.weights()) {
    if (w < 0) shift -= w;
  }
  // Coefficients of x^k in t^shift * prod_m (1 + x t^{w_m}). Every partial
  // subset sum is >= -shift, so exponents stay nonnegative throughout.
  std::vector<LaurentPoly> by_count(static_cast<std::size_t>(i) + 1);
  by_count[0] = LaurentPoly::monomial(1, shift);
  for (Weight w : point.weights()) {
    for (int k = i; k >= 1; --k) {
      auto& target = by_count[static_cast<std::size_t>(k)];
      const auto& source = by_count[static_cast<std::size_t>(k - 1)];
      if (!source.is_zero()) target += source.shifted(w);
    }
  }
  return by_count[static_cast<std::size_t>(i)];
}

LaurentPoly cleared_numerator(const FixedPointData& data, const WeightTables& tables, int i) {
  check_degree(data, i);
  LaurentPoly total;
  const auto& points = data.points();
  for (std::size_t k = 0; k < points.size(); ++k) {
    LaurentPoly term = sigma_poly(points[k], i);
    for (Exponent a : tables.B[k]) term = term.times_one_minus_power(a);
    if (points[k].negative_count() % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

ChiValue chi_value(const FixedPointData& data, const WeightTables& tables, int i) {
  LaurentPoly lhs = cleared_numerator(data, tables, i);
  BigInt c = lhs.constant_term();
  // D has constant term 1, so c is the only candidate.
  LaurentPoly residual = lhs - FactoredDenominator(tables.A).expand() * c;
  ChiValue out;
  if (residual.is_zero()) out.constant = std::move(c);
  out.residual = std::move(residual);
  return out;
}

ChiValue chi_value(const FixedPointData& data, int i) {
  return chi_value(data, build_tables(data), i);
}

LaurentPoly chi_series(const FixedPointData& data, int i, Exponent order) {
  check_degree(data, i);
  LaurentPoly total;
  for (const auto& p : data.points()) {
    const auto& ws = p.weights();
    const NormalizedContribution base = normalize_contribution(ws);
    // Walk every i-subset of slots in lexicographic order.
    std::vector<std::size_t> pick(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < pick.size(); ++k) pick[k] = k;
    const std::size_t n = ws.size();
    while (true) {
      Exponent e = 0;
      for (std::size_t slot : pick) e += ws[slot];
      total += series_expand(base.sign, base.shift + e, LaurentPoly(BigInt(1)), base.denom, order);
      std::size_t k = pick.size();
      while (k > 0 && pick[k - 1] == n - pick.size() + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return total;
}

Exponent decisive_order(const WeightTables& tables) {
  return FactoredDenominator(tables.A).degree() + 1;
}

std::string to_string(HamiltonianFlag flag) {
  switch (flag) {
    case HamiltonianFlag::Hamiltonian: return "Hamiltonian";
    case HamiltonianFlag::NonHamiltonian: return "NonHamiltonian";
    case HamiltonianFlag::Inconsistent: return "Inconsistent";
  }
  return "?";
}

std::string to_string(IdentityFailure::Kind kind) {
  switch (kind) {
    case IdentityFailure::Kind::NonConstant: return "non_constant";
    case IdentityFailure::Kind::ChiZeroRange: return "chi0_range";
    case IdentityFailure::Kind::IndexCount: return "index_count";
    case IdentityFailure::Kind::IndexSymmetry: return "index_symmetry";
  }
  return "?";
}

ChiReport full_report(const FixedPointData& data, const WeightTables& tables) {
  ChiReport report;
  const int n = data.n();
  report.N = index_histogram(data);
  report.chi.resize(static_cast<std::size_t>(n) + 1);

  for (int i = 0; i <= n; ++i) {
    ChiValue v = chi_value(data, tables, i);
    if (v.is_constant()) {
      report.chi[static_cast<std::size_t>(i)] = std::move(v.constant);
    } else {
      report.failures.push_back({IdentityFailure::Kind::NonConstant, i,
                                 "chi^" + std::to_string(i) + " is not constant",
                                 std::move(v.residual)});
    }
  }

  const auto& chi0 = report.chi[0];
  if (chi0 && *chi0 != 0 && *chi0 != 1) {
    report.failures.push_back({IdentityFailure::Kind::ChiZeroRange, 0,
                               "chi^0 = " + to_string(*chi0) + " is neither 0 nor 1", {}});
  }
  for (int i = 0; i <= n; ++i) {
    const auto& value = report.chi[static_cast<std::size_t>(i)];
    const std::size_t count = report.N[static_cast<std::size_t>(i)];
    if (value && *value != signed_count(count, i)) {
      report.failures.push_back({IdentityFailure::Kind::IndexCount, i,
                                 "chi^" + std::to_string(i) + " = " + to_string(*value) +
                                     " but (-1)^" + std::to_string(i) + " N^" +
                                     std::to_string(i) + " = " +
                                     to_string(signed_count(count, i)),
                                 {}});
    }
    const std::size_t mirror = report.N[static_cast<std::size_t>(n - i)];
    if (i < n - i && count != mirror) {
      report.failures.push_back({IdentityFailure::Kind::IndexSymmetry, i,
                                 "N^" + std::to_string(i) + " = " + std::to_string(count) +
                                     " but N^" + std::to_string(n - i) + " = " +
                                     std::to_string(mirror),
                                 {}});
    }
  }

  if (!report.failures.empty()) {
    report.flag = HamiltonianFlag::Inconsistent;
  } else {
    report.flag = *chi0 == 1 ? HamiltonianFlag::Hamiltonian : HamiltonianFlag::NonHamiltonian;
  }
  return report;
}

ChiReport full_report(const FixedPointData& data) { return full_report(data, build_tables(data)); }

}  // namespace hamcheck
