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

// Equivariant genera chi^i of candidate fixed-point data.
//
// For each degree i the localization sum
//     chi^i = sum_p sigma_i(t^{w_p}) / prod_m (1 - t^{w_p^m})
// must be a constant. It is decided exactly by clearing denominators with
// D = prod_{a in A}(1 - t^a): writing each point's term as
// sign_p * J_p / prod(1 - t^{|w|}) with J_p = t^{shift_p} sigma_i(t^{w_p}),
//     D * chi^i = sum_p sign_p * J_p * prod_{a in B_p}(1 - t^a),
// and chi^i = c exactly when the right side equals c * D.

#include "hamcheck/fixed_point.hpp"
#include "hamcheck/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hamcheck {

/// J_p = t^{sum of |negative weights|} * sigma_i(t^{w_p^1}, ..., t^{w_p^n}).
/// Throws std::out_of_range unless 0 <= i <= n.
LaurentPoly sigma_poly(const FixedPoint& point, int i);

/// Left side of the cleared identity for degree i.
LaurentPoly cleared_numerator(const FixedPointData& data, const WeightTables& tables, int i);

struct ChiValue {
  std::optional<BigInt> constant;
  /// cleared_numerator - c * D, where c is its constant term; zero iff
  /// `constant` is set.
  LaurentPoly residual;

  bool is_constant() const { return constant.has_value(); }
};

ChiValue chi_value(const FixedPointData& data, const WeightTables& tables, int i);
ChiValue chi_value(const FixedPointData& data, int i);

/// Truncated power series of chi^i summed point by point, each i-subset of
/// weights expanded separately. Independent of the cleared identity.
LaurentPoly chi_series(const FixedPointData& data, int i, Exponent order);

/// deg prod_{a in A}(1 - t^a) + 1: the truncation at which the series
/// decides constancy exactly.
Exponent decisive_order(const WeightTables& tables);

enum class HamiltonianFlag { Hamiltonian, NonHamiltonian, Inconsistent };

std::string to_string(HamiltonianFlag flag);

struct IdentityFailure {
  enum class Kind {
    NonConstant,      // chi^i is not a constant
    ChiZeroRange,     // chi^0 not in {0, 1}
    IndexCount,       // chi^i != (-1)^i N^i
    IndexSymmetry,    // N^i != N^{n-i}
  };
  Kind kind;
  int degree;
  std::string detail;
  LaurentPoly residual;  // set for NonConstant
};

std::string to_string(IdentityFailure::Kind kind);

struct ChiReport {
  std::vector<std::optional<BigInt>> chi;  // chi[i] when constant
  std::vector<std::size_t> N;
  HamiltonianFlag flag = HamiltonianFlag::Inconsistent;
  std::vector<IdentityFailure> failures;
};

ChiReport full_report(const FixedPointData& data, const WeightTables& tables);
ChiReport full_report(const FixedPointData& data);

}  // namespace hamcheck
