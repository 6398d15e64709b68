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

// Exact integer polynomials in one indeterminate t.
//
// Values are kept in normalized form: a sparse map from nonnegative exponent
// to nonzero arbitrary-precision coefficient. Negative exponents can only
// arise inside an operation (e.g. a shift followed by a product) and are
// rejected if they would escape it.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hamcheck {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(BigInt constant);

  static LaurentPoly monomial(BigInt coefficient, Exponent exponent);
  /// Builds from an arbitrary term map; zero coefficients are dropped.
  static LaurentPoly from_terms(Terms terms);
  /// Dense constructor: coefficients[k] multiplies t^k.
  static LaurentPoly from_dense(std::span<const BigInt> coefficients);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt coefficient(Exponent exponent) const;
  BigInt constant_term() const { return coefficient(0); }
  /// -1 for the zero polynomial.
  Exponent degree() const;

  /// Drops every term of degree > order.
  LaurentPoly truncated(Exponent order) const;
  /// Multiplies by t^amount. Throws std::domain_error if a term would end
  /// up with a negative exponent.
  LaurentPoly shifted(Exponent amount) const;
  /// this * (1 - t^a), a > 0.
  LaurentPoly times_one_minus_power(Exponent a) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const BigInt& scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const BigInt& scalar) { return lhs *= scalar; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form, e.g. "1 - t - t^2 + t^4".
  std::string to_string() const;

 private:
  explicit LaurentPoly(Terms terms) : terms_(std::move(terms)) {}

  Terms terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Product of factors (1 - t^a) over a multiset of positive integers a.
class FactoredDenominator {
 public:
  FactoredDenominator() = default;
  /// Throws std::invalid_argument on a nonpositive factor.
  explicit FactoredDenominator(std::vector<Exponent> factors);

  /// Sorted ascending.
  const std::vector<Exponent>& factors() const { return factors_; }
  Exponent degree() const;
  LaurentPoly expand() const;

  friend bool operator==(const FactoredDenominator&, const FactoredDenominator&) = default;

 private:
  std::vector<Exponent> factors_;
};

/// 1 / prod_m (1 - t^{x_m}) == sign * t^shift / prod_{a in denom} (1 - t^a).
struct NormalizedContribution {
  int sign = 1;
  Exponent shift = 0;
  FactoredDenominator denom;
};

/// Rewrites each 1/(1 - t^{-a}) as -t^a/(1 - t^a). Throws
/// std::invalid_argument on a zero exponent.
NormalizedContribution normalize_contribution(std::span<const Exponent> exponents);

/// Power series of sign * t^shift * numer / denom, truncated at degree
/// `order`, via 1/(1 - t^a) = sum_j t^{ja}.
LaurentPoly series_expand(int sign, Exponent shift, const LaurentPoly& numer,
                          const FactoredDenominator& denom, Exponent order);

std::string to_string(const BigInt& value);

}  // namespace hamcheck
