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

#include "hamcheck/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hamcheck {

namespace {

void drop_zeros(LaurentPoly::Terms& terms) {
  std::erase_if(terms, [](const auto& term) { return term.second == 0; });
}

void require_nonnegative(const LaurentPoly::Terms& terms) {
  if (!terms.empty() && terms.begin()->first < 0) {
    throw std::domain_error("negative exponent escaped normalization: t^" +
                            std::to_string(terms.begin()->first));
  }
}

}  // namespace

std::string to_string(const BigInt& value) { return value.str(); }

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coefficient, Exponent exponent) {
  Terms terms;
  if (coefficient != 0) terms.emplace(exponent, std::move(coefficient));
  require_nonnegative(terms);
  return LaurentPoly(std::move(terms));
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  drop_zeros(terms);
  require_nonnegative(terms);
  return LaurentPoly(std::move(terms));
}

LaurentPoly LaurentPoly::from_dense(std::span<const BigInt> coefficients) {
  Terms terms;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] != 0) terms.emplace(static_cast<Exponent>(k), coefficients[k]);
  }
  return LaurentPoly(std::move(terms));
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

BigInt LaurentPoly::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Exponent LaurentPoly::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::truncated(Exponent order) const {
  Terms terms(terms_.begin(), terms_.upper_bound(order));
  return LaurentPoly(std::move(terms));
}

LaurentPoly LaurentPoly::shifted(Exponent amount) const {
  Terms terms;
  for (const auto& [e, c] : terms_) terms.emplace_hint(terms.end(), e + amount, c);
  require_nonnegative(terms);
  return LaurentPoly(std::move(terms));
}

LaurentPoly LaurentPoly::times_one_minus_power(Exponent a) const {
  if (a <= 0) throw std::invalid_argument("factor (1 - t^a) needs a > 0");
  LaurentPoly result = *this;
  for (const auto& [e, c] : terms_) result.terms_[e + a] -= c;
  drop_zeros(result.terms_);
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, BigInt(-c));
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= scalar;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly::Terms terms;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) terms[e1 + e2] += c1 * c2;
  }
  drop_zeros(terms);
  return LaurentPoly(std::move(terms));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly result = *this;
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

FactoredDenominator::FactoredDenominator(std::vector<Exponent> factors)
    : factors_(std::move(factors)) {
  for (Exponent a : factors_) {
    if (a <= 0) throw std::invalid_argument("denominator factor must be positive");
  }
  std::sort(factors_.begin(), factors_.end());
}

Exponent FactoredDenominator::degree() const {
  Exponent total = 0;
  for (Exponent a : factors_) total += a;
  return total;
}

LaurentPoly FactoredDenominator::expand() const {
  LaurentPoly result(BigInt(1));
  for (Exponent a : factors_) result = result.times_one_minus_power(a);
  return result;
}

NormalizedContribution normalize_contribution(std::span<const Exponent> exponents) {
  NormalizedContribution out;
  std::vector<Exponent> factors;
  factors.reserve(exponents.size());
  for (Exponent x : exponents) {
    if (x == 0) throw std::invalid_argument("zero exponent in contribution");
    if (x < 0) {
      out.sign = -out.sign;
      out.shift += -x;
    }
    factors.push_back(x < 0 ? -x : x);
  }
  out.denom = FactoredDenominator(std::move(factors));
  return out;
}

LaurentPoly series_expand(int sign, Exponent shift, const LaurentPoly& numer,
                          const FactoredDenominator& denom, Exponent order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (shift < 0) throw std::invalid_argument("series shift must be nonnegative");
  if (shift > order) return {};

  // Dense working buffer for degrees [0, order - shift].
  const auto width = static_cast<std::size_t>(order - shift) + 1;
  std::vector<BigInt> coeffs(width);
  for (const auto& [e, c] : numer.terms()) {
    if (e >= static_cast<Exponent>(width)) break;
    coeffs[static_cast<std::size_t>(e)] = c;
  }
  // Multiplying by 1/(1 - t^a) is the running sum c[k] += c[k - a].
  for (Exponent a : denom.factors()) {
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t k = step; k < width; ++k) coeffs[k] += coeffs[k - step];
  }
  if (sign < 0) {
    for (auto& c : coeffs) c = -c;
  }
  return LaurentPoly::from_dense(coeffs).shifted(shift);
}

}  // namespace hamcheck
