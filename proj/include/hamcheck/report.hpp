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

// JSON and text renderings of evaluations. Both are produced from the same
// Evaluation so verdicts and witness descriptions coincide.

#include "hamcheck/criteria.hpp"
#include "hamcheck/fixed_point.hpp"
#include "hamcheck/search.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hamcheck {

/// Series cross-check of each chi^i at a chosen truncation order.
struct OracleCheck {
  enum class Status { Agree, Disagree, Inconclusive };
  struct Degree {
    int degree = 0;
    Status status = Status::Agree;
  };
  Exponent order = 0;
  Exponent decisive_order = 0;
  std::vector<Degree> degrees;

  bool any_disagreement() const;
};

std::string to_string(OracleCheck::Status status);

/// Compares the exact verdicts in `chi` with chi_series at `order`. A
/// non-constant chi^i can only be confirmed once order >= decisive_order;
/// below that a constant-looking series is Inconclusive.
OracleCheck run_oracle(const FixedPointData& data, const ChiReport& chi, Exponent order);

nlohmann::json to_json(const BigInt& value);
nlohmann::json to_json(const Witness& witness);
nlohmann::json to_json(const CriterionResult& result);
nlohmann::json to_json(const ChiReport& chi);
nlohmann::json to_json(const Evaluation& evaluation);
nlohmann::json to_json(const OracleCheck& oracle);
nlohmann::json to_json(const SearchStats& stats);

/// Input-schema document extended with a "report" object.
nlohmann::json report_document(const FixedPointData& data, const Evaluation& evaluation,
                               const std::optional<OracleCheck>& oracle = std::nullopt);

std::string render_text(const FixedPointData& data, const Evaluation& evaluation,
                        const std::optional<OracleCheck>& oracle = std::nullopt);
std::string render_text(const CriterionResult& result);

}  // namespace hamcheck
