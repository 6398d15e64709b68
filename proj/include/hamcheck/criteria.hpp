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

// Hamiltonian-sufficiency criteria and necessary conditions on fixed-point
// data.
//
// A sufficient criterion whose hypothesis holds implies the action is
// Hamiltonian; when it fails the criterion is silent. A necessary condition
// that fails means no closed manifold carries the data. Criteria with
// dimension or weight-shape preconditions report Inapplicable rather than a
// misleading failure.

#include "hamcheck/chi.hpp"
#include "hamcheck/fixed_point.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace hamcheck {

enum class CriterionKind { Sufficient, Necessary };
enum class Outcome { Holds, Fails, Inapplicable };

/// Signed terms that add up to zero.
struct ZeroSumWitness {
  std::vector<Weight> terms;
};

/// A value that lies in both A_i and A_j, with the realizing sub-multisets.
struct SumCollisionWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  Weight value = 0;
  std::vector<Weight> left;   // i elements of A
  std::vector<Weight> right;  // j elements of A
};

/// Negative weight -b at an index-2 point equal to -e-f at an index-4 point.
struct NegativeSumWitness {
  std::size_t index2_point = 0;
  std::size_t index4_point = 0;
  Weight b = 0;
  Weight e = 0;
  Weight f = 0;
};

/// Shared absolute weights a <= b <= c with a + b = c.
struct TripleWitness {
  Weight a = 0;
  Weight b = 0;
  Weight c = 0;
};

/// sum_{index 2i} N_p(-w) != sum_{index 2i-2} N_p(w).
struct LadderWitness {
  Weight w = 0;
  int i = 0;
  std::size_t minus_count = 0;
  std::size_t plus_count = 0;
};

/// Index histogram without two consecutive nonzero entries.
struct HistogramWitness {
  std::vector<std::size_t> N;
};

using Witness = std::variant<ZeroSumWitness, SumCollisionWitness, NegativeSumWitness,
                             TripleWitness, LadderWitness, HistogramWitness>;

std::string describe(const Witness& witness);

struct CriterionResult {
  std::string name;
  CriterionKind kind = CriterionKind::Sufficient;
  Outcome outcome = Outcome::Inapplicable;
  std::optional<Witness> witness;  // present iff outcome == Fails
  std::string note;

  bool hypothesis_holds() const { return outcome == Outcome::Holds; }
  /// "Hamiltonian" for a sufficient criterion that holds, "Inconsistent" for a
  /// necessary one that fails, otherwise "silent".
  std::string implication() const;
};

std::string to_string(CriterionKind kind);
std::string to_string(Outcome outcome);

/// Per-i results for every 0 < i < n followed by the overall result, which
/// holds iff some i does and otherwise carries the witness of the first i.
std::vector<CriterionResult> parity_disjoint(const WeightTables& tables, int n);
CriterionResult odd_sum_nonzero(const WeightTables& tables);
CriterionResult symmetric_three_sum(const FixedPointData& data);
CriterionResult three_sum_dim6(const WeightTables& tables, int n);
CriterionResult index24_condition(const FixedPointData& data);
CriterionResult godinho_condition(const FixedPointData& data);
std::set<Weight> primitive_weights(const WeightTables& tables);

/// Raised when pairing_ladder is asked about a non-primitive weight, or when
/// the ladder and its telescoped form disagree (which cannot happen for
/// correct counting).
class CriterionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

CriterionResult pairing_ladder(const FixedPointData& data, const WeightTables& tables, Weight w);
CriterionResult adjacent_indices(const FixedPointData& data);

enum class Verdict { Hamiltonian, NonHamiltonianCandidate, Inconsistent };

std::string to_string(Verdict verdict);
/// CLI exit status: 0, 1 or 2.
int exit_code(Verdict verdict);

struct Evaluation {
  ChiReport chi;
  std::set<Weight> primitive;
  std::vector<CriterionResult> criteria;
  Verdict verdict = Verdict::Inconsistent;
  std::string summary;
};

/// Names accepted by evaluate_selected: parity_disjoint, odd_sum_nonzero,
/// symmetric_three_sum, three_sum_dim6, index24_condition, godinho_condition,
/// pairing_ladder, adjacent_indices.
const std::vector<std::string>& criterion_names();

/// Runs the named criteria (all of them when `only` is empty). Throws
/// InputError on an unknown name.
std::vector<CriterionResult> evaluate_selected(const FixedPointData& data,
                                               const WeightTables& tables,
                                               const std::vector<std::string>& only);

/// Sets verdict and summary from ev.chi and ev.criteria: a failed identity
/// or necessary condition gives Inconsistent; otherwise chi^0 = 1 gives
/// Hamiltonian; otherwise a sufficient criterion that holds contradicts
/// chi^0 = 0 and also gives Inconsistent.
void summarize(Evaluation& ev);

Evaluation evaluate_all(const FixedPointData& data);

}  // namespace hamcheck
