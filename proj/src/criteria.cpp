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

#include "hamcheck/criteria.hpp"

#include "hamcheck/subset_sum.hpp"

#include <algorithm>
#include <sstream>

namespace hamcheck {

namespace {

template <typename Range>
std::string join(const Range& values, const char* sep = ", ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

CriterionResult holds(std::string name, CriterionKind kind, std::string note = {}) {
  return {std::move(name), kind, Outcome::Holds, std::nullopt, std::move(note)};
}

CriterionResult fails(std::string name, CriterionKind kind, Witness witness, std::string note = {}) {
  return {std::move(name), kind, Outcome::Fails, std::move(witness), std::move(note)};
}

CriterionResult inapplicable(std::string name, std::string note) {
  return {std::move(name), CriterionKind::Sufficient, Outcome::Inapplicable, std::nullopt,
          std::move(note)};
}

std::vector<Weight> absolute_sorted(const FixedPoint& p) {
  std::vector<Weight> out;
  for (Weight w : p.weights()) out.push_back(w < 0 ? -w : w);
  std::sort(out.begin(), out.end());
  return out;
}

// The absolute weight multiset every point shares, if there is one.
std::optional<std::vector<Weight>> shared_absolute(const FixedPointData& data) {
  auto first = absolute_sorted(data.points().front());
  for (const auto& p : data.points()) {
    if (absolute_sorted(p) != first) return std::nullopt;
  }
  return first;
}

std::optional<Weight> first_common(const std::vector<Weight>& a, const std::vector<Weight>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return *ia;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string describe(const Witness& witness) {
  struct Visitor {
    std::string operator()(const ZeroSumWitness& w) const {
      return "(" + join(w.terms, ") + (") + ") = 0";
    }
    std::string operator()(const SumCollisionWitness& w) const {
      return std::to_string(w.value) + " in A_" + std::to_string(w.i) + " (" +
             join(w.left, "+") + ") and A_" + std::to_string(w.j) + " (" + join(w.right, "+") +
             ")";
    }
    std::string operator()(const NegativeSumWitness& w) const {
      return "index-2 point " + std::to_string(w.index2_point) + " has -" + std::to_string(w.b) +
             ", index-4 point " + std::to_string(w.index4_point) + " has -" +
             std::to_string(w.e) + ", -" + std::to_string(w.f) + ": " + std::to_string(w.b) +
             " = " + std::to_string(w.e) + " + " + std::to_string(w.f);
    }
    std::string operator()(const TripleWitness& w) const {
      return std::to_string(w.a) + " + " + std::to_string(w.b) + " = " + std::to_string(w.c);
    }
    std::string operator()(const LadderWitness& w) const {
      return "weight -" + std::to_string(w.w) + " occurs " + std::to_string(w.minus_count) +
             " times at index " + std::to_string(2 * w.i) + ", weight " + std::to_string(w.w) +
             " occurs " + std::to_string(w.plus_count) + " times at index " +
             std::to_string(2 * w.i - 2);
    }
    std::string operator()(const HistogramWitness& w) const {
      return "N = [" + join(w.N) + "] has no two consecutive nonzero entries";
    }
  };
  return std::visit(Visitor{}, witness);
}

std::string CriterionResult::implication() const {
  if (kind == CriterionKind::Sufficient && outcome == Outcome::Holds) return "Hamiltonian";
  if (kind == CriterionKind::Necessary && outcome == Outcome::Fails) return "Inconsistent";
  return "silent";
}

std::string to_string(CriterionKind kind) {
  return kind == CriterionKind::Sufficient ? "sufficient" : "necessary";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::vector<CriterionResult> parity_disjoint(const WeightTables& tables, int n) {
  const std::string name = "parity_disjoint";
  if (n < 2) {
    return {inapplicable(name, "no degree 0 < i < n exists for n = " + std::to_string(n))};
  }
  const std::size_t m = tables.A.size();
  std::optional<subset::CardinalitySums> finder;
  std::vector<CriterionResult> out;
  std::optional<Witness> first_witness;
  bool any = false;

  for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i) {
    const std::string sub = name + "[i=" + std::to_string(i) + "]";
    std::optional<Witness> witness;
    for (std::size_t j = 1; j <= m && !witness; ++j) {
      if ((i + j) % 2 == 0) continue;
      auto common = first_common(tables.sums[i], tables.sums[j]);
      if (!common) continue;
      if (!finder) finder.emplace(tables.A);
      SumCollisionWitness w{i, j, *common, *finder->find(i, *common), *finder->find(j, *common)};
      witness = w;
    }
    if (witness) {
      if (!first_witness) first_witness = witness;
      out.push_back(fails(sub, CriterionKind::Sufficient, *witness));
    } else {
      any = true;
      out.push_back(holds(sub, CriterionKind::Sufficient));
    }
  }
  if (any) {
    out.push_back(holds(name, CriterionKind::Sufficient));
  } else {
    out.push_back(fails(name, CriterionKind::Sufficient, *first_witness,
                        "every 0 < i < n has a parity collision"));
  }
  return out;
}

CriterionResult odd_sum_nonzero(const WeightTables& tables) {
  const std::string name = "odd_sum_nonzero";
  if (auto found = subset::min_odd_zero_sum(tables.W)) {
    return fails(name, CriterionKind::Sufficient, ZeroSumWitness{*found});
  }
  return holds(name, CriterionKind::Sufficient);
}

CriterionResult symmetric_three_sum(const FixedPointData& data) {
  const std::string name = "symmetric_three_sum";
  auto shared = shared_absolute(data);
  if (!shared) return inapplicable(name, "points do not share one absolute weight multiset");
  if (data.n() > 5) return inapplicable(name, "requires n <= 5");
  const auto& a = *shared;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (std::size_t k = j + 1; k < a.size(); ++k) {
        for (Weight sj : {1, -1}) {
          for (Weight sk : {1, -1}) {
            if (a[i] + sj * a[j] + sk * a[k] == 0) {
              return fails(name, CriterionKind::Sufficient,
                           ZeroSumWitness{{a[i], sj * a[j], sk * a[k]}});
            }
          }
        }
      }
    }
  }
  return holds(name, CriterionKind::Sufficient, a.size() < 3 ? "no triple exists" : "");
}

CriterionResult three_sum_dim6(const WeightTables& tables, int n) {
  const std::string name = "three_sum_dim6";
  if (n != 3) return inapplicable(name, "requires n = 3");
  const auto& w = tables.W;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      for (std::size_t k = j + 1; k < w.size(); ++k) {
        if (w[i] + w[j] + w[k] == 0) {
          return fails(name, CriterionKind::Sufficient, ZeroSumWitness{{w[i], w[j], w[k]}});
        }
      }
    }
  }
  return holds(name, CriterionKind::Sufficient);
}

CriterionResult index24_condition(const FixedPointData& data) {
  const std::string name = "index24_condition";
  if (data.n() != 3) return inapplicable(name, "requires n = 3");
  const auto& points = data.points();
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (points[p].index() != 2) continue;
    Weight b = 0;
    for (Weight w : points[p].weights()) {
      if (w < 0) b = -w;
    }
    for (std::size_t q = 0; q < points.size(); ++q) {
      if (points[q].index() != 4) continue;
      std::vector<Weight> neg;
      for (Weight w : points[q].weights()) {
        if (w < 0) neg.push_back(-w);
      }
      if (b == neg[0] + neg[1]) {
        return fails(name, CriterionKind::Sufficient,
                     NegativeSumWitness{p, q, b, neg[0], neg[1]});
      }
    }
  }
  return holds(name, CriterionKind::Sufficient);
}

CriterionResult godinho_condition(const FixedPointData& data) {
  const std::string name = "godinho_condition";
  if (data.n() != 3) return inapplicable(name, "requires n = 3");
  auto shared = shared_absolute(data);
  if (!shared) return inapplicable(name, "points do not share one absolute weight multiset");
  const auto& a = *shared;
  if (a[0] + a[1] == a[2]) {
    return fails(name, CriterionKind::Sufficient, TripleWitness{a[0], a[1], a[2]});
  }
  return holds(name, CriterionKind::Sufficient);
}

std::set<Weight> primitive_weights(const WeightTables& tables) {
  std::set<Weight> out;
  const auto& a = tables.A;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0 && a[k] == a[k - 1]) continue;
    std::vector<Weight> rest(a.begin(), a.end());
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    subset::CardinalitySums sums(rest);
    bool composite = false;
    for (std::size_t c = 2; c <= rest.size() && !composite; ++c) composite = sums.contains(c, a[k]);
    if (!composite) out.insert(a[k]);
  }
  return out;
}

CriterionResult pairing_ladder(const FixedPointData& data, const WeightTables& tables, Weight w) {
  if (!primitive_weights(tables).contains(w)) {
    throw CriterionError("weight " + std::to_string(w) +
                         " is not primitive: it is a sum of other absolute weights or absent");
  }
  const int n = data.n();
  // minus[i] = sum over index-2i points of N_p(-w); plus[i] likewise for +w.
  std::vector<std::size_t> minus(static_cast<std::size_t>(n) + 2, 0);
  std::vector<std::size_t> plus(static_cast<std::size_t>(n) + 2, 0);
  for (const auto& p : data.points()) {
    const auto i = static_cast<std::size_t>(p.negative_count());
    minus[i] += occurrence_count(p, -w);
    plus[i] += occurrence_count(p, w);
  }
  auto plus_below = [&](int i) { return i >= 1 ? plus[static_cast<std::size_t>(i - 1)] : 0; };

  std::optional<LadderWitness> witness;
  for (int i = 1; i <= n && !witness; ++i) {
    const std::size_t lhs = minus[static_cast<std::size_t>(i)];
    const std::size_t rhs = plus_below(i);
    if (lhs != rhs) witness = LadderWitness{w, i, lhs, rhs};
  }

  // Telescoped form: sum_{2i} [N(-w) + N(w)] = sum_{2i-2} N(w) + sum_{2i+2} N(-w).
  bool star = true;
  for (int i = 0; i <= n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (minus[u] + plus[u] != plus_below(i) + minus[u + 1]) star = false;
  }
  if (star != !witness) {
    throw CriterionError("pairing ladder and its telescoped identity disagree for weight " +
                         std::to_string(w));
  }

  const std::string name = "pairing_ladder[w=" + std::to_string(w) + "]";
  if (witness) return fails(name, CriterionKind::Necessary, *witness);
  return holds(name, CriterionKind::Necessary);
}

CriterionResult adjacent_indices(const FixedPointData& data) {
  const auto hist = index_histogram(data);
  for (std::size_t i = 0; i + 1 < hist.size(); ++i) {
    if (hist[i] > 0 && hist[i + 1] > 0) return holds("adjacent_indices", CriterionKind::Necessary);
  }
  return fails("adjacent_indices", CriterionKind::Necessary, HistogramWitness{hist});
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Hamiltonian: return "hamiltonian";
    case Verdict::NonHamiltonianCandidate: return "non-hamiltonian-candidate";
    case Verdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

int exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::Hamiltonian: return 0;
    case Verdict::NonHamiltonianCandidate: return 1;
    case Verdict::Inconsistent: return 2;
  }
  return 2;
}

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> kNames = {
      "parity_disjoint",   "odd_sum_nonzero",   "symmetric_three_sum", "three_sum_dim6",
      "index24_condition", "godinho_condition", "pairing_ladder",      "adjacent_indices"};
  return kNames;
}

std::vector<CriterionResult> evaluate_selected(const FixedPointData& data,
                                               const WeightTables& tables,
                                               const std::vector<std::string>& only) {
  for (const auto& name : only) {
    if (std::find(criterion_names().begin(), criterion_names().end(), name) ==
        criterion_names().end()) {
      throw InputError("unknown criterion \"" + name + "\"");
    }
  }
  auto wanted = [&](const std::string& name) {
    return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
  };

  std::vector<CriterionResult> out;
  if (wanted("parity_disjoint")) {
    auto parity = parity_disjoint(tables, data.n());
    out.insert(out.end(), parity.begin(), parity.end());
  }
  if (wanted("odd_sum_nonzero")) out.push_back(odd_sum_nonzero(tables));
  if (wanted("symmetric_three_sum")) out.push_back(symmetric_three_sum(data));
  if (wanted("three_sum_dim6")) out.push_back(three_sum_dim6(tables, data.n()));
  if (wanted("index24_condition")) out.push_back(index24_condition(data));
  if (wanted("godinho_condition")) out.push_back(godinho_condition(data));
  if (wanted("pairing_ladder")) {
    for (Weight w : primitive_weights(tables)) out.push_back(pairing_ladder(data, tables, w));
  }
  if (wanted("adjacent_indices")) out.push_back(adjacent_indices(data));
  return out;
}

void summarize(Evaluation& ev) {
  std::vector<std::string> broken;
  for (const auto& f : ev.chi.failures) broken.push_back(f.detail);
  for (const auto& c : ev.criteria) {
    if (c.kind == CriterionKind::Necessary && c.outcome == Outcome::Fails) {
      broken.push_back(c.name + " fails");
    }
  }
  if (!broken.empty()) {
    ev.verdict = Verdict::Inconsistent;
    ev.summary = "Inconsistent: " + join(broken, "; ");
    return;
  }
  if (ev.chi.flag == HamiltonianFlag::Hamiltonian) {
    ev.verdict = Verdict::Hamiltonian;
    ev.summary = "Hamiltonian (by χ⁰)";
    return;
  }
  std::vector<std::string> contradicting;
  for (const auto& c : ev.criteria) {
    // Per-degree parity entries are folded into the overall one.
    if (c.kind == CriterionKind::Sufficient && c.hypothesis_holds() &&
        c.name.find('[') == std::string::npos) {
      contradicting.push_back(c.name);
    }
  }
  if (!contradicting.empty()) {
    ev.verdict = Verdict::Inconsistent;
    ev.summary = "Hamiltonian (criterion " + join(contradicting) +
                 ", data claims non-Hamiltonian → CONTRADICTION: Inconsistent)";
    return;
  }
  ev.verdict = Verdict::NonHamiltonianCandidate;
  ev.summary = "non-Hamiltonian candidate: all criteria silent, all necessary conditions pass";
}

Evaluation evaluate_all(const FixedPointData& data) {
  const WeightTables tables = build_tables(data);
  Evaluation ev;
  ev.chi = full_report(data, tables);
  ev.primitive = primitive_weights(tables);
  ev.criteria = evaluate_selected(data, tables, {});
  summarize(ev);
  return ev;
}

}  // namespace hamcheck
