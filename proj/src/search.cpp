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

#include "hamcheck/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace hamcheck {

namespace {

// Multisets of size k from m kinds.
BigInt multichoose(std::uint64_t m, std::uint64_t k) {
  if (m == 0) return k == 0 ? 1 : 0;
  BigInt result = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    result *= (m + j - 1);
    result /= j;
  }
  return result;
}

enum class Rejection { None, Chi, Ladder, Adjacent, Mode };

Rejection classify_rejection(const Evaluation& ev, const SearchSpec& spec) {
  if (spec.filters.contains(Filter::ChiConsistency) &&
      ev.chi.flag == HamiltonianFlag::Inconsistent) {
    return Rejection::Chi;
  }
  for (const auto& c : ev.criteria) {
    const bool ladder = c.name.starts_with("pairing_ladder");
    const bool adjacent = c.name == "adjacent_indices";
    if (c.outcome != Outcome::Fails) continue;
    if (ladder && spec.filters.contains(Filter::PairingLadder)) return Rejection::Ladder;
    if (adjacent && spec.filters.contains(Filter::AdjacentIndices)) return Rejection::Adjacent;
  }
  if (spec.mode == SearchMode::NonHamiltonianCandidates &&
      ev.chi.flag != HamiltonianFlag::NonHamiltonian) {
    return Rejection::Mode;
  }
  return Rejection::None;
}

void accumulate(SearchStats& into, const SearchStats& from) {
  into.pruned_extreme_index += from.pruned_extreme_index;
  into.pruned_histogram += from.pruned_histogram;
  into.pruned_adjacent += from.pruned_adjacent;
  into.evaluated += from.evaluated;
  into.rejected_chi += from.rejected_chi;
  into.rejected_ladder += from.rejected_ladder;
  into.rejected_adjacent += from.rejected_adjacent;
  into.rejected_mode += from.rejected_mode;
  into.survivors += from.survivors;
}

// Calls visit(indices) for every nondecreasing index sequence of length k
// over [0, m) whose first entry is `first`.
template <typename Visit>
void for_each_sequence(std::size_t m, std::size_t k, std::size_t first, Visit&& visit) {
  std::vector<std::size_t> seq(k, first);
  if (k == 0) return;
  while (true) {
    visit(seq);
    // Advance the rightmost entry that can still grow; entry 0 is pinned.
    std::size_t pos = k;
    while (pos > 1 && seq[pos - 1] + 1 >= m) --pos;
    if (pos <= 1) break;
    ++seq[pos - 1];
    for (std::size_t j = pos; j < k; ++j) seq[j] = seq[pos - 1];
  }
}

}  // namespace

std::string to_string(Filter filter) {
  switch (filter) {
    case Filter::ChiConsistency: return "chi_consistency";
    case Filter::PairingLadder: return "pairing_ladder";
    case Filter::AdjacentIndices: return "adjacent_indices";
  }
  return "?";
}

std::string to_string(SearchMode mode) {
  return mode == SearchMode::AllData ? "all" : "non-hamiltonian";
}

std::string to_string(PruneReason reason) {
  switch (reason) {
    case PruneReason::ExtremeIndex: return "extreme_index";
    case PruneReason::HistogramAsymmetry: return "histogram_asymmetry";
    case PruneReason::NoAdjacentIndices: return "no_adjacent_indices";
  }
  return "?";
}

void SearchSpec::validate() const {
  if (n < 1) throw InputError("search needs n >= 1");
  if (points < 1) throw InputError("search needs at least one fixed point");
  if (max_weight < 1) throw InputError("search needs max_weight >= 1");
}

CeilingExceeded::CeilingExceeded(BigInt space, std::uint64_t ceiling)
    : std::runtime_error("canonical search space has " + space.str() +
                         " data, above the ceiling of " + std::to_string(ceiling)),
      space_(std::move(space)) {}

FixedPointData canonicalize(const FixedPointData& data) {
  std::vector<FixedPoint> points;
  points.reserve(data.points().size());
  for (const auto& p : data.points()) {
    auto ws = p.weights();
    std::sort(ws.begin(), ws.end());
    points.emplace_back(std::move(ws));
  }
  std::sort(points.begin(), points.end());
  return FixedPointData(data.n(), std::move(points));
}

std::vector<std::vector<Weight>> canonical_tuples(int n, Weight max_weight) {
  std::vector<Weight> values;
  for (Weight w = -max_weight; w <= max_weight; ++w) {
    if (w != 0) values.push_back(w);
  }
  std::vector<std::vector<Weight>> out;
  const auto len = static_cast<std::size_t>(n);
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    std::vector<Weight> tuple(len);
    for (std::size_t k = 0; k < len; ++k) tuple[k] = values[idx[k]];
    out.push_back(std::move(tuple));
    std::size_t pos = len;
    while (pos > 0 && idx[pos - 1] + 1 >= values.size()) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t k = pos; k < len; ++k) idx[k] = idx[pos - 1];
  }
  return out;
}

BigInt canonical_space_size(int n, int points, Weight max_weight) {
  const BigInt tuples = multichoose(static_cast<std::uint64_t>(2 * max_weight),
                                    static_cast<std::uint64_t>(n));
  return multichoose(tuples.convert_to<std::uint64_t>(), static_cast<std::uint64_t>(points));
}

void for_each_canonical(int n, int points, Weight max_weight,
                        const std::function<void(const FixedPointData&)>& visit) {
  const auto tuples = canonical_tuples(n, max_weight);
  for (std::size_t first = 0; first < tuples.size(); ++first) {
    for_each_sequence(tuples.size(), static_cast<std::size_t>(points), first,
                      [&](const std::vector<std::size_t>& seq) {
                        std::vector<FixedPoint> pts;
                        for (std::size_t t : seq) pts.emplace_back(tuples[t]);
                        visit(FixedPointData(n, std::move(pts)));
                      });
  }
}

std::optional<PruneReason> cheap_prune(const FixedPointData& data, const SearchSpec& spec) {
  const auto hist = index_histogram(data);
  const std::size_t n = hist.size() - 1;
  // chi^0 = 0 together with the chi identities forces N^0 = N^n = 0.
  if (spec.mode == SearchMode::NonHamiltonianCandidates && (hist[0] > 0 || hist[n] > 0)) {
    return PruneReason::ExtremeIndex;
  }
  if (spec.filters.contains(Filter::ChiConsistency)) {
    for (std::size_t i = 0; i <= n; ++i) {
      if (hist[i] != hist[n - i]) return PruneReason::HistogramAsymmetry;
    }
  }
  if (spec.filters.contains(Filter::AdjacentIndices)) {
    bool adjacent = false;
    for (std::size_t i = 0; i < n; ++i) adjacent = adjacent || (hist[i] > 0 && hist[i + 1] > 0);
    if (!adjacent) return PruneReason::NoAdjacentIndices;
  }
  return std::nullopt;
}

bool passes_filters(const Evaluation& evaluation, const SearchSpec& spec) {
  return classify_rejection(evaluation, spec) == Rejection::None;
}

Evaluation classify_survivor(const FixedPointData& data) { return evaluate_all(data); }

SearchResult enumerate(const SearchSpec& spec) {
  spec.validate();
  const BigInt space = canonical_space_size(spec.n, spec.points, spec.max_weight);
  if (space > spec.ceiling) throw CeilingExceeded(space, spec.ceiling);

  const auto tuples = canonical_tuples(spec.n, spec.max_weight);
  std::vector<std::size_t> alphabet;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto negatives = std::count_if(tuples[t].begin(), tuples[t].end(),
                                         [](Weight w) { return w < 0; });
    const bool extreme = negatives == 0 || negatives == spec.n;
    if (spec.mode == SearchMode::NonHamiltonianCandidates && extreme) continue;
    alphabet.push_back(t);
  }
  const auto k = static_cast<std::size_t>(spec.points);

  SearchResult result;
  result.stats.space = space.convert_to<std::uint64_t>();
  result.stats.pruned_extreme_index =
      (space - multichoose(alphabet.size(), k)).convert_to<std::uint64_t>();

  std::vector<std::vector<Survivor>> by_partition(alphabet.size());
  std::atomic<std::size_t> next{0};
  std::mutex stats_mutex;

  auto worker = [&] {
    SearchStats local;
    for (std::size_t first = next++; first < alphabet.size(); first = next++) {
      auto& out = by_partition[first];
      for_each_sequence(alphabet.size(), k, first, [&](const std::vector<std::size_t>& seq) {
        std::vector<FixedPoint> pts;
        pts.reserve(k);
        for (std::size_t a : seq) pts.emplace_back(tuples[alphabet[a]]);
        FixedPointData data(spec.n, std::move(pts));

        if (auto reason = cheap_prune(data, spec)) {
          switch (*reason) {
            case PruneReason::ExtremeIndex: ++local.pruned_extreme_index; break;
            case PruneReason::HistogramAsymmetry: ++local.pruned_histogram; break;
            case PruneReason::NoAdjacentIndices: ++local.pruned_adjacent; break;
          }
          return;
        }
        ++local.evaluated;
        Evaluation ev = classify_survivor(data);
        switch (classify_rejection(ev, spec)) {
          case Rejection::Chi: ++local.rejected_chi; return;
          case Rejection::Ladder: ++local.rejected_ladder; return;
          case Rejection::Adjacent: ++local.rejected_adjacent; return;
          case Rejection::Mode: ++local.rejected_mode; return;
          case Rejection::None: break;
        }
        ++local.survivors;
        out.push_back({std::move(data), std::move(ev)});
      });
    }
    std::lock_guard lock(stats_mutex);
    accumulate(result.stats, local);
  };

  unsigned threads = spec.threads == 0 ? std::thread::hardware_concurrency() : spec.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(alphabet.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Partitions are in lexicographic order of their first point.
  for (auto& part : by_partition) {
    for (auto& s : part) result.survivors.push_back(std::move(s));
  }
  return result;
}

}  // namespace hamcheck
