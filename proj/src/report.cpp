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

#include "hamcheck/report.hpp"

#include "hamcheck/chi.hpp"

#include <iomanip>
#include <sstream>

namespace hamcheck {

namespace {

template <typename Range>
std::string bracketed(const Range& values) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  os << "]";
  return os.str();
}

std::string chi_text(const std::vector<std::optional<BigInt>>& chi) {
  std::vector<std::string> parts;
  for (const auto& c : chi) parts.push_back(c ? c->str() : "?");
  return bracketed(parts);
}

}  // namespace

bool OracleCheck::any_disagreement() const {
  for (const auto& d : degrees) {
    if (d.status == Status::Disagree) return true;
  }
  return false;
}

std::string to_string(OracleCheck::Status status) {
  switch (status) {
    case OracleCheck::Status::Agree: return "agree";
    case OracleCheck::Status::Disagree: return "disagree";
    case OracleCheck::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

OracleCheck run_oracle(const FixedPointData& data, const ChiReport& chi, Exponent order) {
  OracleCheck out;
  out.order = order;
  out.decisive_order = decisive_order(build_tables(data));
  for (int i = 0; i <= data.n(); ++i) {
    const LaurentPoly series = chi_series(data, i, order);
    const auto& exact = chi.chi[static_cast<std::size_t>(i)];
    OracleCheck::Status status;
    if (exact) {
      status = series == LaurentPoly(*exact) ? OracleCheck::Status::Agree
                                             : OracleCheck::Status::Disagree;
    } else if (!series.is_constant()) {
      status = OracleCheck::Status::Agree;
    } else {
      status = order >= out.decisive_order ? OracleCheck::Status::Disagree
                                           : OracleCheck::Status::Inconclusive;
    }
    out.degrees.push_back({i, status});
  }
  return out;
}

nlohmann::json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

nlohmann::json to_json(const Witness& witness) {
  struct Visitor {
    nlohmann::json operator()(const ZeroSumWitness& w) const {
      return {{"type", "zero_sum"}, {"terms", w.terms}};
    }
    nlohmann::json operator()(const SumCollisionWitness& w) const {
      return {{"type", "sum_collision"}, {"i", w.i},         {"j", w.j},
              {"value", w.value},        {"left", w.left},   {"right", w.right}};
    }
    nlohmann::json operator()(const NegativeSumWitness& w) const {
      return {{"type", "negative_sum"}, {"index2_point", w.index2_point},
              {"index4_point", w.index4_point}, {"b", w.b}, {"e", w.e}, {"f", w.f}};
    }
    nlohmann::json operator()(const TripleWitness& w) const {
      return {{"type", "triple"}, {"a", w.a}, {"b", w.b}, {"c", w.c}};
    }
    nlohmann::json operator()(const LadderWitness& w) const {
      return {{"type", "ladder"},
              {"w", w.w},
              {"i", w.i},
              {"minus_count", w.minus_count},
              {"plus_count", w.plus_count}};
    }
    nlohmann::json operator()(const HistogramWitness& w) const {
      return {{"type", "histogram"}, {"N", w.N}};
    }
  };
  nlohmann::json j = std::visit(Visitor{}, witness);
  j["text"] = describe(witness);
  return j;
}

nlohmann::json to_json(const CriterionResult& r) {
  nlohmann::json j = {{"name", r.name},
                      {"kind", to_string(r.kind)},
                      {"outcome", to_string(r.outcome)},
                      {"hypothesis_holds", r.hypothesis_holds()},
                      {"implication", r.implication()}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const ChiReport& chi) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& c : chi.chi) values.push_back(c ? to_json(*c) : nlohmann::json());
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : chi.failures) {
    nlohmann::json entry = {{"kind", to_string(f.kind)}, {"degree", f.degree}, {"detail", f.detail}};
    if (!f.residual.is_zero()) entry["residual"] = f.residual.to_string();
    failures.push_back(std::move(entry));
  }
  return {{"chi", std::move(values)},
          {"N", chi.N},
          {"hamiltonian_flag", to_string(chi.flag)},
          {"failures", std::move(failures)}};
}

nlohmann::json to_json(const Evaluation& ev) {
  nlohmann::json j = to_json(ev.chi);
  j["primitive_weights"] = ev.primitive;
  nlohmann::json criteria = nlohmann::json::array();
  for (const auto& c : ev.criteria) criteria.push_back(to_json(c));
  j["criteria"] = std::move(criteria);
  j["verdict"] = to_string(ev.verdict);
  j["summary"] = ev.summary;
  return j;
}

nlohmann::json to_json(const OracleCheck& oracle) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& d : oracle.degrees) {
    degrees.push_back({{"degree", d.degree}, {"status", to_string(d.status)}});
  }
  return {{"order", oracle.order},
          {"decisive_order", oracle.decisive_order},
          {"degrees", std::move(degrees)}};
}

nlohmann::json to_json(const SearchStats& s) {
  return {{"space", s.space},
          {"pruned_extreme_index", s.pruned_extreme_index},
          {"pruned_histogram", s.pruned_histogram},
          {"pruned_adjacent", s.pruned_adjacent},
          {"evaluated", s.evaluated},
          {"rejected_chi", s.rejected_chi},
          {"rejected_ladder", s.rejected_ladder},
          {"rejected_adjacent", s.rejected_adjacent},
          {"rejected_mode", s.rejected_mode},
          {"survivors", s.survivors}};
}

nlohmann::json report_document(const FixedPointData& data, const Evaluation& evaluation,
                               const std::optional<OracleCheck>& oracle) {
  nlohmann::json doc = to_json(data);
  doc["report"] = to_json(evaluation);
  if (oracle) doc["report"]["oracle"] = to_json(*oracle);
  return doc;
}

std::string render_text(const CriterionResult& r) {
  std::ostringstream os;
  os << std::left << std::setw(26) << r.name << std::setw(11) << to_string(r.kind)
     << std::setw(13) << to_string(r.outcome) << r.implication();
  if (r.witness) os << "\n    witness: " << describe(*r.witness);
  if (!r.note.empty()) os << "\n    note: " << r.note;
  return os.str();
}

std::string render_text(const FixedPointData& data, const Evaluation& ev,
                        const std::optional<OracleCheck>& oracle) {
  std::ostringstream os;
  os << "dimension " << 2 * data.n() << " (n = " << data.n() << "), " << data.points().size()
     << " fixed points\n";
  for (std::size_t k = 0; k < data.points().size(); ++k) {
    const auto& p = data.points()[k];
    os << "  p" << k << ": " << bracketed(p.weights()) << "  index " << p.index() << "\n";
  }
  os << "chi:  " << chi_text(ev.chi.chi) << "\n";
  os << "N:    " << bracketed(ev.chi.N) << "\n";
  os << "flag: " << to_string(ev.chi.flag) << "\n";
  if (ev.chi.failures.empty()) {
    os << "identity failures: none\n";
  } else {
    os << "identity failures:\n";
    for (const auto& f : ev.chi.failures) {
      os << "  [" << to_string(f.kind) << "] " << f.detail << "\n";
      if (!f.residual.is_zero()) os << "    residual: " << f.residual.to_string() << "\n";
    }
  }
  os << "primitive weights: " << bracketed(ev.primitive) << "\n";
  os << "criteria:\n";
  for (const auto& c : ev.criteria) os << "  " << render_text(c) << "\n";
  if (oracle) {
    os << "series oracle (order " << oracle->order << ", decisive at " << oracle->decisive_order
       << "):";
    for (const auto& d : oracle->degrees) os << " chi^" << d.degree << " " << to_string(d.status);
    os << "\n";
  }
  os << "verdict: " << to_string(ev.verdict) << "\n";
  os << "summary: " << ev.summary << "\n";
  return os.str();
}

}  // namespace hamcheck
