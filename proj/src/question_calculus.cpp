// Copyright 2026 The qtopo Authors
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

#include "qtopo/question_calculus.hpp"

#include <unordered_set>

namespace qtopo {

const char* to_string(QuestionKind kind) {
  switch (kind) {
    case QuestionKind::kTypeI: return "type-1";
    case QuestionKind::kTypeII: return "type-2";
    case QuestionKind::kTypeIII: return "type-3";
  }
  return "?";
}

namespace {

std::size_t require_index(const GroundSet& ground, std::string_view label) {
  const auto index = ground.index_of(label);
  if (!index) {
    throw Error(ErrorCode::kUnknownLabel, "unknown label '" + std::string(label) + "'");
  }
  return *index;
}

// Intersection of all opens containing the point: the smallest open
// neighborhood. X always qualifies, so the result is well defined.
Subset minimal_open_neighborhood(const Topology& t, std::size_t index) {
  Subset smallest = t.ground().full();
  for (Subset u : t.opens()) {
    if (u.contains(index)) smallest = smallest & u;
  }
  return smallest;
}

}  // namespace

SubsetFamily open_sets_containing(const Topology& t, std::string_view label) {
  const std::size_t index = require_index(t.ground(), label);
  std::vector<Subset> out;
  for (Subset u : t.opens()) {
    if (u.contains(index)) out.push_back(u);
  }
  return SubsetFamily(std::move(out));
}

SubsetFamily neighborhood_system(const Topology& t, std::string_view label) {
  const std::size_t index = require_index(t.ground(), label);
  const Subset core = minimal_open_neighborhood(t, index);
  const Subset::Bits free = (t.ground().full() - core).bits();

  // Walk every submask of the free bits; each one extends the core.
  std::vector<Subset> out;
  Subset::Bits extra = 0;
  do {
    out.push_back(core | Subset(extra));
    extra = (extra - free) & free;
  } while (extra != 0);
  return SubsetFamily(std::move(out));
}

SubsetFamily resolve_issue(const Topology& t, std::string_view label) {
  const auto index = t.ground().index_of(label);
  if (!index) return SubsetFamily{};
  // Every open is a member of N(x) exactly when it contains the minimal open
  // neighborhood, i.e. when it contains x.
  const Subset core = minimal_open_neighborhood(t, *index);
  std::vector<Subset> out;
  for (Subset u : t.opens()) {
    if (!core.subset_of(u)) out.push_back(u);
  }
  return SubsetFamily(std::move(out));
}

ResolutionOutcome classify_question(const Topology& t, std::string_view label) {
  ResolutionOutcome outcome;
  if (!t.ground().contains(label)) {
    outcome.kind = QuestionKind::kTypeIII;
    return outcome;
  }
  outcome.result = resolve_issue(t, label);
  const Subset carrier = outcome.result.union_of_members();
  if (carrier.is_empty()) {
    outcome.kind = QuestionKind::kTypeII;
  } else {
    outcome.kind = QuestionKind::kTypeI;
    outcome.carrier = carrier;
  }
  return outcome;
}

Topology subspace_topology(const Topology& t, Subset a) {
  if (!t.ground().fits(a)) {
    throw Error(ErrorCode::kOutOfGround, "subspace carrier lies outside the ground set");
  }
  std::vector<Subset> traces;
  traces.reserve(t.family().size());
  for (Subset u : t.opens()) traces.push_back(pack(u & a, a));
  return Topology::trusted(t.ground().restrict(a), SubsetFamily(std::move(traces)));
}

std::vector<ResolutionStep> resolve_sequence(const Topology& t,
                                             std::span<const std::string> order) {
  std::unordered_set<std::string_view> seen;
  for (const auto& label : order) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "point '" + label + "' appears twice in the resolution order");
    }
  }

  std::vector<ResolutionStep> steps;
  Topology current = t;
  for (const auto& label : order) {
    ResolutionOutcome outcome = classify_question(current, label);
    ResolutionStep step{label, current.ground(), outcome.kind, outcome.carrier,
                        std::move(outcome.result)};
    steps.push_back(std::move(step));
    if (outcome.kind != QuestionKind::kTypeI) break;
    current = subspace_topology(current, *outcome.carrier);
  }
  return steps;
}

}  // namespace qtopo
