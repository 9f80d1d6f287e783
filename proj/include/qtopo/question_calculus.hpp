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

// Neighborhood systems and issue resolution.
//
// Resolving the issue of a point x in a question T removes the whole
// neighborhood system N(x) from T. What is left tells what kind of question
// T was with respect to x:
//
//   type I   - the remainder is a topology on a smaller carrier (a sub-question)
//   type II  - the remainder is exactly {φ} (a definite answer)
//   type III - the remainder is empty (x is not part of the space at all)

#ifndef QTOPO_QUESTION_CALCULUS_HPP_
#define QTOPO_QUESTION_CALCULUS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtopo/core_sets.hpp"

namespace qtopo {

enum class QuestionKind { kTypeI, kTypeII, kTypeIII };

/// "type-1", "type-2" or "type-3".
const char* to_string(QuestionKind kind);

struct ResolutionOutcome {
  QuestionKind kind = QuestionKind::kTypeIII;
  /// T - N(x), over the ground set of the resolved topology.
  SubsetFamily result;
  /// Union of the opens avoiding x; set for type I only.
  std::optional<Subset> carrier;
};

/// Open sets that contain `label`. Throws kUnknownLabel.
SubsetFamily open_sets_containing(const Topology& t, std::string_view label);

/// Every superset of an open set containing `label` (neighborhoods need not
/// be open). Throws kUnknownLabel.
SubsetFamily neighborhood_system(const Topology& t, std::string_view label);

/// T - N(x). Empty when `label` is not an element of the ground set.
SubsetFamily resolve_issue(const Topology& t, std::string_view label);

ResolutionOutcome classify_question(const Topology& t, std::string_view label);

/// {A ∩ U : U ∈ T} over the ground set restricted to the elements of `a`.
/// Throws kOutOfGround if `a` is not a subset of the ground.
Topology subspace_topology(const Topology& t, Subset a);

/// One step of an elimination chain. `ground` is the space the step ran
/// in; `carrier` and `result` are expressed over it.
struct ResolutionStep {
  std::string point;
  GroundSet ground;
  QuestionKind kind = QuestionKind::kTypeIII;
  std::optional<Subset> carrier;
  SubsetFamily result;
};

/// Resolves the given points in order, descending into the sub-question after
/// every type I step. Stops after the first type II or type III step.
std::vector<ResolutionStep> resolve_sequence(const Topology& t,
                                             std::span<const std::string> order);

}  // namespace qtopo

#endif  // QTOPO_QUESTION_CALCULUS_HPP_
