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

// JSON wire format for questions and for every result the CLI prints.
//
// A question document looks like
//
//   {"elements":["m","s"],"opens":[[],["m"],["s"],["m","s"]]}
//
// φ is the empty list and X the full label list. Output is always compact,
// keys appear in a fixed order, opens are sorted ascending by bit value and
// labels inside a subset follow element order, so equal values serialize to
// identical bytes.

#ifndef QTOPO_WIRE_FORMAT_HPP_
#define QTOPO_WIRE_FORMAT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "qtopo/core_sets.hpp"
#include "qtopo/enumeration.hpp"
#include "qtopo/negation_machine.hpp"
#include "qtopo/question_calculus.hpp"

namespace qtopo {

struct QuestionDocument {
  GroundSet ground;
  SubsetFamily family;
};

/// Parses and checks labels; the topology axioms are not enforced here.
/// Throws Error (kMalformedDocument, kDuplicateLabel, kEmptyLabel,
/// kTooManyElements, kUnknownLabel) with a location in the message.
QuestionDocument parse_question(std::string_view text);

std::string serialize_question(const GroundSet& ground, const SubsetFamily& family);
inline std::string serialize_question(const Topology& t) {
  return serialize_question(t.ground(), t.family());
}

std::string serialize_check(const TopologyCheck& check, const GroundSet& ground);
std::string serialize_outcome(const ResolutionOutcome& outcome, const GroundSet& ground);
std::string serialize_sequence(const std::vector<ResolutionStep>& steps);
std::string serialize_agreement(const Topology& t);
std::string serialize_sigma(const SubsetFamily& family, const GroundSet& ground);
std::string serialize_efficiency(const Topology& t, std::string_view point);
std::string serialize_count(std::size_t n, std::uint64_t count);
std::string serialize_report(const EnumerationReport& report);

}  // namespace qtopo

#endif  // QTOPO_WIRE_FORMAT_HPP_
