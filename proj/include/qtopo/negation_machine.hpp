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

// Negation questions and the machine / anti-machine pairing.
//
// A machine asks a question T; its anti-machine asks the negation
// {X - U : U in T}. The two share exactly the clopen sets of T.

#ifndef QTOPO_NEGATION_MACHINE_HPP_
#define QTOPO_NEGATION_MACHINE_HPP_

#include <span>
#include <vector>

#include "qtopo/core_sets.hpp"

namespace qtopo {

Topology negation_question(const Topology& t);

/// Opens whose complement is also open.
SubsetFamily clopen_sets(const Topology& t);

/// True iff the question equals its negation.
bool machines_agree(const Topology& t);

/// φ present, closed under complement and under pairwise union.
/// Throws kOutOfGround when a member has bits outside `ground`.
bool is_sigma_field(const SubsetFamily& family, const GroundSet& ground);

struct MachinePair {
  Topology question;
  Topology negation;
  SubsetFamily shared;
  bool self_dual = false;
};

MachinePair make_machine_pair(const Topology& t);

struct AtomicMachine {
  Topology question;
  Topology negation;
  bool self_dual = false;
};

/// Pairs every topology with its negation. Throws kLabelMismatch when the
/// topologies do not share one ground set.
std::vector<AtomicMachine> atomic_machine_census(std::span<const Topology> topologies);

}  // namespace qtopo

#endif  // QTOPO_NEGATION_MACHINE_HPP_
