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

#include "qtopo/negation_machine.hpp"

namespace qtopo {

Topology negation_question(const Topology& t) {
  std::vector<Subset> closed;
  closed.reserve(t.family().size());
  for (Subset u : t.opens()) closed.push_back(complement(u, t.ground()));
  // Complementation swaps unions and intersections, so C1-C3 carry over.
  // A failure here is a bug, not bad input.
  return make_topology(SubsetFamily(std::move(closed)), t.ground());
}

SubsetFamily clopen_sets(const Topology& t) {
  std::vector<Subset> out;
  for (Subset u : t.opens()) {
    if (t.is_open(complement(u, t.ground()))) out.push_back(u);
  }
  return SubsetFamily(std::move(out));
}

bool machines_agree(const Topology& t) {
  return negation_question(t).family() == t.family();
}

bool is_sigma_field(const SubsetFamily& family, const GroundSet& ground) {
  for (Subset s : family) {
    if (!ground.fits(s)) {
      throw Error(ErrorCode::kOutOfGround,
                  "family member has elements outside the ground set");
    }
  }
  if (!family.contains(Subset{})) return false;
  for (Subset s : family) {
    if (!family.contains(complement(s, ground))) return false;
  }
  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!family.contains(members[i] | members[j])) return false;
    }
  }
  return true;
}

MachinePair make_machine_pair(const Topology& t) {
  Topology negation = negation_question(t);
  SubsetFamily shared = family_intersection(t.family(), negation.family());
  const bool self_dual = negation.family() == t.family();
  return MachinePair{t, std::move(negation), std::move(shared), self_dual};
}

std::vector<AtomicMachine> atomic_machine_census(std::span<const Topology> topologies) {
  std::vector<AtomicMachine> out;
  out.reserve(topologies.size());
  for (const Topology& t : topologies) {
    if (t.ground() != topologies.front().ground()) {
      throw Error(ErrorCode::kLabelMismatch,
                  "atomic machines must all ask questions over one ground set");
    }
    Topology negation = negation_question(t);
    const bool self_dual = negation == t;
    out.push_back(AtomicMachine{t, std::move(negation), self_dual});
  }
  return out;
}

}  // namespace qtopo
