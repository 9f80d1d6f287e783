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

#include "qtopo/core_sets.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace qtopo {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateLabel: return "duplicate label";
    case ErrorCode::kEmptyLabel: return "empty label";
    case ErrorCode::kTooManyElements: return "too many elements";
    case ErrorCode::kUnknownLabel: return "unknown label";
    case ErrorCode::kOutOfGround: return "subset outside ground set";
    case ErrorCode::kAxiomViolation: return "axiom violation";
    case ErrorCode::kSizeLimit: return "size limit exceeded";
    case ErrorCode::kLabelMismatch: return "label mismatch";
    case ErrorCode::kMalformedDocument: return "malformed document";
  }
  return "unknown error";
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kC1: return "C1";
    case Axiom::kC2: return "C2";
    case Axiom::kC3: return "C3";
  }
  return "?";
}

Subset pack(Subset s, Subset carrier) {
  Subset::Bits out = 0;
  Subset::Bits bit = 1;
  for (Subset::Bits rest = carrier.bits(); rest != 0; rest &= rest - 1) {
    const Subset::Bits low = rest & (~rest + 1);
    if ((s.bits() & low) != 0) out |= bit;
    bit <<= 1;
  }
  return Subset(out);
}

Subset unpack(Subset packed, Subset carrier) {
  Subset::Bits out = 0;
  Subset::Bits bit = 1;
  for (Subset::Bits rest = carrier.bits(); rest != 0; rest &= rest - 1) {
    const Subset::Bits low = rest & (~rest + 1);
    if ((packed.bits() & bit) != 0) out |= low;
    bit <<= 1;
  }
  return Subset(out);
}

// --- GroundSet -------------------------------------------------------------

GroundSet make_ground_set(std::vector<std::string> labels) {
  if (labels.size() > kMaxGroundSize) {
    throw Error(ErrorCode::kTooManyElements,
                "ground set has " + std::to_string(labels.size()) +
                    " elements; at most " + std::to_string(kMaxGroundSize) +
                    " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw Error(ErrorCode::kEmptyLabel, "ground set labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel, "duplicate label '" + label + "'");
    }
  }
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Subset GroundSet::singleton(std::string_view label) const {
  const auto index = index_of(label);
  if (!index) {
    throw Error(ErrorCode::kUnknownLabel,
                "unknown label '" + std::string(label) + "'");
  }
  return Subset::singleton(*index);
}

Subset GroundSet::subset_of(std::span<const std::string> labels) const {
  Subset out;
  for (const auto& label : labels) out = out | singleton(label);
  return out;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (s.contains(i)) out.push_back(labels_[i]);
  }
  return out;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : labels_of(s)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  return out + "}";
}

GroundSet GroundSet::restrict(Subset a) const {
  return GroundSet(labels_of(a));
}

// --- SubsetFamily ----------------------------------------------------------

SubsetFamily::SubsetFamily(std::vector<Subset> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SubsetFamily::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool SubsetFamily::includes(const SubsetFamily& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

Subset SubsetFamily::union_of_members() const {
  Subset out;
  for (Subset s : members_) out = out | s;
  return out;
}

SubsetFamily family_difference(const SubsetFamily& a, const SubsetFamily& b) {
  std::vector<Subset> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SubsetFamily(std::move(out));
}

SubsetFamily family_intersection(const SubsetFamily& a, const SubsetFamily& b) {
  std::vector<Subset> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SubsetFamily(std::move(out));
}

// --- Topology --------------------------------------------------------------

TopologyCheck check_topology(const SubsetFamily& family, const GroundSet& ground) {
  for (Subset s : family) {
    if (!ground.fits(s)) {
      throw Error(ErrorCode::kOutOfGround,
                  "family member has elements outside the ground set");
    }
  }

  TopologyCheck report;
  const Subset whole = ground.full();
  if (!family.contains(Subset{})) {
    report.violated = Axiom::kC1;
    report.missing = Subset{};
    report.message = "C1 violated: the empty set is not in the family";
    return report;
  }
  if (!family.contains(whole)) {
    report.violated = Axiom::kC1;
    report.missing = whole;
    report.message = "C1 violated: the whole set " + ground.format(whole) +
                     " is not in the family";
    return report;
  }

  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Subset joined = members[i] | members[j];
      if (!family.contains(joined)) {
        report.violated = Axiom::kC2;
        report.witness = {members[i], members[j]};
        report.missing = joined;
        report.message = "C2 violated: " + ground.format(members[i]) + " union " +
                         ground.format(members[j]) + " = " + ground.format(joined) +
                         " is not in the family";
        return report;
      }
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Subset met = members[i] & members[j];
      if (!family.contains(met)) {
        report.violated = Axiom::kC3;
        report.witness = {members[i], members[j]};
        report.missing = met;
        report.message = "C3 violated: " + ground.format(members[i]) +
                         " intersect " + ground.format(members[j]) + " = " +
                         ground.format(met) + " is not in the family";
        return report;
      }
    }
  }
  return report;
}

Topology Topology::discrete(GroundSet ground) {
  std::vector<Subset> all;
  const Subset::Bits limit = ground.full().bits();
  all.reserve(static_cast<std::size_t>(limit) + 1);
  for (Subset::Bits bits = 0;; ++bits) {
    all.emplace_back(bits);
    if (bits == limit) break;
  }
  return Topology(std::move(ground), SubsetFamily(std::move(all)));
}

Topology Topology::indiscrete(GroundSet ground) {
  SubsetFamily family{Subset{}, ground.full()};
  return Topology(std::move(ground), std::move(family));
}

Topology Topology::trusted(GroundSet ground, SubsetFamily family) {
  assert(is_topology(family, ground));
  return Topology(std::move(ground), std::move(family));
}

Topology make_topology(SubsetFamily family, GroundSet ground) {
  const TopologyCheck report = check_topology(family, ground);
  if (!report.valid()) throw Error(ErrorCode::kAxiomViolation, report.message);
  return Topology::trusted(std::move(ground), std::move(family));
}

namespace {

// Adds to `seen`/`members` every combination `op(a, b)` reachable from the
// current members, until nothing new appears.
template <typename Op>
void close_under(std::vector<Subset>& members, std::vector<bool>& seen, Op op) {
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (std::size_t other = 0; other < next; ++other) {
      const Subset combined = op(members[next], members[other]);
      if (!seen[combined.bits()]) {
        seen[combined.bits()] = true;
        members.push_back(combined);
      }
    }
  }
}

}  // namespace

Topology generated_topology(const SubsetFamily& family, const GroundSet& ground) {
  std::vector<bool> seen(static_cast<std::size_t>(ground.full().bits()) + 1, false);
  std::vector<Subset> members;
  auto add = [&](Subset s) {
    if (!ground.fits(s)) {
      throw Error(ErrorCode::kOutOfGround,
                  "family member has elements outside the ground set");
    }
    if (!seen[s.bits()]) {
      seen[s.bits()] = true;
      members.push_back(s);
    }
  };
  add(Subset{});
  add(ground.full());
  for (Subset s : family) add(s);

  // Finite intersections give a basis; unions of a basis closed under
  // intersection are again closed under intersection.
  close_under(members, seen, [](Subset a, Subset b) { return a & b; });
  close_under(members, seen, [](Subset a, Subset b) { return a | b; });
  return Topology::trusted(ground, SubsetFamily(std::move(members)));
}

}  // namespace qtopo
