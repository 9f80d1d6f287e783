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

// Exhaustive enumeration of the question space on small ground sets, and the
// searches built on top of it (definite questions, parent questions).
//
// Topologies are produced by a depth-first search over candidate opens in
// ascending bit order. Each node holds a topology and the set of candidates
// already rejected; including a candidate replaces the topology with the
// smallest one containing it, and the branch dies if that closure brings back
// a rejected candidate. Every topology is reached along exactly one path, and
// trying "include" before "exclude" emits families in ascending canonical
// order. With several workers the search is split by the first non-trivial
// open and the partial streams are concatenated in that order, so the output
// does not depend on the worker count.

#ifndef QTOPO_ENUMERATION_HPP_
#define QTOPO_ENUMERATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtopo/core_sets.hpp"

namespace qtopo {

/// Largest ground set the enumeration operations accept.
inline constexpr std::size_t kMaxEnumerationSize = 5;

struct EnumerationOptions {
  unsigned workers = 1;
};

/// Receives topologies in stream order; return false to stop early.
using TopologyVisitor = std::function<bool(const Topology&)>;

void enumerate_topologies(const GroundSet& ground, const TopologyVisitor& visit,
                          EnumerationOptions options = {});
std::vector<Topology> all_topologies(const GroundSet& ground,
                                     EnumerationOptions options = {});

/// Number of topologies on an n-point set, without building them.
std::uint64_t count_topologies(std::size_t n, EnumerationOptions options = {});

struct PointCensus {
  std::string point;
  std::uint64_t type_one = 0;
  std::uint64_t type_two = 0;
};

struct EnumerationReport {
  std::size_t n = 0;
  std::uint64_t count = 0;
  std::vector<PointCensus> census;
  std::uint64_t self_dual_count = 0;
};

EnumerationReport enumeration_report(const GroundSet& ground,
                                     EnumerationOptions options = {});

/// Topologies in which resolving `label` leaves {φ}.
void find_definite_questions(const GroundSet& ground, std::string_view label,
                             const TopologyVisitor& visit,
                             EnumerationOptions options = {});
std::vector<Topology> definite_questions(const GroundSet& ground, std::string_view label,
                                         EnumerationOptions options = {});

/// Assertions removed by resolving `label` once: |X| - |carrier| for type I,
/// |X| for type II, 0 for type III.
std::size_t elimination_efficiency(const Topology& t, std::string_view label);

/// Re-embeds `s` from `from` into `to` by label identity. Throws
/// kLabelMismatch if a label of `from` is missing in `to`.
Subset embed(Subset s, const GroundSet& from, const GroundSet& to);

/// Topologies on `superset` containing every open of `t` (after embedding),
/// at most `limit` of them.
void parent_questions(const Topology& t, const GroundSet& superset,
                      std::optional<std::size_t> limit, const TopologyVisitor& visit,
                      EnumerationOptions options = {});
std::vector<Topology> parent_questions(const Topology& t, const GroundSet& superset,
                                       std::optional<std::size_t> limit = std::nullopt,
                                       EnumerationOptions options = {});

}  // namespace qtopo

#endif  // QTOPO_ENUMERATION_HPP_
