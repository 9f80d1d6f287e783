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

#include "qtopo/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "qtopo/negation_machine.hpp"
#include "qtopo/question_calculus.hpp"

namespace qtopo {
namespace {

// A family over at most 2^5 subsets: bit s is set iff subset s is a member.
using FamilyMask = std::uint64_t;

constexpr FamilyMask bit_of(Subset::Bits s) { return FamilyMask{1} << s; }

void require_enumerable(std::size_t n) {
  if (n > kMaxEnumerationSize) {
    throw Error(ErrorCode::kSizeLimit,
                "enumeration supports ground sets of at most " +
                    std::to_string(kMaxEnumerationSize) + " elements, got " +
                    std::to_string(n));
  }
}

// Smallest topology containing the topology `family` and `extra`:
// {U | (V & extra) : U, V in family}.
FamilyMask extend(FamilyMask family, Subset::Bits extra) {
  Subset::Bits members[64];
  std::size_t count = 0;
  for (FamilyMask rest = family; rest != 0; rest &= rest - 1) {
    members[count++] = static_cast<Subset::Bits>(std::countr_zero(rest));
  }
  FamilyMask out = family;
  for (std::size_t v = 0; v < count; ++v) {
    const Subset::Bits trace = members[v] & extra;
    for (std::size_t u = 0; u < count; ++u) out |= bit_of(members[u] | trace);
  }
  return out;
}

class Search {
 public:
  explicit Search(std::size_t n) : full_(n == 0 ? 0 : (Subset::Bits{1} << n) - 1) {}

  Subset::Bits full() const { return full_; }

  // Subtree roots, in stream order: one per smallest non-trivial open, then
  // the indiscrete topology on its own.
  struct Root {
    FamilyMask family;
    FamilyMask excluded;
    Subset::Bits next;
  };

  std::vector<Root> roots() const {
    std::vector<Root> out;
    const FamilyMask base = bit_of(0) | bit_of(full_);
    FamilyMask excluded = 0;
    for (Subset::Bits first = 1; first < full_; ++first) {
      const FamilyMask family = extend(base, first);
      if ((family & excluded) == 0) out.push_back({family, excluded, first + 1});
      excluded |= bit_of(first);
    }
    out.push_back({base, excluded, full_});
    return out;
  }

  // Depth-first walk below `root`; `emit` returns false to stop.
  template <typename Emit>
  bool walk(const Root& root, Emit& emit) const {
    return walk(root.family, root.excluded, root.next, emit);
  }

 private:
  template <typename Emit>
  bool walk(FamilyMask family, FamilyMask excluded, Subset::Bits next, Emit& emit) const {
    while (next < full_ && (family & bit_of(next)) != 0) ++next;
    if (next >= full_) return emit(family);

    const FamilyMask grown = extend(family, next);
    if ((grown & excluded) == 0) {
      if (!walk(grown, excluded, next + 1, emit)) return false;
    }
    return walk(family, excluded | bit_of(next), next + 1, emit);
  }

  Subset::Bits full_;
};

Topology to_topology(FamilyMask family, const GroundSet& ground) {
  std::vector<Subset> members;
  members.reserve(static_cast<std::size_t>(std::popcount(family)));
  for (FamilyMask rest = family; rest != 0; rest &= rest - 1) {
    members.emplace_back(static_cast<Subset::Bits>(std::countr_zero(rest)));
  }
  return Topology::trusted(ground, SubsetFamily(std::move(members)));
}

// Runs the search and hands every family to `emit` in stream order.
template <typename Emit>
void run_search(std::size_t n, EnumerationOptions options, Emit&& emit) {
  require_enumerable(n);
  const Search search(n);
  const auto roots = search.roots();

  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1) {
    for (const auto& root : roots) {
      if (!search.walk(root, emit)) return;
    }
    return;
  }

  std::vector<std::vector<FamilyMask>> partial(roots.size());
  std::atomic<std::size_t> next_root{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next_root++; i < roots.size(); i = next_root++) {
          auto collect = [&out = partial[i]](FamilyMask f) {
            out.push_back(f);
            return true;
          };
          search.walk(roots[i], collect);
        }
      });
    }
  }
  for (const auto& chunk : partial) {
    for (FamilyMask family : chunk) {
      if (!emit(family)) return;
    }
  }
}

}  // namespace

void enumerate_topologies(const GroundSet& ground, const TopologyVisitor& visit,
                          EnumerationOptions options) {
  run_search(ground.size(), options,
             [&](FamilyMask family) { return visit(to_topology(family, ground)); });
}

std::vector<Topology> all_topologies(const GroundSet& ground, EnumerationOptions options) {
  std::vector<Topology> out;
  enumerate_topologies(
      ground,
      [&](const Topology& t) {
        out.push_back(t);
        return true;
      },
      options);
  return out;
}

std::uint64_t count_topologies(std::size_t n, EnumerationOptions options) {
  std::uint64_t count = 0;
  run_search(n, options, [&](FamilyMask) {
    ++count;
    return true;
  });
  return count;
}

EnumerationReport enumeration_report(const GroundSet& ground, EnumerationOptions options) {
  EnumerationReport report;
  report.n = ground.size();
  for (const auto& label : ground.labels()) report.census.push_back({label, 0, 0});
  enumerate_topologies(
      ground,
      [&](const Topology& t) {
        ++report.count;
        for (auto& tally : report.census) {
          switch (classify_question(t, tally.point).kind) {
            case QuestionKind::kTypeI: ++tally.type_one; break;
            case QuestionKind::kTypeII: ++tally.type_two; break;
            case QuestionKind::kTypeIII: break;
          }
        }
        if (machines_agree(t)) ++report.self_dual_count;
        return true;
      },
      options);
  return report;
}

void find_definite_questions(const GroundSet& ground, std::string_view label,
                             const TopologyVisitor& visit, EnumerationOptions options) {
  require_enumerable(ground.size());
  const Subset point = ground.singleton(label);
  enumerate_topologies(
      ground,
      [&](const Topology& t) {
        // Definite iff every non-empty open contains the point.
        const bool definite =
            std::all_of(t.opens().begin(), t.opens().end(),
                        [&](Subset u) { return u.is_empty() || point.subset_of(u); });
        return definite ? visit(t) : true;
      },
      options);
}

std::vector<Topology> definite_questions(const GroundSet& ground, std::string_view label,
                                         EnumerationOptions options) {
  std::vector<Topology> out;
  find_definite_questions(
      ground, label,
      [&](const Topology& t) {
        out.push_back(t);
        return true;
      },
      options);
  return out;
}

std::size_t elimination_efficiency(const Topology& t, std::string_view label) {
  const ResolutionOutcome outcome = classify_question(t, label);
  switch (outcome.kind) {
    case QuestionKind::kTypeI: return t.ground().size() - outcome.carrier->size();
    case QuestionKind::kTypeII: return t.ground().size();
    case QuestionKind::kTypeIII: return 0;
  }
  return 0;
}

Subset embed(Subset s, const GroundSet& from, const GroundSet& to) {
  Subset out;
  for (std::size_t i = 0; i < from.size(); ++i) {
    const auto target = to.index_of(from.label(i));
    if (!target) {
      throw Error(ErrorCode::kLabelMismatch,
                  "label '" + from.label(i) + "' is not part of the superset");
    }
    if (s.contains(i)) out = out | Subset::singleton(*target);
  }
  return out;
}

void parent_questions(const Topology& t, const GroundSet& superset,
                      std::optional<std::size_t> limit, const TopologyVisitor& visit,
                      EnumerationOptions options) {
  require_enumerable(superset.size());
  std::vector<Subset> embedded;
  for (Subset u : t.opens()) embedded.push_back(embed(u, t.ground(), superset));
  const SubsetFamily required(std::move(embedded));

  std::size_t emitted = 0;
  if (limit && *limit == 0) return;
  enumerate_topologies(
      superset,
      [&](const Topology& candidate) {
        if (!candidate.family().includes(required)) return true;
        if (!visit(candidate)) return false;
        ++emitted;
        return !limit || emitted < *limit;
      },
      options);
}

std::vector<Topology> parent_questions(const Topology& t, const GroundSet& superset,
                                       std::optional<std::size_t> limit,
                                       EnumerationOptions options) {
  std::vector<Topology> out;
  parent_questions(
      t, superset, limit,
      [&](const Topology& candidate) {
        out.push_back(candidate);
        return true;
      },
      options);
  return out;
}

}  // namespace qtopo
