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

// Finite ground sets, bit-vector subsets, canonical subset families and
// topology validation. Everything here is an immutable value type.

#ifndef QTOPO_CORE_SETS_HPP_
#define QTOPO_CORE_SETS_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtopo/error.hpp"

namespace qtopo {

/// Widest ground set any operation accepts.
inline constexpr std::size_t kMaxGroundSize = 16;

/// A subset of a ground set as a bit-vector; bit i is the i-th label.
///
/// A Subset does not carry its ground set. Families and topologies own the
/// ground, and every operation that needs the width takes it explicitly.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset singleton(std::size_t index) {
    return Subset(Bits{1} << index);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t index) const {
    return ((bits_ >> index) & 1U) != 0;
  }
  constexpr bool subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  // Set difference a - b.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  Bits bits_ = 0;
};

/// Compresses the bits of `s` that lie in `carrier` into the low bits, in
/// order. Used to move a subset onto a subspace's own ground set.
Subset pack(Subset s, Subset carrier);

/// Inverse of pack for subsets of `carrier`.
Subset unpack(Subset packed, Subset carrier);

/// Ordered, named finite set of irreducible assertions.
class GroundSet {
 public:
  /// The empty ground set.
  GroundSet() = default;

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }

  std::optional<std::size_t> index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return index_of(label).has_value(); }

  /// The whole set X.
  Subset full() const {
    return Subset(size() == 0 ? 0 : (~Subset::Bits{0} >> (32 - size())));
  }
  /// True when no bit of `s` lies beyond this ground set's width.
  bool fits(Subset s) const { return s.subset_of(full()); }

  /// Subset made of the named labels. Throws kUnknownLabel.
  Subset subset_of(std::span<const std::string> labels) const;
  Subset singleton(std::string_view label) const;

  /// Labels of `s` in element order.
  std::vector<std::string> labels_of(Subset s) const;
  /// Human-readable "{a,b}" form.
  std::string format(Subset s) const;

  /// Ground set made of the elements of `a`, relative order preserved.
  GroundSet restrict(Subset a) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  friend GroundSet make_ground_set(std::vector<std::string> labels);
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  std::vector<std::string> labels_;
};

/// Builds a ground set; labels must be distinct, non-empty, at most 16.
GroundSet make_ground_set(std::vector<std::string> labels);

/// Duplicate-free collection of subsets, kept ascending by bit value.
///
/// Because the order is canonical, two families are equal iff their member
/// lists are identical, and the defaulted ordering compares member lists
/// lexicographically.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  explicit SubsetFamily(std::vector<Subset> members);
  SubsetFamily(std::initializer_list<Subset> members)
      : SubsetFamily(std::vector<Subset>(members)) {}

  std::span<const Subset> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Subset s) const;
  /// True when every member of `other` is a member of this family.
  bool includes(const SubsetFamily& other) const;
  /// Union of all members (φ for the empty family).
  Subset union_of_members() const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
  friend auto operator<=>(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  std::vector<Subset> members_;
};

SubsetFamily family_difference(const SubsetFamily& a, const SubsetFamily& b);
SubsetFamily family_intersection(const SubsetFamily& a, const SubsetFamily& b);

enum class Axiom { kC1, kC2, kC3 };

const char* to_string(Axiom axiom);

/// Outcome of validating a family against the topology axioms.
///
/// On failure `witness` holds the offending pair for C2/C3 (empty for C1)
/// and `missing` the set that should have been present.
struct TopologyCheck {
  std::optional<Axiom> violated;
  std::vector<Subset> witness;
  Subset missing;
  std::string message;

  bool valid() const { return !violated.has_value(); }
  explicit operator bool() const { return valid(); }
};

/// Checks C1 (φ, X present), then C2 over all pairwise unions, then C3 over
/// all pairwise intersections, reporting the first violation found.
/// Throws kOutOfGround when a member has bits outside `ground`.
TopologyCheck check_topology(const SubsetFamily& family, const GroundSet& ground);

inline bool is_topology(const SubsetFamily& family, const GroundSet& ground) {
  return check_topology(family, ground).valid();
}

/// A family satisfying C1-C3 over its ground set; a question.
class Topology {
 public:
  const GroundSet& ground() const { return ground_; }
  const SubsetFamily& family() const { return family_; }
  std::span<const Subset> opens() const { return family_.members(); }
  bool is_open(Subset s) const { return family_.contains(s); }

  static Topology discrete(GroundSet ground);
  static Topology indiscrete(GroundSet ground);

  /// Wraps a family the caller already knows to be a topology. Asserted in
  /// debug builds only; use make_topology for untrusted input.
  static Topology trusted(GroundSet ground, SubsetFamily family);

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  Topology(GroundSet ground, SubsetFamily family)
      : ground_(std::move(ground)), family_(std::move(family)) {}

  GroundSet ground_;
  SubsetFamily family_;
};

/// Validating constructor; throws kAxiomViolation carrying the report text.
Topology make_topology(SubsetFamily family, GroundSet ground);

/// X - s.
inline Subset complement(Subset s, const GroundSet& ground) {
  return ground.full() - s;
}

/// Smallest topology containing every member of `family`.
Topology generated_topology(const SubsetFamily& family, const GroundSet& ground);

}  // namespace qtopo

#endif  // QTOPO_CORE_SETS_HPP_
