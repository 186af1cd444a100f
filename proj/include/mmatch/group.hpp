// Copyright 2026 The Authors.
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

#ifndef MMATCH_GROUP_HPP_
#define MMATCH_GROUP_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmatch {

// A natural number or infinity; used for element orders and p(G).
class ExtendedNat {
 public:
  static ExtendedNat infinite() { return ExtendedNat(); }
  static ExtendedNat finite(std::int64_t value) { return ExtendedNat(value); }

  bool is_infinite() const { return infinite_; }
  std::int64_t value() const;  // Finite values only.

  // True iff this value is strictly greater than n (always true for infinity).
  bool exceeds(std::int64_t n) const { return infinite_ || value_ > n; }

  std::string to_string() const;
  bool operator==(const ExtendedNat&) const = default;

 private:
  ExtendedNat() = default;
  explicit ExtendedNat(std::int64_t v) : infinite_(false), value_(v) {}

  bool infinite_ = true;
  std::int64_t value_ = 0;
};

inline constexpr std::size_t kMaxFactors = 3;
inline constexpr std::int64_t kMaxProductOrder = 64;
inline constexpr std::int64_t kMaxIndexSpace = std::int64_t{1} << 20;

// Canonical element value: one coordinate for cyclic and integer-window
// groups, one per factor for products. Coordinates of finite factors lie in
// [0, n_i); equality is coordinate equality.
class GroupElem {
 public:
  GroupElem() = default;
  explicit GroupElem(std::int64_t value) : coords_{value, 0, 0}, dim_(1) {}
  static GroupElem of(std::initializer_list<std::int64_t> coords);
  static GroupElem from_coords(std::span<const std::int64_t> coords);

  std::span<const std::int64_t> coords() const { return {coords_.data(), dim_}; }
  std::size_t dim() const { return dim_; }
  std::int64_t value() const { return coords_[0]; }  // First coordinate.

  std::string to_string() const;

  friend bool operator==(const GroupElem& a, const GroupElem& b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const GroupElem& a,
                                          const GroupElem& b);

 private:
  std::array<std::int64_t, kMaxFactors> coords_{};
  std::size_t dim_ = 1;
};

enum class GroupKind { kCyclic, kProduct, kIntegerWindow };

// Description of an abelian group: Z/nZ, a product of at most three cyclic
// factors, or a bounded window [lo, hi] of Z with explicit overflow.
//
// Every supported group is "indexable": elements map bijectively onto
// [0, index_space()) in canonical (lexicographic) order. Sets of elements are
// bitsets over that index space.
class GroupSpec {
 public:
  static GroupSpec cyclic(std::int64_t n);
  static GroupSpec product(std::span<const std::int64_t> factors);
  static GroupSpec product(std::initializer_list<std::int64_t> factors) {
    return product(std::span<const std::int64_t>(factors.begin(), factors.size()));
  }
  static GroupSpec integer_window(std::int64_t lo, std::int64_t hi);

  // Accepts the textual forms "cyclic:7", "product:2x3", "zwindow:-50:50".
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  GroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != GroupKind::kIntegerWindow; }
  bool is_cyclic() const { return kind_ == GroupKind::kCyclic; }
  std::size_t dim() const { return dim_; }
  std::span<const std::int64_t> factors() const { return {factors_.data(), dim_}; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

  // |G| for finite groups; throws kUnsupported for integer windows.
  std::int64_t order() const;
  std::int64_t index_space() const { return space_; }

  bool contains(const GroupElem& e) const;
  // Throws kElementOutOfGroup when e is not a canonical element of this group.
  void require(const GroupElem& e) const;

  std::int64_t index_of(const GroupElem& e) const;
  GroupElem element_at(std::int64_t index) const;

  GroupElem zero() const;
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const;
  // nullopt exactly when the true integer sum leaves the window.
  std::optional<GroupElem> try_add(const GroupElem& a, const GroupElem& b) const;
  std::optional<GroupElem> try_neg(const GroupElem& a) const;

  // Index-level arithmetic; nullopt on window overflow.
  std::optional<std::int64_t> add_index(std::int64_t i, std::int64_t j) const;
  std::optional<std::int64_t> neg_index(std::int64_t i) const;
  std::int64_t zero_index() const { return kind_ == GroupKind::kIntegerWindow ? -lo_ : 0; }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b);

 private:
  GroupSpec() = default;
  void finish();

  GroupKind kind_ = GroupKind::kCyclic;
  std::array<std::int64_t, kMaxFactors> factors_{};
  std::size_t dim_ = 1;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::int64_t space_ = 0;
};

// A finite set of elements of one group, stored as a bitset over the group's
// index space. Iteration order is canonical element order.
class ElementSet {
 public:
  explicit ElementSet(const GroupSpec& group);
  ElementSet(const GroupSpec& group, std::span<const GroupElem> elements);
  ElementSet(const GroupSpec& group, std::initializer_list<std::int64_t> values);

  const GroupSpec& group() const { return group_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(const GroupElem& e) const;
  bool contains_index(std::int64_t index) const {
    return index >= 0 && index < group_.index_space() &&
           ((words_[index >> 6] >> (index & 63)) & 1u) != 0;
  }
  void insert(const GroupElem& e);
  void insert_index(std::int64_t index);
  void erase(const GroupElem& e);

  std::vector<GroupElem> elements() const;
  std::vector<std::int64_t> indices() const;
  GroupElem min() const;
  GroupElem max() const;

  bool is_subset_of(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;
  // t + S; throws kWindowOverflow if any translate leaves the window.
  ElementSet translate(const GroupElem& t) const;
  // -S.
  ElementSet negate() const;

  std::string to_string() const;
  friend bool operator==(const ElementSet& a, const ElementSet& b);

 private:
  void check_same_group(const ElementSet& other) const;

  GroupSpec group_;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

// Least k >= 1 with k*a = 0; infinite for nonzero elements of a window.
ExtendedNat element_order(const GroupSpec& g, const GroupElem& a);

// Smallest cardinality of a nonzero subgroup; the smallest prime dividing |G|
// for finite G, infinite for windows.
ExtendedNat p_of_group(const GroupSpec& g);

struct Subgroup {
  ElementSet elements;
};

// The subgroup generated by a set of elements (finite groups only).
Subgroup generated_subgroup(const GroupSpec& g, std::span<const GroupElem> generators);

// All subgroups, ordered by size and then by element list. Finite groups only.
std::vector<Subgroup> enumerate_subgroups(const GroupSpec& g);

// Freiman isomorphism of order 2 from a domain containing 0 into Z with
// map(0) = 0.
class Rectification {
 public:
  Rectification() = default;
  explicit Rectification(std::vector<std::pair<GroupElem, std::int64_t>> map);

  const std::vector<std::pair<GroupElem, std::int64_t>>& map() const { return map_; }
  std::vector<GroupElem> domain() const;
  bool contains(const GroupElem& e) const;
  std::int64_t image(const GroupElem& e) const;
  // a precedes b in the induced order.
  bool precedes(const GroupElem& a, const GroupElem& b) const {
    return image(a) < image(b);
  }

 private:
  std::vector<std::pair<GroupElem, std::int64_t>> map_;  // Sorted by element.
};

// Full quantified check: injective, map(0) = 0, and for all a, b, c, d in the
// domain whose sums are defined, a + b = c + d iff the images agree.
bool is_freiman2(const GroupSpec& g, const Rectification& r);

struct RectifyOptions {
  int exponent = -1;  // Images lie in [-2^c, 2^c]; -1 selects c = 2|A|.
  std::uint64_t node_budget = 1'000'000;
};

// Finds a rectification of A u {0}. Returns nullopt when the bounded search
// proves none exists inside the image window and throws kBudgetExceeded when
// the search is inconclusive. Windows in Z get the identity map.
std::optional<Rectification> rectify(const GroupSpec& g, const ElementSet& a,
                                     const RectifyOptions& options = {});

}  // namespace mmatch

#endif  // MMATCH_GROUP_HPP_
