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

#ifndef MMATCH_MATROID_HPP_
#define MMATCH_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mmatch/group.hpp"

namespace mmatch {

// Subsets of a ground set: bit i stands for the i-th ground element.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;
inline constexpr std::size_t kDefaultEnumGround = 16;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask full_mask(std::size_t m) {
  return m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1;
}
// Lexicographic comparison of two equal-size subsets as sorted index tuples.
inline bool lex_less(Mask a, Mask b) {
  Mask d = a ^ b;
  return d != 0 && (a & d & (~d + 1)) != 0;
}
std::vector<int> mask_indices(Mask m);

// All k-subsets of an m-set in lexicographic order of index tuples.
std::vector<Mask> k_subsets(std::size_t m, std::size_t k);
std::uint64_t binomial(std::uint64_t m, std::uint64_t k);  // Saturates at 2^64-1.

// Ordered sequence of distinct elements of one group.
class GroundSet {
 public:
  GroundSet(const GroupSpec& group, std::vector<GroupElem> elements);
  GroundSet(const GroupSpec& group, std::initializer_list<std::int64_t> values);
  // Ground set in canonical element order.
  static GroundSet of(const ElementSet& set);

  const GroupSpec& group() const { return group_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<GroupElem>& elements() const { return elems_; }
  const GroupElem& at(std::size_t i) const { return elems_[i]; }
  Mask all() const { return full_mask(elems_.size()); }

  std::optional<std::size_t> position(const GroupElem& e) const;
  // Throws kElementNotInGround.
  Mask mask_of(std::span<const GroupElem> subset) const;
  std::vector<GroupElem> subset(Mask m) const;
  ElementSet to_element_set(Mask m) const;
  ElementSet to_element_set() const { return to_element_set(all()); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.group_ == b.group_ && a.elems_ == b.elems_;
  }

 private:
  GroupSpec group_;
  std::vector<GroupElem> elems_;
  std::vector<std::pair<std::int64_t, std::size_t>> pos_;  // Sorted by group index.
};

enum class MatroidKind { kUniform, kFree, kBasisList, kChSparsePaving, kPartition };
enum class PavingClass { kNotPaving, kPaving, kSparsePaving };
const char* paving_class_name(PavingClass c);
const char* matroid_kind_name(MatroidKind k);

// An immutable loopless matroid on a ground set of at most 64 elements.
class Matroid {
 public:
  static Matroid uniform(GroundSet ground, int rank);
  static Matroid free(GroundSet ground);
  // Validates equal sizes, basis exchange and looplessness.
  static Matroid from_bases(GroundSet ground, std::vector<Mask> bases);
  // Validates pairwise intersections |H1 n H2| <= n-2, looplessness and the
  // circuit-hyperplane count bound.
  static Matroid ch_sparse_paving(GroundSet ground, int rank, std::vector<Mask> ch);
  static Matroid partition(GroundSet ground, std::vector<Mask> blocks, std::vector<int> caps);

  MatroidKind kind() const { return kind_; }
  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  int rank() const { return rank_; }

  // Throws kElementNotInGround when X has bits outside the ground set.
  int rank(Mask x) const;
  int rank_of(std::span<const GroupElem> x) const { return rank(ground_.mask_of(x)); }
  bool is_independent(Mask x) const { return rank(x) == popcount(x); }
  bool is_basis(Mask x) const;

  // Lexicographic order of index tuples. Throws kBudgetExceeded beyond limit.
  std::vector<Mask> bases(std::uint64_t limit = 1u << 22) const;

  Matroid dual() const;  // Basis-list representation.

  // Exhaustive over subsets; throws kBudgetExceeded when |E| > max_ground.
  std::vector<Mask> circuits(std::size_t max_ground = kDefaultEnumGround) const;
  std::vector<Mask> hyperplanes(std::size_t max_ground = kDefaultEnumGround) const;
  std::vector<Mask> circuit_hyperplanes(std::size_t max_ground = kDefaultEnumGround) const;
  bool is_hyperplane(Mask x) const;

  Mask loops() const;
  Mask coloops() const;

  // Representation data.
  const std::vector<Mask>& basis_list() const { return basis_list_; }
  const std::vector<Mask>& ch_list() const { return ch_; }
  const std::vector<Mask>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }

  std::string describe() const;

 private:
  Matroid(GroundSet ground, MatroidKind kind) : ground_(std::move(ground)), kind_(kind) {}
  static Matroid bases_unchecked(GroundSet ground, std::vector<Mask> bases);
  void check_mask(Mask x) const;

  GroundSet ground_;
  MatroidKind kind_;
  int rank_ = 0;
  std::vector<Mask> basis_list_;  // kBasisList, sorted lexicographically.
  std::unordered_set<Mask> basis_set_;
  std::vector<Mask> ch_;  // kChSparsePaving, sorted lexicographically.
  std::unordered_set<Mask> ch_set_;
  std::vector<Mask> blocks_;  // kPartition.
  std::vector<int> caps_;

};

// Paving: every (n-1)-subset independent. Sparse paving via the criterion
// "every n-subset is a basis or a circuit-hyperplane", cross-checked against
// "m and its dual are paving" (throws kInternal on disagreement).
PavingClass classify_paving(const Matroid& m);
bool is_paving(const Matroid& m);

// lambda * max(n+1, |E|-n+1) <= C(|E|, n) for lambda circuit-hyperplanes.
bool ch_count_bound(std::size_t ground_size, int rank, std::size_t lambda);
bool ch_count_bound(const Matroid& m);

// Every sparse paving matroid of the given rank, once each, as
// circuit-hyperplane families (independent sets of the Johnson graph).
std::vector<Matroid> enumerate_sparse_paving(const GroundSet& ground, int rank,
                                             std::uint64_t limit = 1u << 20);

}  // namespace mmatch

#endif  // MMATCH_MATROID_HPP_
