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

#ifndef MMATCH_MATCHING_HPP_
#define MMATCH_MATCHING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mmatch/group.hpp"
#include "mmatch/matroid.hpp"

namespace mmatch {

// A bijection f: A -> B with a + f(a) not in A.
struct GroupMatching {
  std::vector<std::pair<GroupElem, GroupElem>> pairs;  // In canonical order of A.
};

// Maximum bipartite matching on the edges a + b not in A. Requires |A| = |B|
// and 0 not in B. Returns the perfect matching when one exists.
std::optional<GroupMatching> find_group_matching(const ElementSet& a, const ElementSet& b);
// Size of a maximum matching, without the preconditions above.
std::size_t max_group_matching(const ElementSet& a, const ElementSet& b);

// Independent transversal or a violated Rado condition.
struct RadoVerdict {
  bool has_transversal = false;
  std::vector<int> transversal;  // Ground positions x_i in F_i.
  std::vector<int> violation;    // J as 0-based family indices, ascending.
};

// Family members are masks over N's ground set; the family size must be r(N).
RadoVerdict rado_decide(std::span<const Mask> family, const Matroid& n);

// Basis `source` of M matched to `target` of N: the i-th element of source
// (ascending ground order) pairs with the perm[i]-th element of target.
struct MatchWitness {
  Mask source = 0;
  Mask target = 0;
  std::vector<int> perm;
};

// F_i = {b in E(N) : a_i + b not in E(M)}; in an integer window a sum that
// leaves the window is never in E(M).
std::vector<Mask> forbidden_free_family(const Matroid& m, Mask source, const Matroid& n);

std::optional<MatchWitness> match_basis(const Matroid& m, Mask source, const Matroid& n);

struct MatchOptions {
  bool keep_witnesses = false;
  bool mutual = false;          // Also decide N -> M.
  std::uint64_t basis_limit = 1u << 22;
};

struct MatchReport {
  bool matched = false;
  std::size_t bases_checked = 0;
  std::size_t failures = 0;
  std::optional<Mask> failing_basis;  // Lexicographically first failure.
  std::vector<MatchWitness> witnesses;
  std::optional<bool> mutual;
};

MatchReport match_matroid(const Matroid& m, const Matroid& n, const MatchOptions& options = {});

// Rank criterion: r_N(E(N) minus the union of F_i over J) <= n - |J| for
// every nonempty J, scanned by size and then lexicographically.
struct RankCriterion {
  bool holds = true;
  std::vector<int> violated;  // First violating J, 0-based.
};
RankCriterion rank_criterion_holds(const Matroid& m, Mask source, const Matroid& n);

// Batched decision for many matroids sharing E(M), E(N) and the rank: bit t
// of matchable(s) says the s-th n-subset of E(M) has a perfect matching onto
// the t-th n-subset of E(N). Needs C(|E(N)|, n) <= 64.
class MatchTable {
 public:
  MatchTable(const GroundSet& source, const GroundSet& target, int rank);

  const std::vector<Mask>& source_subsets() const { return sources_; }
  const std::vector<Mask>& target_subsets() const { return targets_; }
  std::uint64_t matchable(std::size_t s) const { return table_[s]; }
  // Per-element forbidden masks: bit j of forbidden(i) says
  // source_i + target_j is in E(M).
  Mask forbidden(std::size_t i) const { return forbidden_[i]; }

 private:
  std::vector<Mask> sources_;
  std::vector<Mask> targets_;
  std::vector<Mask> forbidden_;
  std::vector<std::uint64_t> table_;
};

// Perfect matching test on a small bipartite graph given as rows of masks.
bool has_perfect_matching(std::span<const Mask> rows, Mask columns);

}  // namespace mmatch

#endif  // MMATCH_MATCHING_HPP_
