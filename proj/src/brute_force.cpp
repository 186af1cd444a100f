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

#include "mmatch/brute_force.hpp"

#include <algorithm>
#include <numeric>

#include "mmatch/error.hpp"

namespace mmatch::brute {

namespace {

bool tuple_search(std::span<const Mask> family, const Matroid& n, std::size_t i, Mask chosen) {
  if (i == family.size()) return n.is_independent(chosen);
  for (int x : mask_indices(family[i] & ~chosen)) {
    if (tuple_search(family, n, i + 1, chosen | (Mask{1} << x))) return true;
  }
  return false;
}

bool sum_in(const GroupSpec& g, const ElementSet& set, const GroupElem& a, const GroupElem& b) {
  auto s = g.try_add(a, b);
  return s && set.contains(*s);
}

}  // namespace

bool has_independent_transversal(std::span<const Mask> family, const Matroid& n) {
  if (static_cast<int>(family.size()) > kMaxBruteRank + 1) {
    fail(ErrorCode::kBudgetExceeded, "brute-force transversal search limited to n <= 6");
  }
  return tuple_search(family, n, 0, 0);
}

bool basis_matchable(const Matroid& m, Mask source, const Matroid& n) {
  if (m.rank() > kMaxBruteRank) {
    fail(ErrorCode::kBudgetExceeded, "brute-force matching limited to n <= 5");
  }
  const GroupSpec& g = m.ground().group();
  const ElementSet em = m.ground().to_element_set();
  const std::vector<GroupElem> src = m.ground().subset(source);
  for (Mask t : n.bases()) {
    std::vector<GroupElem> tgt = n.ground().subset(t);
    std::vector<int> perm(tgt.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < src.size() && ok; ++i) {
        ok = !sum_in(g, em, src[i], tgt[perm[i]]);
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

bool matroid_matched(const Matroid& m, const Matroid& n) {
  for (Mask b : m.bases()) {
    if (!basis_matchable(m, b, n)) return false;
  }
  return true;
}

bool group_matchable(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 9) fail(ErrorCode::kBudgetExceeded, "brute-force group matching limited to 9");
  const GroupSpec& g = a.group();
  auto as = a.elements();
  auto bs = b.elements();
  std::vector<int> perm(bs.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < as.size() && ok; ++i) ok = !sum_in(g, a, as[i], bs[perm[i]]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int rank_from_bases(std::span<const Mask> bases, Mask x) {
  int best = 0;
  for (Mask b : bases) best = std::max(best, popcount(b & x));
  return best;
}

}  // namespace mmatch::brute
