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

#include "mmatch/matching.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "mmatch/error.hpp"

namespace mmatch {

namespace {

// Kuhn's algorithm on dense adjacency lists; vertices in fixed order.
class Bipartite {
 public:
  Bipartite(std::size_t left, std::size_t right)
      : adj_(left), match_right_(right, -1), match_left_(left, -1) {}

  void add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(static_cast<int>(r)); }

  std::size_t solve() {
    std::size_t size = 0;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      std::vector<char> seen(match_right_.size(), 0);
      if (augment(static_cast<int>(l), seen)) ++size;
    }
    return size;
  }

  int partner_of_left(std::size_t l) const { return match_left_[l]; }

 private:
  bool augment(int l, std::vector<char>& seen) {
    for (int r : adj_[l]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (match_right_[r] < 0 || augment(match_right_[r], seen)) {
        match_right_[r] = l;
        match_left_[l] = r;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_right_;
  std::vector<int> match_left_;
};

Bipartite group_graph(const ElementSet& a, const std::vector<std::int64_t>& ai,
                      const std::vector<std::int64_t>& bi) {
  const GroupSpec& g = a.group();
  Bipartite graph(ai.size(), bi.size());
  for (std::size_t i = 0; i < ai.size(); ++i) {
    for (std::size_t j = 0; j < bi.size(); ++j) {
      auto s = g.add_index(ai[i], bi[j]);
      if (!s || !a.contains_index(*s)) graph.add_edge(i, j);
    }
  }
  return graph;
}

}  // namespace

std::size_t max_group_matching(const ElementSet& a, const ElementSet& b) {
  if (!(a.group() == b.group())) fail(ErrorCode::kInvalidArgument, "sets belong to different groups");
  auto ai = a.indices();
  auto bi = b.indices();
  return group_graph(a, ai, bi).solve();
}

std::optional<GroupMatching> find_group_matching(const ElementSet& a, const ElementSet& b) {
  if (!(a.group() == b.group())) fail(ErrorCode::kInvalidArgument, "sets belong to different groups");
  if (a.size() != b.size()) fail(ErrorCode::kSizeMismatch, "matching needs |A| = |B|");
  const GroupSpec& g = a.group();
  if (b.contains_index(g.zero_index())) fail(ErrorCode::kZeroInTarget, "0 lies in B");
  auto ai = a.indices();
  auto bi = b.indices();
  Bipartite graph = group_graph(a, ai, bi);
  if (graph.solve() != ai.size()) return std::nullopt;
  GroupMatching out;
  ElementSet used(g);
  for (std::size_t i = 0; i < ai.size(); ++i) {
    std::int64_t partner = bi[graph.partner_of_left(i)];
    auto s = g.add_index(ai[i], partner);
    if ((s && a.contains_index(*s)) || used.contains_index(partner)) {
      fail(ErrorCode::kInternal, "group matching violates its invariants");
    }
    used.insert_index(partner);
    out.pairs.emplace_back(g.element_at(ai[i]), g.element_at(partner));
  }
  return out;
}

bool has_perfect_matching(std::span<const Mask> rows, Mask columns) {
  const std::size_t n = rows.size();
  if (static_cast<std::size_t>(popcount(columns)) < n) return false;
  std::array<int, 64> owner;
  owner.fill(-1);
  for (std::size_t r = 0; r < n; ++r) {
    Mask seen = 0;
    auto augment = [&](auto&& self, int row) -> bool {
      Mask options = rows[row] & columns & ~seen;
      while (options) {
        int c = __builtin_ctzll(options);
        options &= options - 1;
        seen |= Mask{1} << c;
        if (owner[c] < 0 || self(self, owner[c])) {
          owner[c] = row;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, static_cast<int>(r))) return false;
  }
  return true;
}

// Rado --------------------------------------------------------------------

RadoVerdict rado_decide(std::span<const Mask> family, const Matroid& n) {
  const int k = static_cast<int>(family.size());
  if (k != n.rank()) {
    fail(ErrorCode::kRankMismatch, "family size " + std::to_string(k) +
                                       " differs from the rank " + std::to_string(n.rank()));
  }
  for (Mask f : family) {
    if (f & ~n.ground().all()) fail(ErrorCode::kElementNotInGround, "family member outside E(N)");
  }
  struct Pair {
    int i;
    int x;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < k; ++i) {
    for (int x : mask_indices(family[i])) pairs.push_back({i, x});
  }
  const std::size_t p = pairs.size();
  std::vector<char> in(p, 0);
  int size = 0;
  while (true) {
    Mask used_i = 0;
    Mask used_x = 0;
    std::vector<std::size_t> members;
    for (std::size_t y = 0; y < p; ++y) {
      if (in[y]) {
        used_i |= Mask{1} << pairs[y].i;
        used_x |= Mask{1} << pairs[y].x;
        members.push_back(y);
      }
    }
    auto bit = [](int v) { return Mask{1} << v; };
    std::vector<char> sink(p, 0);
    std::vector<int> prev(p, -2);
    std::deque<std::size_t> queue;
    for (std::size_t y = 0; y < p; ++y) {
      if (in[y]) continue;
      if (!(used_i & bit(pairs[y].i))) {
        prev[y] = -1;
        queue.push_back(y);
      }
      sink[y] = !(used_x & bit(pairs[y].x)) && n.rank(used_x | bit(pairs[y].x)) == size + 1;
    }
    int end = -1;
    while (!queue.empty() && end < 0) {
      std::size_t u = queue.front();
      queue.pop_front();
      if (!in[u]) {
        if (sink[u]) {
          end = static_cast<int>(u);
          break;
        }
        // u outside I -> z in I when I - z + u is independent in the lifted N.
        for (std::size_t z : members) {
          if (prev[z] != -2) continue;
          Mask rest = used_x & ~bit(pairs[z].x);
          if ((rest & bit(pairs[u].x)) || n.rank(rest | bit(pairs[u].x)) != size) continue;
          prev[z] = static_cast<int>(u);
          queue.push_back(z);
        }
      } else {
        // z in I -> y outside I when I - z + y respects the family partition.
        for (std::size_t y = 0; y < p; ++y) {
          if (in[y] || prev[y] != -2) continue;
          if ((used_i & bit(pairs[y].i)) && pairs[y].i != pairs[u].i) continue;
          prev[y] = static_cast<int>(u);
          queue.push_back(y);
        }
      }
    }
    if (end < 0) break;
    for (int v = end; v >= 0; v = prev[v]) in[v] = !in[v];
    ++size;
  }

  RadoVerdict verdict;
  if (size == k) {
    verdict.has_transversal = true;
    verdict.transversal.assign(k, -1);
    for (std::size_t y = 0; y < p; ++y) {
      if (in[y]) verdict.transversal[pairs[y].i] = pairs[y].x;
    }
    Mask chosen = 0;
    for (int x : verdict.transversal) chosen |= Mask{1} << x;
    if (popcount(chosen) != k || !n.is_independent(chosen)) {
      fail(ErrorCode::kInternal, "transversal is not independent");
    }
    return verdict;
  }
  for (int j = 1; j <= k; ++j) {
    for (Mask jm : k_subsets(k, j)) {
      Mask uni = 0;
      for (int i : mask_indices(jm)) uni |= family[i];
      if (n.rank(uni) < j) {
        verdict.violation = mask_indices(jm);
        return verdict;
      }
    }
  }
  fail(ErrorCode::kInternal, "no independent transversal and no violated rank condition");
}

// Matroid matchings ------------------------------------------------------------

namespace {

void check_pair(const Matroid& m, const Matroid& n) {
  if (!(m.ground().group() == n.ground().group())) {
    fail(ErrorCode::kInvalidArgument, "matroids live in different groups");
  }
  if (m.rank() != n.rank()) {
    fail(ErrorCode::kRankMismatch, "ranks differ: " + std::to_string(m.rank()) + " vs " +
                                       std::to_string(n.rank()));
  }
}

}  // namespace

std::vector<Mask> forbidden_free_family(const Matroid& m, Mask source, const Matroid& n) {
  const GroupSpec& g = m.ground().group();
  ElementSet em = m.ground().to_element_set();
  std::vector<std::int64_t> target;
  for (const auto& b : n.ground().elements()) target.push_back(g.index_of(b));
  std::vector<Mask> family;
  for (int i : mask_indices(source)) {
    std::int64_t a = g.index_of(m.ground().at(i));
    Mask f = 0;
    for (std::size_t j = 0; j < target.size(); ++j) {
      auto s = g.add_index(a, target[j]);
      if (!s || !em.contains_index(*s)) f |= Mask{1} << j;
    }
    family.push_back(f);
  }
  return family;
}

std::optional<MatchWitness> match_basis(const Matroid& m, Mask source, const Matroid& n) {
  check_pair(m, n);
  if (!m.is_basis(source)) fail(ErrorCode::kInvalidArgument, "source is not a basis of M");
  auto family = forbidden_free_family(m, source, n);
  RadoVerdict v = rado_decide(family, n);
  if (!v.has_transversal) return std::nullopt;
  MatchWitness w;
  w.source = source;
  for (int x : v.transversal) w.target |= Mask{1} << x;
  for (int x : v.transversal) w.perm.push_back(popcount(w.target & ((Mask{1} << x) - 1)));
  return w;
}

MatchReport match_matroid(const Matroid& m, const Matroid& n, const MatchOptions& options) {
  check_pair(m, n);
  MatchReport report;
  report.matched = true;
  for (Mask b : m.bases(options.basis_limit)) {
    ++report.bases_checked;
    auto w = match_basis(m, b, n);
    if (!w) {
      ++report.failures;
      if (!report.failing_basis) report.failing_basis = b;
      report.matched = false;
    } else if (options.keep_witnesses) {
      report.witnesses.push_back(*w);
    }
  }
  if (options.mutual) {
    MatchOptions back;
    back.basis_limit = options.basis_limit;
    report.mutual = report.matched && match_matroid(n, m, back).matched;
  }
  return report;
}

RankCriterion rank_criterion_holds(const Matroid& m, Mask source, const Matroid& n) {
  check_pair(m, n);
  if (!m.is_basis(source)) fail(ErrorCode::kInvalidArgument, "source is not a basis of M");
  auto family = forbidden_free_family(m, source, n);
  const int k = static_cast<int>(family.size());
  RankCriterion out;
  for (int j = 1; j <= k; ++j) {
    for (Mask jm : k_subsets(k, j)) {
      Mask uni = 0;
      for (int i : mask_indices(jm)) uni |= family[i];
      if (n.rank(n.ground().all() & ~uni) > k - j) {
        out.holds = false;
        out.violated = mask_indices(jm);
        return out;
      }
    }
  }
  return out;
}

MatchTable::MatchTable(const GroundSet& source, const GroundSet& target, int rank) {
  if (!(source.group() == target.group())) {
    fail(ErrorCode::kInvalidArgument, "ground sets live in different groups");
  }
  if (binomial(target.size(), rank) > 64) {
    fail(ErrorCode::kBudgetExceeded, "match table needs C(|E(N)|, n) <= 64");
  }
  const GroupSpec& g = source.group();
  ElementSet em = source.to_element_set();
  for (const auto& a : source.elements()) {
    Mask f = 0;
    for (std::size_t j = 0; j < target.size(); ++j) {
      auto s = g.try_add(a, target.at(j));
      if (s && em.contains(*s)) f |= Mask{1} << j;
    }
    forbidden_.push_back(f);
  }
  sources_ = k_subsets(source.size(), rank);
  targets_ = k_subsets(target.size(), rank);
  std::vector<Mask> rows;
  for (Mask s : sources_) {
    rows.clear();
    for (int i : mask_indices(s)) rows.push_back(~forbidden_[i]);
    std::uint64_t bits = 0;
    for (std::size_t t = 0; t < targets_.size(); ++t) {
      if (has_perfect_matching(rows, targets_[t])) bits |= std::uint64_t{1} << t;
    }
    table_.push_back(bits);
  }
}

}  // namespace mmatch
