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

#include <algorithm>
#include <random>

#include "mmatch/brute_force.hpp"
#include "mmatch/matching.hpp"
#include "verify_internal.hpp"

namespace mmatch::detail {

namespace {

using Rng = std::mt19937_64;

std::uint64_t draw(Rng& rng, std::uint64_t bound) { return rng() % bound; }

// Random loopless matroid of rank n on the given ground set.
Matroid random_matroid(Rng& rng, const GroundSet& ground, int n) {
  const std::size_t m = ground.size();
  if (static_cast<std::size_t>(n) == m) return Matroid::free(ground);
  switch (draw(rng, 3)) {
    case 0:
      return Matroid::uniform(ground, n);
    case 1: {
      // Partition: n nonempty blocks, capacity 1 each, random assignment.
      std::vector<Mask> blocks(static_cast<std::size_t>(n), 0);
      std::vector<std::size_t> order(m);
      for (std::size_t i = 0; i < m; ++i) order[i] = i;
      for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t blk = i < static_cast<std::size_t>(n) ? i : draw(rng, static_cast<std::uint64_t>(n));
        blocks[blk] |= Mask{1} << order[i];
      }
      return Matroid::partition(ground, blocks, std::vector<int>(static_cast<std::size_t>(n), 1));
    }
    default: {
      // Sparse paving: greedy random circuit-hyperplanes.
      const auto all = k_subsets(m, static_cast<std::size_t>(n));
      std::vector<Mask> ch;
      const std::uint64_t tries = 1 + draw(rng, 6);
      for (std::uint64_t t = 0; t < tries; ++t) {
        Mask h = all[draw(rng, all.size())];
        bool ok = true;
        for (Mask x : ch) {
          if (x == h || popcount(x & h) > n - 2) ok = false;
        }
        if (ok) ch.push_back(h);
      }
      while (!ch.empty()) {
        std::sort(ch.begin(), ch.end(), [](Mask a, Mask b) { return lex_less(a, b); });
        try {
          return Matroid::ch_sparse_paving(ground, n, ch);
        } catch (const Error&) {
          ch.pop_back();
        }
      }
      return Matroid::uniform(ground, n);
    }
  }
}

GroundSet random_ground(Rng& rng, const GroupSpec& g, std::size_t size, bool avoid_zero) {
  std::vector<std::int64_t> pool;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (!(avoid_zero && i == g.zero_index())) pool.push_back(i);
  }
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[draw(rng, i)]);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  std::vector<GroupElem> elems;
  for (auto i : pool) elems.push_back(g.element_at(i));
  return GroundSet(g, elems);
}

bool lex_index_less(const std::vector<int>& a, const std::vector<int>& b) { return a < b; }

// Checks a verdict against the oracle and its own certificate.
bool rado_consistent(std::span<const Mask> family, const Matroid& n, const RadoVerdict& v,
                     std::string& why) {
  const bool oracle = brute::has_independent_transversal(family, n);
  if (oracle != v.has_transversal) {
    why = "rado_decide disagrees with the brute-force oracle";
    return false;
  }
  const int k = static_cast<int>(family.size());
  if (v.has_transversal) {
    if (static_cast<int>(v.transversal.size()) != k) {
      why = "transversal has the wrong length";
      return false;
    }
    Mask used = 0;
    for (int i = 0; i < k; ++i) {
      const int x = v.transversal[i];
      if (!((family[i] >> x) & 1u) || ((used >> x) & 1u)) {
        why = "transversal element outside its set or repeated";
        return false;
      }
      used |= Mask{1} << x;
    }
    if (!n.is_independent(used)) {
      why = "transversal is dependent";
      return false;
    }
    return true;
  }
  auto violates = [&](const std::vector<int>& j) {
    Mask u = 0;
    for (int i : j) u |= family[i];
    return n.rank(u) < static_cast<int>(j.size());
  };
  if (v.violation.empty() || !violates(v.violation)) {
    why = "violation certificate does not re-verify";
    return false;
  }
  const std::size_t size = v.violation.size();
  for (std::size_t s = 1; s <= size; ++s) {
    for (Mask jm : k_subsets(static_cast<std::size_t>(k), s)) {
      auto j = mask_indices(jm);
      if (!violates(j)) continue;
      if (s < size || lex_index_less(j, v.violation)) {
        why = "violation is not the least one";
        return false;
      }
    }
  }
  return true;
}

Json rado_witness(std::span<const Mask> family, const Matroid& n) {
  Instance inst(n.ground().group());
  inst.add_matroid("N", n);
  for (std::size_t i = 0; i < family.size(); ++i) {
    inst.add_subset("F" + std::to_string(i + 1), n.ground().subset(family[i]));
  }
  return instance_to_json(inst);
}

void rado_one(Run& run, std::span<const Mask> family, const Matroid& n) {
  run.visit();
  RadoVerdict v = rado_decide(family, n);
  run.note(v.has_transversal ? "transversal" : "violation");
  std::string why;
  const bool ok = rado_consistent(family, n, v, why);
  run.conclude(ok, [&] { return rado_witness(family, n); }, why);
}

void criteria_one(Run& run, const Matroid& m, const Matroid& n) {
  run.visit();
  bool holds = true;
  std::string failure;
  for (Mask s : m.bases()) {
    if (!rank_criterion_holds(m, s, n).holds) continue;
    run.note("criterion_held");
    const bool engine = match_basis(m, s, n).has_value();
    const bool oracle = brute::basis_matchable(m, s, n);
    if (engine != oracle) fail(ErrorCode::kInternal, "match_basis disagrees with the oracle");
    if (!engine) {
      run.note("criterion_held_without_witness");
      if (holds) {
        failure = "rank criterion holds for " + m.ground().to_element_set(s).to_string() +
                  " but no matching exists";
      }
      holds = false;
    }
  }
  run.conclude(holds,
               [&] {
                 Instance inst(m.ground().group());
                 inst.add_matroid("M", m);
                 inst.add_matroid("N", n);
                 return instance_to_json(inst);
               },
               failure);
}

}  // namespace

void exhaustive_rado_family(const std::string& id, const Bounds& b, Run& run) {
  Rng rng(run.options().seed);
  const std::int64_t count = b.get_int("count");
  const std::int64_t nmax = b.get_int("nmax");
  const std::int64_t emax = b.get_int("emax");
  if (nmax < 1 || nmax > brute::kMaxBruteRank || emax < nmax || emax > 16) {
    fail(ErrorCode::kInvalidArgument, "need 1 <= nmax <= 5 and nmax <= emax <= 16");
  }
  if (id == "rado") {
    const GroupSpec g = GroupSpec::cyclic(64);
    for (std::int64_t t = 0; t < count; ++t) {
      const int n = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(nmax)));
      const std::size_t m =
          static_cast<std::size_t>(n) + draw(rng, static_cast<std::uint64_t>(emax - n + 1));
      GroundSet ground = random_ground(rng, g, m, false);
      Matroid nm = random_matroid(rng, ground, n);
      std::vector<Mask> family;
      // Sparse families make violations common enough to matter.
      const std::uint64_t density = 1 + draw(rng, 3);
      for (int i = 0; i < n; ++i) {
        Mask f = 0;
        for (std::size_t x = 0; x < m; ++x) {
          if (draw(rng, 4) < density) f |= Mask{1} << x;
        }
        family.push_back(f);
      }
      rado_one(run, family, nm);
    }
  } else {
    const auto groups = b.get_groups("g");
    for (std::int64_t t = 0; t < count; ++t) {
      const GroupSpec& g = groups[draw(rng, groups.size())];
      if (!g.is_finite()) fail(ErrorCode::kInvalidArgument, "rank-criteria samples from finite groups");
      const int n = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(nmax)));
      const std::int64_t cap = std::min<std::int64_t>(emax, g.order() - 1);
      if (cap < n) fail(ErrorCode::kInvalidArgument, "group too small for the requested sizes");
      const std::size_t sm =
          static_cast<std::size_t>(n) + draw(rng, static_cast<std::uint64_t>(cap - n + 1));
      const std::size_t sn =
          static_cast<std::size_t>(n) + draw(rng, static_cast<std::uint64_t>(cap - n + 1));
      GroundSet gm = random_ground(rng, g, sm, false);
      GroundSet gn = random_ground(rng, g, sn, true);
      Matroid mm = random_matroid(rng, gm, n);
      Matroid nm = random_matroid(rng, gn, n);
      criteria_one(run, mm, nm);
    }
  }
}

void instance_rado_family(const std::string& id, const Instance& inst, Run& run) {
  if (id == "rado") {
    const Matroid& n = inst.matroid("N");
    std::vector<Mask> family;
    for (int i = 1; i <= n.rank(); ++i) {
      const std::string name = "F" + std::to_string(i);
      if (!inst.has_subset(name)) hypothesis("subsets F1..Fn with n = r(N)");
      family.push_back(n.ground().mask_of(inst.subset(name)));
    }
    if (inst.has_subset("F" + std::to_string(n.rank() + 1))) hypothesis("exactly r(N) sets");
    rado_one(run, family, n);
  } else {
    const Matroid& m = inst.matroid("M");
    const Matroid& n = inst.matroid("N");
    if (m.rank() != n.rank() || m.rank() == 0) hypothesis("r(M) = r(N) = n > 0");
    criteria_one(run, m, n);
  }
}

}  // namespace mmatch::detail
