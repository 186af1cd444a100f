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


#include "doctest.h"
#include "mmatch/error.hpp"
#include "mmatch/brute_force.hpp"
#include "mmatch/matching.hpp"
#include "oracles.hpp"

using namespace mmatch;

namespace {

Mask M(std::initializer_list<int> positions) {
  Mask m = 0;
  for (int p : positions) m |= Mask{1} << p;
  return m;
}

oracle::Set values(const ElementSet& s) {
  oracle::Set out;
  for (const auto& e : s.elements()) out.push_back(e.value());
  return out;
}

ElementSet from_mask(const GroupSpec& g, std::uint64_t m) {
  ElementSet s(g);
  for (std::int64_t i = 0; i < g.index_space(); ++i)
    if ((m >> i) & 1) s.insert_index(i);
  return s;
}

GroundSet ground_of(const GroupSpec& g, const oracle::Set& v) {
  std::vector<GroupElem> e;
  for (long x : v) e.emplace_back(x);
  return GroundSet(g, e);
}

oracle::Mat as_mat(const Matroid& m) {
  return oracle::Mat{static_cast<int>(m.size()), m.rank(), m.bases()};
}

// Uniform, sparse paving or partition matroid of rank n on ground.
Matroid random_matroid(std::mt19937_64& rng, const GroundSet& ground, int n) {
  const int m = static_cast<int>(ground.size());
  if (n == m) return Matroid::free(ground);
  switch (rng() % 3) {
    case 0: return Matroid::uniform(ground, n);
    case 1: {
      if (binomial(m, n) > 64) return Matroid::uniform(ground, n);
      auto all = enumerate_sparse_paving(ground, n);
      return all[rng() % all.size()];
    }
    default: {
      // n blocks of cap 1, each nonempty.
      std::vector<int> label(m);
      for (int i = 0; i < m; ++i) label[i] = i < n ? i : static_cast<int>(rng() % n);
      std::vector<Mask> blocks(n, 0);
      for (int i = 0; i < m; ++i) blocks[label[i]] |= Mask{1} << i;
      return Matroid::partition(ground, blocks, std::vector<int>(n, 1));
    }
  }
}

oracle::Set random_set(std::mt19937_64& rng, int p, int size, bool allow_zero) {
  std::set<long> s;
  while (static_cast<int>(s.size()) < size) {
    long v = static_cast<long>(rng() % p);
    if (v != 0 || allow_zero) s.insert(v);
  }
  return oracle::Set(s.begin(), s.end());
}

}  // namespace

TEST_CASE("group matching examples") {
  const auto c7 = GroupSpec::cyclic(7);
  ElementSet a(c7, {1, 2, 3});
  auto f = find_group_matching(a, a);
  REQUIRE(f.has_value());
  CHECK(f->pairs.size() == 3);
  for (const auto& [x, y] : f->pairs) CHECK_FALSE(a.contains(c7.add(x, y)));
  ElementSet z(c7, {0, 1});
  try {
    (void)find_group_matching(z, z);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroInTarget);
  }
  CHECK_THROWS_AS(find_group_matching(a, ElementSet(c7, {1, 2})), Error);
  CHECK(max_group_matching(z, z) < 2);
}

TEST_CASE("matchable to itself exactly when 0 is absent, with valid bijections") {
  const auto g = GroupSpec::cyclic(7);
  oracle::Cyc cyc{7};
  for (std::uint64_t m = 1; m < 128; ++m) {
    const auto a = from_mask(g, m);
    const bool expect = !a.contains(g.zero());
    REQUIRE((max_group_matching(a, a) == a.size()) == expect);
    CHECK(oracle::group_matchable(cyc, values(a), values(a)) == expect);
    if (expect) {
      auto f = find_group_matching(a, a);
      REQUIRE(f.has_value());
      std::set<std::int64_t> firsts, seconds;
      for (const auto& [x, y] : f->pairs) {
        firsts.insert(x.value());
        seconds.insert(y.value());
        CHECK_FALSE(a.contains(g.add(x, y)));
      }
      CHECK(firsts.size() == a.size());
      CHECK(seconds.size() == a.size());
    }
  }
}

TEST_CASE("|A| = |B| < p(G) with 0 outside B is always matchable") {
  const auto g = GroupSpec::cyclic(7);
  oracle::Cyc cyc{7};
  for (std::uint64_t ma = 1; ma < 128; ++ma)
    for (std::uint64_t mb = 2; mb < 128; mb += 2) {  // bit 0 clear
      const auto a = from_mask(g, ma), b = from_mask(g, mb);
      if (a.size() != b.size()) continue;
      CHECK(find_group_matching(a, b).has_value());
      if (a.size() <= 4) CHECK(oracle::group_matchable(cyc, values(a), values(b)));
    }
}

TEST_CASE("Rado examples") {
  const auto g = GroupSpec::cyclic(7);
  auto u23 = Matroid::uniform(GroundSet(g, {1, 2, 3}), 2);
  auto shared = rado_decide(std::vector<Mask>{M({0}), M({0})}, u23);
  CHECK_FALSE(shared.has_transversal);
  CHECK(shared.violation == std::vector<int>{0, 1});
  auto ok = rado_decide(std::vector<Mask>{M({0}), M({1, 2})}, u23);
  REQUIRE(ok.has_transversal);
  CHECK(ok.transversal == std::vector<int>{0, 1});
  CHECK_THROWS_AS(rado_decide(std::vector<Mask>{M({0})}, u23), Error);
}

TEST_CASE("Rado verdicts agree with brute force on 200 random instances") {
  std::mt19937_64 rng(2026);
  const auto g = GroupSpec::cyclic(13);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 7);
    const int n = 1 + static_cast<int>(rng() % std::min(4, m));
    auto ground = ground_of(g, random_set(rng, 13, m, true));
    auto nm = random_matroid(rng, ground, n);
    std::vector<Mask> fam;
    for (int i = 0; i < n; ++i) fam.push_back(rng() & ground.all());
    const auto v = rado_decide(fam, nm);
    REQUIRE(v.has_transversal == oracle::independent_transversal(fam, as_mat(nm)));
    if (v.has_transversal) {
      Mask used = 0;
      for (int i = 0; i < n; ++i) {
        CHECK(((fam[i] >> v.transversal[i]) & 1) == 1);
        used |= Mask{1} << v.transversal[i];
      }
      CHECK(nm.is_independent(used));
      CHECK(popcount(used) == n);
    } else {
      Mask uni = 0;
      for (int j : v.violation) uni |= fam[j];
      CHECK(nm.rank(uni) < static_cast<int>(v.violation.size()));
    }
  }
}

TEST_CASE("basis matching examples") {
  const auto w = GroupSpec::integer_window(-64, 64);
  GroundSet g4(w, {1, 2, 3, 4});
  auto part = Matroid::partition(g4, {M({0}), M({1, 2, 3})}, {1, 1});
  CHECK_FALSE(match_basis(part, M({0, 1}), part).has_value());
  const auto c5 = GroupSpec::cyclic(5);
  auto free12 = Matroid::free(GroundSet(c5, {1, 2}));
  auto wit = match_basis(free12, M({0, 1}), free12);
  REQUIRE(wit.has_value());
  CHECK(wit->target == M({0, 1}));
  CHECK(wit->perm == std::vector<int>{1, 0});
  CHECK_THROWS_AS(match_basis(free12, M({0, 1}), Matroid::uniform(GroundSet(c5, {1, 2, 3}), 1)),
                  Error);
}

TEST_CASE("matroid matching examples") {
  const auto w = GroupSpec::integer_window(-64, 64);
  GroundSet g4(w, {1, 2, 3, 4});
  auto part = Matroid::partition(g4, {M({0}), M({1, 2, 3})}, {1, 1});
  auto sym = match_matroid(part, part);
  CHECK_FALSE(sym.matched);
  CHECK(sym.failing_basis == M({0, 1}));
  auto asy = match_matroid(Matroid::uniform(g4, 2), part);
  CHECK_FALSE(asy.matched);
  CHECK(asy.failing_basis == M({0, 1}));
  const auto c7 = GroupSpec::cyclic(7);
  auto u23 = Matroid::uniform(GroundSet(c7, {1, 2, 3}), 2);
  CHECK(match_matroid(u23, u23).matched);
  auto both = match_matroid(u23, u23, MatchOptions{true, true});
  CHECK(both.mutual == true);
  CHECK(both.witnesses.size() == 3);
}

TEST_CASE("rank criterion examples") {
  const auto w = GroupSpec::integer_window(-64, 64);
  GroundSet g4(w, {1, 2, 3, 4});
  auto part = Matroid::partition(g4, {M({0}), M({1, 2, 3})}, {1, 1});
  CHECK_FALSE(rank_criterion_holds(part, M({0, 1}), part).holds);
  // n = 1: holds exactly when (-a + E(M)) and E(N) are disjoint.
  const auto c11 = GroupSpec::cyclic(11);
  auto m1 = Matroid::uniform(GroundSet(c11, {1, 2}), 1);
  auto n1 = Matroid::uniform(GroundSet(c11, {3, 5}), 1);
  CHECK(rank_criterion_holds(m1, M({0}), n1).holds);   // 1+3, 1+5 not in {1,2}
  auto n2 = Matroid::uniform(GroundSet(c11, {1, 5}), 1);
  CHECK_FALSE(rank_criterion_holds(m1, M({0}), n2).holds);  // 1+1 = 2
}

TEST_CASE("basis matching agrees with brute force; the rank criterion is sufficient") {
  std::mt19937_64 rng(99);
  int held = 0;
  for (int t = 0; t < 500; ++t) {
    const int p = (rng() % 2) ? 11 : 13;
    const auto g = GroupSpec::cyclic(p);
    oracle::Cyc cyc{p};
    const int n = 1 + static_cast<int>(rng() % 4);
    const int mm = n + static_cast<int>(rng() % (std::min(8, p - 1) - n + 1));
    const int mn = n + static_cast<int>(rng() % (std::min(8, p - 1) - n + 1));
    auto em = random_set(rng, p, mm, true);
    auto en = random_set(rng, p, mn, false);
    auto m = random_matroid(rng, ground_of(g, em), n);
    auto nm = random_matroid(rng, ground_of(g, en), n);
    const auto mbases = m.bases();
    for (std::size_t k = 0; k < std::min<std::size_t>(mbases.size(), 4); ++k) {
      const Mask src = mbases[rng() % mbases.size()];
      std::vector<long> srcv;
      for (int i : mask_indices(src)) srcv.push_back(em[i]);
      const auto wit = match_basis(m, src, nm);
      REQUIRE(wit.has_value() == oracle::basis_matched(cyc, em, srcv, en, as_mat(nm)));
      if (wit) {
        CHECK(nm.is_basis(wit->target));
        const auto tgt = mask_indices(wit->target);
        for (std::size_t i = 0; i < srcv.size(); ++i)
          CHECK_FALSE(oracle::has(em, cyc.add(srcv[i], en[tgt[wit->perm[i]]])));
      }
      const auto rc = rank_criterion_holds(m, src, nm);
      if (rc.holds) {
        ++held;
        CHECK(wit.has_value());
      }
    }
    if (n <= 3 && mm <= 6 && mn <= 6) {
      CHECK(match_matroid(m, nm).matched ==
            oracle::matroid_matched(cyc, em, as_mat(m), en, as_mat(nm)));
    }
  }
  CHECK(held > 0);
}

TEST_CASE("batched match table agrees with a direct perfect matching test") {
  const auto g = GroupSpec::cyclic(11);
  oracle::Cyc cyc{11};
  GroundSet src(g, {1, 2, 4, 7, 8});
  GroundSet tgt(g, {2, 3, 5, 9});
  for (int n = 1; n <= 3; ++n) {
    MatchTable table(src, tgt, n);
    const oracle::Set em{1, 2, 4, 7, 8};
    const oracle::Set en{2, 3, 5, 9};
    for (std::size_t s = 0; s < table.source_subsets().size(); ++s) {
      std::vector<long> sv;
      for (int i : mask_indices(table.source_subsets()[s])) sv.push_back(em[i]);
      for (std::size_t t = 0; t < table.target_subsets().size(); ++t) {
        oracle::Mat one{4, n, {table.target_subsets()[t]}};
        const bool expect = oracle::basis_matched(cyc, em, sv, en, one);
        CHECK((((table.matchable(s) >> t) & 1) == 1) == expect);
      }
    }
  }
}

TEST_CASE("brute force reference agrees with the oracle") {
  const auto g = GroupSpec::cyclic(7);
  oracle::Cyc cyc{7};
  for (std::uint64_t ma = 1; ma < 128; ma += 7)
    for (std::uint64_t mb = 2; mb < 128; mb += 6) {
      const auto a = from_mask(g, ma), b = from_mask(g, mb);
      if (a.size() != b.size() || a.size() > 6) continue;
      CHECK(brute::group_matchable(a, b) == oracle::group_matchable(cyc, values(a), values(b)));
    }
}
