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
#include "mmatch/matroid.hpp"
#include "oracles.hpp"

using namespace mmatch;

namespace {

GroundSet ground(int m) {
  std::vector<GroupElem> e;
  for (int i = 1; i <= m; ++i) e.emplace_back(i);
  return GroundSet(GroupSpec::cyclic(11), e);
}

Mask M(std::initializer_list<int> positions) {
  Mask m = 0;
  for (int p : positions) m |= Mask{1} << p;
  return m;
}

// The basis family a representation denotes, rebuilt from its definition.
oracle::Mat reference(const Matroid& m) {
  const int size = static_cast<int>(m.size());
  switch (m.kind()) {
    case MatroidKind::kUniform: return oracle::uniform(size, m.rank());
    case MatroidKind::kFree: return oracle::uniform(size, size);
    case MatroidKind::kChSparsePaving: return oracle::ch_sparse(size, m.rank(), m.ch_list());
    case MatroidKind::kPartition: {
      std::vector<int> block(size);
      for (std::size_t b = 0; b < m.blocks().size(); ++b)
        for (int i : mask_indices(m.blocks()[b])) block[i] = static_cast<int>(b);
      return oracle::partition(size, block, m.caps());
    }
    case MatroidKind::kBasisList: return oracle::Mat{size, m.rank(), m.basis_list()};
  }
  return {};
}

// All set partitions of 0..m-1 as block labels.
void set_partitions(int m, std::vector<int>& cur, int labels,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= labels; ++b) {
    cur.push_back(b);
    set_partitions(m, cur, std::max(labels, b + 1), out);
    cur.pop_back();
  }
}

// Sparse paving matroids of each rank, uniform and free matroids, and loopless
// partition matroids with every capacity vector, on grounds of size <= max_m.
std::vector<Matroid> zoo(int max_m) {
  std::vector<Matroid> out;
  for (int m = 1; m <= max_m; ++m) {
    const auto g = ground(m);
    out.push_back(Matroid::free(g));
    for (int n = 1; n < m; ++n) {
      out.push_back(Matroid::uniform(g, n));
      for (auto& sp : enumerate_sparse_paving(g, n)) out.push_back(std::move(sp));
    }
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    set_partitions(m, cur, 0, parts);
    for (const auto& labels : parts) {
      const int nb = *std::max_element(labels.begin(), labels.end()) + 1;
      std::vector<Mask> blocks(nb, 0);
      for (int i = 0; i < m; ++i) blocks[labels[i]] |= Mask{1} << i;
      std::vector<int> caps(nb, 1);
      while (true) {
        out.push_back(Matroid::partition(g, blocks, caps));
        int i = 0;
        while (i < nb && caps[i] == popcount(blocks[i])) caps[i++] = 1;
        if (i == nb) break;
        ++caps[i];
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rank examples") {
  const auto g4 = ground(4);
  auto part = Matroid::partition(g4, {M({0}), M({1, 2, 3})}, {1, 1});
  CHECK(part.rank(M({1, 2})) == 1);
  CHECK(Matroid::uniform(ground(5), 3).rank(0) == 0);
  auto sp = Matroid::ch_sparse_paving(g4, 2, {M({1, 2})});
  CHECK(sp.rank(M({1, 2})) == 1);
  CHECK_THROWS_AS(part.rank(M({5})), Error);
}

TEST_CASE("basis enumeration examples") {
  const auto g3 = ground(3);
  CHECK(Matroid::free(g3).bases() == std::vector<Mask>{M({0, 1, 2})});
  CHECK(Matroid::uniform(g3, 2).bases() == std::vector<Mask>{M({0, 1}), M({0, 2}), M({1, 2})});
  auto part = Matroid::partition(ground(4), {M({0}), M({1, 2, 3})}, {1, 1});
  CHECK(part.bases() == std::vector<Mask>{M({0, 1}), M({0, 2}), M({0, 3})});
}

TEST_CASE("dual examples") {
  auto u24 = Matroid::uniform(ground(4), 2);
  CHECK(u24.dual().bases() == u24.bases());
  auto free3 = Matroid::free(ground(3));
  CHECK(free3.dual().rank() == 0);
  CHECK(free3.dual().bases() == std::vector<Mask>{0});
}

TEST_CASE("circuit and hyperplane examples") {
  const auto g4 = ground(4);
  auto u24 = Matroid::uniform(g4, 2);
  CHECK(u24.circuits() == k_subsets(4, 3));
  auto part = Matroid::partition(g4, {M({0}), M({1, 2, 3})}, {1, 1});
  const auto circ = part.circuits();
  CHECK(std::find(circ.begin(), circ.end(), M({1, 2})) != circ.end());
  CHECK_FALSE(part.is_hyperplane(M({1, 2})));
  CHECK(part.is_hyperplane(M({1, 2, 3})));
  auto sp = Matroid::ch_sparse_paving(g4, 2, {M({0, 2})});
  CHECK(sp.circuit_hyperplanes() == std::vector<Mask>{M({0, 2})});
}

TEST_CASE("paving classification examples") {
  CHECK(classify_paving(Matroid::uniform(ground(5), 3)) == PavingClass::kSparsePaving);
  auto part = Matroid::partition(ground(4), {M({0}), M({1, 2, 3})}, {1, 1});
  CHECK(classify_paving(part) == PavingClass::kPaving);
  // {2,3} is a circuit and a hyperplane (its closure misses 1), so every
  // 2-subset is a basis or a circuit-hyperplane.
  auto bl = Matroid::from_bases(ground(3), {M({0, 1}), M({0, 2})});
  CHECK(classify_paving(bl) == PavingClass::kSparsePaving);
  CHECK(bl.circuit_hyperplanes() == std::vector<Mask>{M({1, 2})});
  auto sparse_not = Matroid::from_bases(ground(4), {M({0, 1}), M({0, 2}), M({0, 3})});
  CHECK(classify_paving(sparse_not) == PavingClass::kPaving);
}

TEST_CASE("loops and coloops") {
  CHECK(Matroid::free(ground(3)).coloops() == M({0, 1, 2}));
  CHECK(Matroid::uniform(ground(4), 2).coloops() == 0);
  CHECK(Matroid::from_bases(ground(3), {M({0, 1}), M({0, 2})}).coloops() == M({0}));
  CHECK_THROWS_AS(Matroid::from_bases(ground(3), {M({0, 1})}), Error);  // 2 is a loop
  CHECK_THROWS_AS(Matroid::partition(ground(3), {M({0}), M({1, 2})}, {0, 1}), Error);
}

TEST_CASE("constructor invariants") {
  const auto g4 = ground(4);
  // Two circuit-hyperplanes meeting in n-1 elements.
  try {
    (void)Matroid::ch_sparse_paving(g4, 2, {M({0, 1}), M({0, 2})});
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvariantViolation);
  }
  CHECK_THROWS_AS(Matroid::ch_sparse_paving(g4, 2, {M({0, 1}), M({2, 3}), M({0, 2})}), Error);
  CHECK_THROWS_AS(Matroid::from_bases(g4, {M({0, 1}), M({2, 3})}), Error);  // exchange fails
  CHECK_THROWS_AS(Matroid::partition(g4, {M({0, 1}), M({1, 2, 3})}, {1, 1}), Error);
  CHECK_THROWS_AS(Matroid::ch_sparse_paving(ground(3), 1, {M({0})}), Error);
}

TEST_CASE("Ferroni bound examples") {
  CHECK(ch_count_bound(Matroid::uniform(ground(4), 2)));
  CHECK(ch_count_bound(4, 2, 2));
  CHECK_FALSE(ch_count_bound(4, 2, 3));
}

TEST_CASE("sparse paving enumeration counts") {
  // Independent sets of J(4,2): empty, 6 singletons, 3 perfect matchings.
  const auto four = enumerate_sparse_paving(ground(4), 2);
  CHECK(four.size() == 10);
  int by_size[3] = {0, 0, 0};
  for (const auto& m : four) ++by_size[m.ch_list().size()];
  CHECK(by_size[0] == 1);
  CHECK(by_size[1] == 6);
  CHECK(by_size[2] == 3);
  CHECK(enumerate_sparse_paving(ground(3), 3).size() == 1);
  for (const auto& m : enumerate_sparse_paving(ground(5), 1)) CHECK(m.ch_list().empty());

  // Oracle: independent sets of the Johnson graph, counted directly.
  for (int m = 2; m <= 6; ++m)
    for (int n = 1; n < m; ++n) {
      const auto verts = k_subsets(m, n);
      std::uint64_t count = 0;
      std::vector<Mask> chosen;
      auto rec = [&](auto& self, std::size_t i) -> void {
        if (i == verts.size()) {
          ++count;
          return;
        }
        self(self, i + 1);
        if (n == 1) return;  // a rank-0 flat would be a loop
        for (Mask c : chosen)
          if (popcount(c & verts[i]) > n - 2) return;
        chosen.push_back(verts[i]);
        self(self, i + 1);
        chosen.pop_back();
      };
      rec(rec, 0);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(enumerate_sparse_paving(ground(m), n).size() == count);
    }
}

TEST_CASE("structural properties over all generated matroids with |E| <= 5") {
  for (const auto& mt : zoo(5)) {
    CAPTURE(mt.describe());
    const auto ref = reference(mt);
    const Mask all = mt.ground().all();
    auto b = mt.bases();
    CHECK(b == ref.bases);
    for (Mask x = 0; x <= all; ++x) {
      const int r = mt.rank(x);
      REQUIRE(r == oracle::rank_of(ref, x));
      CHECK(mt.is_independent(x) == (r == popcount(x)));
      for (Mask y = 0; y <= all; ++y) {
        REQUIRE(r + mt.rank(y) >= mt.rank(x | y) + mt.rank(x & y));
      }
      // Complement bound: r(E \ X) >= n - |X| for every X.
      CHECK(mt.rank(all & ~x) >= mt.rank() - popcount(x));
    }
    const auto d = mt.dual();
    std::vector<Mask> complements;
    for (Mask base : b) complements.push_back(all & ~base);
    std::sort(complements.begin(), complements.end(),
              [](Mask p, Mask q) { return lex_less(p, q); });
    CHECK(d.bases() == complements);
    CHECK(d.dual().bases() == b);

    const auto cls = classify_paving(mt);
    const bool paving_def = is_paving(mt);
    CHECK((cls != PavingClass::kNotPaving) == paving_def);
    CHECK((cls == PavingClass::kSparsePaving) ==
          (paving_def && (d.rank() == 0 || is_paving(d))));
    if (cls == PavingClass::kSparsePaving) CHECK(ch_count_bound(mt));
    if (paving_def && mt.rank() >= 1) {
      const auto hs = mt.hyperplanes();
      for (std::size_t i = 0; i < hs.size(); ++i) {
        CHECK(popcount(hs[i]) >= mt.rank() - 1);
        for (std::size_t j = i + 1; j < hs.size(); ++j)
          CHECK(popcount(hs[i] & hs[j]) <= mt.rank() - 2);
      }
      // Every (n-1)-subset lies in exactly one hyperplane.
      for (Mask s : k_subsets(mt.size(), mt.rank() - 1)) {
        int covering = 0;
        for (Mask h : hs) covering += (s & ~h) == 0 ? 1 : 0;
        CHECK(covering == 1);
      }
    }
    // Independent circuit and hyperplane definitions.
    for (Mask c : mt.circuits()) {
      CHECK(mt.rank(c) == popcount(c) - 1);
      for (int i : mask_indices(c)) CHECK(mt.is_independent(c & ~(Mask{1} << i)));
    }
    for (Mask h : mt.hyperplanes()) {
      CHECK(mt.rank(h) == mt.rank() - 1);
      for (int i = 0; i < static_cast<int>(mt.size()); ++i)
        if (!((h >> i) & 1)) CHECK(mt.rank(h | (Mask{1} << i)) == mt.rank());
    }
    CHECK(mt.loops() == 0);
  }
}

TEST_CASE("dual involution on random basis-list matroids") {
  std::mt19937_64 rng(7);
  int built = 0;
  while (built < 50) {
    const int m = 3 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % (m - 1));
    // A random uniform or partition matroid, re-expressed by its basis list.
    Matroid src = (rng() % 2) ? Matroid::uniform(ground(m), n)
                              : Matroid::partition(ground(m), {full_mask(m - 1), Mask{1} << (m - 1)},
                                                   {std::min(n, m - 1), 1});
    Matroid bl = Matroid::from_bases(src.ground(), src.bases());
    CHECK(bl.dual().dual().bases() == bl.bases());
    CHECK(brute::rank_from_bases(bl.bases(), bl.ground().all()) == bl.rank());
    ++built;
  }
}
