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
#include "mmatch/additive.hpp"
#include "oracles.hpp"

using namespace mmatch;

namespace {

GroupElem E(std::int64_t v) { return GroupElem(v); }

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

}  // namespace

TEST_CASE("sumset examples") {
  const auto c5 = GroupSpec::cyclic(5);
  CHECK(values(sumset(ElementSet(c5, {1, 2}), ElementSet(c5, {1, 3}))) ==
        oracle::Set{0, 2, 3, 4});
  ElementSet a(c5, {1, 4});
  CHECK(sumset(a, ElementSet(c5, {0})) == a);
  const auto c4 = GroupSpec::cyclic(4);
  CHECK(values(n_fold(ElementSet(c4, {0, 2}), 2)) == oracle::Set{0, 2});
  CHECK(values(n_fold(ElementSet(c4, {1}), 0)) == oracle::Set{0});
  const auto w = GroupSpec::integer_window(-5, 5);
  CHECK_THROWS_AS(sumset(ElementSet(w, {3}), ElementSet(w, {4})), Error);
}

TEST_CASE("sumsets and representation counts agree with the oracle") {
  for (int n : {5, 6, 8}) {
    const auto g = GroupSpec::cyclic(n);
    oracle::Cyc cyc{n};
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t ma = 1; ma <= full; ma += 3)
      for (std::uint64_t mb = 1; mb <= full; mb += 5) {
        const auto a = from_mask(g, ma), b = from_mask(g, mb);
        const auto s = values(sumset(a, b));
        REQUIRE(s == oracle::sumset(cyc, values(a), values(b)));
        for (long x : s) {
          std::size_t reps = 0;
          for (long u : values(a))
            for (long v : values(b)) reps += cyc.add(u, v) == x ? 1 : 0;
          CHECK(representation_count(a, b, E(x)) == reps);
        }
      }
  }
}

TEST_CASE("stabilizer examples") {
  const auto c4 = GroupSpec::cyclic(4);
  CHECK(values(stabilizer(ElementSet(c4, {0, 2})).elements) == oracle::Set{0, 2});
  CHECK(values(stabilizer(ElementSet(c4, {0, 1})).elements) == oracle::Set{0});
  CHECK(values(stabilizer(ElementSet(c4, {0, 1, 2, 3})).elements) == oracle::Set{0, 1, 2, 3});
  const auto w = GroupSpec::integer_window(-9, 9);
  CHECK(values(stabilizer(ElementSet(w, {1, 2, 3})).elements) == oracle::Set{0});
}

TEST_CASE("Kneser witness examples") {
  const auto c4 = GroupSpec::cyclic(4);
  auto k1 = kneser_witness(ElementSet(c4, {0, 2}), ElementSet(c4, {0, 2}));
  CHECK(values(k1.h.elements) == oracle::Set{0, 2});
  const auto c7 = GroupSpec::cyclic(7);
  auto k2 = kneser_witness(ElementSet(c7, {1, 2}), ElementSet(c7, {3}));
  CHECK(values(k2.h.elements) == oracle::Set{0});
  CHECK(k2.sum.size() == 2);
  const auto c6 = GroupSpec::cyclic(6);
  auto k3 = kneser_witness(ElementSet(c6, {0, 3}), ElementSet(c6, {1, 4}));
  CHECK(values(k3.sum) == oracle::Set{1, 4});
  CHECK(values(k3.h.elements) == oracle::Set{0, 3});
}

TEST_CASE("Kneser holds with an oracle stabilizer on Z/6") {
  const auto g = GroupSpec::cyclic(6);
  oracle::Cyc cyc{6};
  for (std::uint64_t ma = 1; ma < 64; ++ma)
    for (std::uint64_t mb = 1; mb < 64; ++mb) {
      const auto a = from_mask(g, ma), b = from_mask(g, mb);
      const auto w = kneser_witness(a, b);
      const auto s = oracle::sumset(cyc, values(a), values(b));
      oracle::Set h;
      for (long t = 0; t < 6; ++t) {
        oracle::Set moved;
        for (long x : s) moved.push_back(cyc.add(x, t));
        if (oracle::normalize(moved) == s) h.push_back(t);
      }
      REQUIRE(values(w.h.elements) == h);
      CHECK(s.size() + h.size() >= values(a).size() + values(b).size());
    }
}

TEST_CASE("progression classification examples") {
  const auto w = GroupSpec::integer_window(-50, 50);
  auto c = classify_progression(ElementSet(w, {3, 5, 7}));
  REQUIRE(c.kind == ProgressionKind::kProgression);
  CHECK(c.form->initial == E(3));
  CHECK(c.form->difference == E(2));
  CHECK(c.form->length == 3);
  CHECK(classify_progression(ElementSet(w, {4, 9})).kind == ProgressionKind::kProgression);
  auto single = progression_form(ElementSet(w, {4}));
  REQUIRE(single.has_value());
  CHECK(single->difference == E(0));
  CHECK(classify_progression(ElementSet(w, {0, 1, 3, 7})).kind == ProgressionKind::kNeither);
  auto semi = classify_progression(ElementSet(w, {0, 1, 2, 7}));
  REQUIRE(semi.kind == ProgressionKind::kSemiProgression);
  CHECK(*semi.removed == E(7));
}

TEST_CASE("progression detection agrees with the oracle") {
  for (int n : {7, 8, 11}) {
    const auto g = GroupSpec::cyclic(n);
    oracle::Cyc cyc{n};
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      const auto a = from_mask(g, m);
      const auto v = values(a);
      const bool prog = oracle::is_progression(cyc, v);
      const auto cls = classify_progression(a);
      REQUIRE((cls.kind == ProgressionKind::kProgression) == prog);
      if (!prog) {
        bool semi = false;
        for (std::size_t i = 0; i < v.size() && !semi; ++i) {
          auto rest = v;
          rest.erase(rest.begin() + static_cast<long>(i));
          semi = oracle::is_progression(cyc, rest);
        }
        CHECK((cls.kind == ProgressionKind::kSemiProgression) == semi);
      }
      if (v.size() >= 2 && prog) {
        for (const auto& x : progression_differences(a)) {
          // Some initial element generates A with difference x.
          bool found = false;
          for (long s : v) {
            oracle::Set gen;
            for (std::size_t i = 0; i < v.size(); ++i)
              gen.push_back(cyc.red(s + static_cast<long>(i) * x.value()));
            found = found || oracle::normalize(gen) == v;
          }
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("Chowla sets") {
  CHECK(is_chowla(ElementSet(GroupSpec::cyclic(7), {1, 2, 3})));
  CHECK_FALSE(is_chowla(ElementSet(GroupSpec::cyclic(6), {1, 3})));
  CHECK(is_chowla(ElementSet(GroupSpec::integer_window(-9, 9), {-4, 2, 7})));
}

TEST_CASE("critical pairs") {
  const auto c7 = GroupSpec::cyclic(7);
  CHECK(critical_pair(ElementSet(c7, {1, 2}), ElementSet(c7, {3, 4})));
  CHECK_FALSE(critical_pair(ElementSet(c7, {1, 2}), ElementSet(c7, {3, 5})));
  const auto c5 = GroupSpec::cyclic(5);
  ElementSet all(c5, {0, 1, 2, 3, 4});
  CHECK_FALSE(critical_pair(all, all));
}

TEST_CASE("translate intersection examples") {
  const auto w = GroupSpec::integer_window(-20, 20);
  CHECK(values(translate_intersection(w, std::vector<GroupElem>{E(0), E(1), E(3)}, 2)) ==
        oracle::Set{0});
  CHECK(values(translate_intersection(w, std::vector<GroupElem>{E(0), E(1), E(2)}, 2)) ==
        oracle::Set{0, 1});
  const auto c11 = GroupSpec::cyclic(11);
  const std::vector<GroupElem> a{E(2), E(5), E(6), E(9)};
  for (std::size_t n = 1; n <= a.size(); ++n)
    CHECK(translate_intersection(c11, a, n).contains(E(0)));
}

TEST_CASE("sum of two progressions with one difference is a progression with it") {
  for (int p : {11, 13}) {
    const auto g = GroupSpec::cyclic(p);
    for (int x = 1; x < p; ++x)
      for (int la = 1; la <= 4; ++la)
        for (int lb = 1; lb <= 4; ++lb)
          for (int a0 : {0, 3})
            for (int b0 : {1, 5}) {
              ElementSet a(g), b(g);
              for (int i = 0; i < la; ++i) a.insert(E((a0 + i * x) % p));
              for (int i = 0; i < lb; ++i) b.insert(E((b0 + i * x) % p));
              const auto s = sumset(a, b);
              if (s.size() == static_cast<std::size_t>(p)) continue;
              const auto diffs = progression_differences(s);
              const bool has_x = std::find(diffs.begin(), diffs.end(), E(x)) != diffs.end();
              CHECK((has_x || s.size() == 1));
            }
  }
}
