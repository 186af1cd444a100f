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


// Reference computations straight from the definitions, on plain integers.
// Nothing here calls into the library's decision procedures.

#ifndef MMATCH_TESTS_ORACLES_HPP_
#define MMATCH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Set = std::vector<long>;  // Sorted, distinct.

// Z/nZ when n > 0; Z when n == 0 (windows large enough to never overflow).
struct Cyc {
  long n = 0;
  long red(long v) const {
    if (n == 0) return v;
    return ((v % n) + n) % n;
  }
  long add(long a, long b) const { return red(a + b); }
};

inline bool has(const Set& s, long v) { return std::binary_search(s.begin(), s.end(), v); }

inline Set normalize(Set s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline Set sumset(const Cyc& g, const Set& a, const Set& b) {
  Set out;
  for (long x : a)
    for (long y : b) out.push_back(g.add(x, y));
  return normalize(out);
}

// All subsets of {0..n-1} of the given size, as index vectors.
inline std::vector<std::vector<int>> combos(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

inline std::uint64_t mask(const std::vector<int>& idx) {
  std::uint64_t m = 0;
  for (int i : idx) m |= std::uint64_t{1} << i;
  return m;
}

// Bijection f: A -> B with a + f(a) not in A.
inline bool group_matchable(const Cyc& g, const Set& a, const Set& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> p(b.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = !has(a, g.add(a[i], b[p[i]]));
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// A small matroid on positions 0..m-1 given by its bases.
struct Mat {
  int m = 0;
  int rank = 0;
  std::vector<std::uint64_t> bases;
};

inline int rank_of(const Mat& mt, std::uint64_t x) {
  int best = 0;
  for (auto b : mt.bases) best = std::max(best, __builtin_popcountll(b & x));
  return best;
}

inline Mat uniform(int m, int n) {
  Mat mt{m, n, {}};
  for (const auto& c : combos(m, n)) mt.bases.push_back(mask(c));
  return mt;
}

// n-subsets that are not listed circuit-hyperplanes.
inline Mat ch_sparse(int m, int n, const std::vector<std::uint64_t>& ch) {
  Mat mt{m, n, {}};
  for (const auto& c : combos(m, n)) {
    auto b = mask(c);
    if (std::find(ch.begin(), ch.end(), b) == ch.end()) mt.bases.push_back(b);
  }
  return mt;
}

// block[i] is the block of position i.
inline Mat partition(int m, const std::vector<int>& block, const std::vector<int>& caps) {
  Mat mt{m, 0, {}};
  std::vector<int> sizes(caps.size(), 0);
  for (int b : block) ++sizes[b];
  for (std::size_t i = 0; i < caps.size(); ++i) mt.rank += std::min(caps[i], sizes[i]);
  for (const auto& c : combos(m, mt.rank)) {
    std::vector<int> used(caps.size(), 0);
    bool ok = true;
    for (int i : c) ok = ok && ++used[block[i]] <= caps[block[i]];
    if (ok) mt.bases.push_back(mask(c));
  }
  return mt;
}

// Basis src of M (elements given) matched to some basis of N.
inline bool basis_matched(const Cyc& g, const Set& em, const std::vector<long>& src,
                          const Set& en_ordered, const Mat& n) {
  for (auto b : n.bases) {
    std::vector<long> tgt;
    for (int i = 0; i < n.m; ++i)
      if ((b >> i) & 1) tgt.push_back(en_ordered[i]);
    std::vector<int> p(tgt.size());
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < src.size() && ok; ++i) ok = !has(em, g.add(src[i], tgt[p[i]]));
      if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return false;
}

inline bool matroid_matched(const Cyc& g, const Set& em, const Mat& m, const Set& en,
                            const Mat& n) {
  for (auto b : m.bases) {
    std::vector<long> src;
    for (int i = 0; i < m.m; ++i)
      if ((b >> i) & 1) src.push_back(em[i]);
    if (!basis_matched(g, em, src, en, n)) return false;
  }
  return true;
}

// Some tuple of distinct x_i in F_i that is independent (in a basis) of N.
inline bool independent_transversal(const std::vector<std::uint64_t>& fam, const Mat& n) {
  std::vector<int> pick;
  auto rec = [&](auto& self, std::size_t i, std::uint64_t used) -> bool {
    if (i == fam.size()) return rank_of(n, used) == static_cast<int>(fam.size());
    for (int e = 0; e < n.m; ++e) {
      auto bit = std::uint64_t{1} << e;
      if ((fam[i] & bit) && !(used & bit) && self(self, i + 1, used | bit)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

inline bool is_subgroup(const Cyc& g, const Set& h) {
  if (!has(h, 0)) return false;
  for (long a : h)
    for (long b : h)
      if (!has(h, g.add(a, b))) return false;
  return true;
}

// {a + i x : 0 <= i < |A|} = A for some a, x.
inline bool is_progression(const Cyc& g, const Set& a) {
  if (a.size() <= 2) return true;
  for (long s : a)
    for (long t : a) {
      if (s == t) continue;
      long x = g.n == 0 ? t - s : g.red(t - s);
      Set gen;
      for (std::size_t i = 0; i < a.size(); ++i) gen.push_back(g.red(s + static_cast<long>(i) * x));
      if (normalize(gen) == a) return true;
    }
  return false;
}

}  // namespace oracle

#endif  // MMATCH_TESTS_ORACLES_HPP_
