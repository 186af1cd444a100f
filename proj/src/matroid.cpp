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

#include "mmatch/matroid.hpp"

#include <algorithm>

#include "mmatch/error.hpp"

namespace mmatch {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (m - k + i) / i;
    if (r > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

void k_subsets_rec(std::size_t m, std::size_t k, std::size_t start, Mask cur,
                   std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + k <= m; ++i) {
    k_subsets_rec(m, k - 1, i + 1, cur | (Mask{1} << i), out);
  }
}

bool size_lex_less(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  return lex_less(a, b);
}

std::string mask_string(const GroundSet& g, Mask m) {
  std::string s = "{";
  bool first = true;
  for (const auto& e : g.subset(m)) {
    if (!first) s += ",";
    s += e.to_string();
    first = false;
  }
  return s + "}";
}

}  // namespace

std::vector<Mask> k_subsets(std::size_t m, std::size_t k) {
  if (m > kMaxGround) fail(ErrorCode::kInvalidArgument, "ground set larger than 64");
  std::vector<Mask> out;
  if (k > m) return out;
  k_subsets_rec(m, k, 0, 0, out);
  return out;
}

// GroundSet ----------------------------------------------------------------

GroundSet::GroundSet(const GroupSpec& group, std::vector<GroupElem> elements)
    : group_(group), elems_(std::move(elements)) {
  if (elems_.size() > kMaxGround) {
    fail(ErrorCode::kInvalidArgument, "ground sets are limited to 64 elements");
  }
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    group_.require(elems_[i]);
    pos_.emplace_back(group_.index_of(elems_[i]), i);
  }
  std::sort(pos_.begin(), pos_.end());
  for (std::size_t i = 1; i < pos_.size(); ++i) {
    if (pos_[i].first == pos_[i - 1].first) {
      fail(ErrorCode::kInvariantViolation,
           "duplicate ground element " + group_.element_at(pos_[i].first).to_string());
    }
  }
}

GroundSet::GroundSet(const GroupSpec& group, std::initializer_list<std::int64_t> values)
    : GroundSet(group, [&] {
        std::vector<GroupElem> v;
        for (std::int64_t x : values) v.emplace_back(x);
        return v;
      }()) {}

GroundSet GroundSet::of(const ElementSet& set) {
  return GroundSet(set.group(), set.elements());
}

std::optional<std::size_t> GroundSet::position(const GroupElem& e) const {
  if (!group_.contains(e)) return std::nullopt;
  std::int64_t idx = group_.index_of(e);
  auto it = std::lower_bound(pos_.begin(), pos_.end(), std::make_pair(idx, std::size_t{0}));
  if (it == pos_.end() || it->first != idx) return std::nullopt;
  return it->second;
}

Mask GroundSet::mask_of(std::span<const GroupElem> subset) const {
  Mask m = 0;
  for (const auto& e : subset) {
    auto p = position(e);
    if (!p) fail(ErrorCode::kElementNotInGround, e.to_string() + " is not in the ground set");
    m |= Mask{1} << *p;
  }
  return m;
}

std::vector<GroupElem> GroundSet::subset(Mask m) const {
  std::vector<GroupElem> out;
  for (int i : mask_indices(m)) out.push_back(elems_[i]);
  return out;
}

ElementSet GroundSet::to_element_set(Mask m) const {
  ElementSet s(group_);
  for (int i : mask_indices(m)) s.insert(elems_[i]);
  return s;
}

const char* paving_class_name(PavingClass c) {
  switch (c) {
    case PavingClass::kNotPaving: return "not-paving";
    case PavingClass::kPaving: return "paving";
    case PavingClass::kSparsePaving: return "sparse-paving";
  }
  return "?";
}

const char* matroid_kind_name(MatroidKind k) {
  switch (k) {
    case MatroidKind::kUniform: return "uniform";
    case MatroidKind::kFree: return "free";
    case MatroidKind::kBasisList: return "bases";
    case MatroidKind::kChSparsePaving: return "ch";
    case MatroidKind::kPartition: return "partition";
  }
  return "?";
}

// Matroid ------------------------------------------------------------------

Matroid Matroid::uniform(GroundSet ground, int rank) {
  if (rank < 0 || static_cast<std::size_t>(rank) > ground.size()) {
    fail(ErrorCode::kInvariantViolation, "uniform rank must lie in [0, |E|]");
  }
  if (rank == 0 && ground.size() > 0) {
    fail(ErrorCode::kInvariantViolation, "rank-0 uniform matroid has loops");
  }
  Matroid m(std::move(ground), MatroidKind::kUniform);
  m.rank_ = rank;
  return m;
}

Matroid Matroid::free(GroundSet ground) {
  Matroid m(std::move(ground), MatroidKind::kFree);
  m.rank_ = static_cast<int>(m.ground_.size());
  return m;
}

Matroid Matroid::bases_unchecked(GroundSet ground, std::vector<Mask> bases) {
  Matroid m(std::move(ground), MatroidKind::kBasisList);
  std::sort(bases.begin(), bases.end(), lex_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  m.rank_ = bases.empty() ? 0 : popcount(bases.front());
  m.basis_set_.insert(bases.begin(), bases.end());
  m.basis_list_ = std::move(bases);
  return m;
}

Matroid Matroid::from_bases(GroundSet ground, std::vector<Mask> bases) {
  if (bases.empty()) fail(ErrorCode::kInvariantViolation, "basis list is empty");
  const Mask all = ground.all();
  const int n = popcount(bases.front());
  Mask covered = 0;
  std::vector<Mask> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::kInvariantViolation, "basis list has duplicates");
  }
  for (Mask b : bases) {
    if (b & ~all) fail(ErrorCode::kElementNotInGround, "basis uses elements outside the ground set");
    if (popcount(b) != n) fail(ErrorCode::kInvariantViolation, "bases differ in size");
    covered |= b;
  }
  Matroid m = bases_unchecked(ground, std::move(bases));
  for (Mask b1 : m.basis_list_) {
    for (Mask b2 : m.basis_list_) {
      for (int x : mask_indices(b1 & ~b2)) {
        bool ok = false;
        for (int y : mask_indices(b2 & ~b1)) {
          Mask c = (b1 & ~(Mask{1} << x)) | (Mask{1} << y);
          if (m.basis_set_.count(c)) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          fail(ErrorCode::kInvariantViolation,
               "basis exchange fails for " + mask_string(m.ground_, b1) + " and " +
                   mask_string(m.ground_, b2));
        }
      }
    }
  }
  if (covered != all) {
    fail(ErrorCode::kInvariantViolation,
         "matroid has loops " + mask_string(m.ground_, all & ~covered));
  }
  return m;
}

bool ch_count_bound(std::size_t ground_size, int rank, std::size_t lambda) {
  const std::uint64_t c = binomial(ground_size, rank);
  const std::uint64_t factor = std::max<std::int64_t>(
      rank + 1, static_cast<std::int64_t>(ground_size) - rank + 1);
  return static_cast<unsigned __int128>(lambda) * factor <= c;
}

bool ch_count_bound(const Matroid& m) {
  return ch_count_bound(m.size(), m.rank(), m.circuit_hyperplanes(kMaxGround).size());
}

Matroid Matroid::ch_sparse_paving(GroundSet ground, int rank, std::vector<Mask> ch) {
  const std::size_t size = ground.size();
  if (rank < 0 || static_cast<std::size_t>(rank) > size) {
    fail(ErrorCode::kInvariantViolation, "rank must lie in [0, |E|]");
  }
  const Mask all = ground.all();
  std::sort(ch.begin(), ch.end(), lex_less);
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (ch[i] & ~all) fail(ErrorCode::kElementNotInGround, "circuit-hyperplane outside ground set");
    if (popcount(ch[i]) != rank) {
      fail(ErrorCode::kInvariantViolation, "circuit-hyperplanes must have size equal to the rank");
    }
    if (i > 0 && ch[i] == ch[i - 1]) {
      fail(ErrorCode::kInvariantViolation, "duplicate circuit-hyperplane");
    }
  }
  for (std::size_t i = 0; i < ch.size(); ++i) {
    for (std::size_t j = i + 1; j < ch.size(); ++j) {
      if (popcount(ch[i] & ch[j]) > rank - 2) {
        fail(ErrorCode::kInvariantViolation,
             "circuit-hyperplanes too close: " + mask_string(ground, ch[i]) + " and " +
                 mask_string(ground, ch[j]) + " share more than rank-2 elements");
      }
    }
  }
  if (ch.size() >= binomial(size, rank)) {
    fail(ErrorCode::kInvariantViolation, "circuit-hyperplanes leave no basis");
  }
  const std::uint64_t through = size == 0 || rank == 0 ? 0 : binomial(size - 1, rank - 1);
  for (std::size_t e = 0; e < size; ++e) {
    std::uint64_t hits = 0;
    for (Mask h : ch) hits += (h >> e) & 1;
    if (hits == through) {
      fail(ErrorCode::kInvariantViolation,
           "element " + ground.at(e).to_string() + " is a loop");
    }
  }
  if (!ch_count_bound(size, rank, ch.size())) {
    fail(ErrorCode::kInvariantViolation, "too many circuit-hyperplanes for the rank");
  }
  Matroid m(std::move(ground), MatroidKind::kChSparsePaving);
  m.rank_ = rank;
  m.ch_set_.insert(ch.begin(), ch.end());
  m.ch_ = std::move(ch);
  return m;
}

Matroid Matroid::partition(GroundSet ground, std::vector<Mask> blocks, std::vector<int> caps) {
  if (blocks.size() != caps.size()) {
    fail(ErrorCode::kInvariantViolation, "partition needs one capacity per block");
  }
  Mask seen = 0;
  int rank = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] & ~ground.all()) fail(ErrorCode::kElementNotInGround, "block outside ground set");
    if (blocks[i] & seen) fail(ErrorCode::kInvariantViolation, "partition blocks overlap");
    seen |= blocks[i];
    if (caps[i] < 0 || caps[i] > popcount(blocks[i])) {
      fail(ErrorCode::kInvariantViolation, "capacity must lie in [0, |E_i|]");
    }
    if (caps[i] == 0 && blocks[i] != 0) {
      fail(ErrorCode::kInvariantViolation, "a zero-capacity block consists of loops");
    }
    rank += caps[i];
  }
  if (seen != ground.all()) fail(ErrorCode::kInvariantViolation, "blocks do not cover the ground set");
  Matroid m(std::move(ground), MatroidKind::kPartition);
  m.rank_ = rank;
  m.blocks_ = std::move(blocks);
  m.caps_ = std::move(caps);
  return m;
}

void Matroid::check_mask(Mask x) const {
  if (x & ~ground_.all()) {
    fail(ErrorCode::kElementNotInGround, "subset uses elements outside the ground set");
  }
}

int Matroid::rank(Mask x) const {
  check_mask(x);
  const int size = popcount(x);
  switch (kind_) {
    case MatroidKind::kUniform:
      return std::min(size, rank_);
    case MatroidKind::kFree:
      return size;
    case MatroidKind::kBasisList: {
      int best = 0;
      for (Mask b : basis_list_) {
        best = std::max(best, popcount(b & x));
        if (best == size) break;
      }
      return best;
    }
    case MatroidKind::kChSparsePaving:
      if (size < rank_) return size;
      if (size == rank_) return ch_set_.count(x) ? rank_ - 1 : rank_;
      return rank_;
    case MatroidKind::kPartition: {
      int r = 0;
      for (std::size_t i = 0; i < blocks_.size(); ++i) {
        r += std::min(popcount(blocks_[i] & x), caps_[i]);
      }
      return r;
    }
  }
  return 0;
}

bool Matroid::is_basis(Mask x) const {
  check_mask(x);
  if (popcount(x) != rank_) return false;
  if (kind_ == MatroidKind::kBasisList) return basis_set_.count(x) != 0;
  return rank(x) == rank_;
}

std::vector<Mask> Matroid::bases(std::uint64_t limit) const {
  if (kind_ == MatroidKind::kBasisList) return basis_list_;
  if (binomial(size(), rank_) > limit) {
    fail(ErrorCode::kBudgetExceeded, "too many candidate bases to enumerate");
  }
  std::vector<Mask> out;
  for (Mask x : k_subsets(size(), rank_)) {
    if (is_basis(x)) out.push_back(x);
  }
  return out;
}

Matroid Matroid::dual() const {
  std::vector<Mask> complements;
  for (Mask b : bases()) complements.push_back(ground_.all() & ~b);
  return bases_unchecked(ground_, std::move(complements));
}

namespace {

void require_small(std::size_t size, std::size_t max_ground) {
  if (size > max_ground || size > 30) {
    fail(ErrorCode::kBudgetExceeded, "ground set too large for exhaustive subset enumeration");
  }
}

}  // namespace

std::vector<Mask> Matroid::circuits(std::size_t max_ground) const {
  require_small(size(), max_ground);
  std::vector<Mask> out;
  for (Mask x = 1; x <= ground_.all() && x != 0; ++x) {
    if (is_independent(x)) continue;
    bool minimal = true;
    for (int i : mask_indices(x)) {
      if (!is_independent(x & ~(Mask{1} << i))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
    if (x == ground_.all()) break;
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

bool Matroid::is_hyperplane(Mask x) const {
  if (rank(x) != rank_ - 1) return false;
  for (int e : mask_indices(ground_.all() & ~x)) {
    if (rank(x | (Mask{1} << e)) != rank_) return false;
  }
  return true;
}

std::vector<Mask> Matroid::hyperplanes(std::size_t max_ground) const {
  require_small(size(), max_ground);
  std::vector<Mask> out;
  if (rank_ == 0) return out;
  for (Mask x = 0;; ++x) {
    if (is_hyperplane(x)) out.push_back(x);
    if (x == ground_.all()) break;
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

std::vector<Mask> Matroid::circuit_hyperplanes(std::size_t max_ground) const {
  if (kind_ == MatroidKind::kChSparsePaving) return ch_;
  if (kind_ == MatroidKind::kUniform || kind_ == MatroidKind::kFree) return {};
  auto hs = hyperplanes(max_ground);
  std::vector<Mask> out;
  for (Mask h : hs) {
    if (is_independent(h)) continue;
    bool minimal = true;
    for (int i : mask_indices(h)) {
      if (!is_independent(h & ~(Mask{1} << i))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(h);
  }
  return out;
}

Mask Matroid::loops() const {
  Mask out = 0;
  for (std::size_t e = 0; e < size(); ++e) {
    if (rank(Mask{1} << e) == 0) out |= Mask{1} << e;
  }
  return out;
}

Mask Matroid::coloops() const {
  Mask out = 0;
  for (std::size_t e = 0; e < size(); ++e) {
    if (rank(ground_.all() & ~(Mask{1} << e)) < rank_) out |= Mask{1} << e;
  }
  return out;
}

std::string Matroid::describe() const {
  std::string s = matroid_kind_name(kind_);
  s += "(rank=" + std::to_string(rank_) + ") on " + mask_string(ground_, ground_.all());
  return s;
}

// Paving -------------------------------------------------------------------

bool is_paving(const Matroid& m) {
  if (m.kind() == MatroidKind::kUniform || m.kind() == MatroidKind::kFree ||
      m.kind() == MatroidKind::kChSparsePaving || m.rank() <= 1) {
    return true;
  }
  for (Mask x : k_subsets(m.size(), m.rank() - 1)) {
    if (!m.is_independent(x)) return false;
  }
  return true;
}

PavingClass classify_paving(const Matroid& m) {
  if (!is_paving(m)) return PavingClass::kNotPaving;
  const std::uint64_t candidates = binomial(m.size(), m.rank());
  bool bonin = true;
  if (m.kind() != MatroidKind::kUniform && m.kind() != MatroidKind::kFree &&
      m.kind() != MatroidKind::kChSparsePaving) {
    if (candidates > (1u << 22)) {
      fail(ErrorCode::kBudgetExceeded, "too many n-subsets for the sparse paving test");
    }
    for (Mask x : k_subsets(m.size(), m.rank())) {
      if (!m.is_basis(x) && !m.is_hyperplane(x)) {
        bonin = false;
        break;
      }
    }
  }
  // The representation shortcut above is itself cross-checked.
  if (candidates <= (1u << 16)) {
    bool definitional = is_paving(m.dual());
    if (m.kind() != MatroidKind::kBasisList && m.kind() != MatroidKind::kPartition) {
      // Shortcut kinds were classified without scanning; scan now.
      bool scanned = true;
      for (Mask x : k_subsets(m.size(), m.rank())) {
        if (!m.is_basis(x) && !m.is_hyperplane(x)) scanned = false;
      }
      if (scanned != bonin) fail(ErrorCode::kInternal, "sparse paving shortcut disagrees");
    }
    if (definitional != bonin) {
      fail(ErrorCode::kInternal, "sparse paving criterion disagrees with duality test");
    }
  }
  return bonin ? PavingClass::kSparsePaving : PavingClass::kPaving;
}

// Census -------------------------------------------------------------------

std::vector<Matroid> enumerate_sparse_paving(const GroundSet& ground, int rank,
                                             std::uint64_t limit) {
  if (rank < 0 || static_cast<std::size_t>(rank) > ground.size()) {
    fail(ErrorCode::kInvalidArgument, "rank must lie in [0, |E|]");
  }
  if (binomial(ground.size(), rank) > 64) {
    fail(ErrorCode::kBudgetExceeded, "census needs C(|E|, n) <= 64");
  }
  const std::vector<Mask> verts = k_subsets(ground.size(), rank);
  const std::size_t v = verts.size();
  std::vector<Mask> adj(v, 0);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (i != j && popcount(verts[i] & verts[j]) == rank - 1) adj[i] |= Mask{1} << j;
    }
  }
  const Mask all_verts = full_mask(v);
  std::vector<Matroid> out;
  std::vector<std::size_t> chosen;
  auto emit = [&](Mask sel) {
    Mask covered = 0;
    for (std::size_t i = 0; i < v; ++i) {
      if (!((sel >> i) & 1)) covered |= verts[i];
    }
    if (sel == all_verts || covered != ground.all()) return;
    if (out.size() >= limit) fail(ErrorCode::kBudgetExceeded, "census exceeds its limit");
    std::vector<Mask> ch;
    for (std::size_t i : chosen) ch.push_back(verts[i]);
    out.push_back(Matroid::ch_sparse_paving(ground, rank, std::move(ch)));
  };
  auto dfs = [&](auto&& self, std::size_t start, Mask sel, Mask forbidden) -> void {
    emit(sel);
    for (std::size_t i = start; i < v; ++i) {
      if ((forbidden >> i) & 1) continue;
      chosen.push_back(i);
      self(self, i + 1, sel | (Mask{1} << i), forbidden | adj[i]);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0, 0);
  return out;
}

}  // namespace mmatch
