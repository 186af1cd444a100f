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
#include <unordered_map>

#include "mmatch/error.hpp"
#include "mmatch/group.hpp"

namespace mmatch {

Rectification::Rectification(std::vector<std::pair<GroupElem, std::int64_t>> map)
    : map_(std::move(map)) {
  std::sort(map_.begin(), map_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

std::vector<GroupElem> Rectification::domain() const {
  std::vector<GroupElem> out;
  for (const auto& [e, v] : map_) out.push_back(e);
  return out;
}

bool Rectification::contains(const GroupElem& e) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), e,
                             [](const auto& p, const GroupElem& x) { return p.first < x; });
  return it != map_.end() && it->first == e;
}

std::int64_t Rectification::image(const GroupElem& e) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), e,
                             [](const auto& p, const GroupElem& x) { return p.first < x; });
  if (it == map_.end() || !(it->first == e)) {
    fail(ErrorCode::kNotFound, e.to_string() + " is outside the rectified domain");
  }
  return it->second;
}

bool is_freiman2(const GroupSpec& g, const Rectification& r) {
  const auto& m = r.map();
  bool has_zero = false;
  for (const auto& [e, v] : m) {
    if (!g.contains(e)) return false;
    if (e == g.zero()) {
      has_zero = true;
      if (v != 0) return false;
    }
  }
  if (!has_zero) return false;
  std::unordered_map<std::int64_t, std::int64_t> by_group;  // group-sum index -> image sum
  std::unordered_map<std::int64_t, std::int64_t> by_image;  // image sum -> group-sum index
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      auto s = g.add_index(g.index_of(m[i].first), g.index_of(m[j].first));
      if (!s) continue;
      std::int64_t t = m[i].second + m[j].second;
      auto [gi, gnew] = by_group.emplace(*s, t);
      if (!gnew && gi->second != t) return false;
      auto [ii, inew] = by_image.emplace(t, *s);
      if (!inew && ii->second != *s) return false;
    }
  }
  // Injectivity follows from pairs with 0, but check directly for clarity.
  std::vector<std::int64_t> images;
  for (const auto& [e, v] : m) images.push_back(v);
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

namespace {

class RectifySearch {
 public:
  RectifySearch(const GroupSpec& g, std::vector<std::int64_t> dom, std::int64_t bound,
                std::uint64_t budget)
      : g_(g), dom_(std::move(dom)), bound_(bound), budget_(budget) {
    const std::size_t k = dom_.size();
    sum_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sum_[i * k + j] = *g_.add_index(dom_[i], dom_[j]);
    }
    val_.assign(k, 0);
  }

  // true: found; false: exhausted.
  bool run() {
    add_pairs(0, 0);
    return step(1);
  }

  const std::vector<std::int64_t>& values() const { return val_; }

 private:
  std::int64_t s(std::size_t i, std::size_t j) const { return sum_[i * dom_.size() + j]; }

  bool consistent(std::size_t t, std::int64_t v) const {
    // New pairs (t, a) for a <= t must agree with the committed relation and
    // with each other.
    std::unordered_map<std::int64_t, std::int64_t> gl, il;
    for (std::size_t a = 0; a <= t; ++a) {
      std::int64_t gs = s(t, a);
      std::int64_t is = v + (a == t ? v : val_[a]);
      auto git = by_group_.find(gs);
      if (git != by_group_.end() && git->second.first != is) return false;
      auto iit = by_image_.find(is);
      if (iit != by_image_.end() && iit->second.first != gs) return false;
      if (git == by_group_.end() && iit != by_image_.end()) return false;
      if (iit == by_image_.end() && git != by_group_.end()) return false;
      auto [lg, ng] = gl.emplace(gs, is);
      if (!ng && lg->second != is) return false;
      auto [li, ni] = il.emplace(is, gs);
      if (!ni && li->second != gs) return false;
    }
    return true;
  }

  void add_pairs(std::size_t t, std::int64_t v) {
    val_[t] = v;
    for (std::size_t a = 0; a <= t; ++a) {
      std::int64_t gs = s(t, a);
      std::int64_t is = v + val_[a];
      auto& gp = by_group_[gs];
      gp.first = is;
      ++gp.second;
      auto& ip = by_image_[is];
      ip.first = gs;
      ++ip.second;
    }
  }

  void remove_pairs(std::size_t t) {
    for (std::size_t a = 0; a <= t; ++a) {
      std::int64_t gs = s(t, a);
      std::int64_t is = val_[t] + val_[a];
      if (--by_group_[gs].second == 0) by_group_.erase(gs);
      if (--by_image_[is].second == 0) by_image_.erase(is);
    }
  }

  std::optional<std::int64_t> forced(std::size_t t) const {
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = a; b < t; ++b) {
        std::int64_t target = s(a, b);
        if (target == s(t, t)) {
          std::int64_t twice = val_[a] + val_[b];
          if (twice % 2 != 0) return std::nullopt;
          return twice / 2;
        }
        for (std::size_t c = 0; c < t; ++c) {
          if (s(c, t) == target) return val_[a] + val_[b] - val_[c];
        }
      }
    }
    return std::nullopt;
  }

  bool has_forcing(std::size_t t) const {
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = a; b < t; ++b) {
        if (s(a, b) == s(t, t)) return true;
        for (std::size_t c = 0; c < t; ++c) {
          if (s(c, t) == s(a, b)) return true;
        }
      }
    }
    return false;
  }

  bool try_value(std::size_t t, std::int64_t v) {
    if (++nodes_ > budget_) {
      fail(ErrorCode::kBudgetExceeded, "rectification search exceeded its node budget");
    }
    if (v < -bound_ || v > bound_ || !consistent(t, v)) return false;
    add_pairs(t, v);
    if (step(t + 1)) return true;
    remove_pairs(t);
    return false;
  }

  bool step(std::size_t t) {
    if (t == dom_.size()) return true;
    if (has_forcing(t)) {
      auto v = forced(t);
      return v && try_value(t, *v);
    }
    // Only the first free element has its sign fixed; x -> -x preserves
    // every relation.
    bool symmetric = true;
    for (std::size_t a = 1; a < t; ++a) symmetric = symmetric && val_[a] == 0;
    for (std::int64_t m = 1; m <= bound_; ++m) {
      if (try_value(t, m)) return true;
      if (!symmetric && try_value(t, -m)) return true;
    }
    return false;
  }

  const GroupSpec& g_;
  std::vector<std::int64_t> dom_;
  std::int64_t bound_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int64_t> sum_;
  std::vector<std::int64_t> val_;
  std::unordered_map<std::int64_t, std::pair<std::int64_t, int>> by_group_;
  std::unordered_map<std::int64_t, std::pair<std::int64_t, int>> by_image_;
};

}  // namespace

std::optional<Rectification> rectify(const GroupSpec& g, const ElementSet& a,
                                     const RectifyOptions& options) {
  if (!(a.group() == g)) fail(ErrorCode::kInvalidArgument, "set belongs to another group");
  ElementSet dom = a;
  dom.insert_index(g.zero_index());
  std::vector<std::pair<GroupElem, std::int64_t>> map;
  if (!g.is_finite()) {
    for (const auto& e : dom.elements()) map.emplace_back(e, e.value());
    return Rectification(std::move(map));
  }
  int c = options.exponent >= 0 ? options.exponent : static_cast<int>(2 * a.size());
  c = std::min(c, 40);
  const std::int64_t bound = std::int64_t{1} << c;
  auto elems = dom.elements();

  if (g.is_cyclic()) {
    // Dilations first: x -> centered lift of lambda * x.
    const std::int64_t n = g.order();
    for (std::int64_t lambda = 1; lambda < n; ++lambda) {
      map.clear();
      bool in_bounds = true;
      for (const auto& e : elems) {
        std::int64_t r = (lambda * e.value()) % n;
        if (r > n / 2) r -= n;
        in_bounds = in_bounds && r >= -bound && r <= bound;
        map.emplace_back(e, r);
      }
      if (!in_bounds) continue;
      Rectification candidate(map);
      if (is_freiman2(g, candidate)) return candidate;
    }
  }

  std::vector<std::int64_t> order{g.zero_index()};
  for (std::int64_t i : dom.indices()) {
    if (i != g.zero_index()) order.push_back(i);
  }
  RectifySearch search(g, order, bound, options.node_budget);
  if (!search.run()) return std::nullopt;
  map.clear();
  for (std::size_t i = 0; i < order.size(); ++i) {
    map.emplace_back(g.element_at(order[i]), search.values()[i]);
  }
  Rectification result(std::move(map));
  if (!is_freiman2(g, result)) fail(ErrorCode::kInternal, "rectification search is unsound");
  return result;
}

}  // namespace mmatch
