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

#include "mmatch/additive.hpp"

#include <algorithm>
#include <tuple>

#include "mmatch/error.hpp"

namespace mmatch {

ElementSet sumset(const ElementSet& a, const ElementSet& b) {
  const GroupSpec& g = a.group();
  if (!(g == b.group())) fail(ErrorCode::kInvalidArgument, "sets belong to different groups");
  ElementSet out(g);
  auto bi = b.indices();
  for (std::int64_t i : a.indices()) {
    for (std::int64_t j : bi) {
      auto s = g.add_index(i, j);
      if (!s) {
        fail(ErrorCode::kWindowOverflow, g.element_at(i).to_string() + " + " +
                                             g.element_at(j).to_string() + " leaves " +
                                             g.to_string());
      }
      out.insert_index(*s);
    }
  }
  return out;
}

ElementSet n_fold(const ElementSet& a, int n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "n-fold sumset needs n >= 0");
  ElementSet out(a.group());
  out.insert_index(a.group().zero_index());
  for (int i = 0; i < n; ++i) out = sumset(out, a);
  return out;
}

std::size_t representation_count(const ElementSet& a, const ElementSet& b, const GroupElem& s) {
  const GroupSpec& g = a.group();
  std::size_t count = 0;
  for (const auto& x : a.elements()) {
    if (g.is_finite()) {
      count += b.contains(g.sub(s, x));
    } else {
      std::int64_t v = s.value() - x.value();
      count += v >= g.lo() && v <= g.hi() && b.contains(GroupElem(v));
    }
  }
  return count;
}

Subgroup stabilizer(const ElementSet& s) {
  const GroupSpec& g = s.group();
  if (!g.is_finite()) {
    ElementSet h(g);
    h.insert_index(g.zero_index());
    return Subgroup{h};
  }
  if (s.empty()) {
    ElementSet all(g);
    for (std::int64_t i = 0; i < g.order(); ++i) all.insert_index(i);
    return Subgroup{all};
  }
  ElementSet h(g);
  auto idx = s.indices();
  const std::int64_t minus_s0 = *g.neg_index(idx.front());
  for (std::int64_t t : idx) {
    std::int64_t cand = *g.add_index(t, minus_s0);
    bool stable = true;
    for (std::int64_t x : idx) {
      if (!s.contains_index(*g.add_index(x, cand))) {
        stable = false;
        break;
      }
    }
    if (stable) h.insert_index(cand);
  }
  return Subgroup{h};
}

KneserWitness kneser_witness(const ElementSet& a, const ElementSet& b) {
  if (a.empty() || b.empty()) fail(ErrorCode::kInvalidArgument, "Kneser needs nonempty sets");
  ElementSet sum = sumset(a, b);
  Subgroup h = stabilizer(sum);
  const auto lhs = static_cast<std::int64_t>(sum.size());
  const auto rhs = static_cast<std::int64_t>(a.size() + b.size()) -
                   static_cast<std::int64_t>(h.elements.size());
  if (lhs < rhs) fail(ErrorCode::kInternal, "Kneser size bound fails");
  if (!(sumset(sum, h.elements) == sum)) fail(ErrorCode::kInternal, "A+B+H differs from A+B");
  return KneserWitness{std::move(h), std::move(sum)};
}

const char* progression_kind_name(ProgressionKind k) {
  switch (k) {
    case ProgressionKind::kProgression: return "progression";
    case ProgressionKind::kSemiProgression: return "semi-progression";
    case ProgressionKind::kNeither: return "neither";
  }
  return "?";
}

namespace {

// Does {a + i x : i < |A|} equal A?
bool generates(const ElementSet& set, std::int64_t a, std::int64_t x) {
  const GroupSpec& g = set.group();
  std::int64_t cur = a;
  ElementSet seen(g);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!set.contains_index(cur) || seen.contains_index(cur)) return false;
    seen.insert_index(cur);
    if (i + 1 < set.size()) {
      auto next = g.add_index(cur, x);
      if (!next) return false;
      cur = *next;
    }
  }
  return true;
}

// All (initial index, difference index) pairs generating the set.
std::vector<std::pair<std::int64_t, std::int64_t>> forms(const ElementSet& set) {
  const GroupSpec& g = set.group();
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  auto idx = set.indices();
  for (std::int64_t a : idx) {
    auto minus_a = g.neg_index(a);
    for (std::int64_t b : idx) {
      if (b == a) continue;
      std::optional<std::int64_t> x;
      if (g.is_finite()) {
        x = g.add_index(b, *minus_a);
      } else {
        std::int64_t v = (b + g.lo()) - (a + g.lo());
        if (v >= g.lo() && v <= g.hi()) x = v - g.lo();
      }
      if (x && generates(set, a, *x)) out.emplace_back(a, *x);
    }
  }
  return out;
}

}  // namespace

std::optional<ProgressionForm> progression_form(const ElementSet& a) {
  const GroupSpec& g = a.group();
  if (a.empty()) return std::nullopt;
  if (a.size() == 1) return ProgressionForm{a.min(), g.zero(), 1};
  std::optional<ProgressionForm> best;
  for (auto [i, x] : forms(a)) {
    ProgressionForm f{g.element_at(i), g.element_at(x), static_cast<std::int64_t>(a.size())};
    if (!best || std::tie(f.initial, f.difference) < std::tie(best->initial, best->difference)) {
      best = f;
    }
  }
  return best;
}

std::vector<GroupElem> progression_differences(const ElementSet& a) {
  std::vector<GroupElem> out;
  for (auto [i, x] : forms(a)) out.push_back(a.group().element_at(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ProgressionClass classify_progression(const ElementSet& a) {
  if (a.empty()) fail(ErrorCode::kInvalidArgument, "classification needs a nonempty set");
  ProgressionClass c;
  if (auto f = progression_form(a)) {
    c.kind = ProgressionKind::kProgression;
    c.form = f;
    return c;
  }
  for (const auto& r : a.elements()) {
    ElementSet rest = a;
    rest.erase(r);
    if (auto f = progression_form(rest)) {
      c.kind = ProgressionKind::kSemiProgression;
      c.removed = r;
      c.form = f;
      return c;
    }
  }
  return c;
}

bool is_chowla(const ElementSet& a) {
  if (a.empty()) fail(ErrorCode::kInvalidArgument, "Chowla test needs a nonempty set");
  for (const auto& e : a.elements()) {
    if (!element_order(a.group(), e).exceeds(static_cast<std::int64_t>(a.size()))) return false;
  }
  return true;
}

bool critical_pair(const ElementSet& a, const ElementSet& b) {
  const GroupSpec& g = a.group();
  if (!g.is_finite()) fail(ErrorCode::kUnsupported, "critical pairs need a finite group");
  if (a.empty() || b.empty()) return false;
  const std::size_t s = sumset(a, b).size();
  return s + 1 == a.size() + b.size() && static_cast<std::int64_t>(s) < g.order();
}

ElementSet translate_intersection(const GroupSpec& g, std::span<const GroupElem> ordered,
                                  std::size_t n) {
  if (n == 0 || n > ordered.size()) {
    fail(ErrorCode::kInvalidArgument, "translate intersection needs 1 <= n <= |A|");
  }
  ElementSet a(g, ordered);
  if (a.size() != ordered.size()) fail(ErrorCode::kInvalidArgument, "elements must be distinct");
  ElementSet out = a.translate(g.neg(ordered[0]));
  for (std::size_t i = 1; i < n; ++i) out = out.intersect(a.translate(g.neg(ordered[i])));
  return out;
}

}  // namespace mmatch
