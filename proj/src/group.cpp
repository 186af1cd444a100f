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

#include "mmatch/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "mmatch/error.hpp"

namespace mmatch {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kSchemaViolation: return "schema-violation";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
    case ErrorCode::kElementOutOfGroup: return "element-out-of-group";
    case ErrorCode::kElementNotInGround: return "element-not-in-ground";
    case ErrorCode::kWindowOverflow: return "window-overflow";
    case ErrorCode::kSizeMismatch: return "size-mismatch";
    case ErrorCode::kZeroInTarget: return "zero-in-B";
    case ErrorCode::kRankMismatch: return "rank-mismatch";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kHypothesisViolation: return "hypothesis-violation";
    case ErrorCode::kUnknownTheorem: return "unknown-theorem";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

std::int64_t ExtendedNat::value() const {
  if (infinite_) fail(ErrorCode::kInvalidArgument, "value() of infinity");
  return value_;
}

std::string ExtendedNat::to_string() const {
  return infinite_ ? "infinite" : std::to_string(value_);
}

GroupElem GroupElem::of(std::initializer_list<std::int64_t> coords) {
  return from_coords(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

GroupElem GroupElem::from_coords(std::span<const std::int64_t> coords) {
  if (coords.empty() || coords.size() > kMaxFactors) {
    fail(ErrorCode::kInvalidArgument, "element needs 1 to 3 coordinates");
  }
  GroupElem e;
  e.dim_ = coords.size();
  std::copy(coords.begin(), coords.end(), e.coords_.begin());
  return e;
}

std::string GroupElem::to_string() const {
  if (dim_ == 1) return std::to_string(coords_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (a.coords_[i] != b.coords_[i]) return a.coords_[i] <=> b.coords_[i];
  }
  return std::strong_ordering::equal;
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::kInvalidArgument, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::int64_t n) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "cyclic(n) requires n >= 2");
  if (n > kMaxIndexSpace) fail(ErrorCode::kInvalidArgument, "cyclic order too large");
  GroupSpec g;
  g.kind_ = GroupKind::kCyclic;
  g.factors_[0] = n;
  g.dim_ = 1;
  g.finish();
  return g;
}

GroupSpec GroupSpec::product(std::span<const std::int64_t> factors) {
  if (factors.empty() || factors.size() > kMaxFactors) {
    fail(ErrorCode::kInvalidArgument, "product groups take 1 to 3 factors");
  }
  std::int64_t total = 1;
  for (std::int64_t f : factors) {
    if (f < 2) fail(ErrorCode::kInvalidArgument, "product factors must be >= 2");
    total *= f;
    if (total > kMaxProductOrder) {
      fail(ErrorCode::kInvalidArgument, "product groups are limited to order 64");
    }
  }
  GroupSpec g;
  g.kind_ = GroupKind::kProduct;
  g.dim_ = factors.size();
  std::copy(factors.begin(), factors.end(), g.factors_.begin());
  g.finish();
  return g;
}

GroupSpec GroupSpec::integer_window(std::int64_t lo, std::int64_t hi) {
  if (!(lo <= 0 && 0 <= hi)) {
    fail(ErrorCode::kInvalidArgument, "integer window must satisfy lo <= 0 <= hi");
  }
  if (hi - lo + 1 > kMaxIndexSpace) {
    fail(ErrorCode::kInvalidArgument, "integer window too wide");
  }
  GroupSpec g;
  g.kind_ = GroupKind::kIntegerWindow;
  g.lo_ = lo;
  g.hi_ = hi;
  g.finish();
  return g;
}

void GroupSpec::finish() {
  if (kind_ == GroupKind::kIntegerWindow) {
    space_ = hi_ - lo_ + 1;
    return;
  }
  space_ = 1;
  for (std::size_t i = 0; i < dim_; ++i) space_ *= factors_[i];
}

GroupSpec GroupSpec::parse(std::string_view text) {
  auto parts = split(text, ':');
  if (parts[0] == "cyclic" && parts.size() == 2) return cyclic(parse_int(parts[1]));
  if (parts[0] == "product" && parts.size() == 2) {
    std::vector<std::int64_t> f;
    for (auto p : split(parts[1], 'x')) f.push_back(parse_int(p));
    return product(f);
  }
  if (parts[0] == "zwindow" && parts.size() == 3) {
    return integer_window(parse_int(parts[1]), parse_int(parts[2]));
  }
  fail(ErrorCode::kInvalidArgument, "unrecognized group '" + std::string(text) +
                                        "' (expected cyclic:N, product:AxB, zwindow:LO:HI)");
}

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case GroupKind::kCyclic:
      return "cyclic:" + std::to_string(factors_[0]);
    case GroupKind::kProduct: {
      std::string s = "product:";
      for (std::size_t i = 0; i < dim_; ++i) {
        if (i) s += "x";
        s += std::to_string(factors_[i]);
      }
      return s;
    }
    case GroupKind::kIntegerWindow:
      return "zwindow:" + std::to_string(lo_) + ":" + std::to_string(hi_);
  }
  return "?";
}

std::int64_t GroupSpec::order() const {
  if (!is_finite()) fail(ErrorCode::kUnsupported, "integer windows have no finite order");
  return space_;
}

bool GroupSpec::contains(const GroupElem& e) const {
  if (e.dim() != dim_) return false;
  if (kind_ == GroupKind::kIntegerWindow) return e.value() >= lo_ && e.value() <= hi_;
  for (std::size_t i = 0; i < dim_; ++i) {
    std::int64_t c = e.coords()[i];
    if (c < 0 || c >= factors_[i]) return false;
  }
  return true;
}

void GroupSpec::require(const GroupElem& e) const {
  if (!contains(e)) {
    fail(ErrorCode::kElementOutOfGroup,
         "element " + e.to_string() + " is not a canonical element of " + to_string());
  }
}

std::int64_t GroupSpec::index_of(const GroupElem& e) const {
  if (kind_ == GroupKind::kIntegerWindow) return e.value() - lo_;
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < dim_; ++i) idx = idx * factors_[i] + e.coords()[i];
  return idx;
}

GroupElem GroupSpec::element_at(std::int64_t index) const {
  if (kind_ == GroupKind::kIntegerWindow) return GroupElem(index + lo_);
  std::array<std::int64_t, kMaxFactors> c{};
  for (std::size_t i = dim_; i-- > 0;) {
    c[i] = index % factors_[i];
    index /= factors_[i];
  }
  return GroupElem::from_coords(std::span<const std::int64_t>(c.data(), dim_));
}

GroupElem GroupSpec::zero() const {
  return element_at(zero_index());
}

std::optional<GroupElem> GroupSpec::try_add(const GroupElem& a, const GroupElem& b) const {
  if (kind_ == GroupKind::kIntegerWindow) {
    std::int64_t s = a.value() + b.value();
    if (s < lo_ || s > hi_) return std::nullopt;
    return GroupElem(s);
  }
  std::array<std::int64_t, kMaxFactors> c{};
  for (std::size_t i = 0; i < dim_; ++i) {
    c[i] = mod(a.coords()[i] + b.coords()[i], factors_[i]);
  }
  return GroupElem::from_coords(std::span<const std::int64_t>(c.data(), dim_));
}

std::optional<GroupElem> GroupSpec::try_neg(const GroupElem& a) const {
  if (kind_ == GroupKind::kIntegerWindow) {
    std::int64_t v = -a.value();
    if (v < lo_ || v > hi_) return std::nullopt;
    return GroupElem(v);
  }
  std::array<std::int64_t, kMaxFactors> c{};
  for (std::size_t i = 0; i < dim_; ++i) c[i] = mod(-a.coords()[i], factors_[i]);
  return GroupElem::from_coords(std::span<const std::int64_t>(c.data(), dim_));
}

GroupElem GroupSpec::add(const GroupElem& a, const GroupElem& b) const {
  auto s = try_add(a, b);
  if (!s) {
    fail(ErrorCode::kWindowOverflow, a.to_string() + " + " + b.to_string() +
                                         " leaves " + to_string());
  }
  return *s;
}

GroupElem GroupSpec::neg(const GroupElem& a) const {
  auto s = try_neg(a);
  if (!s) fail(ErrorCode::kWindowOverflow, "-" + a.to_string() + " leaves " + to_string());
  return *s;
}

GroupElem GroupSpec::sub(const GroupElem& a, const GroupElem& b) const {
  if (kind_ == GroupKind::kIntegerWindow) {
    std::int64_t s = a.value() - b.value();
    if (s < lo_ || s > hi_) {
      fail(ErrorCode::kWindowOverflow, a.to_string() + " - " + b.to_string() +
                                           " leaves " + to_string());
    }
    return GroupElem(s);
  }
  return add(a, neg(b));
}

std::optional<std::int64_t> GroupSpec::add_index(std::int64_t i, std::int64_t j) const {
  switch (kind_) {
    case GroupKind::kCyclic: {
      std::int64_t s = i + j;
      return s >= factors_[0] ? s - factors_[0] : s;
    }
    case GroupKind::kIntegerWindow: {
      std::int64_t s = i + j + lo_;
      if (s < 0 || s >= space_) return std::nullopt;
      return s;
    }
    case GroupKind::kProduct: {
      std::int64_t out = 0;
      std::int64_t scale = 1;
      for (std::size_t k = dim_; k-- > 0;) {
        std::int64_t f = factors_[k];
        std::int64_t c = (i % f + j % f) % f;
        out += c * scale;
        scale *= f;
        i /= f;
        j /= f;
      }
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> GroupSpec::neg_index(std::int64_t i) const {
  switch (kind_) {
    case GroupKind::kCyclic:
      return i == 0 ? 0 : factors_[0] - i;
    case GroupKind::kIntegerWindow: {
      std::int64_t v = -(i + lo_);
      if (v < lo_ || v > hi_) return std::nullopt;
      return v - lo_;
    }
    case GroupKind::kProduct: {
      std::int64_t out = 0;
      std::int64_t scale = 1;
      for (std::size_t k = dim_; k-- > 0;) {
        std::int64_t f = factors_[k];
        out += ((f - i % f) % f) * scale;
        scale *= f;
        i /= f;
      }
      return out;
    }
  }
  return std::nullopt;
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == GroupKind::kIntegerWindow) return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  return a.dim_ == b.dim_ &&
         std::equal(a.factors_.begin(), a.factors_.begin() + a.dim_, b.factors_.begin());
}

// ElementSet ---------------------------------------------------------------

ElementSet::ElementSet(const GroupSpec& group)
    : group_(group), words_((group.index_space() + 63) / 64, 0) {}

ElementSet::ElementSet(const GroupSpec& group, std::span<const GroupElem> elements)
    : ElementSet(group) {
  for (const auto& e : elements) insert(e);
}

ElementSet::ElementSet(const GroupSpec& group, std::initializer_list<std::int64_t> values)
    : ElementSet(group) {
  for (std::int64_t v : values) insert(GroupElem(v));
}

bool ElementSet::contains(const GroupElem& e) const {
  return group_.contains(e) && contains_index(group_.index_of(e));
}

void ElementSet::insert(const GroupElem& e) {
  group_.require(e);
  insert_index(group_.index_of(e));
}

void ElementSet::insert_index(std::int64_t index) {
  std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if ((words_[index >> 6] & bit) == 0) {
    words_[index >> 6] |= bit;
    ++count_;
  }
}

void ElementSet::erase(const GroupElem& e) {
  if (!contains(e)) return;
  std::int64_t index = group_.index_of(e);
  words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
  --count_;
}

std::vector<std::int64_t> ElementSet::indices() const {
  std::vector<std::int64_t> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = __builtin_ctzll(bits);
      out.push_back(static_cast<std::int64_t>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<GroupElem> ElementSet::elements() const {
  std::vector<GroupElem> out;
  out.reserve(count_);
  for (std::int64_t i : indices()) out.push_back(group_.element_at(i));
  return out;
}

GroupElem ElementSet::min() const {
  if (empty()) fail(ErrorCode::kInvalidArgument, "min of empty set");
  return group_.element_at(indices().front());
}

GroupElem ElementSet::max() const {
  if (empty()) fail(ErrorCode::kInvalidArgument, "max of empty set");
  return group_.element_at(indices().back());
}

void ElementSet::check_same_group(const ElementSet& other) const {
  if (!(group_ == other.group_)) {
    fail(ErrorCode::kInvalidArgument, "sets belong to different groups");
  }
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_same_group(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  check_same_group(other);
  ElementSet out = *this;
  for (std::int64_t i : other.indices()) out.insert_index(i);
  return out;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  check_same_group(other);
  ElementSet out(group_);
  for (std::int64_t i : indices()) {
    if (other.contains_index(i)) out.insert_index(i);
  }
  return out;
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  check_same_group(other);
  ElementSet out(group_);
  for (std::int64_t i : indices()) {
    if (!other.contains_index(i)) out.insert_index(i);
  }
  return out;
}

ElementSet ElementSet::translate(const GroupElem& t) const {
  group_.require(t);
  std::int64_t ti = group_.index_of(t);
  ElementSet out(group_);
  for (std::int64_t i : indices()) {
    auto s = group_.add_index(i, ti);
    if (!s) {
      fail(ErrorCode::kWindowOverflow, t.to_string() + " + " +
                                           group_.element_at(i).to_string() +
                                           " leaves " + group_.to_string());
    }
    out.insert_index(*s);
  }
  return out;
}

ElementSet ElementSet::negate() const {
  ElementSet out(group_);
  for (std::int64_t i : indices()) {
    auto s = group_.neg_index(i);
    if (!s) {
      fail(ErrorCode::kWindowOverflow,
           "-" + group_.element_at(i).to_string() + " leaves " + group_.to_string());
    }
    out.insert_index(*s);
  }
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& e : elements()) {
    if (!first) s += ",";
    s += e.to_string();
    first = false;
  }
  return s + "}";
}

bool operator==(const ElementSet& a, const ElementSet& b) {
  return a.group_ == b.group_ && a.words_ == b.words_;
}

// Orders and subgroups -------------------------------------------------------

ExtendedNat element_order(const GroupSpec& g, const GroupElem& a) {
  g.require(a);
  if (!g.is_finite()) {
    return a.value() == 0 ? ExtendedNat::finite(1) : ExtendedNat::infinite();
  }
  std::int64_t order = 1;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::int64_t n = g.factors()[i];
    std::int64_t c = a.coords()[i];
    std::int64_t component = n / std::gcd(c, n);
    order = std::lcm(order, component);
  }
  return ExtendedNat::finite(order);
}

ExtendedNat p_of_group(const GroupSpec& g) {
  if (!g.is_finite()) return ExtendedNat::infinite();
  std::int64_t n = g.order();
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return ExtendedNat::finite(d);
  }
  return ExtendedNat::finite(n);
}

Subgroup generated_subgroup(const GroupSpec& g, std::span<const GroupElem> generators) {
  if (!g.is_finite()) fail(ErrorCode::kUnsupported, "subgroups of integer windows");
  std::vector<std::int64_t> gens;
  for (const auto& e : generators) {
    g.require(e);
    gens.push_back(g.index_of(e));
  }
  ElementSet h(g);
  std::vector<std::int64_t> frontier{g.zero_index()};
  h.insert_index(g.zero_index());
  while (!frontier.empty()) {
    std::int64_t x = frontier.back();
    frontier.pop_back();
    for (std::int64_t s : gens) {
      std::int64_t y = *g.add_index(x, s);
      if (!h.contains_index(y)) {
        h.insert_index(y);
        frontier.push_back(y);
      }
    }
  }
  return Subgroup{std::move(h)};
}

std::vector<Subgroup> enumerate_subgroups(const GroupSpec& g) {
  if (!g.is_finite()) fail(ErrorCode::kUnsupported, "enumerate_subgroups needs a finite group");
  std::vector<Subgroup> out;
  if (g.is_cyclic()) {
    std::int64_t n = g.order();
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      GroupElem gen(n / d % n);
      out.push_back(generated_subgroup(g, std::span<const GroupElem>(&gen, 1)));
    }
  } else {
    std::set<std::vector<std::int64_t>> seen;
    std::vector<Subgroup> queue{generated_subgroup(g, {})};
    seen.insert(queue.front().elements.indices());
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto members = queue[q].elements.elements();
      for (std::int64_t i = 0; i < g.order(); ++i) {
        if (queue[q].elements.contains_index(i)) continue;
        std::vector<GroupElem> gens = members;
        gens.push_back(g.element_at(i));
        Subgroup h = generated_subgroup(g, gens);
        if (seen.insert(h.elements.indices()).second) queue.push_back(std::move(h));
      }
    }
    out = std::move(queue);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements.indices() < b.elements.indices();
  });
  return out;
}

}  // namespace mmatch
