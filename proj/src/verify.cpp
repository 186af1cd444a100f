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
#include <charconv>

#include "mmatch/additive.hpp"
#include "mmatch/brute_force.hpp"
#include "mmatch/matching.hpp"
#include "verify_internal.hpp"

namespace mmatch {

// Bounds ---------------------------------------------------------------------

namespace {

std::int64_t to_int(std::string_view text, std::string_view key) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::kInvalidArgument,
         "bound " + std::string(key) + ": not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Bounds Bounds::parse(std::string_view text) {
  Bounds b;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      fail(ErrorCode::kInvalidArgument, "bounds entries look like key=value, got '" +
                                            std::string(item) + "'");
    }
    b.set(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
  }
  return b;
}

bool Bounds::has(std::string_view key) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == key; });
}

std::string Bounds::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  fail(ErrorCode::kInvalidArgument, "missing bound '" + std::string(key) + "'");
}

std::int64_t Bounds::get_int(std::string_view key) const { return to_int(get(key), key); }

std::pair<std::int64_t, std::int64_t> Bounds::get_range(std::string_view key) const {
  const std::string v = get(key);
  std::size_t dots = v.find("..");
  if (dots == std::string::npos) {
    std::int64_t x = to_int(v, key);
    return {x, x};
  }
  auto lo = to_int(std::string_view(v).substr(0, dots), key);
  auto hi = to_int(std::string_view(v).substr(dots + 2), key);
  if (lo > hi) fail(ErrorCode::kInvalidArgument, "empty range for bound " + std::string(key));
  return {lo, hi};
}

std::vector<GroupSpec> Bounds::get_groups(std::string_view key) const {
  std::vector<GroupSpec> out;
  const std::string v = get(key);
  std::size_t start = 0;
  while (start <= v.size()) {
    std::size_t end = v.find('|', start);
    if (end == std::string::npos) end = v.size();
    out.push_back(GroupSpec::parse(std::string_view(v).substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

void Bounds::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

Bounds Bounds::with_defaults(const Bounds& defaults) const {
  Bounds out;
  for (const auto& [k, v] : defaults.entries_) out.set(k, has(k) ? get(k) : v);
  for (const auto& [k, v] : entries_) {
    if (!defaults.has(k)) out.set(k, v);
  }
  return out;
}

Json Bounds::to_json() const {
  Json j = Json::object();
  for (const auto& [k, v] : entries_) j[k] = v;
  return j;
}

// VerdictRecord ----------------------------------------------------------------

Json verdict_to_json(const VerdictRecord& r, bool include_timing) {
  Json j;
  j["theorem"] = r.theorem;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  if (include_timing) j["runtime_ms"] = r.runtime_ms;
  j["bounds"] = r.bounds;
  j["details"] = r.details;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

namespace detail {

Run::Run(std::string theorem, const VerifyOptions& options)
    : theorem_(std::move(theorem)), options_(options), start_(std::chrono::steady_clock::now()) {}

void Run::visit() {
  ++visited_;
  if (options_.budget != 0 && visited_ > options_.budget) {
    fail(ErrorCode::kBudgetExceeded,
         theorem_ + ": more than " + std::to_string(options_.budget) + " candidate instances");
  }
}

void Run::skip(const std::string& clause, std::uint64_t count) { skipped_[clause] += count; }

void Run::conclude(bool holds, const std::function<Json()>& witness, const std::string& failure) {
  ++checked_;
  if (options_.invert_conclusion) holds = !holds;
  if (holds) return;
  ++failures_;
  if (!counterexample_) {
    Json cx;
    cx["instance"] = witness();
    cx["failure"] = failure;
    counterexample_ = std::move(cx);
  }
}

void Run::note(const std::string& key, std::int64_t delta) { notes_[key] += delta; }

void Run::set_detail(const std::string& key, Json value) { extra_[key] = std::move(value); }

bool Run::cross_check_due() {
  if (options_.xcheck == 0) return false;
  return xcheck_counter_++ % options_.xcheck == 0;
}

VerdictRecord Run::finish(Json bounds) {
  VerdictRecord r;
  r.theorem = theorem_;
  r.checked = checked_;
  r.passed = failures_ == 0;
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start_)
                     .count();
  r.bounds = std::move(bounds);
  Json d = Json::object();
  d["failures"] = failures_;
  d["visited"] = visited_;
  Json sk = Json::object();
  for (const auto& [k, v] : skipped_) sk[k] = v;
  d["skipped"] = sk;
  for (const auto& [k, v] : notes_) d[k] = v;
  for (auto it = extra_.begin(); it != extra_.end(); ++it) d[it.key()] = it.value();
  r.details = std::move(d);
  r.counterexample = counterexample_;
  return r;
}

void hypothesis(const std::string& clause) {
  fail(ErrorCode::kHypothesisViolation, "hypothesis not met: " + clause);
}

std::vector<std::vector<GroupElem>> subsets_of(const std::vector<GroupElem>& pool, std::size_t k) {
  std::vector<std::vector<GroupElem>> out;
  if (k > pool.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<GroupElem> s;
    for (std::size_t i : idx) s.push_back(pool[i]);
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<GroupElem> universe(const GroupSpec& g, const Bounds& b, const std::string& key) {
  ElementSet s(g);
  if (b.has(key)) {
    auto [lo, hi] = b.get_range(key);
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (g.is_cyclic()) {
        std::int64_t n = g.order();
        s.insert(GroupElem(((v % n) + n) % n));
      } else if (!g.is_finite()) {
        s.insert(GroupElem(v));
      } else {
        fail(ErrorCode::kInvalidArgument, "integer universes need cyclic groups or windows");
      }
    }
  } else {
    if (!g.is_finite()) fail(ErrorCode::kInvalidArgument, "integer windows need a universe bound");
    for (std::int64_t i = 0; i < g.order(); ++i) s.insert_index(i);
  }
  return s.elements();
}

bool is_translation_canonical(const ElementSet& s) {
  const GroupSpec& g = s.group();
  if (!g.is_finite() || s.empty()) return true;
  auto mine = s.indices();
  for (const auto& a : s.elements()) {
    auto t = s.translate(g.neg(a)).indices();
    if (t < mine) return false;
  }
  return true;
}

Json format_mask(const GroundSet& ground, Mask m) { return mask_to_json(ground, m); }

}  // namespace detail

// Registry ---------------------------------------------------------------------

namespace {

struct Entry {
  const char* id;
  const char* family;
  const char* defaults;
};

const Entry kEntries[] = {
    {"sym-group", "group", "g=cyclic:7"},
    {"only-if-1", "group", "g=cyclic:7,size=2..4,n=1..3"},
    {"only-if-2", "group", "g=cyclic:4|cyclic:6|cyclic:8|cyclic:9|product:2x2|product:2x3"},
    {"sparse-sym", "sparse", "g=cyclic:11,size=4..5,n=2..3"},
    {"asy-1", "sparse", "g=cyclic:11|cyclic:13,n=1..3,emax=6"},
    {"asy-2", "sparse", "g=cyclic:11|cyclic:13,n=1..3,emax=6"},
    {"asy-3", "sparse", "g=cyclic:11|cyclic:13,n=1..3,emax=6"},
    {"asy-4", "sparse", "g=cyclic:11|cyclic:13,n=1..3,emax=6"},
    {"asy-uniform", "sparse", "g=cyclic:11|cyclic:13,n=1..3,emax=6"},
    {"asy-order", "sparse", "g=zwindow:-40:40|cyclic:101,u=-6..6,n=1..3"},
    {"asy-n+1", "sparse", "g=cyclic:11|cyclic:13,n=1..5,emax=6"},
    {"asy-coloopless", "sparse", "g=cyclic:11|cyclic:13,n=1..3,emax=6"},
    {"transversal-1", "transversal", "g=zwindow:-40:40|cyclic:101,u=-8..8,n=1..3,emax=6"},
    {"transversal-2", "transversal", "g=zwindow:-40:40|cyclic:101,u=-5..5,n=1..3,emax=5"},
    {"kneser", "group", "g=cyclic:8"},
    {"kemperman", "group", "g=cyclic:7"},
    {"eliahou", "group", "g=cyclic:7|cyclic:8"},
    {"critical", "group", "g=cyclic:11,smax=10"},
    {"lemma-progression", "group", "g=zwindow:-16:16|cyclic:11,u=-8..8,size=3..5"},
    {"rado", "rado", "count=500,nmax=4,emax=8"},
    {"rank-criteria", "rado", "g=cyclic:13,count=500,nmax=3,emax=6"},
};

const Entry& entry(std::string_view id) {
  for (const auto& e : kEntries) {
    if (id == e.id) return e;
  }
  fail(ErrorCode::kUnknownTheorem, "unknown theorem id '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : kEntries) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

bool is_theorem_id(std::string_view id) {
  return std::any_of(std::begin(kEntries), std::end(kEntries),
                     [&](const Entry& e) { return id == e.id; });
}

Bounds default_bounds(std::string_view id) { return Bounds::parse(entry(id).defaults); }

VerdictRecord verify_exhaustive(const std::string& id, const Bounds& bounds,
                                const VerifyOptions& options) {
  const Entry& e = entry(id);
  Bounds b = bounds.with_defaults(default_bounds(id));
  if (std::string_view(e.family) == "rado") b.set("seed", std::to_string(options.seed));
  detail::Run run(id, options);
  const std::string_view family = e.family;
  if (family == "group") {
    detail::exhaustive_group_family(id, b, run);
  } else if (family == "sparse") {
    detail::exhaustive_sparse_family(id, b, run);
  } else if (family == "transversal") {
    detail::exhaustive_transversal_family(id, b, run);
  } else {
    detail::exhaustive_rado_family(id, b, run);
  }
  return run.finish(b.to_json());
}

VerdictRecord verify_instance(const std::string& id, const Instance& inst,
                              const VerifyOptions& options) {
  const Entry& e = entry(id);
  detail::Run run(id, options);
  const std::string_view family = e.family;
  if (family == "group") {
    detail::instance_group_family(id, inst, run);
  } else if (family == "sparse") {
    detail::instance_sparse_family(id, inst, run);
  } else if (family == "transversal") {
    detail::instance_transversal_family(id, inst, run);
  } else {
    detail::instance_rado_family(id, inst, run);
  }
  Json scope;
  scope["scope"] = "instance";
  return run.finish(scope);
}

// Ordered contexts -------------------------------------------------------------

bool OrderedContext::all_positive(std::span<const GroupElem> s) const {
  return std::all_of(s.begin(), s.end(), [&](const GroupElem& e) { return value(e) > 0; });
}

bool OrderedContext::all_negative(std::span<const GroupElem> s) const {
  return std::all_of(s.begin(), s.end(), [&](const GroupElem& e) { return value(e) < 0; });
}

GroupElem OrderedContext::max_of(std::span<const GroupElem> s) const {
  if (s.empty()) fail(ErrorCode::kInvalidArgument, "max of an empty set");
  return *std::max_element(s.begin(), s.end(), [&](const GroupElem& a, const GroupElem& b) {
    return value(a) < value(b);
  });
}

GroupElem OrderedContext::min_of(std::span<const GroupElem> s) const {
  if (s.empty()) fail(ErrorCode::kInvalidArgument, "min of an empty set");
  return *std::min_element(s.begin(), s.end(), [&](const GroupElem& a, const GroupElem& b) {
    return value(a) < value(b);
  });
}

bool OrderedContext::strictly_below(std::span<const GroupElem> a,
                                    std::span<const GroupElem> b) const {
  if (a.empty() || b.empty()) return true;
  return value(max_of(a)) < value(min_of(b));
}

bool OrderedContext::is_compatible(const GroupSpec& g) const {
  auto dom = phi_.domain();
  for (const auto& a : dom) {
    for (const auto& b : dom) {
      if (value(a) > value(b)) continue;
      for (const auto& c : dom) {
        auto ac = g.try_add(a, c);
        auto bc = g.try_add(b, c);
        if (!ac || !bc || !phi_.contains(*ac) || !phi_.contains(*bc)) continue;
        if (value(*ac) > value(*bc)) return false;
      }
    }
  }
  return true;
}

ContextResult ordered_context_on(const ElementSet& e, const ElementSet& f,
                                 const RectifyOptions& options) {
  ElementSet d = e.unite(f);
  if (e.group().is_finite()) d = d.unite(sumset(e, f));
  ContextResult out;
  try {
    auto r = rectify(e.group(), d, options);
    if (r) out.context = OrderedContext(std::move(*r));
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kBudgetExceeded) throw;
    out.inconclusive = true;
  }
  return out;
}

ContextResult build_ordered_context(const Matroid& m, const Matroid& n,
                                    const RectifyOptions& options) {
  return ordered_context_on(m.ground().to_element_set(), n.ground().to_element_set(), options);
}

// Examples -------------------------------------------------------------------

Instance example_instance(const std::string& example_id, int n, std::optional<GroupSpec> group) {
  if (example_id != "sym-counterexample" && example_id != "asy-counterexample") {
    fail(ErrorCode::kInvalidArgument, "unknown example '" + example_id +
                                          "' (sym-counterexample, asy-counterexample)");
  }
  if (n < 2) fail(ErrorCode::kInvalidArgument, "examples need n >= 2");
  if (n > brute::kMaxBruteRank) {
    fail(ErrorCode::kBudgetExceeded, "examples are reproduced for n <= 5");
  }
  GroupSpec g = group ? *group : GroupSpec::integer_window(-64, 64);
  if (g.is_finite()) {
    if (!g.is_cyclic() || g.order() <= 4 * n) {
      fail(ErrorCode::kInvalidArgument, "examples need a window or cyclic(p) with p > 4n");
    }
  } else if (g.hi() < 2 * n) {
    fail(ErrorCode::kInvalidArgument, "window too small for the ground set [2n]");
  }
  std::vector<GroupElem> ground;
  for (int i = 1; i <= 2 * n; ++i) ground.emplace_back(i);
  GroundSet gs(g, ground);
  std::vector<Mask> blocks;
  for (int i = 0; i < n - 1; ++i) blocks.push_back(Mask{1} << i);
  blocks.push_back(gs.all() & ~((Mask{1} << (n - 1)) - 1));
  Matroid partition = Matroid::partition(gs, blocks, std::vector<int>(n, 1));
  Instance inst(g);
  if (example_id == "sym-counterexample") {
    inst.add_matroid("M", partition);
    inst.add_matroid("N", partition);
  } else {
    inst.add_matroid("M", Matroid::uniform(gs, n));
    inst.add_matroid("N", partition);
  }
  return inst;
}

VerdictRecord reproduce_example(const std::string& example_id, int n,
                                std::optional<GroupSpec> group, const VerifyOptions& options) {
  Instance inst = example_instance(example_id, n, group);
  detail::Run run(example_id, options);
  run.visit();
  const Matroid& m = inst.matroid("M");
  const Matroid& nm = inst.matroid("N");
  const Mask first_n = (Mask{1} << n) - 1;
  auto w = match_basis(m, first_n, nm);
  bool brute_ok = brute::basis_matchable(m, first_n, nm);
  MatchReport rep = match_matroid(m, nm);
  if (w.has_value() != brute_ok) fail(ErrorCode::kInternal, "engine and oracle disagree on [n]");
  const bool confirmed = !w && !rep.matched && rep.failing_basis == first_n;
  run.conclude(confirmed, [&] { return instance_to_json(inst); },
               "basis [n] is matched or is not the first failing basis");
  run.set_detail("failing_basis", rep.failing_basis ? mask_to_json(m.ground(), *rep.failing_basis)
                                                    : Json());
  run.set_detail("bases_checked", rep.bases_checked);
  run.set_detail("failing_bases", rep.failures);
  Json scope;
  scope["example"] = example_id;
  scope["n"] = n;
  scope["g"] = inst.group.to_string();
  return run.finish(scope);
}

}  // namespace mmatch
