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
#include <map>

#include "mmatch/brute_force.hpp"
#include "mmatch/matching.hpp"
#include "verify_internal.hpp"

namespace mmatch::detail {

namespace {

using Block = std::vector<GroupElem>;  // Sorted in the context order.
using Blocks = std::vector<Block>;

void sort_by(const OrderedContext& ctx, Block& b) {
  std::sort(b.begin(), b.end(),
            [&](const GroupElem& x, const GroupElem& y) { return ctx.value(x) < ctx.value(y); });
}

Block flatten(const Blocks& bs) {
  Block out;
  for (const auto& b : bs) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::optional<std::string> common_clause(const OrderedContext& ctx, const Blocks& e,
                                         const Blocks& f) {
  if (e.size() != f.size() || e.empty()) return "same number n >= 1 of blocks";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].size() != f[i].size()) return "|E_i| = |E'_i|";
  }
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (!ctx.strictly_below(e[i], e[i + 1]) || !ctx.strictly_below(f[i], f[i + 1])) {
      return "E_i < E_j and E'_i < E'_j for i < j";
    }
  }
  return std::nullopt;
}

std::optional<std::string> t1_clause(const OrderedContext& ctx, const Blocks& e, const Blocks& f,
                                     bool negative) {
  if (auto c = common_clause(ctx, e, f)) return c;
  const Block all_e = flatten(e);
  const Block all_f = flatten(f);
  if (!negative) {
    if (!ctx.all_positive(all_e) || !ctx.all_positive(all_f)) return "E and E' positive";
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (!(e[i].size() > e[i + 1].size())) return "|E_i| > |E_j| for i < j";
    }
    if (ctx.value(ctx.max_of(all_e)) > ctx.value(ctx.max_of(all_f))) return "max E <= max E'";
  } else {
    if (!ctx.all_negative(all_e) || !ctx.all_negative(all_f)) return "E and E' negative";
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (!(e[i].size() < e[i + 1].size())) return "|E_i| < |E_j| for i < j";
    }
    if (ctx.value(ctx.min_of(all_f)) > ctx.value(ctx.min_of(all_e))) return "min E' <= min E";
  }
  return std::nullopt;
}

bool negation_of(const GroupSpec& g, const Block& a, const Block& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : b) {
    auto y = g.try_neg(x);
    if (!y || std::find(a.begin(), a.end(), *y) == a.end()) return false;
  }
  return true;
}

// k is 1-based.
std::optional<std::string> t2_clause(const OrderedContext& ctx, const GroupSpec& g,
                                     const Blocks& e, const Blocks& f, std::size_t k) {
  if (auto c = common_clause(ctx, e, f)) return c;
  const std::size_t n = e.size();
  if (k < 1 || k > n) return "k in [n]";
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == k) continue;
    const auto& a = e[i - 1];
    const auto& b = f[i - 1];
    if (i < k && (!ctx.all_negative(a) || !ctx.all_negative(b))) {
      return "E_i and E'_i negative for i < k";
    }
    if (i > k && (!ctx.all_positive(a) || !ctx.all_positive(b))) {
      return "E_i and E'_i positive for i > k";
    }
  }
  if (!negation_of(g, e[k - 1], f[k - 1])) return "E_k = -E'_k";
  for (std::size_t i = k + 1; i < n; ++i) {
    if (!(e[i - 1].size() > e[i].size())) return "|E_i| > |E_j| for k < i < j";
  }
  for (std::size_t i = 2; i < k; ++i) {
    if (!(e[i - 1].size() > e[i - 2].size())) return "|E_i| > |E_j| for j < i < k";
  }
  const Block all_e = flatten(e);
  const Block all_f = flatten(f);
  if (k != n && ctx.value(ctx.max_of(all_e)) > ctx.value(ctx.max_of(all_f))) {
    return "max E <= max E'";
  }
  if (k != 1 && ctx.value(ctx.min_of(all_f)) > ctx.value(ctx.min_of(all_e))) {
    return "min E' <= min E";
  }
  return std::nullopt;
}

std::optional<std::size_t> first_k(const OrderedContext& ctx, const GroupSpec& g, const Blocks& e,
                                   const Blocks& f) {
  for (std::size_t k = 1; k <= e.size(); ++k) {
    if (!t2_clause(ctx, g, e, f, k)) return k;
  }
  return std::nullopt;
}

Matroid transversal(const GroupSpec& g, const Blocks& bs) {
  Block all = flatten(bs);
  std::sort(all.begin(), all.end(),
            [&](const GroupElem& x, const GroupElem& y) { return g.index_of(x) < g.index_of(y); });
  GroundSet ground(g, all);
  std::vector<Mask> masks;
  for (const auto& b : bs) masks.push_back(ground.mask_of(b));
  return Matroid::partition(ground, masks, std::vector<int>(bs.size(), 1));
}

void check_pair(Run& run, const Matroid& m, const Matroid& n) {
  MatchReport rep = match_matroid(m, n);
  if (run.cross_check_due()) {
    if (brute::matroid_matched(m, n) != rep.matched) {
      fail(ErrorCode::kInternal, "match_matroid disagrees with the brute-force oracle");
    }
    run.note("cross_checked");
  }
  std::string failure;
  if (rep.failing_basis) {
    failure = "basis " + m.ground().to_element_set(*rep.failing_basis).to_string() +
              " of M is not matched to N";
  }
  run.conclude(rep.matched,
               [&] {
                 Instance inst(m.ground().group());
                 inst.add_matroid("M", m);
                 inst.add_matroid("N", n);
                 return instance_to_json(inst);
               },
               failure);
}

std::vector<std::vector<std::size_t>> compositions(std::size_t total, std::size_t parts) {
  std::vector<std::vector<std::size_t>> out;
  if (parts == 0) return out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left, std::size_t slots) -> void {
    if (slots == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (std::size_t s = 1; s + slots - 1 <= left; ++s) {
      cur.push_back(s);
      self(self, left - s, slots - 1);
      cur.pop_back();
    }
  };
  if (total >= parts) rec(rec, total, parts);
  return out;
}

// Consecutive split of a context-sorted list.
Blocks split(const Block& sorted, const std::vector<std::size_t>& sizes) {
  Blocks out;
  std::size_t at = 0;
  for (std::size_t s : sizes) {
    out.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(at),
                     sorted.begin() + static_cast<std::ptrdiff_t>(at + s));
    at += s;
  }
  return out;
}

struct Universe {
  OrderedContext ctx;
  Block nonzero;  // Sorted in the context order.
};

std::optional<Universe> ordered_universe(Run& run, const GroupSpec& g, const Bounds& b) {
  const auto pool = universe(g, b, "u");
  ElementSet uset(g, pool);
  uset.insert(g.zero());
  ContextResult cr = ordered_context_on(uset, uset);
  if (!cr.context) {
    run.skip(cr.inconclusive ? "compatible order (search inconclusive)" : "compatible order exists");
    return std::nullopt;
  }
  if (!cr.context->is_compatible(g)) fail(ErrorCode::kInternal, "rectified order is not compatible");
  Block nz;
  for (const auto& e : pool) {
    if (!(e == g.zero())) nz.push_back(e);
  }
  sort_by(*cr.context, nz);
  return Universe{*cr.context, nz};
}

void exhaustive_t1(const Bounds& b, Run& run) {
  auto [nlo, nhi] = b.get_range("n");
  const std::int64_t emax = b.get_int("emax");
  for (const GroupSpec& g : b.get_groups("g")) {
    auto u = ordered_universe(run, g, b);
    if (!u) continue;
    for (bool negative : {false, true}) {
      Block side;
      for (const auto& e : u->nonzero) {
        if ((u->ctx.value(e) < 0) == negative) side.push_back(e);
      }
      for (std::int64_t n = std::max<std::int64_t>(nlo, 1); n <= nhi; ++n) {
        for (std::int64_t total = n; total <= emax; ++total) {
          for (const auto& comp : compositions(static_cast<std::size_t>(total),
                                               static_cast<std::size_t>(n))) {
            bool monotone = true;
            for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
              if (negative ? comp[i] >= comp[i + 1] : comp[i] <= comp[i + 1]) monotone = false;
            }
            if (!monotone) continue;
            const auto sets = subsets_of(side, static_cast<std::size_t>(total));
            for (const auto& se : sets) {
              const Blocks e = split(se, comp);
              for (const auto& sf : sets) {
                const Blocks f = split(sf, comp);
                run.visit();
                if (auto c = t1_clause(u->ctx, e, f, negative)) {
                  run.skip(*c);
                  continue;
                }
                run.note(negative ? "negative_variant" : "positive_variant");
                check_pair(run, transversal(g, e), transversal(g, f));
              }
            }
          }
        }
      }
    }
  }
}

void exhaustive_t2(const Bounds& b, Run& run) {
  auto [nlo, nhi] = b.get_range("n");
  const std::int64_t emax = b.get_int("emax");
  for (const GroupSpec& g : b.get_groups("g")) {
    auto u = ordered_universe(run, g, b);
    if (!u) continue;
    const OrderedContext& ctx = u->ctx;
    for (std::int64_t n = std::max<std::int64_t>(nlo, 1); n <= nhi; ++n) {
      for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
        for (std::int64_t total = n; total <= emax; ++total) {
          for (const auto& comp : compositions(static_cast<std::size_t>(total),
                                               static_cast<std::size_t>(n))) {
            // Signs of the blocks other than k are fixed by their side of k.
            std::vector<Blocks> valid;
            std::map<std::vector<std::int64_t>, std::vector<std::size_t>> by_k;
            for (const auto& s : subsets_of(u->nonzero, static_cast<std::size_t>(total))) {
              Blocks bs = split(s, comp);
              bool ok = true;
              for (std::size_t i = 1; i <= bs.size() && ok; ++i) {
                if (i < k) ok = ctx.all_negative(bs[i - 1]);
                if (i > k) ok = ctx.all_positive(bs[i - 1]);
              }
              if (!ok) continue;
              std::vector<std::int64_t> key;
              for (const auto& x : bs[k - 1]) key.push_back(g.index_of(x));
              std::sort(key.begin(), key.end());
              by_k[key].push_back(valid.size());
              valid.push_back(std::move(bs));
            }
            for (const auto& e : valid) {
              std::vector<std::int64_t> key;
              bool fits = true;
              for (const auto& x : e[k - 1]) {
                auto y = g.try_neg(x);
                if (!y) {
                  fits = false;
                  break;
                }
                key.push_back(g.index_of(*y));
              }
              if (!fits) continue;
              std::sort(key.begin(), key.end());
              auto it = by_k.find(key);
              if (it == by_k.end()) continue;
              for (std::size_t fi : it->second) {
                const Blocks& f = valid[fi];
                run.visit();
                if (auto c = t2_clause(ctx, g, e, f, k)) {
                  run.skip(*c);
                  continue;
                }
                // Count each pair once, under its least admissible k.
                if (first_k(ctx, g, e, f) != k) {
                  run.note("repeated_under_smaller_k");
                  continue;
                }
                run.note("k=" + std::to_string(k));
                check_pair(run, transversal(g, e), transversal(g, f));
              }
            }
          }
        }
      }
    }
  }
}

Blocks blocks_of(const Matroid& m, const OrderedContext& ctx) {
  if (m.kind() != MatroidKind::kPartition) hypothesis("M and N transversal (partition) matroids");
  for (int c : m.caps()) {
    if (c != 1) hypothesis("every block capacity 1");
  }
  Blocks out;
  for (Mask bm : m.blocks()) {
    Block b = m.ground().subset(bm);
    sort_by(ctx, b);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

void exhaustive_transversal_family(const std::string& id, const Bounds& b, Run& run) {
  if (id == "transversal-1") {
    exhaustive_t1(b, run);
  } else {
    exhaustive_t2(b, run);
  }
}

void instance_transversal_family(const std::string& id, const Instance& inst, Run& run) {
  const GroupSpec& g = inst.group;
  const Matroid& m = inst.matroid("M");
  const Matroid& n = inst.matroid("N");
  if (m.kind() != MatroidKind::kPartition || n.kind() != MatroidKind::kPartition) {
    hypothesis("M and N transversal (partition) matroids");
  }
  ContextResult cr = build_ordered_context(m, n);
  if (!cr.context) {
    hypothesis(cr.inconclusive ? "compatible order (search inconclusive)"
                               : "compatible total order on E u E' u (E+E') u {0}");
  }
  const OrderedContext& ctx = *cr.context;
  if (!ctx.is_compatible(g)) fail(ErrorCode::kInternal, "rectified order is not compatible");
  const Blocks e = blocks_of(m, ctx);
  const Blocks f = blocks_of(n, ctx);
  run.visit();
  if (id == "transversal-1") {
    auto pos = t1_clause(ctx, e, f, false);
    auto neg = t1_clause(ctx, e, f, true);
    if (pos && neg) hypothesis(*pos + " (or the negative counterpart: " + *neg + ")");
    run.set_detail("variant", pos ? "negative" : "positive");
  } else {
    auto k = first_k(ctx, g, e, f);
    if (!k) {
      // Report the clause failing for k = 1 as the most informative one.
      hypothesis(*t2_clause(ctx, g, e, f, 1) + " (no k in [n] works)");
    }
    run.set_detail("k", *k);
  }
  check_pair(run, m, n);
}

}  // namespace mmatch::detail
