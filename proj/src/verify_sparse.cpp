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
#include <tuple>

#include "mmatch/additive.hpp"
#include "mmatch/brute_force.hpp"
#include "mmatch/matching.hpp"
#include "verify_internal.hpp"

namespace mmatch::detail {

namespace {

enum class FamilyKind { kSparse, kUniform, kCircuit };

// A rank-n matroid on positions 0..m-1, stored in the shapes the batched
// checks consume. Targets are the n-subsets in k_subsets order.
struct Family {
  std::vector<Mask> ch;  // Circuit-hyperplanes (kSparse).
  Mask circuit = 0;      // The unique circuit (kCircuit, m = n+1).
  std::uint64_t ch_t = 0;
  std::uint64_t bases_t = 0;
  bool coloopless = true;
  PavingClass paving = PavingClass::kSparsePaving;
};

std::size_t target_index(const std::vector<Mask>& targets, Mask t) {
  auto it = std::find(targets.begin(), targets.end(), t);
  if (it == targets.end()) fail(ErrorCode::kInternal, "subset missing from the target list");
  return static_cast<std::size_t>(it - targets.begin());
}

Mask coloops_of(std::uint64_t bases_t, const std::vector<Mask>& targets, std::size_t m) {
  Mask all = full_mask(m);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if ((bases_t >> t) & 1u) all &= targets[t];
  }
  return all;
}

GroundSet abstract_ground(std::size_t m) {
  std::vector<GroupElem> e;
  for (std::size_t i = 0; i < m; ++i) e.emplace_back(static_cast<std::int64_t>(i + 1));
  return GroundSet(GroupSpec::cyclic(64), e);
}

Matroid family_matroid(FamilyKind kind, const Family& f, const GroundSet& ground, int n) {
  if (kind == FamilyKind::kCircuit) {
    std::vector<Mask> bases;
    for (int c : mask_indices(f.circuit)) bases.push_back(ground.all() & ~(Mask{1} << c));
    std::sort(bases.begin(), bases.end(), [](Mask a, Mask b) { return lex_less(a, b); });
    return Matroid::from_bases(ground, bases);
  }
  if (f.ch.empty()) return Matroid::uniform(ground, n);
  return Matroid::ch_sparse_paving(ground, n, f.ch);
}

const std::vector<Family>& families(FamilyKind kind, std::size_t m, int n) {
  static std::map<std::tuple<int, std::size_t, int>, std::vector<Family>> cache;
  auto key = std::make_tuple(static_cast<int>(kind), m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const std::vector<Mask> targets = k_subsets(m, static_cast<std::size_t>(n));
  const std::uint64_t all_t = full_mask(targets.size());
  std::vector<Family> out;
  if (kind == FamilyKind::kUniform) {
    Family f;
    f.bases_t = all_t;
    f.coloopless = coloops_of(f.bases_t, targets, m) == 0;
    out.push_back(f);
  } else if (kind == FamilyKind::kSparse) {
    for (const Matroid& mat : enumerate_sparse_paving(abstract_ground(m), n)) {
      Family f;
      f.ch = mat.ch_list();
      for (Mask h : f.ch) f.ch_t |= std::uint64_t{1} << target_index(targets, h);
      f.bases_t = all_t & ~f.ch_t;
      f.coloopless = coloops_of(f.bases_t, targets, m) == 0;
      out.push_back(std::move(f));
    }
  } else {
    if (m != static_cast<std::size_t>(n) + 1) fail(ErrorCode::kInternal, "circuit families need m = n+1");
    const GroundSet ground = abstract_ground(m);
    for (Mask c = 1; c <= full_mask(m); ++c) {
      if (popcount(c) < 2) continue;
      Family f;
      f.circuit = c;
      for (int x : mask_indices(c)) {
        f.bases_t |= std::uint64_t{1} << target_index(targets, full_mask(m) & ~(Mask{1} << x));
      }
      f.coloopless = c == full_mask(m);
      f.paving = classify_paving(family_matroid(kind, f, ground, n));
      out.push_back(std::move(f));
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

// Per-source data of one (E(M), E(N)) pair. The rank criterion splits into
// a part independent of N and a residual test against the family.
struct SourceInfo {
  Mask source = 0;
  std::uint64_t matchable = 0;
  bool sparse_ok = true;
  std::uint64_t need_ch_t = 0;  // U_i of size n that must be circuit-hyperplanes.
  bool circuit_ok = true;
  Mask need_c = ~Mask{0};  // The circuit must lie inside this set.
};

std::vector<SourceInfo> source_infos(const MatchTable& table, int n) {
  std::vector<SourceInfo> out;
  const auto& sources = table.source_subsets();
  const auto& targets = table.target_subsets();
  for (std::size_t si = 0; si < sources.size(); ++si) {
    SourceInfo info;
    info.source = sources[si];
    info.matchable = table.matchable(si);
    const auto a = mask_indices(sources[si]);
    for (Mask jm = 1; jm < (Mask{1} << n); ++jm) {
      Mask u = ~Mask{0};
      for (int i : mask_indices(jm)) u &= table.forbidden(static_cast<std::size_t>(a[i]));
      const int j = popcount(jm);
      const int t = n - j;
      const int s = popcount(u);
      if (j == 1) {
        if (s == n) {
          info.need_ch_t |= std::uint64_t{1} << target_index(targets, u);
        } else if (s > n) {
          info.sparse_ok = false;
        }
      } else if (s > t) {
        info.sparse_ok = false;
      }
      if (s == t + 1) {
        info.need_c &= u;
      } else if (s > t + 1) {
        info.circuit_ok = false;
      }
    }
    out.push_back(info);
  }
  return out;
}

bool criterion(FamilyKind kind, const Family& f, const SourceInfo& s) {
  if (kind == FamilyKind::kCircuit) return s.circuit_ok && (f.circuit & ~s.need_c) == 0;
  return s.sparse_ok && (s.need_ch_t & ~f.ch_t) == 0;
}

struct Tally {
  std::int64_t criterion_held = 0;
  std::int64_t without_witness = 0;
  std::int64_t cross_checked = 0;
  void flush(Run& run) {
    run.note("criterion_held", criterion_held);
    run.note("criterion_held_without_witness", without_witness);
    run.note("cross_checked", cross_checked);
    *this = Tally{};
  }
};

Json pair_witness(const Matroid& m, const Matroid& n) {
  Instance inst(m.ground().group());
  inst.add_matroid("M", m);
  inst.add_matroid("N", n);
  return instance_to_json(inst);
}

// One batched instance. `sources` selects the bases of M among the table's
// source subsets.
void check_family(Run& run, Tally& tally, FamilyKind kind, const Family& f,
                  const std::vector<SourceInfo>& infos, std::uint64_t sources,
                  const GroundSet& gm, const GroundSet& gn, int n, bool m_is_n) {
  run.visit();
  bool matched = true;
  bool unsound = false;
  std::optional<Mask> failing;
  std::vector<bool> crit(infos.size(), false);
  for (std::size_t si = 0; si < infos.size(); ++si) {
    if (!((sources >> si) & 1u)) continue;
    const SourceInfo& s = infos[si];
    const bool ok = (s.matchable & f.bases_t) != 0;
    crit[si] = criterion(kind, f, s);
    if (crit[si]) {
      ++tally.criterion_held;
      if (!ok) {
        ++tally.without_witness;
        unsound = true;
      }
    }
    if (!ok && matched) {
      matched = false;
      failing = s.source;
    }
  }
  auto build = [&] {
    Matroid nm = family_matroid(kind, f, gn, n);
    Matroid mm = m_is_n ? nm : Matroid::uniform(gm, n);
    return std::make_pair(mm, nm);
  };
  if (run.cross_check_due()) {
    auto [mm, nm] = build();
    MatchReport rep = match_matroid(mm, nm);
    if (rep.matched != matched || rep.failing_basis != failing) {
      fail(ErrorCode::kInternal, "batched table disagrees with match_matroid");
    }
    for (std::size_t si = 0; si < infos.size(); ++si) {
      if (!((sources >> si) & 1u)) continue;
      if (rank_criterion_holds(mm, infos[si].source, nm).holds != crit[si]) {
        fail(ErrorCode::kInternal, "batched rank criterion disagrees with the direct evaluation");
      }
    }
    if (n <= 3 && brute::matroid_matched(mm, nm) != matched) {
      fail(ErrorCode::kInternal, "batched table disagrees with the brute-force oracle");
    }
    ++tally.cross_checked;
  }
  std::string failure;
  if (unsound) {
    failure = "rank criterion holds but no matching exists";
  } else if (failing) {
    failure = "basis " + gm.to_element_set(*failing).to_string() + " of M is not matched to N";
  }
  run.conclude(matched && !unsound,
               [&] {
                 auto [mm, nm] = build();
                 return pair_witness(mm, nm);
               },
               failure);
}

// Hypotheses on ground sets -------------------------------------------------------

bool below_p(const GroupSpec& g, std::size_t k) {
  return p_of_group(g).exceeds(static_cast<std::int64_t>(k));
}

bool max_translate_meets_n(const ElementSet& em, const ElementSet& en, int n) {
  const GroupSpec& g = em.group();
  for (const auto& a : em.elements()) {
    if (static_cast<int>(em.translate(g.neg(a)).intersect(en).size()) == n) return true;
  }
  return false;
}

// First violated set-level clause, if any. `kind` is the progression class
// of E(M).
std::optional<std::string> set_clause(const std::string& id, const ElementSet& em,
                                      const ElementSet& en, int n, ProgressionKind kind) {
  const GroupSpec& g = em.group();
  const std::size_t sm = em.size();
  const std::size_t sn = en.size();
  if (sm < static_cast<std::size_t>(n)) return "|E(M)| >= n";
  if (id == "sparse-sym") {
    if (em.contains(g.zero())) return "0 not in E(M)";
    return std::nullopt;
  }
  if (id != "asy-order" && en.contains(g.zero())) return "0 not in E(N)";
  if (id == "asy-1") {
    if (!(sm + 1 < sn)) return "|E(M)| < |E(N)|-1";
    if (!below_p(g, sm)) return "|E(M)| < p(G)";
  } else if (id == "asy-2") {
    if (!g.is_finite()) return "G finite";
    if (sm + 1 != sn) return "|E(M)| = |E(N)|-1";
    if (!below_p(g, sn)) return "|E(N)| < p(G)";
    if (kind == ProgressionKind::kProgression) return "E(M) not a progression";
  } else if (id == "asy-3") {
    if (!g.is_finite()) return "G finite";
    if (sm != sn) return "|E(M)| = |E(N)|";
    if (!below_p(g, sn)) return "|E(N)| < p(G)";
    if (kind != ProgressionKind::kNeither) return "E(M) neither a progression nor a semi-progression";
  } else if (id == "asy-4") {
    if (!(sm + static_cast<std::size_t>(n) + 1 < sn)) return "|E(M)| < |E(N)|-n-1";
  } else if (id == "asy-uniform") {
    if (sm > sn) return "|E(M)| <= |E(N)|";
    if (!below_p(g, sn)) return "|E(N)| < p(G)";
  } else if (id == "asy-n+1" || id == "asy-coloopless" || id == "asy-order") {
    if (id == "asy-n+1" && !g.is_finite()) return "G finite";
    if (sm != static_cast<std::size_t>(n) + 1 || sn != sm) return "|E(M)| = |E(N)| = n+1";
    if (!below_p(g, sn)) return "n+1 < p(G)";
    if (id == "asy-n+1") {
      if (max_translate_meets_n(em, en, n)) return "|(-a+E(M)) n E(N)| != n for all a in E(M)";
      if (kind != ProgressionKind::kNeither) return "E(M) neither a progression nor a semi-progression";
    }
  } else {
    fail(ErrorCode::kInternal, "no sparse verifier for " + id);
  }
  return std::nullopt;
}

FamilyKind family_kind(const std::string& id) {
  if (id == "asy-uniform") return FamilyKind::kUniform;
  if (id == "asy-n+1" || id == "asy-order") return FamilyKind::kCircuit;
  return FamilyKind::kSparse;
}

std::optional<std::string> family_clause(const std::string& id, const Family& f) {
  if (id == "asy-coloopless" && !f.coloopless) return "N coloopless";
  if (id == "asy-order" && f.paving == PavingClass::kNotPaving) return "N paving";
  return std::nullopt;
}

struct Candidate {
  ElementSet set;
  ProgressionKind kind;
};

std::vector<Candidate> candidates(const std::vector<ElementSet>& sets) {
  std::vector<Candidate> out;
  for (const auto& s : sets) {
    out.push_back({s, s.empty() ? ProgressionKind::kProgression : classify_progression(s).kind});
  }
  return out;
}

// E(M) of size k: translation classes when the universe is the whole finite
// group, every subset of the universe otherwise.
std::vector<ElementSet> source_sets(const GroupSpec& g, const std::vector<GroupElem>& pool,
                                    std::size_t k, bool classes) {
  std::vector<ElementSet> out;
  if (classes) {
    std::vector<GroupElem> others;
    for (const auto& e : pool) {
      if (!(e == g.zero())) others.push_back(e);
    }
    if (k == 0) return out;
    for (auto& rest : subsets_of(others, k - 1)) {
      ElementSet s(g, rest);
      s.insert(g.zero());
      if (is_translation_canonical(s)) out.push_back(std::move(s));
    }
  } else {
    for (auto& s : subsets_of(pool, k)) out.emplace_back(g, s);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> source_sizes(const std::string& id, std::int64_t sn, int n) {
  if (id == "asy-1") return {n, sn - 2};
  if (id == "asy-2") return {sn - 1, sn - 1};
  if (id == "asy-3") return {sn, sn};
  if (id == "asy-4") return {n, sn - n - 2};
  if (id == "asy-uniform") return {n, sn};
  return {n + 1, n + 1};
}

void exhaustive_sym(const Bounds& b, Run& run) {
  auto [slo, shi] = b.get_range("size");
  auto [nlo, nhi] = b.get_range("n");
  Tally tally;
  for (const GroupSpec& g : b.get_groups("g")) {
    std::vector<GroupElem> pool;
    for (const auto& e : universe(g, b, "u")) {
      if (!(e == g.zero())) pool.push_back(e);
    }
    for (std::int64_t size = slo; size <= shi; ++size) {
      for (const auto& elems : subsets_of(pool, static_cast<std::size_t>(size))) {
        GroundSet ground(g, elems);
        for (std::int64_t n = std::max<std::int64_t>(nlo, 1); n <= std::min(nhi, size); ++n) {
          const int r = static_cast<int>(n);
          MatchTable table(ground, ground, r);
          const auto infos = source_infos(table, r);
          for (const Family& f : families(FamilyKind::kSparse, ground.size(), r)) {
            check_family(run, tally, FamilyKind::kSparse, f, infos, f.bases_t, ground, ground, r,
                         true);
          }
        }
      }
    }
  }
  tally.flush(run);
}

void exhaustive_asy(const std::string& id, const Bounds& b, Run& run) {
  auto [nlo, nhi] = b.get_range("n");
  const std::int64_t emax = b.get_int("emax");
  const FamilyKind kind = family_kind(id);
  const bool n_plus_1 = kind == FamilyKind::kCircuit || id == "asy-coloopless";
  Tally tally;
  bool classes_used = false;
  for (const GroupSpec& g : b.get_groups("g")) {
    const auto pool = universe(g, b, "u");
    const bool classes = g.is_finite() && !b.has("u");
    classes_used = classes_used || classes;
    std::vector<GroupElem> nonzero;
    for (const auto& e : pool) {
      if (!(e == g.zero())) nonzero.push_back(e);
    }
    std::map<std::int64_t, std::vector<Candidate>> by_size;
    auto sources_of = [&](std::int64_t k) -> const std::vector<Candidate>& {
      auto it = by_size.find(k);
      if (it == by_size.end()) {
        it = by_size.emplace(k, candidates(source_sets(g, pool, static_cast<std::size_t>(k), classes)))
                 .first;
      }
      return it->second;
    };
    for (std::int64_t n = std::max<std::int64_t>(nlo, 1); n <= nhi; ++n) {
      const int r = static_cast<int>(n);
      const std::int64_t sn_lo = n_plus_1 ? n + 1 : n;
      const std::int64_t sn_hi = n_plus_1 ? std::min(n + 1, emax) : emax;
      for (std::int64_t sn = sn_lo; sn <= sn_hi; ++sn) {
        const auto& fams = families(kind, static_cast<std::size_t>(sn), r);
        auto [sm_lo, sm_hi] = source_sizes(id, sn, r);
        sm_lo = std::max<std::int64_t>(sm_lo, n);
        for (const auto& en_elems : subsets_of(nonzero, static_cast<std::size_t>(sn))) {
          GroundSet gn(g, en_elems);
          ElementSet en = gn.to_element_set();
          for (std::int64_t sm = sm_lo; sm <= sm_hi; ++sm) {
            for (const Candidate& c : sources_of(sm)) {
              if (auto clause = set_clause(id, c.set, en, r, c.kind)) {
                run.skip(*clause);
                continue;
              }
              GroundSet gm = GroundSet::of(c.set);
              MatchTable table(gm, gn, r);
              const auto infos = source_infos(table, r);
              const std::uint64_t all = full_mask(infos.size());
              for (const Family& f : fams) {
                if (auto clause = family_clause(id, f)) {
                  run.skip(*clause);
                  continue;
                }
                check_family(run, tally, kind, f, infos, all, gm, gn, r, false);
              }
            }
          }
        }
      }
    }
  }
  tally.flush(run);
  run.set_detail("translation_classes", classes_used);
}

// asy-order ------------------------------------------------------------------------

enum class Sign { kPositive, kNegative, kMixed };

Sign sign_of(const OrderedContext& ctx, const std::vector<GroupElem>& s) {
  if (ctx.all_positive(s)) return Sign::kPositive;
  if (ctx.all_negative(s)) return Sign::kNegative;
  return Sign::kMixed;
}

// The extreme element of E(M) on the side of its sign must avoid E(M)+E(N).
bool extreme_clear(const OrderedContext& ctx, const GroupSpec& g, const ElementSet& em,
                   const ElementSet& en, Sign sign) {
  const auto elems = em.elements();
  const GroupElem ext = sign == Sign::kPositive ? ctx.max_of(elems) : ctx.min_of(elems);
  for (const auto& a : elems) {
    for (const auto& b : en.elements()) {
      auto s = g.try_add(a, b);
      if (s && *s == ext) return false;
    }
  }
  return true;
}

const char* kMixedClause = "E(M) and E(N) both positive or both negative";

std::string extreme_clause(Sign s) {
  return s == Sign::kPositive ? "max(E(M)) not in E(M)+E(N)" : "min(E(M)) not in E(M)+E(N)";
}

void exhaustive_order(const Bounds& b, Run& run) {
  auto [nlo, nhi] = b.get_range("n");
  Tally tally;
  for (const GroupSpec& g : b.get_groups("g")) {
    const auto pool = universe(g, b, "u");
    ElementSet uset(g, pool);
    uset.insert(g.zero());
    ContextResult cr = ordered_context_on(uset, uset);
    if (!cr.context) {
      run.skip(cr.inconclusive ? "compatible order (search inconclusive)" : "compatible order exists");
      continue;
    }
    const OrderedContext& ctx = *cr.context;
    if (!ctx.is_compatible(g)) fail(ErrorCode::kInternal, "rectified order is not compatible");
    std::vector<GroupElem> nonzero;
    for (const auto& e : pool) {
      if (!(e == g.zero())) nonzero.push_back(e);
    }
    for (std::int64_t n = std::max<std::int64_t>(nlo, 1); n <= nhi; ++n) {
      const int r = static_cast<int>(n);
      const std::size_t k = static_cast<std::size_t>(n) + 1;
      std::vector<ElementSet> pos;
      std::vector<ElementSet> neg;
      std::uint64_t total = 0;
      for (auto& s : subsets_of(nonzero, k)) {
        ++total;
        Sign sg = sign_of(ctx, s);
        if (sg == Sign::kPositive) pos.emplace_back(g, s);
        if (sg == Sign::kNegative) neg.emplace_back(g, s);
      }
      const std::uint64_t same = pos.size() * pos.size() + neg.size() * neg.size();
      run.skip(kMixedClause, total * total - same);
      const auto& fams = families(FamilyKind::kCircuit, k, r);
      for (Sign sg : {Sign::kPositive, Sign::kNegative}) {
        const auto& side = sg == Sign::kPositive ? pos : neg;
        for (const auto& em : side) {
          GroundSet gm = GroundSet::of(em);
          for (const auto& en : side) {
            if (auto clause = set_clause("asy-order", em, en, r, ProgressionKind::kNeither)) {
              run.skip(*clause);
              continue;
            }
            if (!extreme_clear(ctx, g, em, en, sg)) {
              run.skip(extreme_clause(sg));
              continue;
            }
            GroundSet gn = GroundSet::of(en);
            MatchTable table(gm, gn, r);
            const auto infos = source_infos(table, r);
            for (const Family& f : fams) {
              if (auto clause = family_clause("asy-order", f)) {
                run.skip(*clause);
                continue;
              }
              check_family(run, tally, FamilyKind::kCircuit, f, infos, full_mask(infos.size()), gm,
                           gn, r, false);
            }
          }
        }
      }
    }
  }
  tally.flush(run);
}

// Instance scope ---------------------------------------------------------------------

void check_instance(Run& run, const Matroid& m, const Matroid& n) {
  run.visit();
  MatchReport rep = match_matroid(m, n);
  bool unsound = false;
  std::int64_t held = 0;
  for (Mask s : m.bases()) {
    if (rank_criterion_holds(m, s, n).holds) {
      ++held;
      if (!match_basis(m, s, n)) unsound = true;
    }
  }
  run.note("criterion_held", held);
  run.note("criterion_held_without_witness", unsound ? 1 : 0);
  std::string failure = unsound ? "rank criterion holds but no matching exists"
                                : rep.failing_basis
                                      ? "basis " + m.ground().to_element_set(*rep.failing_basis)
                                                       .to_string() +
                                            " of M is not matched to N"
                                      : "";
  run.conclude(rep.matched && !unsound, [&] { return pair_witness(m, n); }, failure);
}

}  // namespace

void exhaustive_sparse_family(const std::string& id, const Bounds& b, Run& run) {
  if (id == "sparse-sym") {
    exhaustive_sym(b, run);
  } else if (id == "asy-order") {
    exhaustive_order(b, run);
  } else {
    exhaustive_asy(id, b, run);
  }
}

void instance_sparse_family(const std::string& id, const Instance& inst, Run& run) {
  const GroupSpec& g = inst.group;
  const Matroid& m = inst.matroid("M");
  const Matroid& n = id == "sparse-sym" ? m : inst.matroid("N");
  if (m.rank() != n.rank() || m.rank() == 0) hypothesis("r(M) = r(N) = n > 0");
  const int r = m.rank();
  ElementSet em = m.ground().to_element_set();
  ElementSet en = n.ground().to_element_set();
  const ProgressionKind kind = classify_progression(em).kind;
  if (auto clause = set_clause(id, em, en, r, kind)) hypothesis(*clause);
  const PavingClass pc = classify_paving(n);
  if (id == "asy-uniform") {
    if (n.bases().size() != binomial(n.size(), static_cast<std::uint64_t>(r))) hypothesis("N uniform");
  } else if (id == "asy-order") {
    if (pc == PavingClass::kNotPaving) hypothesis("N paving");
  } else if (id != "asy-n+1") {
    if (pc != PavingClass::kSparsePaving) hypothesis(id == "sparse-sym" ? "M sparse paving" : "N sparse paving");
    if (id == "asy-coloopless" && n.coloops() != 0) hypothesis("N coloopless");
  }
  if (id == "asy-order") {
    ContextResult cr = build_ordered_context(m, n);
    if (!cr.context) {
      hypothesis(cr.inconclusive ? "compatible order (search inconclusive)"
                                 : "compatible total order on E(M) u E(N) u (E(M)+E(N)) u {0}");
    }
    const OrderedContext& ctx = *cr.context;
    if (!ctx.is_compatible(g)) fail(ErrorCode::kInternal, "rectified order is not compatible");
    const Sign sm = sign_of(ctx, em.elements());
    const Sign sn = sign_of(ctx, en.elements());
    if (sm == Sign::kMixed || sm != sn) hypothesis(kMixedClause);
    if (!extreme_clear(ctx, g, em, en, sm)) hypothesis(extreme_clause(sm));
  }
  check_instance(run, m, n);
}

}  // namespace mmatch::detail
