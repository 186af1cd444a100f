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

#include "mmatch/additive.hpp"
#include "mmatch/brute_force.hpp"
#include "mmatch/matching.hpp"
#include "verify_internal.hpp"

namespace mmatch::detail {

namespace {

// Exhaustive scopes skip instances outside the hypotheses; instance scopes
// reject them.
bool admit(Run& run, bool instance, bool ok, const std::string& clause) {
  if (ok) return true;
  if (instance) hypothesis(clause);
  run.skip(clause);
  return false;
}

constexpr std::int64_t kMaxSubsetGroup = 20;

std::vector<ElementSet> nonempty_subsets(const std::vector<GroupElem>& pool, const GroupSpec& g) {
  if (pool.size() > kMaxSubsetGroup) {
    fail(ErrorCode::kBudgetExceeded, "subset enumeration over more than 20 elements");
  }
  std::vector<ElementSet> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << pool.size()); ++m) {
    ElementSet s(g);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((m >> i) & 1u) s.insert(pool[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<GroupElem> whole_group(const GroupSpec& g) {
  std::vector<GroupElem> out;
  for (std::int64_t i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
  return out;
}

std::vector<GroupElem> nonzero(const GroupSpec& g) {
  std::vector<GroupElem> out;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (i != g.zero_index()) out.push_back(g.element_at(i));
  }
  return out;
}

std::function<Json()> sets_witness(const GroupSpec& g,
                                   std::vector<std::pair<std::string, ElementSet>> sets) {
  return [g, sets = std::move(sets)] {
    Instance inst(g);
    for (const auto& [name, s] : sets) inst.add_subset(name, s.elements());
    return instance_to_json(inst);
  };
}

bool torsion_free_or_prime(const GroupSpec& g) {
  if (!g.is_finite()) return true;
  return p_of_group(g).value() == g.order();
}

void require_finite(const GroupSpec& g, const std::string& what) {
  if (!g.is_finite()) fail(ErrorCode::kUnsupported, what + " needs a finite group");
}

// sym-group ------------------------------------------------------------------

void sym_group_one(Run& run, const ElementSet& a) {
  run.visit();
  const bool zero = a.contains(a.group().zero());
  const std::size_t m = max_group_matching(a, a);
  const bool matchable = m == a.size();
  if (a.size() <= 9 && run.cross_check_due()) {
    if (brute::group_matchable(a, a) != matchable) {
      fail(ErrorCode::kInternal, "group matching disagrees with the oracle on " + a.to_string());
    }
    run.note("cross_checked");
  }
  run.conclude(matchable == !zero, sets_witness(a.group(), {{"A", a}}),
               zero ? "A contains 0 but is matched to itself" : "A avoids 0 but is not matchable");
}

// only-if-1 --------------------------------------------------------------------

void only_if_1_one(Run& run, const Matroid& m) {
  run.visit();
  const auto z = m.ground().position(m.ground().group().zero());
  MatchReport rep = match_matroid(m, m);
  bool holds = !rep.matched;
  // Every basis through 0 must fail, not only some basis.
  if (z) {
    for (Mask b : m.bases()) {
      if (((b >> *z) & 1u) && match_basis(m, b, m)) holds = false;
    }
  }
  run.conclude(holds,
               [&] {
                 Instance inst(m.ground().group());
                 inst.add_matroid("M", m);
                 return instance_to_json(inst);
               },
               "M contains 0 and is matched to itself");
}

// only-if-2 --------------------------------------------------------------------

void only_if_2_one(Run& run, const GroupSpec& g, const GroupElem& a, const GroupElem& x) {
  run.visit();
  std::vector<GroupElem> gens{a};
  ElementSet h = generated_subgroup(g, gens).elements;
  ElementSet en = h;
  en.erase(g.zero());
  en.insert(x);
  Matroid m = Matroid::free(GroundSet::of(h));
  Matroid n = Matroid::free(GroundSet::of(en));
  MatchReport rep = match_matroid(m, n);
  run.conclude(!rep.matched,
               [&] {
                 Instance inst(g);
                 inst.add_matroid("M", m);
                 inst.add_matroid("N", n);
                 inst.add_subset("a", {a});
                 inst.add_subset("x", {x});
                 return instance_to_json(inst);
               },
               "the free matroid on <a> is matched to the free matroid on (<a>-0)+x");
}

bool only_if_2_admit(Run& run, bool instance, const GroupSpec& g, const GroupElem& a,
                     const GroupElem& x) {
  std::vector<GroupElem> gens{a};
  ElementSet h = generated_subgroup(g, gens).elements;
  if (!admit(run, instance, h.size() > 1 && static_cast<std::int64_t>(h.size()) < g.order(),
             "1 < o(a) < |G|")) {
    return false;
  }
  return admit(run, instance, !h.contains(x), "x not in <a>");
}

// kneser -------------------------------------------------------------------------

void kneser_one(Run& run, const ElementSet& a, const ElementSet& b) {
  run.visit();
  bool holds = true;
  try {
    KneserWitness w = kneser_witness(a, b);
    const ElementSet& h = w.h.elements;
    holds = w.sum == sumset(a, b) &&
            w.sum.size() + h.size() >= a.size() + b.size() && sumset(w.sum, h) == w.sum;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInternal) throw;
    holds = false;
  }
  run.conclude(holds, sets_witness(a.group(), {{"A", a}, {"B", b}}),
               "no subgroup H with |A+B| >= |A|+|B|-|H| and A+B+H = A+B");
}

// kemperman ----------------------------------------------------------------------

bool has_unique_sum(const ElementSet& a, const ElementSet& b, const ElementSet& s) {
  for (const auto& c : s.elements()) {
    if (representation_count(a, b, c) == 1) return true;
  }
  return false;
}

void kemperman_one(Run& run, bool instance, const ElementSet& a, const ElementSet& b) {
  run.visit();
  ElementSet s = sumset(a, b);
  if (!admit(run, instance, has_unique_sum(a, b, s), "some element of A+B has a unique representation")) {
    return;
  }
  run.conclude(s.size() + 1 >= a.size() + b.size(), sets_witness(a.group(), {{"A", a}, {"B", b}}),
               "|A+B| < |A|+|B|-1 despite a unique sum");
}

// eliahou ------------------------------------------------------------------------

void eliahou_one(Run& run, const ElementSet& a, const ElementSet& b, const ElementSet& x) {
  run.visit();
  // The weaker |X| >= |A|+|B| is what the Kemperman argument yields, since
  // A_0 + B_0 also contains 0.
  run.note("weak_bound_failures", x.size() >= a.size() + b.size() ? 0 : 1);
  run.conclude(x.size() >= a.size() + b.size() + 1,
               sets_witness(a.group(), {{"A", a}, {"B", b}, {"X", x}}),
               "|X| < |A|+|B|+1");
}

bool eliahou_admit(Run& run, bool instance, const ElementSet& a, const ElementSet& b,
                   const ElementSet& x) {
  const GroupElem z = a.group().zero();
  if (!admit(run, instance, !x.contains(z), "0 not in X")) return false;
  return admit(run, instance,
               a.is_subset_of(x) && b.is_subset_of(x) && sumset(a, b).is_subset_of(x),
               "A, B and A+B inside X");
}

// critical -----------------------------------------------------------------------

bool common_difference(const ElementSet& a, const ElementSet& b) {
  auto da = progression_differences(a);
  auto db = progression_differences(b);
  for (const auto& d : da) {
    if (std::find(db.begin(), db.end(), d) != db.end()) return true;
  }
  return false;
}

bool critical_admit(Run& run, bool instance, const ElementSet& a, const ElementSet& b) {
  const GroupSpec& g = a.group();
  if (!admit(run, instance, a.size() > 1 && b.size() > 1, "|A| > 1 and |B| > 1")) return false;
  const std::int64_t p = p_of_group(g).value();
  if (!admit(run, instance, static_cast<std::int64_t>(a.size() + b.size()) - 1 <= p - 2,
             "|A|+|B|-1 <= p(G)-2")) {
    return false;
  }
  return admit(run, instance, critical_pair(a, b), "critical pair");
}

void critical_one(Run& run, const ElementSet& a, const ElementSet& b) {
  run.conclude(common_difference(a, b), sets_witness(a.group(), {{"A", a}, {"B", b}}),
               "critical pair that is not a pair of progressions with a common difference");
}

// lemma-progression --------------------------------------------------------------

// The full set ordered with `last` moved to the end.
std::vector<GroupElem> ordered_without(const std::vector<GroupElem>& elems, const GroupElem& last) {
  std::vector<GroupElem> out;
  for (const auto& e : elems) {
    if (!(e == last)) out.push_back(e);
  }
  out.push_back(last);
  return out;
}

bool lemma_admit(Run& run, bool instance, const ElementSet& a) {
  const GroupSpec& g = a.group();
  if (!admit(run, instance, torsion_free_or_prime(g), "G torsion-free or cyclic of prime order")) {
    return false;
  }
  if (!admit(run, instance, a.size() >= 2, "|A| >= 2")) return false;
  if (!admit(run, instance, !g.is_finite() || static_cast<std::int64_t>(a.size()) < g.order(),
             "A a proper subset of G")) {
    return false;
  }
  return admit(run, instance, !progression_form(a).has_value(), "A not a progression");
}

// `orders` lists the element orders to test; each must give {0}.
void lemma_one(Run& run, const ElementSet& a, const std::vector<std::vector<GroupElem>>& orders) {
  const GroupSpec& g = a.group();
  const std::size_t n = a.size() - 1;
  ElementSet zero(g);
  zero.insert(g.zero());
  bool holds = true;
  for (const auto& ordered : orders) {
    if (!(translate_intersection(g, ordered, n) == zero)) holds = false;
  }
  run.conclude(holds,
               [&] {
                 Instance inst(g);
                 inst.add_subset("A", orders.front());
                 return instance_to_json(inst);
               },
               "translates -a_i+A over i in [n] meet in more than {0}");
}

void lemma_exhaustive_one(Run& run, const ElementSet& a) {
  run.visit();
  if (!lemma_admit(run, false, a)) return;
  std::vector<std::vector<GroupElem>> orders;
  const auto elems = a.elements();
  for (const auto& e : elems) orders.push_back(ordered_without(elems, e));
  lemma_one(run, a, orders);
}

std::vector<ElementSet> sized_subsets(const GroupSpec& g, const std::vector<GroupElem>& pool,
                                      std::size_t k) {
  std::vector<ElementSet> out;
  for (auto& s : subsets_of(pool, k)) out.emplace_back(g, s);
  return out;
}

}  // namespace

void exhaustive_group_family(const std::string& id, const Bounds& b, Run& run) {
  const auto groups = b.get_groups("g");
  for (const GroupSpec& g : groups) {
    if (id == "sym-group") {
      require_finite(g, id);
      for (const auto& a : nonempty_subsets(whole_group(g), g)) sym_group_one(run, a);
    } else if (id == "only-if-1") {
      require_finite(g, id);
      auto [slo, shi] = b.get_range("size");
      auto [nlo, nhi] = b.get_range("n");
      const auto others = nonzero(g);
      for (std::int64_t size = slo; size <= shi; ++size) {
        if (size < 1) continue;
        for (auto& rest : subsets_of(others, static_cast<std::size_t>(size - 1))) {
          rest.push_back(g.zero());
          std::sort(rest.begin(), rest.end(), [&](const GroupElem& x, const GroupElem& y) {
            return g.index_of(x) < g.index_of(y);
          });
          GroundSet ground(g, rest);
          for (std::int64_t n = nlo; n <= std::min(nhi, size); ++n) {
            if (n < 1) continue;
            for (const Matroid& m : enumerate_sparse_paving(ground, static_cast<int>(n))) {
              only_if_1_one(run, m);
            }
          }
        }
      }
    } else if (id == "only-if-2") {
      require_finite(g, id);
      if (!admit(run, false, !torsion_free_or_prime(g), "G neither torsion-free nor cyclic of prime order")) {
        continue;
      }
      std::vector<GroupElem> as = nonzero(g);
      std::vector<GroupElem> xs = whole_group(g);
      if (b.has("a")) as = {g.element_at(b.get_int("a"))};
      if (b.has("x")) xs = {g.element_at(b.get_int("x"))};
      if (b.has("a") || b.has("x")) {
        if (!g.is_cyclic()) fail(ErrorCode::kInvalidArgument, "bounds a and x need a cyclic group");
        for (const auto& e : as) g.require(e);
        for (const auto& e : xs) g.require(e);
      }
      for (const auto& a : as) {
        for (const auto& x : xs) {
          if (!only_if_2_admit(run, false, g, a, x)) continue;
          only_if_2_one(run, g, a, x);
        }
      }
    } else if (id == "kneser") {
      require_finite(g, id);
      const auto all = nonempty_subsets(whole_group(g), g);
      for (const auto& a : all) {
        for (const auto& bb : all) kneser_one(run, a, bb);
      }
    } else if (id == "kemperman") {
      require_finite(g, id);
      const auto all = nonempty_subsets(whole_group(g), g);
      for (const auto& a : all) {
        for (const auto& bb : all) kemperman_one(run, false, a, bb);
      }
    } else if (id == "eliahou") {
      require_finite(g, id);
      const auto pool = nonzero(g);
      const auto all = nonempty_subsets(pool, g);
      for (const auto& a : all) {
        for (const auto& bb : all) {
          ElementSet core = a.unite(bb).unite(sumset(a, bb));
          run.visit();
          if (!admit(run, false, !core.contains(g.zero()), "0 not in A+B")) continue;
          // Every X between A u B u (A+B) and G minus 0.
          std::vector<GroupElem> free_elems;
          for (const auto& e : pool) {
            if (!core.contains(e)) free_elems.push_back(e);
          }
          for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_elems.size()); ++m) {
            ElementSet x = core;
            for (std::size_t i = 0; i < free_elems.size(); ++i) {
              if ((m >> i) & 1u) x.insert(free_elems[i]);
            }
            eliahou_one(run, a, bb, x);
          }
        }
      }
    } else if (id == "critical") {
      require_finite(g, id);
      const std::int64_t smax = b.get_int("smax");
      const auto pool = whole_group(g);
      std::vector<std::vector<ElementSet>> by_size(pool.size() + 1);
      for (std::size_t k = 2; k <= pool.size(); ++k) {
        if (static_cast<std::int64_t>(k) + 2 > smax) break;
        by_size[k] = sized_subsets(g, pool, k);
      }
      for (std::size_t ka = 2; ka < by_size.size(); ++ka) {
        for (std::size_t kb = 2; static_cast<std::int64_t>(ka + kb) <= smax && kb < by_size.size();
             ++kb) {
          for (const auto& a : by_size[ka]) {
            for (const auto& bb : by_size[kb]) {
              run.visit();
              if (!critical_admit(run, false, a, bb)) continue;
              critical_one(run, a, bb);
            }
          }
        }
      }
    } else if (id == "lemma-progression") {
      auto [slo, shi] = b.get_range("size");
      const auto pool = universe(g, b, "u");
      for (std::int64_t k = std::max<std::int64_t>(slo, 1); k <= shi; ++k) {
        for (const auto& a : sized_subsets(g, pool, static_cast<std::size_t>(k))) {
          lemma_exhaustive_one(run, a);
        }
      }
    } else {
      fail(ErrorCode::kInternal, "no group verifier for " + id);
    }
  }
}

void instance_group_family(const std::string& id, const Instance& inst, Run& run) {
  const GroupSpec& g = inst.group;
  if (id == "sym-group") {
    require_finite(g, id);
    ElementSet a = inst.subset_set("A");
    if (a.empty()) hypothesis("A nonempty");
    sym_group_one(run, a);
  } else if (id == "only-if-1") {
    const Matroid& m = inst.matroid("M");
    if (!m.ground().position(g.zero())) hypothesis("0 in E(M)");
    only_if_1_one(run, m);
  } else if (id == "only-if-2") {
    require_finite(g, id);
    if (torsion_free_or_prime(g)) hypothesis("G neither torsion-free nor cyclic of prime order");
    const auto& a = inst.subset("a");
    const auto& x = inst.subset("x");
    if (a.size() != 1 || x.size() != 1) hypothesis("a and x single elements");
    only_if_2_admit(run, true, g, a[0], x[0]);
    only_if_2_one(run, g, a[0], x[0]);
  } else if (id == "kneser" || id == "kemperman" || id == "critical") {
    require_finite(g, id);
    ElementSet a = inst.subset_set("A");
    ElementSet bb = inst.subset_set("B");
    if (a.empty() || bb.empty()) hypothesis("A and B nonempty");
    if (id == "kneser") {
      kneser_one(run, a, bb);
    } else if (id == "kemperman") {
      kemperman_one(run, true, a, bb);
    } else {
      run.visit();
      critical_admit(run, true, a, bb);
      critical_one(run, a, bb);
    }
  } else if (id == "eliahou") {
    ElementSet a = inst.subset_set("A");
    ElementSet bb = inst.subset_set("B");
    ElementSet x = inst.subset_set("X");
    if (a.empty() || bb.empty()) hypothesis("A and B nonempty");
    eliahou_admit(run, true, a, bb, x);
    eliahou_one(run, a, bb, x);
  } else if (id == "lemma-progression") {
    const auto& elems = inst.subset("A");
    ElementSet a(g, elems);
    run.visit();
    lemma_admit(run, true, a);
    lemma_one(run, a, {elems});
  } else {
    fail(ErrorCode::kInternal, "no group verifier for " + id);
  }
}

}  // namespace mmatch::detail
