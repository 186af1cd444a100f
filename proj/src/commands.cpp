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

#include "mmatch/commands.hpp"

#include "mmatch/additive.hpp"
#include "mmatch/matching.hpp"

namespace mmatch {

namespace {

Json set_json(const ElementSet& s) { return elems_to_json(s.elements()); }

Json witness_json(const Matroid& m, const Matroid& n, const MatchWitness& w) {
  Json j;
  j["source"] = mask_to_json(m.ground(), w.source);
  j["target"] = mask_to_json(n.ground(), w.target);
  const auto a = mask_indices(w.source);
  const auto b = mask_indices(w.target);
  Json pairs = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    pairs.push_back(Json::array({elem_to_json(m.ground().at(a[i])),
                                 elem_to_json(n.ground().at(b[w.perm[i]]))}));
  }
  j["pairs"] = pairs;
  return j;
}

Json one_based(const std::vector<int>& v) {
  Json j = Json::array();
  for (int x : v) j.push_back(x + 1);
  return j;
}

Json form_json(const ProgressionForm& f) {
  Json j;
  j["a"] = elem_to_json(f.initial);
  j["x"] = elem_to_json(f.difference);
  j["k"] = f.length;
  return j;
}

}  // namespace

Report cmd_match(const Instance& inst, const std::string& m, const std::string& n,
                 const CommandOptions& opts) {
  const Matroid& mm = inst.matroid(m);
  const Matroid& nm = inst.matroid(n);
  MatchOptions mo;
  mo.keep_witnesses = opts.witnesses;
  mo.mutual = opts.mutual;
  if (opts.budget != 0) mo.basis_limit = opts.budget;
  MatchReport rep = match_matroid(mm, nm, mo);
  Report r;
  r.positive = rep.matched;
  r.json["matched"] = rep.matched;
  if (rep.failing_basis) r.json["failing_basis"] = mask_to_json(mm.ground(), *rep.failing_basis);
  r.json["m"] = m;
  r.json["n"] = n;
  r.json["rank"] = mm.rank();
  r.json["bases_checked"] = rep.bases_checked;
  r.json["failing_bases"] = rep.failures;
  if (rep.mutual) r.json["mutual"] = *rep.mutual;
  if (opts.witnesses) {
    Json ws = Json::array();
    for (const auto& w : rep.witnesses) ws.push_back(witness_json(mm, nm, w));
    r.json["witnesses"] = ws;
  }
  return r;
}

Report cmd_match_basis(const Instance& inst, const std::string& m, const std::string& n,
                       const std::vector<GroupElem>& basis, const CommandOptions&) {
  const Matroid& mm = inst.matroid(m);
  const Matroid& nm = inst.matroid(n);
  const Mask src = mm.ground().mask_of(basis);
  if (static_cast<std::size_t>(popcount(src)) != basis.size() || !mm.is_basis(src)) {
    fail(ErrorCode::kInvalidArgument, "the given set is not a basis of " + m);
  }
  auto w = match_basis(mm, src, nm);
  RankCriterion rc = rank_criterion_holds(mm, src, nm);
  Report r;
  r.positive = w.has_value();
  r.json["matched"] = w.has_value();
  r.json["basis"] = mask_to_json(mm.ground(), src);
  if (w) {
    Json wj = witness_json(mm, nm, *w);
    r.json["target"] = wj["target"];
    r.json["pairs"] = wj["pairs"];
  }
  Json crit;
  crit["holds"] = rc.holds;
  if (!rc.holds) crit["violated"] = one_based(rc.violated);
  r.json["rank_criterion"] = crit;
  return r;
}

Report cmd_group_match(const Instance& inst, const std::string& a, const std::string& b) {
  ElementSet as = inst.subset_set(a);
  ElementSet bs = inst.subset_set(b);
  auto gm = find_group_matching(as, bs);
  Report r;
  r.positive = gm.has_value();
  r.json["matchable"] = gm.has_value();
  if (gm) {
    Json pairs = Json::array();
    for (const auto& [x, y] : gm->pairs) pairs.push_back(Json::array({elem_to_json(x), elem_to_json(y)}));
    r.json["pairs"] = pairs;
  }
  r.json["max_matching"] = max_group_matching(as, bs);
  r.json["size"] = as.size();
  return r;
}

Report cmd_classify_set(const Instance& inst, const std::string& set) {
  ElementSet s = inst.subset_set(set);
  ProgressionClass pc = classify_progression(s);
  Report r;
  r.json["set"] = set_json(s);
  r.json["kind"] = progression_kind_name(pc.kind);
  if (pc.kind == ProgressionKind::kProgression) {
    r.json["progression"] = form_json(*pc.form);
    r.json["differences"] = elems_to_json(progression_differences(s));
  } else {
    r.json["progression"] = nullptr;
  }
  if (pc.kind == ProgressionKind::kSemiProgression) {
    Json j = form_json(*pc.form);
    j["removed"] = elem_to_json(*pc.removed);
    r.json["semi_progression"] = j;
  }
  r.json["chowla"] = is_chowla(s);
  r.json["stabilizer"] = set_json(stabilizer(s).elements);
  r.json["p"] = p_of_group(s.group()).to_string();
  return r;
}

Report cmd_classify_matroid(const Instance& inst, const std::string& matroid) {
  const Matroid& m = inst.matroid(matroid);
  Report r;
  r.json["matroid"] = matroid;
  r.json["kind"] = matroid_kind_name(m.kind());
  r.json["rank"] = m.rank();
  r.json["size"] = m.size();
  r.json["paving"] = paving_class_name(classify_paving(m));
  r.json["bases"] = m.bases().size();
  r.json["loops"] = mask_to_json(m.ground(), m.loops());
  r.json["coloops"] = mask_to_json(m.ground(), m.coloops());
  Json ch = Json::array();
  for (Mask h : m.circuit_hyperplanes()) ch.push_back(mask_to_json(m.ground(), h));
  r.json["circuit_hyperplanes"] = ch;
  r.json["ch_bound"] = ch_count_bound(m);
  return r;
}

Report cmd_sumset(const Instance& inst, const std::string& a, const std::string& b, int times) {
  ElementSet as = inst.subset_set(a);
  Report r;
  r.json["A"] = set_json(as);
  if (times > 0) {
    ElementSet s = n_fold(as, times);
    r.json["times"] = times;
    r.json["sum"] = set_json(s);
    r.json["size"] = s.size();
    return r;
  }
  ElementSet bs = inst.subset_set(b);
  ElementSet s = sumset(as, bs);
  r.json["B"] = set_json(bs);
  r.json["sum"] = set_json(s);
  r.json["size"] = s.size();
  if (!as.empty() && !bs.empty()) {
    KneserWitness w = kneser_witness(as, bs);
    Json k;
    k["H"] = set_json(w.h.elements);
    k["bound"] = static_cast<std::int64_t>(as.size() + bs.size()) -
                 static_cast<std::int64_t>(w.h.elements.size());
    r.json["kneser"] = k;
  }
  if (s.group().is_finite()) r.json["critical_pair"] = critical_pair(as, bs);
  return r;
}

Report cmd_rado(const Instance& inst, const std::string& n, const std::vector<std::string>& family) {
  const Matroid& nm = inst.matroid(n);
  std::vector<Mask> fam;
  for (const auto& name : family) fam.push_back(nm.ground().mask_of(inst.subset(name)));
  RadoVerdict v = rado_decide(fam, nm);
  Report r;
  r.positive = v.has_transversal;
  r.json["has_transversal"] = v.has_transversal;
  if (v.has_transversal) {
    Json t = Json::array();
    for (int x : v.transversal) t.push_back(elem_to_json(nm.ground().at(x)));
    r.json["transversal"] = t;
  } else {
    Mask u = 0;
    for (int i : v.violation) u |= fam[i];
    r.json["violation"] = one_based(v.violation);
    r.json["union_rank"] = nm.rank(u);
  }
  return r;
}

Report cmd_verify(const std::string& theorem, const Bounds& bounds, const Instance* inst,
                  const CommandOptions& opts) {
  VerifyOptions vo;
  vo.budget = opts.budget;
  vo.seed = opts.seed;
  VerdictRecord rec = inst ? verify_instance(theorem, *inst, vo)
                           : verify_exhaustive(theorem, bounds, vo);
  Report r;
  r.positive = rec.passed;
  r.json = verdict_to_json(rec, opts.include_timing);
  return r;
}

Report cmd_reproduce(const std::string& example, int n, const std::optional<GroupSpec>& group,
                     const CommandOptions& opts) {
  VerifyOptions vo;
  vo.budget = opts.budget;
  vo.seed = opts.seed;
  VerdictRecord rec = reproduce_example(example, n, group, vo);
  Report r;
  r.positive = rec.passed;
  r.json = verdict_to_json(rec, opts.include_timing);
  r.json["instance"] = instance_to_json(example_instance(example, n, group));
  return r;
}

Report cmd_enumerate(const std::string& what, const GroupSpec& group,
                     const std::vector<GroupElem>& ground, int rank, const CommandOptions& opts) {
  Report r;
  r.json["what"] = what;
  r.json["group"] = group.to_string();
  if (what == "subgroups") {
    Json list = Json::array();
    for (const auto& h : enumerate_subgroups(group)) list.push_back(set_json(h.elements));
    r.json["count"] = list.size();
    r.json["subgroups"] = list;
    return r;
  }
  if (what != "sparse-paving") {
    fail(ErrorCode::kInvalidArgument, "enumerate supports sparse-paving and subgroups");
  }
  GroundSet gs(group, ground);
  const std::uint64_t limit = opts.budget != 0 ? opts.budget : (1u << 20);
  auto ms = enumerate_sparse_paving(gs, rank, limit);
  Json list = Json::array();
  for (const auto& m : ms) list.push_back(matroid_to_json(m));
  r.json["rank"] = rank;
  r.json["count"] = ms.size();
  r.json["matroids"] = list;
  return r;
}

}  // namespace mmatch
