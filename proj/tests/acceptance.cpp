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


// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mmatch/matroid.hpp"
#include "mmatch/verify.hpp"
#include "oracles.hpp"

using namespace mmatch;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string summary;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no time limit
  std::function<Outcome()> run;
};

// First-pass reports, compared byte for byte by the determinism criterion.
std::map<std::string, std::string> g_reports;

VerdictRecord suite(const std::string& id, const std::string& bounds = "") {
  const Bounds b = bounds.empty() ? Bounds{} : Bounds::parse(bounds);
  VerdictRecord r = verify_exhaustive(id, b);
  g_reports[id + "|" + bounds] = verdict_to_json(r, false).dump();
  return r;
}

std::string describe(const VerdictRecord& r) {
  std::ostringstream s;
  s << r.theorem << " " << r.checked << " checked, " << r.details.value("failures", 0)
    << " failures";
  if (r.counterexample) s << " [" << r.counterexample->at("failure").get<std::string>() << "]";
  return s.str();
}

struct Shell {
  int code = -1;
  std::string out;
};

Shell shell(const std::string& cmd) {
  Shell r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kCli = MMATCH_CLI_PATH;
const std::string kTmp = MMATCH_TMP_DIR;

Outcome symmetric_group() {
  auto r = suite("sym-group", "g=cyclic:7|cyclic:8");
  return {r.passed && r.checked == 127 + 255, describe(r)};
}

// Output of each CLI match call in criterion 2, replayed by criterion 10.
std::vector<std::string> g_cli_outputs;

Outcome counterexamples() {
  Outcome o;
  int confirmed = 0;
  const std::vector<std::pair<std::string, int>> cases{
      {"sym-counterexample", 2}, {"sym-counterexample", 3}, {"sym-counterexample", 4},
      {"asy-counterexample", 2}, {"asy-counterexample", 3}};
  for (const auto& [ex, n] : cases) {
    const std::string path = kTmp + "/" + ex + "-" + std::to_string(n) + ".json";
    auto rep = shell(kCli + " reproduce " + ex + " --size " + std::to_string(n) + " --save " +
                     path + " --json --no-timing");
    const std::string target = ex == "sym-counterexample" ? "M" : "N";
    auto m = shell(kCli + " match --instance " + path + " --m M --n " + target + " --json");
    g_cli_outputs.push_back(m.out);
    Json expect = Json::array();
    for (int i = 1; i <= n; ++i) expect.push_back(i);
    bool ok = rep.code == 0 && m.code == 1;
    if (ok) {
      const Json j = Json::parse(m.out);
      ok = j.at("matched") == false && j.at("failing_basis") == expect;
    }
    confirmed += ok ? 1 : 0;
    o.ok = o.ok && ok;
  }
  o.summary = std::to_string(confirmed) + "/5 confirmed with exit 1 and failing basis [n]";
  return o;
}

VerdictRecord g_sparse_sym;
std::vector<VerdictRecord> g_asy;

Outcome sparse_self_matching() {
  g_sparse_sym = suite("sparse-sym", "g=cyclic:11,size=4..5,n=2..3");
  return {g_sparse_sym.passed, describe(g_sparse_sym)};
}

Outcome asymmetric_conditions(const std::function<bool(double)>& within) {
  Outcome o;
  std::ostringstream s;
  for (const char* id :
       {"asy-1", "asy-2", "asy-3", "asy-4", "asy-uniform", "asy-coloopless"}) {
    const auto t0 = Clock::now();
    auto r = suite(id, "g=cyclic:11|cyclic:13,n=1..3,emax=6");
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = r.passed && r.checked > 0 && within(secs);
    o.ok = o.ok && ok;
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.1fs", secs);
    if (s.tellp() > 0) s << "; ";
    s << describe(r) << buf << (ok ? "" : " FAILED");
    g_asy.push_back(std::move(r));
  }
  o.summary = s.str();
  return o;
}

Outcome rado_equivalence() {
  auto r = suite("rado", "count=500,nmax=4,emax=8,seed=1");
  return {r.passed && r.checked == 500, describe(r)};
}

Outcome rank_criterion_soundness() {
  std::int64_t held = 0, bad = 0;
  auto tally = [&](const VerdictRecord& r) {
    held += r.details.value("criterion_held", std::int64_t{0});
    bad += r.details.value("criterion_held_without_witness", std::int64_t{0});
  };
  tally(g_sparse_sym);
  for (const auto& r : g_asy) tally(r);
  auto rc = suite("rank-criteria", "g=cyclic:13,count=500,nmax=3,emax=6,seed=1");
  std::ostringstream s;
  s << held << " bases where the criterion held in suites 3-4, " << bad
    << " without a witness; " << describe(rc);
  return {bad == 0 && held > 0 && rc.passed, s.str()};
}

Outcome additive_lemmas() {
  Outcome o;
  std::ostringstream s;
  for (const auto& [id, bounds] : std::vector<std::pair<std::string, std::string>>{
           {"kneser", "g=cyclic:8"},
           {"kemperman", "g=cyclic:7"},
           {"eliahou", "g=cyclic:7|cyclic:8"},
           {"critical", "g=cyclic:11,smax=10"}}) {
    auto r = suite(id, bounds);
    o.ok = o.ok && r.passed;
    if (s.tellp() > 0) s << "; ";
    s << describe(r);
  }
  o.summary = s.str();
  return o;
}

Outcome progression_lemma() {
  auto r = suite("lemma-progression", "g=zwindow:-16:16|cyclic:11,u=-8..8,size=3..5");
  return {r.passed && r.checked > 0, describe(r)};
}

// Structural checks on every matroid with |E| <= 6 from the enumerators.
std::string g_structural;

void set_partitions(int m, std::vector<int>& cur, int labels,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= labels; ++b) {
    cur.push_back(b);
    set_partitions(m, cur, std::max(labels, b + 1), out);
    cur.pop_back();
  }
}

Outcome matroid_structure() {
  std::uint64_t count = 0, failures = 0;
  std::string first;
  auto check = [&](bool ok, const Matroid& m, const char* what) {
    if (ok) return;
    ++failures;
    if (first.empty()) first = std::string(what) + " on " + m.describe();
  };
  auto examine = [&](const Matroid& mt, const oracle::Mat& ref) {
    ++count;
    const Mask all = mt.ground().all();
    const auto bases = mt.bases();
    check(bases == ref.bases, mt, "basis family");
    for (Mask x = 0; x <= all; ++x) {
      const int r = mt.rank(x);
      check(r == oracle::rank_of(ref, x), mt, "rank oracle");
      for (Mask y = x; y <= all; ++y)
        check(r + mt.rank(y) >= mt.rank(x | y) + mt.rank(x & y), mt, "submodularity");
    }
    const Matroid d = mt.dual();
    std::vector<Mask> comp;
    for (Mask b : bases) comp.push_back(all & ~b);
    std::sort(comp.begin(), comp.end(), [](Mask p, Mask q) { return lex_less(p, q); });
    check(d.bases() == comp, mt, "dual bases");
    check(d.dual().bases() == bases, mt, "dual involution");
    const PavingClass cls = classify_paving(mt);
    const bool paving = is_paving(mt);
    const bool dual_paving = d.rank() == 0 || is_paving(d);
    check((cls != PavingClass::kNotPaving) == paving, mt, "paving");
    check((cls == PavingClass::kSparsePaving) == (paving && dual_paving), mt, "sparse paving");
    if (cls == PavingClass::kSparsePaving) check(ch_count_bound(mt), mt, "ch bound");
    if (paving && mt.rank() >= 1) {
      const auto hs = mt.hyperplanes();
      for (std::size_t i = 0; i < hs.size(); ++i) {
        check(popcount(hs[i]) >= mt.rank() - 1, mt, "hyperplane size");
        for (std::size_t j = i + 1; j < hs.size(); ++j)
          check(popcount(hs[i] & hs[j]) <= mt.rank() - 2, mt, "hyperplane intersection");
      }
      for (Mask s : k_subsets(mt.size(), mt.rank() - 1)) {
        int covering = 0;
        for (Mask h : hs) covering += (s & ~h) == 0 ? 1 : 0;
        check(covering == 1, mt, "hyperplane partition");
      }
    }
  };
  for (int m = 1; m <= 6; ++m) {
    std::vector<GroupElem> e;
    for (int i = 1; i <= m; ++i) e.emplace_back(i);
    const GroundSet g(GroupSpec::cyclic(13), e);
    examine(Matroid::free(g), oracle::uniform(m, m));
    for (int n = 1; n < m; ++n) {
      examine(Matroid::uniform(g, n), oracle::uniform(m, n));
      for (const auto& sp : enumerate_sparse_paving(g, n))
        examine(sp, oracle::ch_sparse(m, n, sp.ch_list()));
    }
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    set_partitions(m, cur, 0, parts);
    for (const auto& labels : parts) {
      const int nb = *std::max_element(labels.begin(), labels.end()) + 1;
      std::vector<Mask> blocks(nb, 0);
      for (int i = 0; i < m; ++i) blocks[labels[i]] |= Mask{1} << i;
      std::vector<int> caps(nb, 1);
      while (true) {
        examine(Matroid::partition(g, blocks, caps), oracle::partition(m, labels, caps));
        int i = 0;
        while (i < nb && caps[i] == popcount(blocks[i])) caps[i++] = 1;
        if (i == nb) break;
        ++caps[i];
      }
    }
  }
  std::ostringstream s;
  s << count << " matroids, " << failures << " failures";
  if (!first.empty()) s << " [" << first << "]";
  g_structural = s.str();
  return {failures == 0 && count > 0, g_structural};
}

Outcome determinism() {
  // Suites not covered by criteria 1-9 run here for the first time.
  for (const char* id : {"only-if-1", "only-if-2", "asy-order", "asy-n+1", "transversal-1",
                         "transversal-2"})
    suite(id);
  const auto first = g_reports;
  std::size_t same = 0;
  std::string differing;
  for (const auto& [key, json] : first) {
    const auto bar = key.find('|');
    const std::string id = key.substr(0, bar), bounds = key.substr(bar + 1);
    const Bounds b = bounds.empty() ? Bounds{} : Bounds::parse(bounds);
    const std::string again = verdict_to_json(verify_exhaustive(id, b), false).dump();
    if (again == json) {
      ++same;
    } else if (differing.empty()) {
      differing = id;
    }
  }
  std::size_t cli_same = 0;
  const std::vector<std::pair<std::string, int>> cases{
      {"sym-counterexample", 2}, {"sym-counterexample", 3}, {"sym-counterexample", 4},
      {"asy-counterexample", 2}, {"asy-counterexample", 3}};
  for (std::size_t i = 0; i < cases.size() && i < g_cli_outputs.size(); ++i) {
    const auto& [ex, n] = cases[i];
    const std::string path = kTmp + "/" + ex + "-" + std::to_string(n) + ".json";
    const std::string target = ex == "sym-counterexample" ? "M" : "N";
    auto m = shell(kCli + " match --instance " + path + " --m M --n " + target + " --json");
    cli_same += m.out == g_cli_outputs[i] ? 1 : 0;
  }
  const std::string structural = g_structural;
  matroid_structure();
  const bool structural_same = structural == g_structural;
  std::ostringstream s;
  s << same << "/" << first.size() << " suite reports identical, " << cli_same << "/"
    << g_cli_outputs.size() << " CLI reports identical, structural summary "
    << (structural_same ? "identical" : "differs");
  if (!differing.empty()) s << " [first difference: " << differing << "]";
  return {same == first.size() && cli_same == g_cli_outputs.size() &&
              g_cli_outputs.size() == cases.size() && structural_same,
          s.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "symmetric group matching", 10, symmetric_group},
      {2, "counterexample regressions", 5, counterexamples},
      {3, "sparse paving self-matching", 120, sparse_self_matching},
      {4, "asymmetric conditions", 6 * 300,
       [] { return asymmetric_conditions([](double s) { return s < 300; }); }},
      {5, "Rado equivalence", 60, rado_equivalence},
      {6, "rank-criterion soundness", 0, rank_criterion_soundness},
      {7, "additive lemmas", 180, additive_lemmas},
      {8, "progression lemma", 60, progression_lemma},
      {9, "matroid structure", 120, matroid_structure},
      {10, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool ok = o.ok && in_time;
    failed += ok ? 0 : 1;
    char timing[64];
    if (c.limit_s > 0) {
      std::snprintf(timing, sizeof timing, "%.1fs, limit %.0fs", secs, c.limit_s);
    } else {
      std::snprintf(timing, sizeof timing, "%.1fs", secs);
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ", "
              << timing << (in_time ? "" : ", over time") << "): " << o.summary << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
