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


// Command-line frontend over the C interface.
//
// Exit codes: 0 positive answer, 1 negative answer, 2 usage or input error,
// 3 budget exceeded.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmatch/mmatch.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

struct Global {
  bool json = false;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  bool no_timing = false;
};

struct InstanceDeleter {
  void operator()(mm_instance* p) const { mm_instance_free(p); }
};
struct ReportDeleter {
  void operator()(mm_report* p) const { mm_report_free(p); }
};
using InstancePtr = std::unique_ptr<mm_instance, InstanceDeleter>;
using ReportPtr = std::unique_ptr<mm_report, ReportDeleter>;

// Carries a library status out of a command body.
struct Failure {
  mm_status status;
  std::string message;
};

void check(mm_status s) {
  if (s != MM_OK) throw Failure{s, mm_last_error()};
}

int exit_code_of(mm_status s) { return s == MM_ERR_BUDGET ? kExitBudget : kExitError; }

void print_error(bool json, const std::string& code, const std::string& message) {
  if (json) {
    Json doc;
    doc["error"] = {{"code", code}, {"message", message}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cerr << "mmatch: " << message << "\n";
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_human(const Json& doc, const std::string& indent = "") {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object() && !v.empty() && indent.size() < 4) {
      std::cout << indent << it.key() << ":\n";
      print_human(v, indent + "  ");
    } else {
      std::cout << indent << it.key() << ": " << scalar_text(v) << "\n";
    }
  }
}

int finish(const Global& g, mm_report* raw) {
  ReportPtr report(raw);
  const Json doc = Json::parse(mm_report_json(report.get()));
  if (g.json) {
    std::cout << doc.dump() << "\n";
  } else {
    print_human(doc);
  }
  return mm_report_positive(report.get()) ? kExitPositive : kExitNegative;
}

InstancePtr load(const std::string& path) {
  mm_instance* raw = nullptr;
  check(mm_instance_load(path.c_str(), &raw));
  return InstancePtr(raw);
}

mm_options options_of(const Global& g) {
  mm_options o;
  mm_options_init(&o);
  o.budget = g.budget;
  o.seed = g.seed;
  o.include_timing = g.no_timing ? 0 : 1;
  return o;
}

// "1,2" and "[1,2]" both name the basis [1,2].
std::string as_json_array(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return text;
  return "[" + text + "]";
}

// Scans argv for --json so that parse failures honour the output mode.
bool wants_json(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--json") return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matchings between matroids over abelian groups."};
  app.name("mmatch");
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_flag("--json", g.json, "Emit one JSON document on standard output");
  app.add_option("--budget", g.budget, "Search budget (0: no cap)");
  app.add_option("--seed", g.seed, "Seed for randomized suites");
  app.add_flag("--no-timing", g.no_timing, "Omit runtime_ms from reports");
  app.set_version_flag("--version", std::string(mm_version()));

  std::string instance, m_name, n_name, basis, a_name, b_name, set_name, matroid_name;
  std::string family, theorem, bounds, example, group, ground, what, save;
  int times = 0, size = 2, rank = 0;
  bool mutual = false, witnesses = false, list = false;

  auto* match = app.add_subcommand("match", "Decide whether matroid M is matched to N");
  match->add_option("--instance", instance, "Instance file")->required();
  match->add_option("--m", m_name, "Source matroid")->required();
  match->add_option("--n", n_name, "Target matroid")->required();
  match->add_flag("--mutual", mutual, "Also check N to M");
  match->add_flag("--witnesses", witnesses, "Print a witness per basis");

  auto* match_basis = app.add_subcommand("match-basis", "Match one basis of M into N");
  match_basis->add_option("--instance", instance, "Instance file")->required();
  match_basis->add_option("--m", m_name, "Source matroid")->required();
  match_basis->add_option("--n", n_name, "Target matroid")->required();
  match_basis->add_option("--basis", basis, "Basis of M, e.g. 1,2")->required();

  auto* group_match = app.add_subcommand("group-match", "Matching between two subsets");
  group_match->add_option("--instance", instance, "Instance file")->required();
  group_match->add_option("--a", a_name, "Source subset")->required();
  group_match->add_option("--b", b_name, "Target subset")->required();

  auto* classify = app.add_subcommand("classify", "Additive or matroid structure");
  classify->add_option("--instance", instance, "Instance file")->required();
  auto* set_opt = classify->add_option("--set", set_name, "Subset to classify");
  auto* matroid_opt = classify->add_option("--matroid", matroid_name, "Matroid to classify");
  set_opt->excludes(matroid_opt);

  auto* sumset = app.add_subcommand("sumset", "Sumset with Kneser data");
  sumset->add_option("--instance", instance, "Instance file")->required();
  sumset->add_option("--a", a_name, "First summand")->required();
  auto* b_opt = sumset->add_option("--b", b_name, "Second summand");
  auto* times_opt = sumset->add_option("--times", times, "Iterated sumset of A")
                        ->check(CLI::PositiveNumber);
  b_opt->excludes(times_opt);

  auto* rado = app.add_subcommand("rado", "Independent transversal of a set family");
  rado->add_option("--instance", instance, "Instance file")->required();
  rado->add_option("--n", n_name, "Matroid")->required();
  rado->add_option("--family", family, "Comma separated subset names")->required();

  auto* verify = app.add_subcommand("verify", "Run a theorem verifier");
  verify->add_option("theorem", theorem, "Theorem id");
  verify->add_option("--instance", instance, "Check one instance instead of enumerating");
  verify->add_option("--bounds", bounds, "Exhaustive bounds k=v,...");
  verify->add_flag("--list", list, "List theorem ids");

  auto* reproduce = app.add_subcommand("reproduce", "Confirm a counterexample");
  reproduce->add_option("example", example, "sym-counterexample or asy-counterexample")
      ->required();
  reproduce->add_option("--size", size, "Size parameter n");
  reproduce->add_option("--group", group, "Ambient group, e.g. cyclic:23");
  reproduce->add_option("--save", save, "Write the instance file to this path");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate structures");
  enumerate->add_option("what", what, "sparse-paving or subgroups")->required();
  enumerate->add_option("--group", group, "Group, e.g. cyclic:7")->required();
  enumerate->add_option("--ground", ground, "Ground set, e.g. 1,2,3,4");
  enumerate->add_option("--rank", rank, "Rank");

  const bool json_mode = wants_json(argc, argv);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error(json_mode, "usage", e.what());
    return kExitError;
  }

  const mm_options opts = options_of(g);
  try {
    mm_report* report = nullptr;
    if (*match) {
      auto inst = load(instance);
      mm_options o = opts;
      o.mutual = mutual ? 1 : 0;
      o.witnesses = witnesses ? 1 : 0;
      check(mm_match(inst.get(), m_name.c_str(), n_name.c_str(), &o, &report));
    } else if (*match_basis) {
      auto inst = load(instance);
      const std::string arr = as_json_array(basis);
      check(mm_match_basis(inst.get(), m_name.c_str(), n_name.c_str(), arr.c_str(), &opts,
                           &report));
    } else if (*group_match) {
      auto inst = load(instance);
      check(mm_group_match(inst.get(), a_name.c_str(), b_name.c_str(), &report));
    } else if (*classify) {
      if (set_name.empty() && matroid_name.empty()) {
        throw Failure{MM_ERR_INVALID_ARGUMENT, "classify needs --set or --matroid"};
      }
      auto inst = load(instance);
      if (!set_name.empty()) {
        check(mm_classify_set(inst.get(), set_name.c_str(), &report));
      } else {
        check(mm_classify_matroid(inst.get(), matroid_name.c_str(), &report));
      }
    } else if (*sumset) {
      if (b_name.empty() && times == 0) {
        throw Failure{MM_ERR_INVALID_ARGUMENT, "sumset needs --b or --times"};
      }
      auto inst = load(instance);
      check(mm_sumset(inst.get(), a_name.c_str(), b_name.empty() ? nullptr : b_name.c_str(),
                      times, &report));
    } else if (*rado) {
      auto inst = load(instance);
      std::vector<std::string> names;
      std::string cur;
      for (char c : family + ",") {
        if (c == ',') {
          if (!cur.empty()) names.push_back(cur);
          cur.clear();
        } else if (c != ' ') {
          cur += c;
        }
      }
      std::vector<const char*> ptrs;
      for (const auto& s : names) ptrs.push_back(s.c_str());
      check(mm_rado(inst.get(), n_name.c_str(), ptrs.data(), ptrs.size(), &report));
    } else if (*verify) {
      if (list) {
        const Json ids = Json::parse(mm_theorems_json());
        if (g.json) {
          std::cout << Json{{"theorems", ids}}.dump() << "\n";
        } else {
          for (const auto& id : ids) std::cout << id.get<std::string>() << "\n";
        }
        return kExitPositive;
      }
      if (theorem.empty()) throw Failure{MM_ERR_INVALID_ARGUMENT, "verify needs a theorem id"};
      InstancePtr inst;
      if (!instance.empty()) inst = load(instance);
      check(mm_verify(theorem.c_str(), bounds.empty() ? nullptr : bounds.c_str(), inst.get(),
                      &opts, &report));
    } else if (*reproduce) {
      check(mm_reproduce(example.c_str(), size, group.empty() ? nullptr : group.c_str(), &opts,
                         &report));
      if (!save.empty()) {
        const Json doc = Json::parse(mm_report_json(report));
        std::ofstream out(save);
        out << doc.at("instance").dump(2) << "\n";
        if (!out) {
          mm_report_free(report);
          throw Failure{MM_ERR_INVALID_ARGUMENT, "cannot write " + save};
        }
      }
    } else if (*enumerate) {
      const std::string arr = ground.empty() ? std::string() : as_json_array(ground);
      check(mm_enumerate(what.c_str(), group.c_str(), arr.empty() ? nullptr : arr.c_str(), rank,
                         &opts, &report));
    }
    return finish(g, report);
  } catch (const Failure& f) {
    std::string message = f.message;
    const std::string prefix = std::string(mm_status_name(f.status)) + ": ";
    if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
    print_error(g.json, mm_status_name(f.status), message);
    return exit_code_of(f.status);
  }
}
