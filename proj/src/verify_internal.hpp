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

#ifndef MMATCH_SRC_VERIFY_INTERNAL_HPP_
#define MMATCH_SRC_VERIFY_INTERNAL_HPP_

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mmatch/error.hpp"
#include "mmatch/verify.hpp"

namespace mmatch::detail {

// Book-keeping shared by all verifiers.
class Run {
 public:
  Run(std::string theorem, const VerifyOptions& options);

  const VerifyOptions& options() const { return options_; }

  // One candidate instance; enforces the budget.
  void visit();
  // Hypotheses failed; counted per clause.
  void skip(const std::string& clause, std::uint64_t count = 1);
  // Records the outcome of one in-hypothesis instance. `witness` builds the
  // counterexample payload (instance JSON) and is only invoked on the first
  // failure.
  void conclude(bool holds, const std::function<Json()>& witness, const std::string& failure);
  void note(const std::string& key, std::int64_t delta = 1);
  void set_detail(const std::string& key, Json value);
  bool cross_check_due();  // Every options().xcheck-th call.

  VerdictRecord finish(Json bounds);

 private:
  std::string theorem_;
  VerifyOptions options_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t visited_ = 0;
  std::uint64_t checked_ = 0;
  std::uint64_t failures_ = 0;
  std::uint64_t xcheck_counter_ = 0;
  std::map<std::string, std::uint64_t> skipped_;
  std::map<std::string, std::int64_t> notes_;
  Json extra_ = Json::object();
  std::optional<Json> counterexample_;
};

// Instance-scope hypothesis failure.
[[noreturn]] void hypothesis(const std::string& clause);

// All k-subsets of `pool` in lexicographic order of positions.
std::vector<std::vector<GroupElem>> subsets_of(const std::vector<GroupElem>& pool, std::size_t k);
// Universe from bounds key `u` ("lo..hi" integers, reduced into a cyclic
// group) or the whole finite group when absent.
std::vector<GroupElem> universe(const GroupSpec& g, const Bounds& b, const std::string& key);
// Lexicographically least translate (finite groups), used to canonicalize E(M).
bool is_translation_canonical(const ElementSet& s);

Json format_mask(const GroundSet& ground, Mask m);

// Per-family entry points. Exhaustive scopes read bounds; instance scopes
// read named matroids/subsets from the payload.
void exhaustive_group_family(const std::string& id, const Bounds& b, Run& run);
void instance_group_family(const std::string& id, const Instance& inst, Run& run);
void exhaustive_sparse_family(const std::string& id, const Bounds& b, Run& run);
void instance_sparse_family(const std::string& id, const Instance& inst, Run& run);
void exhaustive_transversal_family(const std::string& id, const Bounds& b, Run& run);
void instance_transversal_family(const std::string& id, const Instance& inst, Run& run);
void exhaustive_rado_family(const std::string& id, const Bounds& b, Run& run);
void instance_rado_family(const std::string& id, const Instance& inst, Run& run);

}  // namespace mmatch::detail

#endif  // MMATCH_SRC_VERIFY_INTERNAL_HPP_
