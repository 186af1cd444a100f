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

#ifndef MMATCH_VERIFY_HPP_
#define MMATCH_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmatch/error.hpp"
#include "mmatch/group.hpp"
#include "mmatch/json_io.hpp"
#include "mmatch/matroid.hpp"

namespace mmatch {

// Exhaustive-scope parameters, written "k=v,k=v". Groups may be listed as
// "cyclic:11|cyclic:13"; ranges as "a..b".
class Bounds {
 public:
  static Bounds parse(std::string_view text);

  bool has(std::string_view key) const;
  std::string get(std::string_view key) const;  // Throws kInvalidArgument if absent.
  std::int64_t get_int(std::string_view key) const;
  std::pair<std::int64_t, std::int64_t> get_range(std::string_view key) const;
  std::vector<GroupSpec> get_groups(std::string_view key) const;
  void set(std::string key, std::string value);
  // Keys of `defaults` missing here are copied in.
  Bounds with_defaults(const Bounds& defaults) const;
  Json to_json() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct VerifyOptions {
  std::uint64_t budget = 0;   // Cap on visited candidate instances; 0 means none.
  std::uint64_t seed = 1;     // Randomized suites.
  std::uint64_t xcheck = 53;  // Stride of full-engine cross-checks in batched suites.
  // Self-test hook: negate every conclusion so that counterexample plumbing
  // can be exercised on true theorems.
  bool invert_conclusion = false;
};

struct VerdictRecord {
  std::string theorem;
  std::uint64_t checked = 0;
  bool passed = true;
  std::int64_t runtime_ms = 0;
  Json bounds = Json::object();
  Json details = Json::object();
  std::optional<Json> counterexample;  // {"instance": instance file, "failure": text}.
};

Json verdict_to_json(const VerdictRecord& r, bool include_timing);

const std::vector<std::string>& theorem_ids();
bool is_theorem_id(std::string_view id);
Bounds default_bounds(std::string_view id);

VerdictRecord verify_exhaustive(const std::string& id, const Bounds& bounds,
                                const VerifyOptions& options = {});
// Rechecks the theorem's hypotheses on the payload; a violated clause raises
// kHypothesisViolation naming it.
VerdictRecord verify_instance(const std::string& id, const Instance& inst,
                              const VerifyOptions& options = {});

// "sym-counterexample" or "asy-counterexample" on the ground set [2n].
VerdictRecord reproduce_example(const std::string& example_id, int n,
                                std::optional<GroupSpec> group = std::nullopt,
                                const VerifyOptions& options = {});
// The instance used by reproduce_example (matroids M and N).
Instance example_instance(const std::string& example_id, int n,
                          std::optional<GroupSpec> group = std::nullopt);

// A compatible total order on E(M) u E(N) u (E(M) + E(N)) u {0}.
class OrderedContext {
 public:
  explicit OrderedContext(Rectification phi) : phi_(std::move(phi)) {}

  const Rectification& rectification() const { return phi_; }
  std::int64_t value(const GroupElem& e) const { return phi_.image(e); }
  bool precedes(const GroupElem& a, const GroupElem& b) const { return value(a) < value(b); }
  bool all_positive(std::span<const GroupElem> s) const;
  bool all_negative(std::span<const GroupElem> s) const;
  GroupElem max_of(std::span<const GroupElem> s) const;
  GroupElem min_of(std::span<const GroupElem> s) const;
  // Every element of a strictly below every element of b.
  bool strictly_below(std::span<const GroupElem> a, std::span<const GroupElem> b) const;
  // Order-compatibility over the domain: a <= b implies a + c <= b + c
  // whenever all four elements lie in the domain.
  bool is_compatible(const GroupSpec& g) const;

 private:
  Rectification phi_;
};

struct ContextResult {
  std::optional<OrderedContext> context;
  bool inconclusive = false;  // Search budget ran out.
};

// Identity order on integer windows; rectification for finite groups.
ContextResult build_ordered_context(const Matroid& m, const Matroid& n,
                                    const RectifyOptions& options = {});
ContextResult ordered_context_on(const ElementSet& e, const ElementSet& f,
                                 const RectifyOptions& options = {});

}  // namespace mmatch

#endif  // MMATCH_VERIFY_HPP_
