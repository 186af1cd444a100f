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

#ifndef MMATCH_COMMANDS_HPP_
#define MMATCH_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmatch/json_io.hpp"
#include "mmatch/verify.hpp"

namespace mmatch {

struct CommandOptions {
  std::uint64_t budget = 0;  // 0 means no cap.
  std::uint64_t seed = 1;
  bool include_timing = true;
  bool mutual = false;
  bool witnesses = false;
};

// A report document and whether it carries a positive answer (matched,
// passed, transversal found, ...).
struct Report {
  Json json;
  bool positive = true;
};

Report cmd_match(const Instance& inst, const std::string& m, const std::string& n,
                 const CommandOptions& opts);
Report cmd_match_basis(const Instance& inst, const std::string& m, const std::string& n,
                       const std::vector<GroupElem>& basis, const CommandOptions& opts);
Report cmd_group_match(const Instance& inst, const std::string& a, const std::string& b);
Report cmd_classify_set(const Instance& inst, const std::string& set);
Report cmd_classify_matroid(const Instance& inst, const std::string& matroid);
// times > 0 computes the n-fold sumset of a; otherwise a + b.
Report cmd_sumset(const Instance& inst, const std::string& a, const std::string& b, int times);
Report cmd_rado(const Instance& inst, const std::string& n, const std::vector<std::string>& family);
Report cmd_verify(const std::string& theorem, const Bounds& bounds, const Instance* inst,
                  const CommandOptions& opts);
Report cmd_reproduce(const std::string& example, int n, const std::optional<GroupSpec>& group,
                     const CommandOptions& opts);
// what: "sparse-paving" (needs ground and rank) or "subgroups".
Report cmd_enumerate(const std::string& what, const GroupSpec& group,
                     const std::vector<GroupElem>& ground, int rank, const CommandOptions& opts);

}  // namespace mmatch

#endif  // MMATCH_COMMANDS_HPP_
