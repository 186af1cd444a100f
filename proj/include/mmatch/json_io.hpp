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

#ifndef MMATCH_JSON_IO_HPP_
#define MMATCH_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mmatch/group.hpp"
#include "mmatch/matroid.hpp"

namespace mmatch {

using Json = nlohmann::ordered_json;

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j, const std::string& path = "group");

// Elements must already be canonical: 9 in cyclic:7 is rejected.
Json elem_to_json(const GroupElem& e);
GroupElem elem_from_json(const GroupSpec& g, const Json& j, const std::string& path);
Json elems_to_json(const std::vector<GroupElem>& elems);
std::vector<GroupElem> elems_from_json(const GroupSpec& g, const Json& j, const std::string& path);

Json mask_to_json(const GroundSet& ground, Mask m);
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const GroupSpec& g, const Json& j, const std::string& path);

struct Instance {
  explicit Instance(GroupSpec g) : group(std::move(g)) {}

  GroupSpec group;
  std::vector<std::pair<std::string, Matroid>> matroids;
  std::vector<std::pair<std::string, std::vector<GroupElem>>> subsets;

  bool has_matroid(std::string_view name) const;
  bool has_subset(std::string_view name) const;
  // Throw kNotFound naming the missing entry.
  const Matroid& matroid(std::string_view name) const;
  const std::vector<GroupElem>& subset(std::string_view name) const;
  ElementSet subset_set(std::string_view name) const;

  void add_matroid(std::string name, Matroid m);
  void add_subset(std::string name, std::vector<GroupElem> elems);
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);
// Syntax errors report line and column; schema errors report the field path.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

}  // namespace mmatch

#endif  // MMATCH_JSON_IO_HPP_
