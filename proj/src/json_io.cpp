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

#include "mmatch/json_io.hpp"

#include <fstream>
#include <sstream>

#include "mmatch/error.hpp"

namespace mmatch {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  fail(ErrorCode::kSchemaViolation, path + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) schema(path, std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t int_field(const Json& j, const char* name, const std::string& path) {
  const Json& v = field(j, name, path);
  if (!v.is_number_integer()) schema(path + "." + name, "expected an integer");
  return v.get<std::int64_t>();
}

const Json& array_field(const Json& j, const char* name, const std::string& path) {
  const Json& v = field(j, name, path);
  if (!v.is_array()) schema(path + "." + name, "expected an array");
  return v;
}

// Re-raise errors from validation with the field path in front.
template <typename F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaViolation) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

Mask mask_from_json(const GroundSet& ground, const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of elements");
  auto elems = elems_from_json(ground.group(), j, path);
  return at_path(path, [&] {
    Mask m = ground.mask_of(elems);
    if (static_cast<std::size_t>(popcount(m)) != elems.size()) {
      fail(ErrorCode::kInvariantViolation, "repeated element");
    }
    return m;
  });
}

}  // namespace

Json group_to_json(const GroupSpec& g) {
  Json j;
  switch (g.kind()) {
    case GroupKind::kCyclic:
      j["kind"] = "cyclic";
      j["n"] = g.order();
      break;
    case GroupKind::kProduct: {
      j["kind"] = "product";
      j["factors"] = Json::array();
      for (std::int64_t f : g.factors()) j["factors"].push_back(f);
      break;
    }
    case GroupKind::kIntegerWindow:
      j["kind"] = "zwindow";
      j["lo"] = g.lo();
      j["hi"] = g.hi();
      break;
  }
  return j;
}

GroupSpec group_from_json(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (!kind.is_string()) schema(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  return at_path(path, [&] {
    if (k == "cyclic") return GroupSpec::cyclic(int_field(j, "n", path));
    if (k == "product") {
      std::vector<std::int64_t> factors;
      for (const auto& f : array_field(j, "factors", path)) {
        if (!f.is_number_integer()) schema(path + ".factors", "expected integers");
        factors.push_back(f.get<std::int64_t>());
      }
      return GroupSpec::product(factors);
    }
    if (k == "zwindow") {
      return GroupSpec::integer_window(int_field(j, "lo", path), int_field(j, "hi", path));
    }
    schema(path + ".kind", "unknown group kind '" + k + "'");
  });
}

Json elem_to_json(const GroupElem& e) {
  if (e.dim() == 1) return e.value();
  Json a = Json::array();
  for (std::int64_t c : e.coords()) a.push_back(c);
  return a;
}

GroupElem elem_from_json(const GroupSpec& g, const Json& j, const std::string& path) {
  GroupElem e;
  if (j.is_number_integer()) {
    e = GroupElem(j.get<std::int64_t>());
  } else if (j.is_array()) {
    std::vector<std::int64_t> coords;
    for (const auto& c : j) {
      if (!c.is_number_integer()) schema(path, "element coordinates must be integers");
      coords.push_back(c.get<std::int64_t>());
    }
    e = at_path(path, [&] { return GroupElem::from_coords(coords); });
  } else {
    schema(path, "an element is an integer or an array of integers");
  }
  at_path(path, [&] { g.require(e); });
  return e;
}

Json elems_to_json(const std::vector<GroupElem>& elems) {
  Json a = Json::array();
  for (const auto& e : elems) a.push_back(elem_to_json(e));
  return a;
}

std::vector<GroupElem> elems_from_json(const GroupSpec& g, const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of elements");
  std::vector<GroupElem> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(elem_from_json(g, j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json mask_to_json(const GroundSet& ground, Mask m) { return elems_to_json(ground.subset(m)); }

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["ground"] = elems_to_json(m.ground().elements());
  Json rep;
  rep["kind"] = matroid_kind_name(m.kind());
  switch (m.kind()) {
    case MatroidKind::kUniform:
      rep["rank"] = m.rank();
      break;
    case MatroidKind::kFree:
      break;
    case MatroidKind::kBasisList:
      rep["list"] = Json::array();
      for (Mask b : m.basis_list()) rep["list"].push_back(mask_to_json(m.ground(), b));
      break;
    case MatroidKind::kChSparsePaving:
      rep["rank"] = m.rank();
      rep["ch"] = Json::array();
      for (Mask h : m.ch_list()) rep["ch"].push_back(mask_to_json(m.ground(), h));
      break;
    case MatroidKind::kPartition:
      rep["blocks"] = Json::array();
      for (Mask b : m.blocks()) rep["blocks"].push_back(mask_to_json(m.ground(), b));
      rep["caps"] = m.caps();
      break;
  }
  j["rep"] = rep;
  return j;
}

Matroid matroid_from_json(const GroupSpec& g, const Json& j, const std::string& path) {
  GroundSet ground = at_path(path + ".ground", [&] {
    return GroundSet(g, elems_from_json(g, array_field(j, "ground", path), path + ".ground"));
  });
  const std::string rp = path + ".rep";
  const Json& rep = field(j, "rep", path);
  const Json& kind = field(rep, "kind", rp);
  if (!kind.is_string()) schema(rp + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  auto masks = [&](const char* name) {
    std::vector<Mask> out;
    const Json& list = array_field(rep, name, rp);
    for (std::size_t i = 0; i < list.size(); ++i) {
      out.push_back(
          mask_from_json(ground, list[i], rp + "." + name + "[" + std::to_string(i) + "]"));
    }
    return out;
  };
  if (k == "uniform") {
    const auto rank = int_field(rep, "rank", rp);
    return at_path(rp, [&] { return Matroid::uniform(ground, static_cast<int>(rank)); });
  }
  if (k == "free") return Matroid::free(ground);
  if (k == "bases") {
    auto list = masks("list");
    return at_path(rp, [&] { return Matroid::from_bases(ground, list); });
  }
  if (k == "ch") {
    const auto rank = int_field(rep, "rank", rp);
    auto ch = masks("ch");
    return at_path(rp, [&] { return Matroid::ch_sparse_paving(ground, static_cast<int>(rank), ch); });
  }
  if (k == "partition") {
    auto blocks = masks("blocks");
    std::vector<int> caps;
    for (const auto& c : array_field(rep, "caps", rp)) {
      if (!c.is_number_integer()) schema(rp + ".caps", "expected integers");
      caps.push_back(c.get<int>());
    }
    return at_path(rp, [&] { return Matroid::partition(ground, blocks, caps); });
  }
  schema(rp + ".kind", "unknown matroid representation '" + k + "'");
}

// Instance -------------------------------------------------------------------

bool Instance::has_matroid(std::string_view name) const {
  for (const auto& [n, m] : matroids) {
    if (n == name) return true;
  }
  return false;
}

bool Instance::has_subset(std::string_view name) const {
  for (const auto& [n, s] : subsets) {
    if (n == name) return true;
  }
  return false;
}

const Matroid& Instance::matroid(std::string_view name) const {
  for (const auto& [n, m] : matroids) {
    if (n == name) return m;
  }
  fail(ErrorCode::kNotFound, "instance has no matroid named '" + std::string(name) + "'");
}

const std::vector<GroupElem>& Instance::subset(std::string_view name) const {
  for (const auto& [n, s] : subsets) {
    if (n == name) return s;
  }
  fail(ErrorCode::kNotFound, "instance has no subset named '" + std::string(name) + "'");
}

ElementSet Instance::subset_set(std::string_view name) const {
  ElementSet s(group, subset(name));
  if (s.size() != subset(name).size()) {
    fail(ErrorCode::kInvariantViolation, "subset '" + std::string(name) + "' repeats an element");
  }
  return s;
}

void Instance::add_matroid(std::string name, Matroid m) {
  if (has_matroid(name)) fail(ErrorCode::kInvariantViolation, "duplicate matroid name " + name);
  if (!(m.ground().group() == group)) {
    fail(ErrorCode::kInvalidArgument, "matroid " + name + " lives in another group");
  }
  matroids.emplace_back(std::move(name), std::move(m));
}

void Instance::add_subset(std::string name, std::vector<GroupElem> elems) {
  if (has_subset(name)) fail(ErrorCode::kInvariantViolation, "duplicate subset name " + name);
  subsets.emplace_back(std::move(name), std::move(elems));
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["group"] = group_to_json(inst.group);
  if (!inst.matroids.empty()) {
    j["matroids"] = Json::object();
    for (const auto& [name, m] : inst.matroids) j["matroids"][name] = matroid_to_json(m);
  }
  if (!inst.subsets.empty()) {
    j["subsets"] = Json::object();
    for (const auto& [name, s] : inst.subsets) j["subsets"][name] = elems_to_json(s);
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) schema("(root)", "an instance file is a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "group" && it.key() != "matroids" && it.key() != "subsets") {
      schema(it.key(), "unknown top-level field");
    }
  }
  Instance inst(group_from_json(field(j, "group", "(root)")));
  if (j.contains("matroids")) {
    const Json& ms = j["matroids"];
    if (!ms.is_object()) schema("matroids", "expected an object of named matroids");
    for (auto it = ms.begin(); it != ms.end(); ++it) {
      inst.add_matroid(it.key(), matroid_from_json(inst.group, it.value(), "matroids." + it.key()));
    }
  }
  if (j.contains("subsets")) {
    const Json& ss = j["subsets"];
    if (!ss.is_object()) schema("subsets", "expected an object of named element lists");
    for (auto it = ss.begin(); it != ss.end(); ++it) {
      const std::string path = "subsets." + it.key();
      auto elems = elems_from_json(inst.group, it.value(), path);
      ElementSet check(inst.group, elems);
      if (check.size() != elems.size()) {
        fail(ErrorCode::kInvariantViolation, path + ": repeated element");
      }
      inst.add_subset(it.key(), std::move(elems));
    }
  }
  return inst;
}

Instance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorCode::kSchemaViolation, "JSON syntax error at line " + std::to_string(line) +
                                          ", column " + std::to_string(col));
  }
  return instance_from_json(j);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace mmatch
