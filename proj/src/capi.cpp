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

#include "mmatch/mmatch.h"

#include <new>
#include <string>

#include "mmatch/commands.hpp"

struct mm_instance {
  mmatch::Instance inst;
};

struct mm_report {
  std::string json;
  bool positive;
};

namespace {

thread_local std::string g_last_error;

mm_status status_of(mmatch::ErrorCode c) {
  using mmatch::ErrorCode;
  switch (c) {
    case ErrorCode::kInvalidArgument: return MM_ERR_INVALID_ARGUMENT;
    case ErrorCode::kSchemaViolation: return MM_ERR_SCHEMA;
    case ErrorCode::kInvariantViolation: return MM_ERR_INVARIANT;
    case ErrorCode::kElementOutOfGroup: return MM_ERR_ELEMENT_OUT_OF_GROUP;
    case ErrorCode::kElementNotInGround: return MM_ERR_ELEMENT_NOT_IN_GROUND;
    case ErrorCode::kWindowOverflow: return MM_ERR_WINDOW_OVERFLOW;
    case ErrorCode::kSizeMismatch: return MM_ERR_SIZE_MISMATCH;
    case ErrorCode::kZeroInTarget: return MM_ERR_ZERO_IN_TARGET;
    case ErrorCode::kRankMismatch: return MM_ERR_RANK_MISMATCH;
    case ErrorCode::kUnsupported: return MM_ERR_UNSUPPORTED;
    case ErrorCode::kBudgetExceeded: return MM_ERR_BUDGET;
    case ErrorCode::kHypothesisViolation: return MM_ERR_HYPOTHESIS;
    case ErrorCode::kUnknownTheorem: return MM_ERR_UNKNOWN_THEOREM;
    case ErrorCode::kNotFound: return MM_ERR_NOT_FOUND;
    case ErrorCode::kInternal: return MM_ERR_INTERNAL;
  }
  return MM_ERR_INTERNAL;
}

template <typename F>
mm_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return MM_OK;
  } catch (const mmatch::Error& e) {
    g_last_error = std::string(mmatch::error_code_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "internal: out of memory";
    return MM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal: ") + e.what();
    return MM_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) mmatch::fail(mmatch::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

mmatch::CommandOptions options_of(const mm_options* o) {
  mmatch::CommandOptions c;
  if (o != nullptr) {
    c.budget = o->budget;
    c.seed = o->seed;
    c.include_timing = o->include_timing != 0;
    c.mutual = o->mutual != 0;
    c.witnesses = o->witnesses != 0;
  }
  return c;
}

void emit(const mmatch::Report& r, mm_report** out) {
  require(out, "out");
  *out = new mm_report{r.json.dump(), r.positive};
}

std::vector<mmatch::GroupElem> elems_of(const mmatch::GroupSpec& g, const char* text,
                                        const char* what) {
  require(text, what);
  mmatch::Json j;
  try {
    j = mmatch::Json::parse(text);
  } catch (const mmatch::Json::parse_error&) {
    mmatch::fail(mmatch::ErrorCode::kSchemaViolation, std::string(what) + ": not valid JSON");
  }
  return mmatch::elems_from_json(g, j, what);
}

}  // namespace

extern "C" {

const char* mm_version(void) { return "1.0.0"; }

const char* mm_status_name(mm_status s) {
  switch (s) {
    case MM_OK: return "ok";
    case MM_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case MM_ERR_SCHEMA: return "schema-violation";
    case MM_ERR_INVARIANT: return "invariant-violation";
    case MM_ERR_ELEMENT_OUT_OF_GROUP: return "element-out-of-group";
    case MM_ERR_ELEMENT_NOT_IN_GROUND: return "element-not-in-ground";
    case MM_ERR_WINDOW_OVERFLOW: return "window-overflow";
    case MM_ERR_SIZE_MISMATCH: return "size-mismatch";
    case MM_ERR_ZERO_IN_TARGET: return "zero-in-B";
    case MM_ERR_RANK_MISMATCH: return "rank-mismatch";
    case MM_ERR_UNSUPPORTED: return "unsupported";
    case MM_ERR_BUDGET: return "budget-exceeded";
    case MM_ERR_HYPOTHESIS: return "hypothesis-violation";
    case MM_ERR_UNKNOWN_THEOREM: return "unknown-theorem";
    case MM_ERR_NOT_FOUND: return "not-found";
    case MM_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* mm_last_error(void) { return g_last_error.c_str(); }

void mm_options_init(mm_options* opts) {
  if (opts == nullptr) return;
  opts->budget = 0;
  opts->seed = 1;
  opts->include_timing = 1;
  opts->mutual = 0;
  opts->witnesses = 0;
}

mm_status mm_instance_load(const char* path, mm_instance** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new mm_instance{mmatch::load_instance(path)};
  });
}

mm_status mm_instance_parse(const char* text, mm_instance** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new mm_instance{mmatch::parse_instance(text)};
  });
}

void mm_instance_free(mm_instance* inst) { delete inst; }

mm_status mm_match(const mm_instance* inst, const char* m, const char* n, const mm_options* opts,
                   mm_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(m, "m");
    require(n, "n");
    emit(mmatch::cmd_match(inst->inst, m, n, options_of(opts)), out);
  });
}

mm_status mm_match_basis(const mm_instance* inst, const char* m, const char* n,
                         const char* basis_json, const mm_options* opts, mm_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(m, "m");
    require(n, "n");
    auto basis = elems_of(inst->inst.group, basis_json, "basis");
    emit(mmatch::cmd_match_basis(inst->inst, m, n, basis, options_of(opts)), out);
  });
}

mm_status mm_group_match(const mm_instance* inst, const char* a, const char* b, mm_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(a, "a");
    require(b, "b");
    emit(mmatch::cmd_group_match(inst->inst, a, b), out);
  });
}

mm_status mm_classify_set(const mm_instance* inst, const char* set, mm_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(set, "set");
    emit(mmatch::cmd_classify_set(inst->inst, set), out);
  });
}

mm_status mm_classify_matroid(const mm_instance* inst, const char* matroid, mm_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(matroid, "matroid");
    emit(mmatch::cmd_classify_matroid(inst->inst, matroid), out);
  });
}

mm_status mm_sumset(const mm_instance* inst, const char* a, const char* b, int times,
                    mm_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(a, "a");
    if (times <= 0) require(b, "b");
    emit(mmatch::cmd_sumset(inst->inst, a, b != nullptr ? b : "", times), out);
  });
}

mm_status mm_rado(const mm_instance* inst, const char* n, const char* const* family, size_t count,
                  mm_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(n, "n");
    if (count > 0) require(family, "family");
    std::vector<std::string> names;
    for (size_t i = 0; i < count; ++i) {
      require(family[i], "family entry");
      names.emplace_back(family[i]);
    }
    emit(mmatch::cmd_rado(inst->inst, n, names), out);
  });
}

mm_status mm_verify(const char* theorem, const char* bounds, const mm_instance* inst,
                    const mm_options* opts, mm_report** out) {
  return guarded([&] {
    require(theorem, "theorem");
    mmatch::Bounds b = bounds != nullptr ? mmatch::Bounds::parse(bounds) : mmatch::Bounds{};
    emit(mmatch::cmd_verify(theorem, b, inst != nullptr ? &inst->inst : nullptr, options_of(opts)),
         out);
  });
}

mm_status mm_reproduce(const char* example, int n, const char* group, const mm_options* opts,
                       mm_report** out) {
  return guarded([&] {
    require(example, "example");
    std::optional<mmatch::GroupSpec> g;
    if (group != nullptr) g = mmatch::GroupSpec::parse(group);
    emit(mmatch::cmd_reproduce(example, n, g, options_of(opts)), out);
  });
}

mm_status mm_enumerate(const char* what, const char* group, const char* ground_json, int rank,
                       const mm_options* opts, mm_report** out) {
  return guarded([&] {
    require(what, "what");
    require(group, "group");
    mmatch::GroupSpec g = mmatch::GroupSpec::parse(group);
    std::vector<mmatch::GroupElem> ground;
    if (ground_json != nullptr) ground = elems_of(g, ground_json, "ground");
    emit(mmatch::cmd_enumerate(what, g, ground, rank, options_of(opts)), out);
  });
}

const char* mm_theorems_json(void) {
  static const std::string text = [] {
    mmatch::Json j = mmatch::Json::array();
    for (const auto& id : mmatch::theorem_ids()) j.push_back(id);
    return j.dump();
  }();
  return text.c_str();
}

const char* mm_report_json(const mm_report* report) {
  return report != nullptr ? report->json.c_str() : "";
}

int mm_report_positive(const mm_report* report) {
  return report != nullptr && report->positive ? 1 : 0;
}

void mm_report_free(mm_report* report) { delete report; }

}  // extern "C"
