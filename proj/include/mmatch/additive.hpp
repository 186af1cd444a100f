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

#ifndef MMATCH_ADDITIVE_HPP_
#define MMATCH_ADDITIVE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mmatch/group.hpp"

namespace mmatch {

// A + B; throws kWindowOverflow if a sum leaves an integer window.
ElementSet sumset(const ElementSet& a, const ElementSet& b);
// nA = A + ... + A (n >= 1 copies); 0A = {0}.
ElementSet n_fold(const ElementSet& a, int n);
// Number of pairs (a, b) in A x B with a + b = s.
std::size_t representation_count(const ElementSet& a, const ElementSet& b, const GroupElem& s);

// {g : g + S = S}. Integer windows have only the trivial finite subgroup.
Subgroup stabilizer(const ElementSet& s);

struct KneserWitness {
  Subgroup h;
  ElementSet sum;
};
// H = stabilizer(A + B); both inequalities are checked before returning.
KneserWitness kneser_witness(const ElementSet& a, const ElementSet& b);

// {initial + i * difference : 0 <= i < length}.
struct ProgressionForm {
  GroupElem initial;
  GroupElem difference;
  std::int64_t length = 0;
};

enum class ProgressionKind { kProgression, kSemiProgression, kNeither };
const char* progression_kind_name(ProgressionKind k);

struct ProgressionClass {
  ProgressionKind kind = ProgressionKind::kNeither;
  std::optional<GroupElem> removed;     // Semi-progressions only.
  std::optional<ProgressionForm> form;  // Of A, or of A minus `removed`.
};

// Lexicographically least (initial, difference) generating A, if any.
// Singletons are progressions with difference 0.
std::optional<ProgressionForm> progression_form(const ElementSet& a);
// Every nonzero difference x such that A is a progression with difference x.
std::vector<GroupElem> progression_differences(const ElementSet& a);
ProgressionClass classify_progression(const ElementSet& a);

// Every element of A has order at least |A| + 1.
bool is_chowla(const ElementSet& a);

// |A + B| = |A| + |B| - 1 < |G|.
bool critical_pair(const ElementSet& a, const ElementSet& b);

// Intersection of -a_i + A over the first n listed elements.
ElementSet translate_intersection(const GroupSpec& g, std::span<const GroupElem> ordered,
                                  std::size_t n);

}  // namespace mmatch

#endif  // MMATCH_ADDITIVE_HPP_
