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

#ifndef MMATCH_BRUTE_FORCE_HPP_
#define MMATCH_BRUTE_FORCE_HPP_

// Exhaustive reference procedures. They share no code with the fast paths
// beyond group arithmetic and rank evaluation.

#include <optional>
#include <span>
#include <vector>

#include "mmatch/group.hpp"
#include "mmatch/matroid.hpp"

namespace mmatch::brute {

inline constexpr int kMaxBruteRank = 5;

// Some n-tuple (x_1..x_n), x_i in F_i, of distinct elements independent in N.
bool has_independent_transversal(std::span<const Mask> family, const Matroid& n);

// Some basis of N and bijection from source realizing the forbidden-sum rule.
bool basis_matchable(const Matroid& m, Mask source, const Matroid& n);

// Every basis of M passes basis_matchable.
bool matroid_matched(const Matroid& m, const Matroid& n);

// Some bijection f: A -> B with a + f(a) not in A (|A| <= 9).
bool group_matchable(const ElementSet& a, const ElementSet& b);

// max |X n I| over independent I, with independence taken from the bases.
int rank_from_bases(std::span<const Mask> bases, Mask x);

}  // namespace mmatch::brute

#endif  // MMATCH_BRUTE_FORCE_HPP_
