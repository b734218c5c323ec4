// Copyright 2026 The hybridstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYBRIDSTAB_CORRECTABILITY_H
#define HYBRIDSTAB_CORRECTABILITY_H

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hybridstab/code.h"

namespace hybridstab {

/// One component of the forbidden set
///   (N(S) \ G)  U  (union over i != j of g_i N(S) g_j^{-1}).
/// Sector indices are 0-based positions in the transversal.
struct ForbiddenTag {
    enum class Kind { kNormalizerMinusGauge, kCrossCoset };
    Kind kind;
    std::size_t i = 0;
    std::size_t j = 0;

    static ForbiddenTag normalizer_minus_gauge() { return {Kind::kNormalizerMinusGauge, 0, 0}; }
    static ForbiddenTag cross_coset(std::size_t i, std::size_t j) { return {Kind::kCrossCoset, i, j}; }

    /// "normalizer_minus_gauge" or "cross_coset(i,j)" with 1-based sectors.
    std::string str() const;

    auto operator<=>(const ForbiddenTag&) const = default;
};

/// E_k^{-1} E_l lies in the forbidden component `tag`.
struct CorrectabilityWitness {
    std::size_t k;
    std::size_t l;
    ForbiddenTag tag;
    PauliOperator product;
};

struct CorrectabilityReport {
    bool correctable = true;
    std::optional<CorrectabilityWitness> witness;
    /// per_sector[i]: no product E_k^{-1} E_l lies in g_i (N(S) \ G) g_i^{-1}.
    std::vector<bool> per_sector;
};

/// Every forbidden component that contains `error`, sorted.
std::set<ForbiddenTag> forbidden_set_membership(const HybridCode& code, const PauliOperator& error);

/// Decides whether `errors` is correctable for the code. The witness is the
/// lexicographically smallest ordered pair (k, l) whose product is forbidden,
/// tagged with the smallest component it hits. Throws std::invalid_argument if
/// the code fails validation, the list is empty, or shapes differ.
CorrectabilityReport check_errors(const HybridCode& code, const std::vector<PauliOperator>& errors);

}  // namespace hybridstab

#endif
