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

#ifndef HYBRIDSTAB_DISTANCE_H
#define HYBRIDSTAB_DISTANCE_H

#include <cstdint>
#include <optional>

#include "hybridstab/code.h"

namespace hybridstab {

/// Minimum weight of the forbidden set, as far as the search got.
struct DistanceResult {
    std::optional<int> exact_distance;
    int lower_bound = 1;
    /// Weight of a known forbidden element; nullopt when the forbidden set is empty.
    std::optional<int> upper_bound;
    std::optional<PauliOperator> witness;
    int search_cutoff = 0;
    /// Candidates examined, summed over workers.
    std::uint64_t candidates = 0;
};

struct DistanceOptions {
    int max_weight = 6;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Enumerates Paulis by increasing weight up to `max_weight` and returns the
/// first forbidden one. Supports are visited in lexicographic order of site
/// tuples and, within a support, local factors X^a Z^b in lexicographic order
/// of (a, b) with the first site most significant. The witness is the first
/// hit in that order regardless of the thread count. Throws
/// std::invalid_argument if the code fails validation or max_weight < 1.
DistanceResult exact_distance(const HybridCode& code, const DistanceOptions& options);

/// Largest number of stabilizer generators a single-site Pauli fails to
/// commute with. For CSS codes the X-type and Z-type counts are also given:
/// x_type counts X-type generators, z_type counts Z-type generators.
struct AnticommuteDegree {
    int m = 0;
    std::optional<int> x_type;
    std::optional<int> z_type;
};
AnticommuteDegree anticommute_degree(const HybridCode& code);

/// min(base, ceil(classical / degree)).
int hybrid_bound(int base_distance, int classical_distance, int degree);
/// min(base, ceil(dx / mx), ceil(dz / mz)).
int hybrid_bound(int base_distance, int dx, int mx, int dz, int mz);

}  // namespace hybridstab

#endif
