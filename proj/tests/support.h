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

// Fixtures and independent reference computations shared by the test
// binaries. The reference code deliberately avoids the library's algebra:
// dense matrices are built from Kronecker products of the defining clock and
// shift matrices, and groups are closed by breadth-first multiplication.

#ifndef HYBRIDSTAB_TESTS_SUPPORT_H
#define HYBRIDSTAB_TESTS_SUPPORT_H

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hybridstab/code.h"
#include "hybridstab/pauli.h"

namespace hybridstab::testing {

PauliOperator qubit(const std::string& word);

/// The 7-qubit hybrid code with T0 = {I, T}.
HybridCode seven_qubit_code();
PauliOperator seven_qubit_t();

/// Kronecker product of per-site X^a Z^b built from the defining matrices,
/// times exp(i pi c / d).
Eigen::MatrixXcd naive_dense(const PauliOperator& g);

/// Closure of the generators under multiplication (phases tracked exactly).
/// Throws if the closure exceeds `limit` elements.
std::set<PauliOperator> close_group(const std::vector<PauliOperator>& generators, int qudit_dim, int num_sites,
                                    std::size_t limit = 200000);

/// Every element of P_{d,n} with phase 0.
std::vector<PauliOperator> all_paulis(int qudit_dim, int num_sites);

/// All Z_N combinations of the rows, for span brute force.
std::set<std::vector<std::int64_t>> brute_span(const std::vector<std::vector<std::int64_t>>& rows, std::size_t width,
                                               std::int64_t modulus);

using Rng = std::mt19937_64;

PauliOperator random_pauli(Rng& rng, int qudit_dim, int num_sites, int max_weight = -1);

struct RandomCodeShape {
    int qudit_dim = 2;
    int num_sites = 3;
    int s = 1;
    int r = 0;
    std::size_t max_sectors = 4;
};

/// A valid code obtained by applying a random symplectic map to the standard
/// form: stabilizers are images of Z_1..Z_s, gauge and logical pairs images of
/// (X_j, Z_j), and sectors images of products of X_1..X_s. Requires prime d.
HybridCode random_code(Rng& rng, const RandomCodeShape& shape);

/// A random element of N(S) = <S, G0, L0> times a random scalar.
PauliOperator random_normalizer_element(Rng& rng, const HybridCode& code);

}  // namespace hybridstab::testing

#endif
