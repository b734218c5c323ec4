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

// Dense-matrix ground truth for small codes. Everything here works on
// explicit d^n x d^n complex matrices and shares no arithmetic with the
// symplectic code paths beyond reading operator exponents.

#ifndef HYBRIDSTAB_ORACLE_H
#define HYBRIDSTAB_ORACLE_H

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "hybridstab/code.h"

namespace hybridstab::oracle {

using DenseOperator = Eigen::MatrixXcd;

/// Matrix dimension above which the oracle refuses to render.
inline constexpr std::size_t kDefaultDenseCap = 4096;

/// Largest code-space dimension for which the commutant is computed.
inline constexpr std::size_t kCommutantCap = 32;

/// The dimension d^n exceeds the configured cap.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The code lacks the structure the OAQEC test relies on.
class Refusal : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// kDefaultDenseCap unless HYBRIDSTAB_DENSE_CAP holds a positive integer.
std::size_t dense_cap();

/// d^n, or throws CapExceeded if it exceeds dense_cap().
std::size_t dense_dimension(int qudit_dim, int num_sites);

/// X^a Z^b |k> = w^{b k} |k + a> per site, site 1 the most significant
/// tensor factor, times the global phase exp(i pi c / d).
DenseOperator render(const PauliOperator& g);

/// (1/|S|) sum over all elements of S. Throws std::invalid_argument unless S
/// is abelian without scalars, and if |S| > 2^20.
DenseOperator stabilizer_projector(const PauliSubgroup& stabilizer);

/// Orthonormal basis of the column space, rank decided by singular values
/// above `tolerance` times the largest one.
Eigen::MatrixXcd orthonormal_basis(const Eigen::MatrixXcd& m, double tolerance = 1e-9);

/// Orthonormal basis of the range of a projector.
Eigen::MatrixXcd projector_range(const DenseOperator& projector);

/// Sine of the largest principal angle between two column spaces; 0 iff they
/// coincide. Bases need not be orthonormal. Spaces of different rank give 1.
double subspace_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// max over i != j of max |P g_i^{-1} g_j P| entrywise.
double check_coset_orthogonality(const HybridCode& code);

struct SubsystemCheck {
    double commutation_residual = 0;
    std::size_t code_dimension = 0;
    std::size_t expected_dimension = 0;
    std::size_t commutant_dimension = 0;

    bool passed() const {
        return commutation_residual < 1e-10 && code_dimension == expected_dimension && commutant_dimension == 1;
    }
};

/// On C = range(P): the restricted gauge and logical operators commute, dim C
/// equals the product of the pair orders (d^{r+k} for prime d), and the
/// restricted operators have only scalars in their commutant.
SubsystemCheck check_subsystem_structure(const HybridCode& code);

/// OAQEC test: with Q = sum_i g_i P g_i^{-1}, every
/// Q E_k^dagger E_l Q must commute with the algebra generated by the sector
/// projectors P_i and the compressed logicals P_i g_i L g_i^{-1} P_i.
/// Throws Refusal if check_subsystem_structure fails.
bool check_oaqec_conditions(const HybridCode& code, const std::vector<PauliOperator>& errors);

struct DegeneracyCheck {
    /// Z C_T vs Z^7 C_T and Z C_T vs Z^13 C_T.
    double z7_residual = 1;
    double z13_residual = 1;
    /// Largest overlap between Z C_T, Z^3 C_T and Z^5 C_T.
    double orthogonality_residual = 1;
    /// max |Z^6 v - w^6 v| over an orthonormal basis v of X C.
    double z6_scalar_residual = 1;

    bool passed() const {
        return z7_residual < 1e-10 && z13_residual < 1e-10 && orthogonality_residual < 1e-10 && z6_scalar_residual < 1e-10;
    }
};

/// Degeneracy of the d=18 code with T0 = {I, X, X^{-1}} under Z powers.
/// `z_step` replaces the exponents 1, 7, 13 by z_step, z_step+6, z_step+12 and
/// 1, 3, 5 by z_step, 3 z_step, 5 z_step.
DegeneracyCheck check_degeneracy_example(int z_step = 1);

}  // namespace hybridstab::oracle

#endif
