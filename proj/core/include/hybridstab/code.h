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

#ifndef HYBRIDSTAB_CODE_H
#define HYBRIDSTAB_CODE_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hybridstab/linear_code.h"
#include "hybridstab/pauli.h"
#include "hybridstab/subgroup.h"

namespace hybridstab {

using PauliPair = std::pair<PauliOperator, PauliOperator>;

/// Entry j is e_j with S_j E = w^{e_j} E S_j.
using Syndrome = std::vector<std::int64_t>;

/// A hybrid stabilizer code C(S, G0, L0, T0).
///
/// S is an abelian stabilizer group, G0 and L0 are given as conjugate pairs,
/// and T0 is an ordered list of coset representatives whose first element is
/// the identity. Sector i of the code is T0[i] C(S). Construction does not
/// validate; run validate() before relying on the invariants.
class HybridCode {
   public:
    HybridCode(int qudit_dim, int num_sites, std::vector<PauliOperator> stabilizers,
               std::vector<PauliPair> gauge_pairs, std::vector<PauliPair> logical_pairs,
               std::vector<PauliOperator> transversal = {});

    int qudit_dim() const { return qudit_dim_; }
    int num_sites() const { return num_sites_; }

    const PauliSubgroup& stabilizer() const { return stabilizer_; }
    const std::vector<PauliOperator>& stabilizer_generators() const { return stabilizer_.generators(); }
    const std::vector<PauliPair>& gauge_pairs() const { return gauge_pairs_; }
    const std::vector<PauliPair>& logical_pairs() const { return logical_pairs_; }
    const std::vector<PauliOperator>& transversal() const { return transversal_; }

    /// G0 and L0 flattened pairwise.
    std::vector<PauliOperator> gauge_generators() const;
    std::vector<PauliOperator> logical_generators() const;

    /// G = <S, sqrt(w) I, G0>, membership modulo phase.
    const PauliSubgroup& gauge_group() const { return gauge_group_; }

    int s() const { return static_cast<int>(stabilizer_.generators().size()); }
    int r() const { return static_cast<int>(gauge_pairs_.size()); }
    int k() const { return static_cast<int>(logical_pairs_.size()); }
    std::size_t sector_count() const { return transversal_.size(); }

    /// Same code with a different T0.
    HybridCode with_transversal(std::vector<PauliOperator> transversal) const;

   private:
    int qudit_dim_;
    int num_sites_;
    PauliSubgroup stabilizer_;
    std::vector<PauliPair> gauge_pairs_;
    std::vector<PauliPair> logical_pairs_;
    std::vector<PauliOperator> transversal_;
    PauliSubgroup gauge_group_;
};

struct ValidationIssue {
    std::string kind;
    std::string message;
    std::vector<PauliOperator> operators;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<std::string> warnings;

    bool ok() const { return issues.empty(); }
};

/// Checks every structural invariant of the code and reports each failure.
ValidationReport validate(const HybridCode& code);

Syndrome syndrome(const HybridCode& code, const PauliOperator& error);
Syndrome syndrome(std::span<const PauliOperator> generators, const PauliOperator& error);

/// Conjugate pairs extracted from `operators` by symplectic Gram-Schmidt.
/// Elements that end up commuting with everything are returned in
/// `isotropic`; for a well-formed input they lie in the stabilizer group.
struct SymplecticReduction {
    std::vector<PauliPair> pairs;
    std::vector<PauliOperator> isotropic;
};
/// Requires prime d.
SymplecticReduction symplectic_pairs(std::vector<PauliOperator> operators);

/// Generators of N(S) = Z(S) modulo phase.
std::vector<PauliOperator> normalizer_generators(const PauliSubgroup& stabilizer);

/// S = <Z_1..Z_s>, gauge pairs (X_i, Z_i) on sites s+1..s+r, logical pairs on
/// the rest, and T0 = {X_1^{a_1}..X_s^{a_s}} in lexicographic order of
/// syndrome, truncated to the first `max_sectors` entries when given.
HybridCode build_motivating(int n, int s, int r, int d = 2, std::optional<std::size_t> max_sectors = std::nullopt);

/// Site index of grid position (row, column), both 1-based, on an ell x ell lattice.
inline int bacon_shor_site(int ell, int row, int column) { return (row - 1) * ell + (column - 1); }

/// The ell x ell Bacon-Shor subsystem code with T0 = {I}. Stabilizers are
/// ordered X-type (column pairs j = 1..ell-1) then Z-type (row pairs).
HybridCode build_bacon_shor(int ell);

/// The ell x ell toric code in checkerboard layout (ell even, ell >= 4).
HybridCode build_toric(int ell);

/// The d=18 single-site code with S = <X^6, Z^6> and logical pair (X^3, Z^3).
/// Defaults to T0 = {I, X, X^{-1}}.
HybridCode build_gkp18(std::optional<std::vector<PauliOperator>> transversal = std::nullopt);

/// {X^a Z^b : |a|, |b| <= 1} at d=18, ordered by syndrome.
std::vector<PauliOperator> gkp18_full_transversal();

/// True iff every stabilizer generator is purely X-type or purely Z-type.
bool is_css(const HybridCode& code);

/// Replaces T0 with the group generated by Z-type representatives h_i with
/// X-syndrome v_i (rows of cx) and X-type f_j with Z-syndrome w_j (rows of cz).
HybridCode hybridize_css(const HybridCode& code, const LinearCode& cx, const LinearCode& cz);

/// Orders operators lexicographically by syndrome against the code's stabilizers.
void sort_by_syndrome(std::vector<PauliOperator>& ops, std::span<const PauliOperator> stabilizers);

}  // namespace hybridstab

#endif
