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

#ifndef HYBRIDSTAB_SUBGROUP_H
#define HYBRIDSTAB_SUBGROUP_H

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hybridstab/pauli.h"
#include "hybridstab/zmod.h"

namespace hybridstab {

/// A subgroup of P_{d,n} given by generators.
///
/// With `includes_all_phases` the group also contains sqrt(w) I (gauge and
/// logical groups), and membership is decided modulo scalars. Without it the
/// group is taken exactly as generated and membership is phase-exact; that mode
/// is meant for stabilizer groups.
///
/// Generators that already lie in the group generated by their predecessors
/// are dropped on construction and reported by dropped_generators().
class PauliSubgroup {
   public:
    PauliSubgroup(int qudit_dim, int num_sites, std::vector<PauliOperator> generators, bool includes_all_phases);

    int qudit_dim() const { return qudit_dim_; }
    int num_sites() const { return num_sites_; }
    bool includes_all_phases() const { return includes_all_phases_; }
    const std::vector<PauliOperator>& generators() const { return generators_; }
    const std::vector<PauliOperator>& dropped_generators() const { return dropped_; }

    /// Canonical (Howell) form of the generators' symplectic vectors.
    const zmod::RowSpan& echelon() const { return span_; }

    /// One group element per Howell basis row; every element of the group is,
    /// up to scalars, a unique product of powers basis_element(i)^k with
    /// 0 <= k < echelon().basis_orders()[i].
    const std::vector<PauliOperator>& basis_elements() const { return basis_elements_; }

    /// Number of generators that are independent over Z_d. For composite d use
    /// echelon().basis_orders() for the exact structure.
    int rank() const { return static_cast<int>(span_.basis().size()); }

    bool abelian() const { return abelian_; }
    /// Generator of the scalar phase subgroup (a divisor of 2d; 2d means only
    /// the identity). Meaningful for abelian groups without adjoined phases.
    int scalar_step() const { return scalar_step_; }

   private:
    struct Selection;
    static Selection select_generators(int qudit_dim, int num_sites, std::vector<PauliOperator> generators,
                                       bool includes_all_phases);
    PauliSubgroup(int qudit_dim, int num_sites, Selection&& selection, bool includes_all_phases);

    int qudit_dim_;
    int num_sites_;
    bool includes_all_phases_;
    bool abelian_ = true;
    int scalar_step_ = 0;
    std::vector<PauliOperator> generators_;
    std::vector<PauliOperator> dropped_;
    zmod::RowSpan span_;
    std::vector<PauliOperator> basis_elements_;
};

/// prod_i generators[i]^{coeffs[i]}, multiplied in generator order.
PauliOperator product_of_powers(const PauliSubgroup& group, std::span<const std::int64_t> coeffs);

bool is_abelian(const PauliSubgroup& group);

/// Phase exponents c (in Z_{2d}) such that w^{c/2} I lies in the group.
/// A valid stabilizer group returns {0}. Requires an abelian group without
/// adjoined phases.
std::set<int> scalar_content(const PauliSubgroup& group);

/// True iff g commutes with every generator.
bool centralizes(const PauliOperator& g, const PauliSubgroup& group);

bool member(const PauliOperator& g, const PauliSubgroup& group);

/// True iff g1 and g2 lie in the same coset of N(S) = Z(S).
bool same_coset(const PauliOperator& g1, const PauliOperator& g2, const PauliSubgroup& stabilizer);

/// Number of cosets of N(S) in P_{d,n}, i.e. the number of distinct syndromes.
std::uint64_t coset_count(const PauliSubgroup& stabilizer);

/// Restricts which operators solve_syndrome may return.
enum class PauliKind { kAny, kXOnly, kZOnly };

/// A Pauli g with symplectic_form(gens[j], g) == target[j] for every j.
/// Among particular solutions reachable by adding relation-module elements,
/// a locally support-minimal one is returned (not guaranteed minimum weight).
/// Returns nullopt if no solution of the requested kind exists.
std::optional<PauliOperator> solve_syndrome(int qudit_dim, int num_sites, std::span<const PauliOperator> gens,
                                            std::span<const std::int64_t> target,
                                            PauliKind kind = PauliKind::kAny);

}  // namespace hybridstab

#endif
