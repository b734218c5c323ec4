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

#include "hybridstab/subgroup.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hybridstab {

namespace {

std::vector<zmod::Row> symplectic_rows(const std::vector<PauliOperator>& ops) {
    std::vector<zmod::Row> rows;
    rows.reserve(ops.size());
    for (const auto& g : ops) rows.push_back(g.symplectic_vector());
    return rows;
}

PauliOperator product_of_powers(int d, int n, std::span<const PauliOperator> gens, std::span<const std::int64_t> coeffs) {
    PauliOperator result(d, n);
    const std::int64_t order = 2 * static_cast<std::int64_t>(d);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::int64_t k = zmod::reduce(coeffs[i], order);
        if (k != 0) result = multiply(result, power(gens[i], static_cast<std::uint64_t>(k)));
    }
    return result;
}

}  // namespace

struct PauliSubgroup::Selection {
    std::vector<PauliOperator> kept;
    std::vector<PauliOperator> dropped;
};

// A generator is dropped when some relation expresses it exactly through
// earlier generators. Relations are read off a Howell form whose coefficient
// columns run from the last generator to the first, so a kernel row whose
// leading coefficient sits on generator i involves only generators <= i.
PauliSubgroup::Selection PauliSubgroup::select_generators(int d, int n, std::vector<PauliOperator> gens,
                                                          bool includes_all_phases) {
    for (const auto& g : gens) {
        if (g.qudit_dim() != d || g.num_sites() != n) {
            throw std::invalid_argument("generator " + g.str() + " does not belong to P_{" + std::to_string(d) + "," +
                                        std::to_string(n) + "}");
        }
    }
    const std::size_t m = gens.size();
    const std::size_t width = 2 * static_cast<std::size_t>(n);
    std::vector<zmod::Row> augmented;
    for (std::size_t i = 0; i < m; ++i) {
        zmod::Row row = gens[i].symplectic_vector();
        row.resize(width + m, 0);
        row[width + (m - 1 - i)] = 1;
        augmented.push_back(std::move(row));
    }
    std::vector<bool> redundant(m, false);
    for (const auto& row : zmod::howell_form(std::move(augmented), width + m, d)) {
        std::size_t lead = zmod::leading_index(row);
        if (lead < width || row[lead] != 1) continue;
        const std::size_t i = m - 1 - (lead - width);
        if (includes_all_phases) {
            redundant[i] = true;
            continue;
        }
        std::vector<std::int64_t> coeffs(i + 1);
        for (std::size_t j = 0; j <= i; ++j) coeffs[j] = row[width + (m - 1 - j)];
        PauliOperator relation = product_of_powers(d, n, std::span(gens).first(i + 1), coeffs);
        redundant[i] = relation.phase_exp() == 0;
    }
    Selection out;
    for (std::size_t i = 0; i < m; ++i) (redundant[i] ? out.dropped : out.kept).push_back(std::move(gens[i]));
    return out;
}

PauliSubgroup::PauliSubgroup(int qudit_dim, int num_sites, std::vector<PauliOperator> generators,
                             bool includes_all_phases)
    : PauliSubgroup(qudit_dim, num_sites, select_generators(qudit_dim, num_sites, std::move(generators), includes_all_phases),
                    includes_all_phases) {}

PauliSubgroup::PauliSubgroup(int qudit_dim, int num_sites, Selection&& selection, bool includes_all_phases)
    : qudit_dim_(qudit_dim),
      num_sites_(num_sites),
      includes_all_phases_(includes_all_phases),
      generators_(std::move(selection.kept)),
      dropped_(std::move(selection.dropped)),
      span_(symplectic_rows(generators_), 2 * static_cast<std::size_t>(num_sites), qudit_dim) {
    for (std::size_t i = 0; i < generators_.size() && abelian_; ++i) {
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            if (symplectic_form(generators_[i], generators_[j]) != 0) {
                abelian_ = false;
                break;
            }
        }
    }
    for (const auto& coeffs : span_.basis_coefficients()) {
        basis_elements_.push_back(product_of_powers(qudit_dim, num_sites, generators_, coeffs));
    }

    const int phase_order = 2 * qudit_dim;
    if (includes_all_phases_) {
        scalar_step_ = 1;
    } else if (abelian_) {
        // The exponent vectors c with sum c_i v_i = 0 (mod d) form a lattice
        // generated by lifted kernel rows and d*e_i. On an abelian group the
        // map c -> prod g_i^{c_i} is a homomorphism, so the scalars it reaches
        // form the cyclic subgroup generated by the images of those generators.
        std::int64_t step = phase_order;
        for (const auto& relation : span_.kernel()) {
            step = zmod::gcd(step, product_of_powers(qudit_dim, num_sites, generators_, relation).phase_exp());
        }
        for (const auto& g : generators_) {
            step = zmod::gcd(step, power(g, static_cast<std::uint64_t>(qudit_dim)).phase_exp());
        }
        scalar_step_ = static_cast<int>(step);
    }
}

PauliOperator product_of_powers(const PauliSubgroup& group, std::span<const std::int64_t> coeffs) {
    if (coeffs.size() != group.generators().size()) throw std::invalid_argument("coefficient count mismatch");
    return product_of_powers(group.qudit_dim(), group.num_sites(), group.generators(), coeffs);
}

bool is_abelian(const PauliSubgroup& group) { return group.abelian(); }

std::set<int> scalar_content(const PauliSubgroup& group) {
    const int phase_order = 2 * group.qudit_dim();
    std::set<int> out;
    if (group.includes_all_phases()) {
        for (int c = 0; c < phase_order; ++c) out.insert(c);
        return out;
    }
    if (!group.abelian()) throw std::invalid_argument("scalar_content requires an abelian group");
    for (int c = 0; c < phase_order; c += group.scalar_step()) out.insert(c);
    return out;
}

bool centralizes(const PauliOperator& g, const PauliSubgroup& group) {
    return std::all_of(group.generators().begin(), group.generators().end(),
                       [&](const PauliOperator& s) { return symplectic_form(g, s) == 0; });
}

bool member(const PauliOperator& g, const PauliSubgroup& group) {
    if (g.qudit_dim() != group.qudit_dim() || g.num_sites() != group.num_sites()) {
        throw std::invalid_argument("member: operator and group live in different Pauli groups");
    }
    auto coeffs = group.echelon().solve(g.symplectic_vector());
    if (!coeffs) return false;
    if (group.includes_all_phases()) return true;
    if (!group.abelian()) throw std::invalid_argument("phase-exact membership requires an abelian group");
    const PauliOperator candidate = product_of_powers(group, *coeffs);
    const int phase_order = 2 * group.qudit_dim();
    const int delta = static_cast<int>(zmod::reduce(g.phase_exp() - candidate.phase_exp(), phase_order));
    return delta % group.scalar_step() == 0;
}

bool same_coset(const PauliOperator& g1, const PauliOperator& g2, const PauliSubgroup& stabilizer) {
    return centralizes(multiply(inverse(g1), g2), stabilizer);
}

std::uint64_t coset_count(const PauliSubgroup& stabilizer) {
    if (stabilizer.includes_all_phases() || !stabilizer.abelian() || stabilizer.scalar_step() != 2 * stabilizer.qudit_dim()) {
        throw std::invalid_argument("coset_count requires a valid stabilizer group");
    }
    // The syndrome map v -> (omega(s_j, v))_j has an image isomorphic to the
    // row span of the generators' symplectic vectors.
    auto size = stabilizer.echelon().size();
    if (!size) throw std::overflow_error("coset count does not fit in 63 bits");
    return *size;
}

std::optional<PauliOperator> solve_syndrome(int qudit_dim, int num_sites, std::span<const PauliOperator> gens,
                                            std::span<const std::int64_t> target, PauliKind kind) {
    if (target.size() != gens.size()) throw std::invalid_argument("syndrome target length differs from generator count");
    for (const auto& g : gens) {
        if (g.qudit_dim() != qudit_dim || g.num_sites() != num_sites) {
            throw std::invalid_argument("solve_syndrome: generator from a different Pauli group");
        }
    }
    const int d = qudit_dim;
    const int n = num_sites;
    // Unknowns are the x exponents (variables 0..n-1) and z exponents (n..2n-1)
    // of the solution; each contributes a row of its coefficients in every
    // generator's symplectic form.
    std::vector<int> variables;
    if (kind != PauliKind::kZOnly) {
        for (int k = 0; k < n; ++k) variables.push_back(k);
    }
    if (kind != PauliKind::kXOnly) {
        for (int k = 0; k < n; ++k) variables.push_back(n + k);
    }
    std::vector<zmod::Row> rows;
    for (int var : variables) {
        zmod::Row row(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            row[j] = var < n ? static_cast<std::int64_t>(gens[j].z(var)) : -static_cast<std::int64_t>(gens[j].x(var - n));
        }
        rows.push_back(std::move(row));
    }
    zmod::RowSpan system(std::move(rows), gens.size(), d);
    auto solution = system.solve(target);
    if (!solution) return std::nullopt;

    auto support = [&](const zmod::Row& values) {
        std::vector<bool> touched(n, false);
        for (std::size_t v = 0; v < variables.size(); ++v) {
            if (values[v] != 0) touched[variables[v] % n] = true;
        }
        return std::count(touched.begin(), touched.end(), true);
    };
    auto current = *solution;
    auto best = support(current);
    for (bool improved = true; improved;) {
        improved = false;
        for (const auto& relation : system.kernel()) {
            for (int t = 1; t < d && !improved; ++t) {
                zmod::Row candidate = current;
                for (std::size_t v = 0; v < candidate.size(); ++v) {
                    candidate[v] = zmod::reduce(candidate[v] + t * relation[v], d);
                }
                auto s = support(candidate);
                if (s < best) {
                    best = s;
                    current = std::move(candidate);
                    improved = true;
                }
            }
            if (improved) break;
        }
    }

    std::vector<std::int64_t> vec(2 * static_cast<std::size_t>(n), 0);
    for (std::size_t v = 0; v < variables.size(); ++v) vec[variables[v]] = current[v];
    return PauliOperator::from_symplectic(d, vec);
}

}  // namespace hybridstab
