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

#include "hybridstab/code.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace hybridstab {

namespace {

std::vector<PauliOperator> flatten(const std::vector<PauliPair>& pairs) {
    std::vector<PauliOperator> out;
    out.reserve(2 * pairs.size());
    for (const auto& [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

std::vector<PauliOperator> gauge_group_generators(const std::vector<PauliOperator>& stabilizers,
                                                  const std::vector<PauliPair>& gauge_pairs) {
    std::vector<PauliOperator> out = stabilizers;
    for (auto& g : flatten(gauge_pairs)) out.push_back(std::move(g));
    return out;
}

bool is_prime(int d) {
    if (d < 2) return false;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) return false;
    }
    return true;
}

void require_site_count(int d, int n) {
    if (d < 2 || d > kMaxQuditDim) throw std::invalid_argument("qudit dimension out of range: " + std::to_string(d));
    if (n < 1) throw std::invalid_argument("a code needs at least one site");
}

}  // namespace

HybridCode::HybridCode(int qudit_dim, int num_sites, std::vector<PauliOperator> stabilizers,
                       std::vector<PauliPair> gauge_pairs, std::vector<PauliPair> logical_pairs,
                       std::vector<PauliOperator> transversal)
    : qudit_dim_(qudit_dim),
      num_sites_(num_sites),
      stabilizer_((require_site_count(qudit_dim, num_sites), qudit_dim), num_sites, stabilizers, false),
      gauge_pairs_(std::move(gauge_pairs)),
      logical_pairs_(std::move(logical_pairs)),
      transversal_(std::move(transversal)),
      gauge_group_(qudit_dim, num_sites, gauge_group_generators(stabilizers, gauge_pairs_), true) {
    for (const auto& g : flatten(logical_pairs_)) {
        if (g.qudit_dim() != qudit_dim || g.num_sites() != num_sites) {
            throw std::invalid_argument("logical operator " + g.str() + " has the wrong shape");
        }
    }
    for (const auto& g : transversal_) {
        if (g.qudit_dim() != qudit_dim || g.num_sites() != num_sites) {
            throw std::invalid_argument("transversal element " + g.str() + " has the wrong shape");
        }
    }
    if (transversal_.empty()) transversal_.emplace_back(qudit_dim, num_sites);
}

std::vector<PauliOperator> HybridCode::gauge_generators() const { return flatten(gauge_pairs_); }
std::vector<PauliOperator> HybridCode::logical_generators() const { return flatten(logical_pairs_); }

HybridCode HybridCode::with_transversal(std::vector<PauliOperator> transversal) const {
    std::vector<PauliOperator> stabilizers = stabilizer_.generators();
    return HybridCode(qudit_dim_, num_sites_, std::move(stabilizers), gauge_pairs_, logical_pairs_,
                      std::move(transversal));
}

Syndrome syndrome(std::span<const PauliOperator> generators, const PauliOperator& error) {
    Syndrome out;
    out.reserve(generators.size());
    for (const auto& s : generators) {
        require_same_group(s, error);
        out.push_back(symplectic_form(s, error));
    }
    return out;
}

Syndrome syndrome(const HybridCode& code, const PauliOperator& error) {
    return syndrome(std::span<const PauliOperator>(code.stabilizer_generators()), error);
}

ValidationReport validate(const HybridCode& code) {
    ValidationReport report;
    const int d = code.qudit_dim();
    const int n = code.num_sites();
    const PauliSubgroup& stab = code.stabilizer();
    auto issue = [&](std::string kind, std::string message, std::vector<PauliOperator> ops) {
        report.issues.push_back({std::move(kind), std::move(message), std::move(ops)});
    };

    for (const auto& g : stab.dropped_generators()) {
        report.warnings.push_back("redundant stabilizer generator dropped: " + g.str());
    }
    for (const auto& g : code.gauge_group().dropped_generators()) {
        report.warnings.push_back("gauge generator already generated by its predecessors: " + g.str());
    }

    if (!stab.abelian()) {
        const auto& gens = stab.generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                if (symplectic_form(gens[i], gens[j]) != 0) {
                    issue("stabilizer_not_abelian", "stabilizer generators do not commute", {gens[i], gens[j]});
                }
            }
        }
    } else if (stab.scalar_step() != 2 * d) {
        issue("stabilizer_has_scalars",
              "stabilizer group contains the scalar " + PauliOperator::scalar(d, n, stab.scalar_step()).str(), {});
    }

    const auto gauge = code.gauge_generators();
    const auto logical = code.logical_generators();
    for (const auto* group : {&gauge, &logical}) {
        const char* label = group == &gauge ? "gauge" : "logical";
        for (const auto& g : *group) {
            if (!centralizes(g, stab)) {
                issue("not_in_normalizer", std::string(label) + " operator does not commute with the stabilizer", {g});
            }
        }
    }
    for (const auto& g : gauge) {
        for (const auto& l : logical) {
            if (symplectic_form(g, l) != 0) {
                issue("gauge_logical_not_commuting", "gauge and logical operators do not commute", {g, l});
            }
        }
    }

    for (const auto* pairs : {&code.gauge_pairs(), &code.logical_pairs()}) {
        const char* label = pairs == &code.gauge_pairs() ? "gauge" : "logical";
        for (std::size_t i = 0; i < pairs->size(); ++i) {
            const auto& [a, b] = (*pairs)[i];
            if (symplectic_form(a, b) == 0) {
                issue("pair_not_conjugate", std::string(label) + " pair members commute", {a, b});
            }
            for (std::size_t j = i + 1; j < pairs->size(); ++j) {
                const auto& [c, e] = (*pairs)[j];
                for (const auto* p : {&a, &b}) {
                    for (const auto* q : {&c, &e}) {
                        if (symplectic_form(*p, *q) != 0) {
                            issue("pairs_not_commuting", std::string(label) + " operators from different pairs do not commute",
                                  {*p, *q});
                        }
                    }
                }
            }
        }
    }

    const auto& transversal = code.transversal();
    if (!transversal.front().is_identity()) {
        issue("transversal_first_not_identity", "the first transversal element must be the identity", {transversal.front()});
    }
    std::map<Syndrome, std::size_t> seen;
    for (std::size_t i = 0; i < transversal.size(); ++i) {
        auto [it, inserted] = seen.emplace(syndrome(code, transversal[i]), i);
        if (!inserted) {
            issue("transversal_same_coset", "transversal elements lie in the same normalizer coset",
                  {transversal[it->second], transversal[i]});
        }
    }

    // Minimality and completeness are both read off one Howell form of
    // S + G0 + L0. Generator i can be dropped iff some relation has a unit
    // coefficient on it, i.e. the coefficient ideal at i is all of Z_d.
    std::vector<zmod::Row> rows;
    const std::size_t s_count = stab.generators().size();
    for (const auto& g : stab.generators()) rows.push_back(g.symplectic_vector());
    for (const auto& g : gauge) rows.push_back(g.symplectic_vector());
    for (const auto& g : logical) rows.push_back(g.symplectic_vector());
    zmod::RowSpan all(rows, 2 * static_cast<std::size_t>(n), d);
    for (std::size_t i = s_count; i < rows.size(); ++i) {
        std::int64_t ideal = d;
        for (const auto& relation : all.kernel()) ideal = zmod::gcd(ideal, relation[i]);
        if (ideal == 1) {
            const bool is_gauge = i - s_count < gauge.size();
            const auto& g = is_gauge ? gauge[i - s_count] : logical[i - s_count - gauge.size()];
            issue("not_minimal",
                  std::string(is_gauge ? "gauge" : "logical") +
                      " operator lies in the group generated by the stabilizer and the other generators",
                  {g});
        }
    }

    // |<S, G0, L0>| * |<S>| = d^{2n} exactly when <S, G0, L0> is all of N(S).
    auto total = all.size_factorization();
    for (auto [p, e] : stab.echelon().size_factorization()) total[p] += e;
    zmod::Factorization expected;
    for (auto [p, e] : zmod::factorize(d)) expected[p] = 2 * n * e;
    if (stab.abelian() && total != expected) {
        issue("normalizer_incomplete", "stabilizer, gauge and logical operators do not generate the normalizer", {});
    }
    return report;
}

SymplecticReduction symplectic_pairs(std::vector<PauliOperator> operators) {
    SymplecticReduction out;
    if (operators.empty()) return out;
    const int d = operators.front().qudit_dim();
    if (!is_prime(d)) throw std::invalid_argument("symplectic_pairs requires a prime qudit dimension");
    auto scaled = [&](const PauliOperator& g, std::int64_t k) {
        return power(g, static_cast<std::uint64_t>(zmod::reduce(k, d))).with_phase(0);
    };
    std::vector<PauliOperator> work = std::move(operators);
    while (!work.empty()) {
        PauliOperator a = work.front();
        work.erase(work.begin());
        if (a.is_scalar()) continue;
        auto partner = std::find_if(work.begin(), work.end(),
                                    [&](const PauliOperator& g) { return symplectic_form(a, g) != 0; });
        if (partner == work.end()) {
            out.isotropic.push_back(std::move(a));
            continue;
        }
        PauliOperator b = *partner;
        work.erase(partner);
        b = scaled(b, *zmod::inverse(symplectic_form(a, b), d));
        for (auto& c : work) {
            // After this, c commutes with both a and b because omega(a, b) = 1.
            const std::int64_t alpha = -symplectic_form(a, c);
            const std::int64_t beta = symplectic_form(b, c);
            c = multiply(multiply(c, scaled(a, beta)), scaled(b, alpha)).with_phase(0);
        }
        out.pairs.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

std::vector<PauliOperator> normalizer_generators(const PauliSubgroup& stabilizer) {
    const int d = stabilizer.qudit_dim();
    const int n = stabilizer.num_sites();
    const auto& gens = stabilizer.generators();
    // Row v of the system is the syndrome contributed by symplectic unit vector v.
    std::vector<zmod::Row> rows;
    for (int v = 0; v < 2 * n; ++v) {
        zmod::Row row(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            row[j] = v < n ? static_cast<std::int64_t>(gens[j].z(v)) : -static_cast<std::int64_t>(gens[j].x(v - n));
        }
        rows.push_back(std::move(row));
    }
    std::vector<PauliOperator> out;
    if (gens.empty()) {
        for (int j = 0; j < n; ++j) {
            out.push_back(PauliOperator::single(d, n, j, 1, 0));
            out.push_back(PauliOperator::single(d, n, j, 0, 1));
        }
        return out;
    }
    zmod::RowSpan system(std::move(rows), gens.size(), d);
    for (const auto& relation : system.kernel()) out.push_back(PauliOperator::from_symplectic(d, relation));
    return out;
}

void sort_by_syndrome(std::vector<PauliOperator>& ops, std::span<const PauliOperator> stabilizers) {
    std::vector<std::pair<Syndrome, PauliOperator>> keyed;
    keyed.reserve(ops.size());
    for (auto& g : ops) keyed.emplace_back(syndrome(stabilizers, g), std::move(g));
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    ops.clear();
    for (auto& [key, g] : keyed) ops.push_back(std::move(g));
}

HybridCode build_motivating(int n, int s, int r, int d, std::optional<std::size_t> max_sectors) {
    require_site_count(d, n);
    if (s < 0 || r < 0 || s + r > n) throw std::invalid_argument("build_motivating requires 0 <= s, 0 <= r <= n - s");
    std::vector<PauliOperator> stabilizers;
    for (int j = 0; j < s; ++j) stabilizers.push_back(PauliOperator::single(d, n, j, 0, 1));
    std::vector<PauliPair> gauge, logical;
    for (int j = s; j < n; ++j) {
        PauliPair pair{PauliOperator::single(d, n, j, 1, 0), PauliOperator::single(d, n, j, 0, 1)};
        (j < s + r ? gauge : logical).push_back(std::move(pair));
    }
    // X_1^{a_1}..X_s^{a_s} has syndrome (a_1..a_s), so counting a in
    // lexicographic order already sorts by syndrome.
    std::vector<PauliOperator> transversal;
    std::vector<std::uint32_t> digits(s, 0);
    const std::size_t limit = max_sectors.value_or(static_cast<std::size_t>(-1));
    if (limit == 0) throw std::invalid_argument("a code needs at least one sector");
    while (transversal.size() < limit) {
        std::vector<std::uint32_t> x(n, 0);
        std::copy(digits.begin(), digits.end(), x.begin());
        transversal.emplace_back(d, 0, std::move(x), std::vector<std::uint32_t>(n, 0));
        int i = s - 1;
        while (i >= 0 && ++digits[i] == static_cast<std::uint32_t>(d)) digits[i--] = 0;
        if (i < 0) break;
    }
    return HybridCode(d, n, std::move(stabilizers), std::move(gauge), std::move(logical), std::move(transversal));
}

HybridCode build_bacon_shor(int ell) {
    if (ell < 2 || ell > 64) throw std::invalid_argument("build_bacon_shor requires 2 <= ell <= 64");
    const int n = ell * ell;
    auto product = [&](const std::vector<int>& sites, bool x_type) {
        std::vector<std::uint32_t> x(n, 0), z(n, 0);
        for (int site : sites) (x_type ? x : z)[site] = 1;
        return PauliOperator(2, 0, std::move(x), std::move(z));
    };
    auto column = [&](int j) {
        std::vector<int> sites;
        for (int i = 1; i <= ell; ++i) sites.push_back(bacon_shor_site(ell, i, j));
        return sites;
    };
    auto row = [&](int i) {
        std::vector<int> sites;
        for (int j = 1; j <= ell; ++j) sites.push_back(bacon_shor_site(ell, i, j));
        return sites;
    };
    auto join = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    std::vector<PauliOperator> stabilizers;
    for (int j = 1; j < ell; ++j) stabilizers.push_back(product(join(column(j), column(j + 1)), true));
    for (int i = 1; i < ell; ++i) stabilizers.push_back(product(join(row(i), row(i + 1)), false));

    std::vector<PauliOperator> raw_gauge;
    for (int i = 1; i <= ell; ++i) {
        for (int j = 1; j < ell; ++j) {
            raw_gauge.push_back(product({bacon_shor_site(ell, i, j), bacon_shor_site(ell, i, j + 1)}, true));
        }
    }
    for (int i = 1; i < ell; ++i) {
        for (int j = 1; j <= ell; ++j) {
            raw_gauge.push_back(product({bacon_shor_site(ell, i, j), bacon_shor_site(ell, i + 1, j)}, false));
        }
    }
    SymplecticReduction reduced = symplectic_pairs(std::move(raw_gauge));

    std::vector<PauliPair> logical{{product(column(1), true), product(row(1), false)}};
    return HybridCode(2, n, std::move(stabilizers), std::move(reduced.pairs), std::move(logical));
}

HybridCode build_toric(int ell) {
    if (ell < 4 || ell % 2 != 0 || ell > 64) throw std::invalid_argument("build_toric requires even ell with 4 <= ell <= 64");
    const int n = ell * ell;
    auto site = [&](int i, int j) { return (i % ell) * ell + (j % ell); };
    std::vector<PauliOperator> x_checks, z_checks;
    for (int i = 0; i < ell; ++i) {
        for (int j = 0; j < ell; ++j) {
            std::vector<std::uint32_t> support(n, 0);
            for (int s : {site(i, j), site(i, j + 1), site(i + 1, j), site(i + 1, j + 1)}) support[s] = 1;
            const bool x_type = (i + j) % 2 == 0;
            std::vector<std::uint32_t> empty(n, 0);
            (x_type ? x_checks : z_checks)
                .emplace_back(2, 0, x_type ? support : empty, x_type ? empty : support);
        }
    }
    std::vector<PauliOperator> stabilizers = std::move(x_checks);
    stabilizers.insert(stabilizers.end(), z_checks.begin(), z_checks.end());
    PauliSubgroup stab(2, n, stabilizers, false);
    SymplecticReduction reduced = symplectic_pairs(normalizer_generators(stab));
    return HybridCode(2, n, std::move(stabilizers), {}, std::move(reduced.pairs));
}

HybridCode build_gkp18(std::optional<std::vector<PauliOperator>> transversal) {
    constexpr int d = 18;
    auto op = [](std::uint32_t a, std::uint32_t b) { return PauliOperator::single(d, 1, 0, a, b); };
    std::vector<PauliOperator> stabilizers{op(6, 0), op(0, 6)};
    std::vector<PauliPair> logical{{op(3, 0), op(0, 3)}};
    std::vector<PauliOperator> t0 = transversal ? std::move(*transversal) : std::vector<PauliOperator>{op(0, 0), op(1, 0), op(17, 0)};
    return HybridCode(d, 1, std::move(stabilizers), {}, std::move(logical), std::move(t0));
}

std::vector<PauliOperator> gkp18_full_transversal() {
    std::vector<PauliOperator> out;
    for (std::uint32_t a : {0u, 1u, 17u}) {
        for (std::uint32_t b : {0u, 1u, 17u}) out.push_back(PauliOperator::single(18, 1, 0, a, b));
    }
    const std::vector<PauliOperator> stabilizers{PauliOperator::single(18, 1, 0, 6, 0), PauliOperator::single(18, 1, 0, 0, 6)};
    sort_by_syndrome(out, stabilizers);
    return out;
}

bool is_css(const HybridCode& code) {
    for (const auto& g : code.stabilizer_generators()) {
        const auto x = g.x_exp();
        const auto z = g.z_exp();
        const bool has_x = std::any_of(x.begin(), x.end(), [](auto v) { return v != 0; });
        const bool has_z = std::any_of(z.begin(), z.end(), [](auto v) { return v != 0; });
        if (has_x && has_z) return false;
    }
    return true;
}

HybridCode hybridize_css(const HybridCode& code, const LinearCode& cx, const LinearCode& cz) {
    if (!is_css(code)) throw std::invalid_argument("hybridize_css requires a CSS stabilizer");
    const int d = code.qudit_dim();
    const int n = code.num_sites();
    std::vector<PauliOperator> sx, sz;
    for (const auto& g : code.stabilizer_generators()) {
        const auto x = g.x_exp();
        (std::any_of(x.begin(), x.end(), [](auto v) { return v != 0; }) ? sx : sz).push_back(g);
    }
    if (cx.length() != sx.size() || cz.length() != sz.size()) {
        throw std::invalid_argument("classical code lengths must be " + std::to_string(sx.size()) + " (X) and " +
                                    std::to_string(sz.size()) + " (Z)");
    }
    if (cx.modulus() != d || cz.modulus() != d) throw std::invalid_argument("classical codes must be over Z_d");

    struct Factor {
        PauliOperator rep;
        std::int64_t order;
    };
    std::vector<Factor> factors;
    auto add_factors = [&](const LinearCode& classical, const std::vector<PauliOperator>& checks, PauliKind kind) {
        zmod::RowSpan span(classical.generators(), classical.length(), d);
        for (std::size_t i = 0; i < span.basis().size(); ++i) {
            auto rep = solve_syndrome(d, n, checks, span.basis()[i], kind);
            if (!rep) throw std::invalid_argument("no Pauli realizes the classical codeword as a syndrome");
            factors.push_back({std::move(*rep), span.basis_orders()[i]});
        }
    };
    add_factors(cx, sx, PauliKind::kZOnly);
    add_factors(cz, sz, PauliKind::kXOnly);

    std::size_t total = 1;
    for (const auto& f : factors) {
        total *= static_cast<std::size_t>(f.order);
        if (total > (std::size_t{1} << 20)) throw std::invalid_argument("hybridization would exceed 2^20 sectors");
    }
    std::vector<PauliOperator> transversal;
    transversal.reserve(total);
    std::vector<std::int64_t> digits(factors.size(), 0);
    for (;;) {
        PauliOperator g(d, n);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (digits[i] != 0) g = multiply(g, power(factors[i].rep, static_cast<std::uint64_t>(digits[i])));
        }
        transversal.push_back(g.with_phase(0));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == factors[i].order) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    sort_by_syndrome(transversal, code.stabilizer_generators());
    return code.with_transversal(std::move(transversal));
}

}  // namespace hybridstab
