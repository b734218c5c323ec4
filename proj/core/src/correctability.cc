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

#include "hybridstab/correctability.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace hybridstab {

std::string ForbiddenTag::str() const {
    if (kind == Kind::kNormalizerMinusGauge) return "normalizer_minus_gauge";
    return "cross_coset(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

namespace {

// E lies in g_i N(S) g_j^{-1} iff sigma(E) = sigma(g_i) - sigma(g_j), because
// the syndrome is a homomorphism that vanishes exactly on N(S).
class ForbiddenSet {
   public:
    explicit ForbiddenSet(const HybridCode& code) : code_(code) {
        const int d = code.qudit_dim();
        for (const auto& g : code.transversal()) sector_syndromes_.push_back(syndrome(code, g));
        for (std::size_t i = 0; i < sector_syndromes_.size(); ++i) {
            for (std::size_t j = 0; j < sector_syndromes_.size(); ++j) {
                if (i == j) continue;
                Syndrome diff(sector_syndromes_[i].size());
                for (std::size_t t = 0; t < diff.size(); ++t) {
                    diff[t] = zmod::reduce(sector_syndromes_[i][t] - sector_syndromes_[j][t], d);
                }
                cross_[std::move(diff)].push_back({i, j});
            }
        }
    }

    std::set<ForbiddenTag> tags(const PauliOperator& error) const {
        std::set<ForbiddenTag> out;
        const Syndrome sigma = syndrome(code_, error);
        if (in_normalizer_minus_gauge(error, sigma)) out.insert(ForbiddenTag::normalizer_minus_gauge());
        if (auto it = cross_.find(sigma); it != cross_.end()) {
            for (auto [i, j] : it->second) out.insert(ForbiddenTag::cross_coset(i, j));
        }
        return out;
    }

    bool in_normalizer_minus_gauge(const PauliOperator& error, const Syndrome& sigma) const {
        return std::all_of(sigma.begin(), sigma.end(), [](auto v) { return v == 0; }) &&
               !member(error, code_.gauge_group());
    }

   private:
    const HybridCode& code_;
    std::vector<Syndrome> sector_syndromes_;
    std::map<Syndrome, std::vector<std::pair<std::size_t, std::size_t>>> cross_;
};

}  // namespace

std::set<ForbiddenTag> forbidden_set_membership(const HybridCode& code, const PauliOperator& error) {
    require_same_group(code.transversal().front(), error);
    return ForbiddenSet(code).tags(error);
}

CorrectabilityReport check_errors(const HybridCode& code, const std::vector<PauliOperator>& errors) {
    if (errors.empty()) throw std::invalid_argument("check_errors needs at least one error operator");
    for (const auto& e : errors) require_same_group(code.transversal().front(), e);
    const ValidationReport validation = validate(code);
    if (!validation.ok()) {
        throw std::invalid_argument("code fails validation: " + validation.issues.front().message);
    }

    const ForbiddenSet forbidden(code);
    CorrectabilityReport report;
    report.per_sector.assign(code.sector_count(), true);

    // The forbidden set is closed under inversion with (i, j) -> (j, i), so
    // each unordered pair yields the verdicts for both orders.
    auto consider = [&](std::size_t k, std::size_t l, const PauliOperator& product) {
        const auto tags = forbidden.tags(product);
        if (tags.empty()) return;
        report.correctable = false;
        if (!report.witness || std::pair(k, l) < std::pair(report.witness->k, report.witness->l)) {
            report.witness = CorrectabilityWitness{k, l, *tags.begin(), product};
        }
    };
    for (std::size_t k = 0; k < errors.size(); ++k) {
        const PauliOperator inv_k = inverse(errors[k]);
        for (std::size_t l = k; l < errors.size(); ++l) {
            const PauliOperator product = multiply(inv_k, errors[l]);
            consider(k, l, product);
            if (l != k) consider(l, k, inverse(product));
            for (std::size_t i = 0; i < code.sector_count(); ++i) {
                if (!report.per_sector[i]) continue;
                const auto& g = code.transversal()[i];
                const PauliOperator conjugated = multiply(multiply(inverse(g), product), g);
                const Syndrome sigma = syndrome(code, conjugated);
                if (forbidden.in_normalizer_minus_gauge(conjugated, sigma)) report.per_sector[i] = false;
            }
        }
    }
    return report;
}

}  // namespace hybridstab
