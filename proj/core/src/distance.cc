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

#include "hybridstab/distance.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "hybridstab/subgroup.h"

namespace hybridstab {

namespace {

constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

// A candidate E is classified by its signature: the syndrome sigma(E) against
// S followed by lambda(E), the commutation exponents against every element of
// L0. Both are additive over sites, so a candidate's signature is the sum of
// precomputed per-site, per-local-Pauli signatures.
//
// With completeness of <S, G0, L0> (checked by validate), E is forbidden iff
//   sigma(E) = sigma(g_i) - sigma(g_j) for some i != j, or
//   sigma(E) = 0 and E is not in G.
// For sigma(E) = 0, E is in G iff lambda(E) = 0, provided L^q lies in G for
// every logical generator L whose pair form has additive order q. That
// proviso is checked once; otherwise membership is decided exactly.
//
// For d = 2 signatures are bit-packed into words and added with XOR; for
// other d each entry occupies one word and is added mod d.
class SignatureSearch {
   public:
    explicit SignatureSearch(const HybridCode& code) : code_(code), d_(code.qudit_dim()), n_(code.num_sites()) {
        const auto& stabilizers = code.stabilizer_generators();
        logicals_ = code.logical_generators();
        num_syndrome_ = stabilizers.size();
        const std::size_t num_logical = logicals_.size();
        binary_ = d_ == 2;
        syndrome_words_ = binary_ ? (num_syndrome_ + 63) / 64 : num_syndrome_;
        const std::size_t logical_words = binary_ ? (num_logical + 63) / 64 : num_logical;
        width_ = syndrome_words_ + logical_words;

        fast_gauge_test_ = true;
        for (const auto& [a, b] : code.logical_pairs()) {
            const auto order = static_cast<std::uint64_t>(zmod::additive_order(symplectic_form(a, b), d_));
            if (!member(power(a, order), code.gauge_group()) || !member(power(b, order), code.gauge_group())) {
                fast_gauge_test_ = false;
            }
        }

        local_count_ = static_cast<std::size_t>(d_) * static_cast<std::size_t>(d_) - 1;
        local_sigs_.assign(static_cast<std::size_t>(n_) * local_count_ * width_, 0);
        for (int site = 0; site < n_; ++site) {
            for (std::size_t p = 0; p < local_count_; ++p) {
                auto [a, b] = local_pauli(p);
                const PauliOperator single = PauliOperator::single(d_, n_, site, a, b);
                std::uint64_t* sig = &local_sigs_[(static_cast<std::size_t>(site) * local_count_ + p) * width_];
                for (std::size_t t = 0; t < num_syndrome_; ++t) set_entry(sig, 0, t, symplectic_form(stabilizers[t], single));
                for (std::size_t u = 0; u < num_logical; ++u) set_entry(sig, syndrome_words_, u, symplectic_form(logicals_[u], single));
            }
        }

        // Targets sigma(g_i) - sigma(g_j) for i != j.
        std::vector<Syndrome> sector_syndromes;
        for (const auto& g : code.transversal()) sector_syndromes.push_back(syndrome(code, g));
        filter_.assign(kFilterBits / 64, 0);
        for (std::size_t i = 0; i < sector_syndromes.size(); ++i) {
            for (std::size_t j = 0; j < sector_syndromes.size(); ++j) {
                if (i == j) continue;
                std::vector<std::uint64_t> key(syndrome_words_, 0);
                for (std::size_t t = 0; t < num_syndrome_; ++t) {
                    set_entry(key.data(), 0, t, zmod::reduce(sector_syndromes[i][t] - sector_syndromes[j][t], d_));
                }
                const std::uint64_t h = hash(key.data());
                filter_[(h % kFilterBits) / 64] |= std::uint64_t{1} << (h % 64);
                targets_.insert(std::move(key));
            }
        }
    }

    int num_sites() const { return n_; }
    std::size_t local_count() const { return local_count_; }
    std::size_t width() const { return width_; }

    std::pair<std::uint32_t, std::uint32_t> local_pauli(std::size_t p) const {
        // Nonzero (a, b) in lexicographic order.
        const std::size_t index = p + 1;
        return {static_cast<std::uint32_t>(index / d_), static_cast<std::uint32_t>(index % d_)};
    }

    const std::uint64_t* local_signature(int site, std::size_t p) const {
        return &local_sigs_[(static_cast<std::size_t>(site) * local_count_ + p) * width_];
    }

    void add(std::uint64_t* out, const std::uint64_t* lhs, const std::uint64_t* rhs) const {
        if (binary_) {
            for (std::size_t w = 0; w < width_; ++w) out[w] = lhs[w] ^ rhs[w];
        } else {
            const auto d = static_cast<std::uint64_t>(d_);
            for (std::size_t w = 0; w < width_; ++w) {
                std::uint64_t v = lhs[w] + rhs[w];
                out[w] = v >= d ? v - d : v;
            }
        }
    }

    bool forbidden(const std::uint64_t* sig, std::span<const int> sites, std::span<const std::size_t> locals) const {
        bool syndrome_zero = true;
        for (std::size_t w = 0; w < syndrome_words_; ++w) syndrome_zero = syndrome_zero && sig[w] == 0;
        if (syndrome_zero) {
            if (fast_gauge_test_) {
                for (std::size_t w = syndrome_words_; w < width_; ++w) {
                    if (sig[w] != 0) return true;
                }
                return false;
            }
            return !member(materialize(sites, locals), code_.gauge_group());
        }
        const std::uint64_t h = hash(sig);
        if ((filter_[(h % kFilterBits) / 64] >> (h % 64) & 1) == 0) return false;
        return targets_.contains(std::vector<std::uint64_t>(sig, sig + syndrome_words_));
    }

    PauliOperator materialize(std::span<const int> sites, std::span<const std::size_t> locals) const {
        std::vector<std::uint32_t> x(n_, 0), z(n_, 0);
        for (std::size_t t = 0; t < sites.size(); ++t) {
            auto [a, b] = local_pauli(locals[t]);
            x[sites[t]] = a;
            z[sites[t]] = b;
        }
        return PauliOperator(d_, 0, std::move(x), std::move(z));
    }

   private:
    static constexpr std::uint64_t kFilterBits = 1u << 16;

    void set_entry(std::uint64_t* base, std::size_t offset, std::size_t index, std::int64_t value) const {
        if (binary_) {
            if (value & 1) base[offset + index / 64] |= std::uint64_t{1} << (index % 64);
        } else {
            base[offset + index] = static_cast<std::uint64_t>(value);
        }
    }

    std::uint64_t hash(const std::uint64_t* words) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::size_t w = 0; w < syndrome_words_; ++w) {
            h ^= words[w] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return h ^ (h >> 29);
    }

    const HybridCode& code_;
    int d_;
    int n_;
    bool binary_;
    bool fast_gauge_test_;
    std::vector<PauliOperator> logicals_;
    std::size_t num_syndrome_;
    std::size_t syndrome_words_;
    std::size_t width_;
    std::size_t local_count_;
    std::vector<std::uint64_t> local_sigs_;
    std::vector<std::uint64_t> filter_;
    std::set<std::vector<std::uint64_t>> targets_;
};

struct Hit {
    std::vector<int> sites;
    std::vector<std::size_t> locals;
};

// Depth-first walk over the supports that extend one task prefix, and over
// every local assignment of each support.
class Walker {
   public:
    Walker(const SignatureSearch& search, int weight, const std::atomic<std::size_t>& best_task)
        : search_(search),
          weight_(weight),
          best_task_(best_task),
          sites_(weight),
          locals_(weight),
          acc_((weight + 1) * search.width(), 0) {}

    std::optional<Hit> run(std::size_t task, std::span<const int> prefix) {
        task_ = task;
        std::copy(prefix.begin(), prefix.end(), sites_.begin());
        if (choose_sites(static_cast<int>(prefix.size()))) return Hit{sites_, locals_};
        return std::nullopt;
    }

    std::uint64_t candidates() const { return candidates_; }

   private:
    bool choose_sites(int depth) {
        if (depth == weight_) {
            if (best_task_.load(std::memory_order_relaxed) < task_) return false;
            return choose_locals(0);
        }
        const int first = depth == 0 ? 0 : sites_[depth - 1] + 1;
        const int last = search_.num_sites() - (weight_ - depth);
        for (int site = first; site <= last; ++site) {
            sites_[depth] = site;
            if (choose_sites(depth + 1)) return true;
        }
        return false;
    }

    bool choose_locals(int depth) {
        const std::size_t width = search_.width();
        const std::uint64_t* parent = &acc_[depth * width];
        std::uint64_t* child = &acc_[(depth + 1) * width];
        for (std::size_t p = 0; p < search_.local_count(); ++p) {
            locals_[depth] = p;
            search_.add(child, parent, search_.local_signature(sites_[depth], p));
            if (depth + 1 == weight_) {
                ++candidates_;
                if (search_.forbidden(child, sites_, locals_)) return true;
            } else if (choose_locals(depth + 1)) {
                return true;
            }
        }
        return false;
    }

    const SignatureSearch& search_;
    int weight_;
    const std::atomic<std::size_t>& best_task_;
    std::size_t task_ = 0;
    std::vector<int> sites_;
    std::vector<std::size_t> locals_;
    std::vector<std::uint64_t> acc_;
    std::uint64_t candidates_ = 0;
};

std::vector<std::vector<int>> task_prefixes(int n, int weight) {
    const int length = std::min(weight, 2);
    std::vector<std::vector<int>> out;
    for (int a = 0; a <= n - weight; ++a) {
        if (length == 1) {
            out.push_back({a});
            continue;
        }
        for (int b = a + 1; b <= n - weight + 1; ++b) out.push_back({a, b});
    }
    return out;
}

}  // namespace

DistanceResult exact_distance(const HybridCode& code, const DistanceOptions& options) {
    if (options.max_weight < 1) throw std::invalid_argument("max_weight must be at least 1");
    const ValidationReport validation = validate(code);
    if (!validation.ok()) throw std::invalid_argument("code fails validation: " + validation.issues.front().message);

    const int n = code.num_sites();
    DistanceResult result;
    result.search_cutoff = std::min(options.max_weight, n);

    for (const auto& g : code.logical_generators()) {
        if (!result.upper_bound || g.weight() < *result.upper_bound) result.upper_bound = g.weight();
    }
    const auto& transversal = code.transversal();
    for (std::size_t i = 0; i < transversal.size(); ++i) {
        for (std::size_t j = 0; j < transversal.size(); ++j) {
            if (i == j) continue;
            const int w = multiply(transversal[i], inverse(transversal[j])).weight();
            if (!result.upper_bound || w < *result.upper_bound) result.upper_bound = w;
        }
    }

    const SignatureSearch search(code);
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;

    for (int weight = 1; weight <= result.search_cutoff; ++weight) {
        const auto prefixes = task_prefixes(n, weight);
        std::vector<std::optional<Hit>> hits(prefixes.size());
        std::atomic<std::size_t> next_task{0};
        std::atomic<std::size_t> best_task{kNoTask};
        std::atomic<std::uint64_t> candidates{0};

        auto worker = [&] {
            Walker walker(search, weight, best_task);
            for (;;) {
                const std::size_t task = next_task.fetch_add(1);
                if (task >= prefixes.size() || task > best_task.load()) break;
                if (auto hit = walker.run(task, prefixes[task])) {
                    hits[task] = std::move(hit);
                    std::size_t current = best_task.load();
                    while (task < current && !best_task.compare_exchange_weak(current, task)) {
                    }
                }
            }
            candidates += walker.candidates();
        };
        const unsigned worker_count = std::min<std::size_t>(threads, std::max<std::size_t>(prefixes.size(), 1));
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < worker_count; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        result.candidates += candidates.load();

        const std::size_t best = best_task.load();
        if (best != kNoTask) {
            const Hit& hit = *hits[best];
            result.witness = search.materialize(hit.sites, hit.locals);
            result.exact_distance = weight;
            result.lower_bound = weight;
            result.upper_bound = weight;
            return result;
        }
    }
    result.lower_bound = result.search_cutoff + 1;
    return result;
}

AnticommuteDegree anticommute_degree(const HybridCode& code) {
    const int d = code.qudit_dim();
    const int n = code.num_sites();
    const auto& gens = code.stabilizer_generators();
    const bool css = is_css(code);
    AnticommuteDegree out;
    if (css) {
        out.x_type = 0;
        out.z_type = 0;
    }
    for (int site = 0; site < n; ++site) {
        for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(d); ++a) {
            for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(d); ++b) {
                if (a == 0 && b == 0) continue;
                const PauliOperator single = PauliOperator::single(d, n, site, a, b);
                int total = 0, x_count = 0, z_count = 0;
                for (const auto& g : gens) {
                    if (symplectic_form(g, single) == 0) continue;
                    ++total;
                    const auto x = g.x_exp();
                    const bool x_type = std::any_of(x.begin(), x.end(), [](auto v) { return v != 0; });
                    ++(x_type ? x_count : z_count);
                }
                out.m = std::max(out.m, total);
                if (css) {
                    out.x_type = std::max(*out.x_type, x_count);
                    out.z_type = std::max(*out.z_type, z_count);
                }
            }
        }
    }
    return out;
}

namespace {

int ceil_div(int a, int b) {
    if (b <= 0) throw std::invalid_argument("anticommute degree must be positive");
    return (a + b - 1) / b;
}

}  // namespace

int hybrid_bound(int base_distance, int classical_distance, int degree) {
    if (base_distance < 1 || classical_distance < 1) throw std::invalid_argument("distances must be positive");
    if (degree < 1) throw std::invalid_argument("anticommute degree must be positive");
    return std::min(base_distance, ceil_div(classical_distance, degree));
}

int hybrid_bound(int base_distance, int dx, int mx, int dz, int mz) {
    if (base_distance < 1 || dx < 1 || dz < 1) throw std::invalid_argument("distances must be positive");
    if (mx < 1 || mz < 1) throw std::invalid_argument("anticommute degrees must be positive");
    return std::min({base_distance, ceil_div(dx, mx), ceil_div(dz, mz)});
}

}  // namespace hybridstab
