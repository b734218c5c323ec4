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

#include "support.h"

#include <algorithm>
#include <complex>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace hybridstab::testing {

PauliOperator qubit(const std::string& word) { return PauliOperator::parse(word, 2); }

HybridCode seven_qubit_code() {
    std::vector<PauliOperator> stabilizers{qubit("XIIZYYZ"), qubit("ZIIIIIX"), qubit("IXIXZII"),
                                           qubit("IZIZIXX"), qubit("IIXXIZI"), qubit("IIZZXIX")};
    std::vector<PauliPair> logical{{qubit("IIIXZZX"), qubit("IIIZXXI")}};
    return HybridCode(2, 7, std::move(stabilizers), {}, std::move(logical), {qubit("IIIIIII"), seven_qubit_t()});
}

PauliOperator seven_qubit_t() { return qubit("IIIIXYY"); }

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd naive_dense(const PauliOperator& g) {
    const int d = g.qudit_dim();
    const std::complex<double> omega = std::polar(1.0, 2 * std::numbers::pi / d);
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd clock = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        shift((k + 1) % d, k) = 1.0;
        clock(k, k) = std::pow(omega, k);
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int j = 0; j < g.num_sites(); ++j) {
        Eigen::MatrixXcd site = Eigen::MatrixXcd::Identity(d, d);
        for (std::uint32_t a = 0; a < g.x(j); ++a) site = site * shift;
        for (std::uint32_t b = 0; b < g.z(j); ++b) site = site * clock;
        out = kron(out, site);
    }
    return std::polar(1.0, std::numbers::pi * g.phase_exp() / d) * out;
}

std::set<PauliOperator> close_group(const std::vector<PauliOperator>& generators, int qudit_dim, int num_sites,
                                    std::size_t limit) {
    std::set<PauliOperator> seen{PauliOperator(qudit_dim, num_sites)};
    std::deque<PauliOperator> queue{PauliOperator(qudit_dim, num_sites)};
    while (!queue.empty()) {
        PauliOperator e = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            PauliOperator next = multiply(e, g);
            if (seen.insert(next).second) {
                if (seen.size() > limit) throw std::length_error("group closure exceeded limit");
                queue.push_back(std::move(next));
            }
        }
    }
    return seen;
}

std::vector<PauliOperator> all_paulis(int qudit_dim, int num_sites) {
    std::vector<PauliOperator> out;
    std::vector<std::int64_t> vec(2 * static_cast<std::size_t>(num_sites), 0);
    for (;;) {
        out.push_back(PauliOperator::from_symplectic(qudit_dim, vec));
        std::size_t i = 0;
        while (i < vec.size() && ++vec[i] == qudit_dim) vec[i++] = 0;
        if (i == vec.size()) break;
    }
    return out;
}

std::set<std::vector<std::int64_t>> brute_span(const std::vector<std::vector<std::int64_t>>& rows, std::size_t width,
                                               std::int64_t modulus) {
    std::set<std::vector<std::int64_t>> seen{std::vector<std::int64_t>(width, 0)};
    std::deque<std::vector<std::int64_t>> queue{std::vector<std::int64_t>(width, 0)};
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (const auto& row : rows) {
            auto next = v;
            for (std::size_t j = 0; j < width; ++j) next[j] = ((next[j] + row[j]) % modulus + modulus) % modulus;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return seen;
}

PauliOperator random_pauli(Rng& rng, int qudit_dim, int num_sites, int max_weight) {
    std::uniform_int_distribution<int> exponent(0, qudit_dim - 1);
    std::uniform_int_distribution<int> phase(0, 2 * qudit_dim - 1);
    std::vector<std::uint32_t> x(num_sites, 0), z(num_sites, 0);
    std::vector<int> sites(num_sites);
    for (int j = 0; j < num_sites; ++j) sites[j] = j;
    std::shuffle(sites.begin(), sites.end(), rng);
    const int limit = max_weight < 0 ? num_sites : std::min(max_weight, num_sites);
    const int weight = std::uniform_int_distribution<int>(0, limit)(rng);
    for (int t = 0; t < weight; ++t) {
        x[sites[t]] = static_cast<std::uint32_t>(exponent(rng));
        z[sites[t]] = static_cast<std::uint32_t>(exponent(rng));
    }
    return PauliOperator(qudit_dim, phase(rng), std::move(x), std::move(z));
}

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t form(const Vec& u, const Vec& v, int n, int d) {
    std::int64_t e = 0;
    for (int j = 0; j < n; ++j) e += u[n + j] * v[j] - u[j] * v[n + j];
    return ((e % d) + d) % d;
}

}  // namespace

HybridCode random_code(Rng& rng, const RandomCodeShape& shape) {
    const int d = shape.qudit_dim;
    const int n = shape.num_sites;
    if (shape.s + shape.r > n) throw std::invalid_argument("random_code: s + r exceeds n");
    std::uniform_int_distribution<int> digit(0, d - 1);
    std::uniform_int_distribution<int> unit(1, d - 1);

    // Columns 0..n-1 are images of X_j, n..2n-1 images of Z_j.
    std::vector<Vec> basis(2 * n, Vec(2 * n, 0));
    for (int v = 0; v < 2 * n; ++v) basis[v][v] = 1;
    for (int t = 0; t < 3 * n + 2; ++t) {
        Vec h(2 * n);
        for (auto& e : h) e = digit(rng);
        if (std::all_of(h.begin(), h.end(), [](auto e) { return e == 0; })) continue;
        const std::int64_t c = unit(rng);
        for (auto& v : basis) {
            const std::int64_t f = form(v, h, n, d);
            for (int k = 0; k < 2 * n; ++k) v[k] = ((v[k] + c * f * h[k]) % d + d) % d;
        }
    }
    auto op = [&](const Vec& v, bool hermitian) {
        PauliOperator g = PauliOperator::from_symplectic(d, v);
        std::int64_t phase;
        if (d == 2) {
            std::int64_t xz = 0;
            for (int j = 0; j < n; ++j) xz += g.x(j) * g.z(j);
            phase = hermitian ? (xz % 2) + 2 * digit(rng) : std::uniform_int_distribution<int>(0, 3)(rng);
        } else {
            phase = hermitian ? 2 * digit(rng) : std::uniform_int_distribution<int>(0, 2 * d - 1)(rng);
        }
        return g.with_phase(phase);
    };

    std::vector<PauliOperator> stabilizers;
    for (int j = 0; j < shape.s; ++j) stabilizers.push_back(op(basis[n + j], true));
    std::vector<PauliPair> gauge, logical;
    for (int j = shape.s; j < n; ++j) {
        PauliPair pair{op(basis[j], false), op(basis[n + j], false)};
        (j < shape.s + shape.r ? gauge : logical).push_back(std::move(pair));
    }

    std::set<Vec> labels{Vec(shape.s, 0)};
    std::vector<Vec> ordered{Vec(shape.s, 0)};
    std::size_t total = 1;
    for (int j = 0; j < shape.s; ++j) total *= static_cast<std::size_t>(d);
    const std::size_t wanted = std::min(shape.max_sectors, total);
    const std::size_t target = std::uniform_int_distribution<std::size_t>(1, wanted)(rng);
    while (ordered.size() < target) {
        Vec label(shape.s);
        for (auto& e : label) e = digit(rng);
        if (labels.insert(label).second) ordered.push_back(label);
    }
    std::vector<PauliOperator> transversal;
    for (const auto& label : ordered) {
        Vec v(2 * n, 0);
        for (int j = 0; j < shape.s; ++j) {
            for (int k = 0; k < 2 * n; ++k) v[k] = (v[k] + label[j] * basis[j][k]) % d;
        }
        transversal.push_back(transversal.empty() ? PauliOperator(d, n) : op(v, false));
    }
    return HybridCode(d, n, std::move(stabilizers), std::move(gauge), std::move(logical), std::move(transversal));
}

PauliOperator random_normalizer_element(Rng& rng, const HybridCode& code) {
    const int d = code.qudit_dim();
    std::uniform_int_distribution<int> digit(0, d - 1);
    PauliOperator out = PauliOperator::scalar(d, code.num_sites(), std::uniform_int_distribution<int>(0, 2 * d - 1)(rng));
    auto mix = [&](const std::vector<PauliOperator>& gens) {
        for (const auto& g : gens) out = multiply(out, power(g, static_cast<std::uint64_t>(digit(rng))));
    };
    mix(code.stabilizer_generators());
    mix(code.gauge_generators());
    mix(code.logical_generators());
    return out;
}

}  // namespace hybridstab::testing
