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

#include "hybridstab/zmod.h"

#include <stdexcept>
#include <utility>

namespace hybridstab::zmod {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Gcdex gcdex(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::optional<std::int64_t> inverse(std::int64_t a, std::int64_t modulus) {
    Gcdex e = gcdex(reduce(a, modulus), modulus);
    if (e.g != 1) return std::nullopt;
    return reduce(e.s, modulus);
}

std::int64_t normalizing_unit(std::int64_t a, std::int64_t modulus) {
    a = reduce(a, modulus);
    if (a == 0) return 1;
    std::int64_t g = gcd(a, modulus);
    std::int64_t reduced_modulus = modulus / g;
    std::int64_t u = reduced_modulus == 1 ? 1 : *inverse(a / g, reduced_modulus);
    // Lift u to a unit of Z_modulus; some lift u + k*(modulus/g) always is one.
    while (gcd(u, modulus) != 1) u += reduced_modulus;
    return reduce(u, modulus);
}

Factorization factorize(std::int64_t value) {
    Factorization out;
    for (std::int64_t p = 2; p * p <= value; ++p) {
        while (value % p == 0) {
            ++out[p];
            value /= p;
        }
    }
    if (value > 1) ++out[value];
    return out;
}

std::size_t leading_index(const Row& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) return j;
    }
    return row.size();
}

namespace {

void combine(Row& a, Row& b, std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t v, std::size_t from,
             std::int64_t modulus) {
    for (std::size_t j = from; j < a.size(); ++j) {
        std::int64_t x = a[j], y = b[j];
        a[j] = reduce(s * x + t * y, modulus);
        b[j] = reduce(u * x + v * y, modulus);
    }
}

void add_multiple(Row& target, const Row& source, std::int64_t factor, std::size_t from, std::int64_t modulus) {
    factor = reduce(factor, modulus);
    if (factor == 0) return;
    for (std::size_t j = from; j < target.size(); ++j) {
        if (source[j] != 0) target[j] = (target[j] + factor * source[j]) % modulus;
    }
}

bool is_zero(const Row& row) { return leading_index(row) == row.size(); }

}  // namespace

std::vector<Row> howell_form(std::vector<Row> rows, std::size_t num_cols, std::int64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    for (auto& row : rows) {
        if (row.size() != num_cols) throw std::invalid_argument("row length mismatch in howell_form");
        for (auto& v : row) v = reduce(v, modulus);
    }
    std::erase_if(rows, is_zero);

    std::size_t r = 0;
    for (std::size_t col = 0; col < num_cols && r < rows.size(); ++col) {
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            std::int64_t b = rows[i][col];
            if (b == 0) continue;
            std::int64_t a = rows[r][col];
            Gcdex e = gcdex(a, b);
            // [s t; -b/g a/g] has determinant 1, so the pair still spans the same module.
            combine(rows[r], rows[i], e.s, e.t, -b / e.g, a / e.g, col, modulus);
        }
        std::int64_t a = rows[r][col];
        if (a == 0) continue;

        std::int64_t unit = normalizing_unit(a, modulus);
        for (std::size_t j = col; j < num_cols; ++j) rows[r][j] = (rows[r][j] * unit) % modulus;
        const std::int64_t pivot = rows[r][col];

        for (std::size_t i = 0; i < r; ++i) {
            std::int64_t q = rows[i][col] / pivot;
            add_multiple(rows[i], rows[r], -q, col, modulus);
        }

        if (pivot != 1) {
            Row annihilated = rows[r];
            const std::int64_t factor = modulus / pivot;
            for (std::size_t j = col; j < num_cols; ++j) annihilated[j] = (annihilated[j] * factor) % modulus;
            if (!is_zero(annihilated)) rows.push_back(std::move(annihilated));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

RowSpan::RowSpan(std::vector<Row> generators, std::size_t width, std::int64_t modulus)
    : modulus_(modulus), width_(width), num_generators_(generators.size()) {
    const std::size_t m = generators.size();
    std::vector<Row> augmented;
    augmented.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (generators[i].size() != width) throw std::invalid_argument("generator length mismatch in RowSpan");
        Row row(width + m, 0);
        for (std::size_t j = 0; j < width; ++j) row[j] = reduce(generators[i][j], modulus);
        row[width + i] = 1;
        augmented.push_back(std::move(row));
    }
    for (Row& row : howell_form(std::move(augmented), width + m, modulus)) {
        std::size_t lead = leading_index(row);
        Row left(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(width));
        Row right(row.begin() + static_cast<std::ptrdiff_t>(width), row.end());
        if (lead < width) {
            pivots_.push_back(lead);
            basis_orders_.push_back(modulus / row[lead]);
            basis_.push_back(std::move(left));
            basis_coeffs_.push_back(std::move(right));
        } else {
            kernel_.push_back(std::move(right));
        }
    }
}

std::optional<Row> RowSpan::solve(std::span<const std::int64_t> target) const {
    if (target.size() != width_) throw std::invalid_argument("target length mismatch in RowSpan::solve");
    Row v(target.begin(), target.end());
    for (auto& x : v) x = reduce(x, modulus_);
    Row coeffs(num_generators_, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t col = pivots_[i];
        for (std::size_t j = (i == 0 ? 0 : pivots_[i - 1] + 1); j < col; ++j) {
            if (v[j] != 0) return std::nullopt;
        }
        const std::int64_t pivot = basis_[i][col];
        if (v[col] % pivot != 0) return std::nullopt;
        const std::int64_t q = v[col] / pivot;
        if (q == 0) continue;
        add_multiple(v, basis_[i], -q, col, modulus_);
        add_multiple(coeffs, basis_coeffs_[i], q, 0, modulus_);
    }
    if (!is_zero(v)) return std::nullopt;
    return coeffs;
}

Factorization RowSpan::size_factorization() const {
    Factorization total;
    for (std::int64_t order : basis_orders_) {
        for (auto [p, e] : factorize(order)) total[p] += e;
    }
    return total;
}

std::optional<std::uint64_t> RowSpan::size() const {
    std::uint64_t total = 1;
    for (std::int64_t order : basis_orders_) {
        if (total > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(order)) return std::nullopt;
        total *= static_cast<std::uint64_t>(order);
    }
    return total;
}

}  // namespace hybridstab::zmod
