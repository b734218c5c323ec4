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

// Linear algebra over the ring Z_N for arbitrary (including composite) N.

#ifndef HYBRIDSTAB_ZMOD_H
#define HYBRIDSTAB_ZMOD_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hybridstab::zmod {

using Row = std::vector<std::int64_t>;

inline std::int64_t reduce(std::int64_t value, std::int64_t modulus) {
    std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Extended gcd over Z: returns {g, s, t} with s*a + t*b = g = gcd(a, b).
struct Gcdex {
    std::int64_t g, s, t;
};
Gcdex gcdex(std::int64_t a, std::int64_t b);

/// Multiplicative inverse of `a` mod `modulus`, if `a` is a unit.
std::optional<std::int64_t> inverse(std::int64_t a, std::int64_t modulus);

/// A unit u with u*a == gcd(a, modulus) (mod modulus).
std::int64_t normalizing_unit(std::int64_t a, std::int64_t modulus);

/// Additive order of `a` in Z_modulus.
inline std::int64_t additive_order(std::int64_t a, std::int64_t modulus) {
    return modulus / gcd(reduce(a, modulus), modulus);
}

/// Prime factorisation as prime -> exponent.
using Factorization = std::map<std::int64_t, int>;
Factorization factorize(std::int64_t value);

/// Howell normal form of the row module generated by `rows` (each of length
/// `num_cols`). Zero rows are dropped. Pivots are divisors of `modulus`,
/// entries above a pivot are reduced below it, and for every k the rows whose
/// first k entries vanish generate every element of the module with that
/// property. The form is unique for a given module.
std::vector<Row> howell_form(std::vector<Row> rows, std::size_t num_cols, std::int64_t modulus);

/// Index of the first nonzero entry, or row.size() for a zero row.
std::size_t leading_index(const Row& row);

/// The row module spanned by a list of generator vectors, together with the
/// bookkeeping needed to express members as combinations of the generators and
/// to enumerate relations between them.
class RowSpan {
   public:
    RowSpan(std::vector<Row> generators, std::size_t width, std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    std::size_t width() const { return width_; }
    std::size_t num_generators() const { return num_generators_; }

    /// Coefficients c (one per generator, in [0, modulus)) with sum_i c_i g_i = target,
    /// or nullopt if target is outside the span.
    std::optional<Row> solve(std::span<const std::int64_t> target) const;
    bool contains(std::span<const std::int64_t> target) const { return solve(target).has_value(); }

    /// Howell basis of the span. Every element is uniquely sum_i k_i basis[i]
    /// with 0 <= k_i < basis_orders()[i].
    const std::vector<Row>& basis() const { return basis_; }
    /// basis()[i] == sum_j basis_coefficients()[i][j] * generator_j.
    const std::vector<Row>& basis_coefficients() const { return basis_coeffs_; }
    const std::vector<std::int64_t>& basis_orders() const { return basis_orders_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    /// Generators of the relation module {c : sum_i c_i g_i = 0}.
    const std::vector<Row>& kernel() const { return kernel_; }

    /// |span| as a prime factorisation; exact for any size.
    Factorization size_factorization() const;
    /// |span| if it fits in 63 bits.
    std::optional<std::uint64_t> size() const;

   private:
    std::int64_t modulus_;
    std::size_t width_;
    std::size_t num_generators_;
    std::vector<Row> basis_;
    std::vector<Row> basis_coeffs_;
    std::vector<std::int64_t> basis_orders_;
    std::vector<std::size_t> pivots_;
    std::vector<Row> kernel_;
};

}  // namespace hybridstab::zmod

#endif
