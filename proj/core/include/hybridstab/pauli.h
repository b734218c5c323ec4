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

#ifndef HYBRIDSTAB_PAULI_H
#define HYBRIDSTAB_PAULI_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hybridstab {

/// Largest supported local dimension. Keeps every intermediate product of
/// exponents inside 64 bits.
inline constexpr int kMaxQuditDim = 1 << 15;

/// Thrown when text cannot be parsed as a Pauli operator or code file.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An element of the n-qudit Pauli group P_{d,n}.
///
/// The value denotes  w^{c/2} X_1^{a_1} Z_1^{b_1} ... X_n^{a_n} Z_n^{b_n}
/// with w = exp(2 pi i / d). The phase exponent c counts half-powers of w and
/// lives in Z_{2d}, so sqrt(w) I is representable for every d. Exponents are
/// always stored reduced, which makes equality field-wise.
class PauliOperator {
   public:
    /// Identity on `num_sites` qudits of dimension `qudit_dim`.
    PauliOperator(int qudit_dim, int num_sites);

    /// Reduces every argument into canonical range.
    PauliOperator(int qudit_dim, std::int64_t phase_exp, std::vector<std::uint32_t> x_exp,
                  std::vector<std::uint32_t> z_exp);

    static PauliOperator scalar(int qudit_dim, int num_sites, std::int64_t phase_exp);

    /// X^a Z^b on a single site, identity elsewhere.
    static PauliOperator single(int qudit_dim, int num_sites, int site, std::uint32_t a, std::uint32_t b);

    /// Parses the text form. For d=2 this is an optional phase token among
    /// "+1", "-1", "+i", "-i" followed by a word over {I,X,Y,Z}. For other d
    /// it is "w^c/2" followed by dot-separated site tokens ("x<a>z<b>" or "i").
    static PauliOperator parse(std::string_view text, int qudit_dim);

    int qudit_dim() const { return qudit_dim_; }
    int num_sites() const { return static_cast<int>(x_.size()); }
    int phase_exp() const { return phase_; }
    std::uint32_t x(int site) const { return x_[site]; }
    std::uint32_t z(int site) const { return z_[site]; }
    std::span<const std::uint32_t> x_exp() const { return x_; }
    std::span<const std::uint32_t> z_exp() const { return z_; }

    /// Symplectic coordinates (x_1..x_n, z_1..z_n).
    std::vector<std::int64_t> symplectic_vector() const;
    static PauliOperator from_symplectic(int qudit_dim, std::span<const std::int64_t> vec, std::int64_t phase_exp = 0);

    /// Same operator with the phase exponent replaced.
    PauliOperator with_phase(std::int64_t phase_exp) const;

    bool is_identity() const { return phase_ == 0 && is_scalar(); }
    bool is_scalar() const;
    int weight() const;

    std::string str() const;

    bool operator==(const PauliOperator&) const = default;
    /// Lexicographic on (phase, x, z). Only used to give containers a stable order.
    bool operator<(const PauliOperator& other) const;

   private:
    int qudit_dim_;
    int phase_;
    std::vector<std::uint32_t> x_;
    std::vector<std::uint32_t> z_;
};

PauliOperator multiply(const PauliOperator& g, const PauliOperator& h);
PauliOperator inverse(const PauliOperator& g);

/// Returns e in Z_d with g h = w^e h g.
int symplectic_form(const PauliOperator& g, const PauliOperator& h);

/// g h g^{-1}.
PauliOperator conjugate(const PauliOperator& g, const PauliOperator& h);

/// g^k for k >= 0.
PauliOperator power(const PauliOperator& g, std::uint64_t k);

inline int weight(const PauliOperator& g) { return g.weight(); }
inline bool is_scalar(const PauliOperator& g) { return g.is_scalar(); }

inline PauliOperator operator*(const PauliOperator& g, const PauliOperator& h) { return multiply(g, h); }

/// Throws std::invalid_argument unless both operators live in the same group.
void require_same_group(const PauliOperator& g, const PauliOperator& h);

std::ostream& operator<<(std::ostream& out, const PauliOperator& g);

}  // namespace hybridstab

#endif
