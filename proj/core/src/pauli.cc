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

#include "hybridstab/pauli.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <tuple>

namespace hybridstab {

namespace {

std::int64_t mod(std::int64_t value, std::int64_t m) {
    std::int64_t r = value % m;
    return r < 0 ? r + m : r;
}

void check_dim(int qudit_dim) {
    if (qudit_dim < 2 || qudit_dim > kMaxQuditDim) {
        throw std::invalid_argument("qudit dimension must be in [2, " + std::to_string(kMaxQuditDim) + "], got " +
                                    std::to_string(qudit_dim));
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view context) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    }
    return value;
}

PauliOperator parse_qubit(std::string_view text) {
    std::string_view rest = trim(text);
    int phase = 0;
    static constexpr std::pair<std::string_view, int> kTokens[] = {
        {"+1", 0}, {"-1", 2}, {"+i", 1}, {"-i", 3}, {"+", 0}, {"-", 2},
    };
    for (const auto& [token, value] : kTokens) {
        if (rest.starts_with(token)) {
            phase = value;
            rest = trim(rest.substr(token.size()));
            break;
        }
    }
    if (rest.empty()) throw ParseError("missing Pauli word in '" + std::string(text) + "'");
    std::vector<std::uint32_t> x(rest.size()), z(rest.size());
    for (std::size_t j = 0; j < rest.size(); ++j) {
        switch (rest[j]) {
            case 'I': break;
            case 'X': x[j] = 1; break;
            case 'Z': z[j] = 1; break;
            case 'Y':
                // Y = i X Z
                x[j] = 1;
                z[j] = 1;
                phase += 1;
                break;
            default:
                throw ParseError("unexpected character '" + std::string(1, rest[j]) + "' in Pauli '" +
                                 std::string(text) + "'");
        }
    }
    return PauliOperator(2, phase, std::move(x), std::move(z));
}

PauliOperator parse_qudit(std::string_view text, int d) {
    std::string_view rest = trim(text);
    if (!rest.starts_with("w^")) throw ParseError("expected phase token 'w^<c>/2' in '" + std::string(text) + "'");
    std::size_t slash = rest.find("/2");
    if (slash == std::string_view::npos) throw ParseError("phase token must end in '/2' in '" + std::string(text) + "'");
    std::int64_t phase = parse_int(rest.substr(2, slash - 2), text);
    rest = trim(rest.substr(slash + 2));
    if (rest.empty()) throw ParseError("missing site list in '" + std::string(text) + "'");

    std::vector<std::uint32_t> x, z;
    while (true) {
        std::size_t dot = rest.find('.');
        std::string_view token = rest.substr(0, dot);
        std::int64_t a = 0, b = 0;
        if (token != "i") {
            std::size_t zpos = token.find('z');
            if (!token.starts_with('x') && zpos != 0) {
                throw ParseError("bad site token '" + std::string(token) + "' in '" + std::string(text) + "'");
            }
            if (token.starts_with('x')) a = parse_int(token.substr(1, zpos == std::string_view::npos ? token.npos : zpos - 1), text);
            if (zpos != std::string_view::npos) b = parse_int(token.substr(zpos + 1), text);
            if (a < 0 || b < 0 || a >= d || b >= d) {
                throw ParseError("exponent out of range [0, d) in '" + std::string(text) + "'");
            }
        }
        x.push_back(static_cast<std::uint32_t>(a));
        z.push_back(static_cast<std::uint32_t>(b));
        if (dot == std::string_view::npos) break;
        rest = rest.substr(dot + 1);
    }
    return PauliOperator(d, phase, std::move(x), std::move(z));
}

}  // namespace

PauliOperator::PauliOperator(int qudit_dim, int num_sites)
    : qudit_dim_(qudit_dim), phase_(0), x_(num_sites, 0), z_(num_sites, 0) {
    check_dim(qudit_dim);
    if (num_sites < 1) throw std::invalid_argument("a Pauli operator needs at least one site");
}

PauliOperator::PauliOperator(int qudit_dim, std::int64_t phase_exp, std::vector<std::uint32_t> x_exp,
                             std::vector<std::uint32_t> z_exp)
    : qudit_dim_(qudit_dim), phase_(0), x_(std::move(x_exp)), z_(std::move(z_exp)) {
    check_dim(qudit_dim);
    if (x_.size() != z_.size()) throw std::invalid_argument("x and z exponent vectors differ in length");
    if (x_.empty()) throw std::invalid_argument("a Pauli operator needs at least one site");
    phase_ = static_cast<int>(mod(phase_exp, 2 * static_cast<std::int64_t>(qudit_dim)));
    for (auto& v : x_) v %= static_cast<std::uint32_t>(qudit_dim);
    for (auto& v : z_) v %= static_cast<std::uint32_t>(qudit_dim);
}

PauliOperator PauliOperator::scalar(int qudit_dim, int num_sites, std::int64_t phase_exp) {
    return PauliOperator(qudit_dim, num_sites).with_phase(phase_exp);
}

PauliOperator PauliOperator::single(int qudit_dim, int num_sites, int site, std::uint32_t a, std::uint32_t b) {
    PauliOperator g(qudit_dim, num_sites);
    if (site < 0 || site >= num_sites) throw std::out_of_range("site index out of range");
    g.x_[site] = a % static_cast<std::uint32_t>(qudit_dim);
    g.z_[site] = b % static_cast<std::uint32_t>(qudit_dim);
    return g;
}

PauliOperator PauliOperator::parse(std::string_view text, int qudit_dim) {
    check_dim(qudit_dim);
    return qudit_dim == 2 ? parse_qubit(text) : parse_qudit(text, qudit_dim);
}

std::vector<std::int64_t> PauliOperator::symplectic_vector() const {
    std::vector<std::int64_t> v(2 * x_.size());
    for (std::size_t j = 0; j < x_.size(); ++j) {
        v[j] = x_[j];
        v[x_.size() + j] = z_[j];
    }
    return v;
}

PauliOperator PauliOperator::from_symplectic(int qudit_dim, std::span<const std::int64_t> vec,
                                             std::int64_t phase_exp) {
    if (vec.size() % 2 != 0 || vec.empty()) throw std::invalid_argument("symplectic vector must have even length");
    std::size_t n = vec.size() / 2;
    std::vector<std::uint32_t> x(n), z(n);
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = static_cast<std::uint32_t>(mod(vec[j], qudit_dim));
        z[j] = static_cast<std::uint32_t>(mod(vec[n + j], qudit_dim));
    }
    return PauliOperator(qudit_dim, phase_exp, std::move(x), std::move(z));
}

PauliOperator PauliOperator::with_phase(std::int64_t phase_exp) const {
    PauliOperator g = *this;
    g.phase_ = static_cast<int>(mod(phase_exp, 2 * static_cast<std::int64_t>(qudit_dim_)));
    return g;
}

bool PauliOperator::is_scalar() const {
    return std::all_of(x_.begin(), x_.end(), [](auto v) { return v == 0; }) &&
           std::all_of(z_.begin(), z_.end(), [](auto v) { return v == 0; });
}

int PauliOperator::weight() const {
    int w = 0;
    for (std::size_t j = 0; j < x_.size(); ++j) w += (x_[j] != 0 || z_[j] != 0);
    return w;
}

std::string PauliOperator::str() const {
    std::string out;
    if (qudit_dim_ == 2) {
        int ys = 0;
        std::string word(x_.size(), 'I');
        for (std::size_t j = 0; j < x_.size(); ++j) {
            if (x_[j] && z_[j]) {
                word[j] = 'Y';
                ++ys;
            } else if (x_[j]) {
                word[j] = 'X';
            } else if (z_[j]) {
                word[j] = 'Z';
            }
        }
        static constexpr const char* kPhase[] = {"", "+i ", "-1 ", "-i "};
        out = kPhase[mod(phase_ - ys, 4)];
        out += word;
        return out;
    }
    out = "w^" + std::to_string(phase_) + "/2 ";
    for (std::size_t j = 0; j < x_.size(); ++j) {
        if (j > 0) out += '.';
        if (x_[j] == 0 && z_[j] == 0) {
            out += 'i';
        } else {
            out += 'x' + std::to_string(x_[j]) + 'z' + std::to_string(z_[j]);
        }
    }
    return out;
}

bool PauliOperator::operator<(const PauliOperator& other) const {
    return std::tie(qudit_dim_, phase_, x_, z_) < std::tie(other.qudit_dim_, other.phase_, other.x_, other.z_);
}

void require_same_group(const PauliOperator& g, const PauliOperator& h) {
    if (g.qudit_dim() != h.qudit_dim() || g.num_sites() != h.num_sites()) {
        throw std::invalid_argument("Pauli operators from different groups: d=" + std::to_string(g.qudit_dim()) +
                                    ",n=" + std::to_string(g.num_sites()) + " vs d=" + std::to_string(h.qudit_dim()) +
                                    ",n=" + std::to_string(h.num_sites()));
    }
}

PauliOperator multiply(const PauliOperator& g, const PauliOperator& h) {
    require_same_group(g, h);
    const int d = g.qudit_dim();
    const int n = g.num_sites();
    std::vector<std::uint32_t> x(n), z(n);
    std::int64_t cross = 0;
    for (int j = 0; j < n; ++j) {
        // Z^b X^a' = w^{b a'} X^a' Z^b
        cross += static_cast<std::int64_t>(g.z(j)) * h.x(j);
        x[j] = (g.x(j) + h.x(j)) % d;
        z[j] = (g.z(j) + h.z(j)) % d;
        cross %= d;
    }
    return PauliOperator(d, static_cast<std::int64_t>(g.phase_exp()) + h.phase_exp() + 2 * cross, std::move(x),
                         std::move(z));
}

PauliOperator inverse(const PauliOperator& g) {
    const int d = g.qudit_dim();
    const int n = g.num_sites();
    std::vector<std::uint32_t> x(n), z(n);
    std::int64_t cross = 0;
    for (int j = 0; j < n; ++j) {
        cross = (cross + static_cast<std::int64_t>(g.x(j)) * g.z(j)) % d;
        x[j] = (d - g.x(j)) % d;
        z[j] = (d - g.z(j)) % d;
    }
    return PauliOperator(d, -static_cast<std::int64_t>(g.phase_exp()) + 2 * cross, std::move(x), std::move(z));
}

int symplectic_form(const PauliOperator& g, const PauliOperator& h) {
    require_same_group(g, h);
    const std::int64_t d = g.qudit_dim();
    std::int64_t e = 0;
    for (int j = 0; j < g.num_sites(); ++j) {
        e += static_cast<std::int64_t>(g.z(j)) * h.x(j) - static_cast<std::int64_t>(g.x(j)) * h.z(j);
        e %= d;
    }
    return static_cast<int>(mod(e, d));
}

PauliOperator conjugate(const PauliOperator& g, const PauliOperator& h) {
    return h.with_phase(static_cast<std::int64_t>(h.phase_exp()) + 2 * symplectic_form(g, h));
}

PauliOperator power(const PauliOperator& g, std::uint64_t k) {
    PauliOperator result(g.qudit_dim(), g.num_sites());
    PauliOperator base = g;
    while (k > 0) {
        if (k & 1) result = multiply(result, base);
        k >>= 1;
        if (k > 0) base = multiply(base, base);
    }
    return result;
}

std::ostream& operator<<(std::ostream& out, const PauliOperator& g) { return out << g.str(); }

}  // namespace hybridstab
