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

#include "hybridstab/linear_code.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hybridstab/pauli.h"

namespace hybridstab {

LinearCode::LinearCode(int modulus, std::size_t length, std::vector<zmod::Row> generators)
    : modulus_(modulus), length_(length), generators_(std::move(generators)) {
    if (modulus < 2) throw std::invalid_argument("linear code modulus must be at least 2");
    for (auto& row : generators_) {
        if (row.size() != length_) throw std::invalid_argument("generator row length differs from code length");
        for (auto& v : row) v = zmod::reduce(v, modulus_);
    }
}

LinearCode LinearCode::repetition(std::size_t length, int modulus) {
    return LinearCode(modulus, length, {zmod::Row(length, 1)});
}

LinearCode LinearCode::hamming743() {
    return LinearCode(2, 7,
                      {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}});
}

LinearCode LinearCode::zero(std::size_t length, int modulus) { return LinearCode(modulus, length, {}); }

LinearCode LinearCode::from_registry(std::string_view name, std::size_t length, int modulus) {
    if (name == "zero" || name == "none") return zero(length, modulus);
    if (name == "hamming743") {
        if (length != 7) throw std::invalid_argument("hamming743 has length 7, need " + std::to_string(length));
        if (modulus != 2) throw std::invalid_argument("hamming743 is a binary code");
        return hamming743();
    }
    if (name.starts_with("rep")) {
        std::size_t rep_length = length;
        std::string_view digits = name.substr(3);
        if (!digits.empty()) {
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rep_length);
            if (ec != std::errc() || ptr != digits.data() + digits.size()) {
                throw std::invalid_argument("bad repetition code name '" + std::string(name) + "'");
            }
            if (rep_length != length) {
                throw std::invalid_argument(std::string(name) + " has length " + std::to_string(rep_length) +
                                            ", need " + std::to_string(length));
            }
        }
        return repetition(rep_length, modulus);
    }
    throw std::invalid_argument("unknown classical code '" + std::string(name) + "'");
}

LinearCode LinearCode::parse(std::string_view text, int modulus) {
    std::vector<zmod::Row> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        zmod::Row row;
        std::string token;
        while (fields >> token) {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc() || ptr != token.data() + token.size() || v < 0 || v >= modulus) {
                throw ParseError("bad generator-matrix entry '" + token + "'");
            }
            row.push_back(v);
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged generator matrix");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("generator matrix file has no rows");
    std::size_t length = rows.front().size();
    return LinearCode(modulus, length, std::move(rows));
}

std::vector<zmod::Row> LinearCode::codewords() const {
    zmod::RowSpan span(generators_, length_, modulus_);
    auto size = span.size();
    if (!size || *size > (1u << 20)) throw std::length_error("too many codewords to enumerate");
    std::vector<zmod::Row> words;
    words.reserve(*size);
    const auto& basis = span.basis();
    const auto& orders = span.basis_orders();
    std::vector<std::int64_t> digits(basis.size(), 0);
    while (true) {
        zmod::Row word(length_, 0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < length_; ++j) word[j] = (word[j] + digits[i] * basis[i][j]) % modulus_;
        }
        words.push_back(std::move(word));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == orders[i]) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return words;
}

int LinearCode::minimum_distance() const {
    int best = 0;
    for (const auto& word : codewords()) {
        int w = static_cast<int>(std::count_if(word.begin(), word.end(), [](auto v) { return v != 0; }));
        if (w > 0 && (best == 0 || w < best)) best = w;
    }
    return best;
}

}  // namespace hybridstab
