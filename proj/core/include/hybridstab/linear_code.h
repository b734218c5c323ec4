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

#ifndef HYBRIDSTAB_LINEAR_CODE_H
#define HYBRIDSTAB_LINEAR_CODE_H

#include <cstddef>
#include <string_view>
#include <vector>

#include "hybridstab/zmod.h"

namespace hybridstab {

/// A classical linear code over Z_d, given only by its generator rows.
class LinearCode {
   public:
    LinearCode(int modulus, std::size_t length, std::vector<zmod::Row> generators);

    static LinearCode repetition(std::size_t length, int modulus = 2);
    static LinearCode hamming743();
    static LinearCode zero(std::size_t length, int modulus = 2);

    /// Looks up "rep", "rep<len>", "hamming743", "zero" or "none". Names without
    /// an explicit length take `length`; a mismatching explicit length throws.
    static LinearCode from_registry(std::string_view name, std::size_t length, int modulus = 2);

    /// One generator row per non-empty line, entries separated by whitespace.
    /// Lines starting with '#' are ignored.
    static LinearCode parse(std::string_view text, int modulus = 2);

    int modulus() const { return modulus_; }
    std::size_t length() const { return length_; }
    const std::vector<zmod::Row>& generators() const { return generators_; }

    /// Every distinct codeword, zero first. Throws if there are more than 2^20.
    std::vector<zmod::Row> codewords() const;

    /// Minimum Hamming weight of a nonzero codeword by exhaustive enumeration;
    /// 0 for the zero code.
    int minimum_distance() const;

   private:
    int modulus_;
    std::size_t length_;
    std::vector<zmod::Row> generators_;
};

}  // namespace hybridstab

#endif
