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

// Text format for hybrid codes:
//
//   dim 2
//   sites 7
//   [stabilizers]
//   XIIZYYZ
//   [gauge]
//   <A> ; <B>
//   [logical]
//   IIIXZZX ; IIIZXXI
//   [transversal]
//   IIIIIII
//
// Each entry is one Pauli in PauliOperator::parse syntax. Pair members are
// separated by ';'. Text after '#' is ignored. Sections may be empty or
// omitted; an omitted transversal means {I}.

#ifndef HYBRIDSTAB_CODE_IO_H
#define HYBRIDSTAB_CODE_IO_H

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hybridstab/code.h"

namespace hybridstab {

/// Throws ParseError with a 1-based line number on malformed input.
HybridCode parse_code(std::string_view text);

/// Canonical form; parse_code(write_code(c)) reproduces every field and
/// write_code is a fixed point of that round trip.
std::string write_code(const HybridCode& code);

/// One Pauli per non-empty line; each must live in P_{d,n}.
std::vector<PauliOperator> parse_error_list(std::string_view text, int qudit_dim, int num_sites);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace hybridstab

#endif
