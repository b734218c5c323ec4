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

#include "hybridstab/code_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace hybridstab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Line {
    int number;
    std::string_view text;
};

// Non-empty lines with comments removed.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        std::size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) out.push_back({number, line});
        if (text.empty()) break;
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

int parse_header_value(const Line& line, std::string_view key) {
    std::string_view rest = trim(line.text.substr(key.size()));
    int value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) {
        fail(line.number, "expected an integer after '" + std::string(key) + "'");
    }
    return value;
}

PauliOperator parse_entry(const Line& line, std::string_view text, int d, int n) {
    PauliOperator g(d, 1);
    try {
        g = PauliOperator::parse(trim(text), d);
    } catch (const ParseError& e) {
        fail(line.number, e.what());
    } catch (const std::invalid_argument& e) {
        fail(line.number, e.what());
    }
    if (g.num_sites() != n) {
        fail(line.number, "operator acts on " + std::to_string(g.num_sites()) + " sites, expected " + std::to_string(n));
    }
    return g;
}

}  // namespace

HybridCode parse_code(std::string_view text) {
    enum class Section { kHeader, kStabilizers, kGauge, kLogical, kTransversal };
    std::optional<int> d, n;
    Section section = Section::kHeader;
    std::vector<PauliOperator> stabilizers, transversal;
    std::vector<PauliPair> gauge, logical;
    bool seen[5] = {true, false, false, false, false};

    for (const Line& line : content_lines(text)) {
        if (line.text.front() == '[') {
            static constexpr std::pair<std::string_view, Section> kSections[] = {
                {"[stabilizers]", Section::kStabilizers},
                {"[gauge]", Section::kGauge},
                {"[logical]", Section::kLogical},
                {"[transversal]", Section::kTransversal},
            };
            bool matched = false;
            for (const auto& [name, value] : kSections) {
                if (line.text == name) {
                    section = value;
                    matched = true;
                }
            }
            if (!matched) fail(line.number, "unknown section " + std::string(line.text));
            if (seen[static_cast<int>(section)]) fail(line.number, "duplicate section " + std::string(line.text));
            seen[static_cast<int>(section)] = true;
            if (!d || !n) fail(line.number, "'dim' and 'sites' must precede the first section");
            continue;
        }
        if (section == Section::kHeader) {
            if (line.text.starts_with("dim") && (line.text.size() == 3 || std::isspace(static_cast<unsigned char>(line.text[3])))) {
                if (d) fail(line.number, "duplicate 'dim'");
                d = parse_header_value(line, "dim");
                if (*d < 2 || *d > kMaxQuditDim) fail(line.number, "dim out of range");
            } else if (line.text.starts_with("sites")) {
                if (n) fail(line.number, "duplicate 'sites'");
                n = parse_header_value(line, "sites");
                if (*n < 1) fail(line.number, "sites must be positive");
            } else {
                fail(line.number, "expected 'dim <d>' or 'sites <n>'");
            }
            continue;
        }
        if (section == Section::kGauge || section == Section::kLogical) {
            std::size_t sep = line.text.find(';');
            if (sep == std::string_view::npos || line.text.find(';', sep + 1) != std::string_view::npos) {
                fail(line.number, "expected a pair '<A> ; <B>'");
            }
            PauliPair pair{parse_entry(line, line.text.substr(0, sep), *d, *n),
                           parse_entry(line, line.text.substr(sep + 1), *d, *n)};
            (section == Section::kGauge ? gauge : logical).push_back(std::move(pair));
        } else {
            (section == Section::kStabilizers ? stabilizers : transversal).push_back(parse_entry(line, line.text, *d, *n));
        }
    }
    if (!d || !n) throw ParseError("line 1: missing 'dim' or 'sites' header");
    return HybridCode(*d, *n, std::move(stabilizers), std::move(gauge), std::move(logical), std::move(transversal));
}

std::string write_code(const HybridCode& code) {
    std::ostringstream out;
    out << "dim " << code.qudit_dim() << "\n";
    out << "sites " << code.num_sites() << "\n";
    out << "[stabilizers]\n";
    for (const auto& g : code.stabilizer_generators()) out << g.str() << "\n";
    // Dropped generators are kept so that the file describes the same input.
    for (const auto& g : code.stabilizer().dropped_generators()) out << g.str() << "\n";
    out << "[gauge]\n";
    for (const auto& [a, b] : code.gauge_pairs()) out << a.str() << " ; " << b.str() << "\n";
    out << "[logical]\n";
    for (const auto& [a, b] : code.logical_pairs()) out << a.str() << " ; " << b.str() << "\n";
    out << "[transversal]\n";
    for (const auto& g : code.transversal()) out << g.str() << "\n";
    return out.str();
}

std::vector<PauliOperator> parse_error_list(std::string_view text, int qudit_dim, int num_sites) {
    std::vector<PauliOperator> out;
    for (const Line& line : content_lines(text)) out.push_back(parse_entry(line, line.text, qudit_dim, num_sites));
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace hybridstab
