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

#include <gtest/gtest.h>

#include <algorithm>

#include "hybridstab/code.h"
#include "hybridstab/code_io.h"
#include "hybridstab/oracle.h"
#include "support.h"

namespace hybridstab {
namespace {

using testing::qubit;

bool has_issue(const ValidationReport& report, const std::string& kind) {
    return std::any_of(report.issues.begin(), report.issues.end(), [&](const auto& i) { return i.kind == kind; });
}

std::string issue_kinds(const ValidationReport& report) {
    std::string out;
    for (const auto& i : report.issues) out += i.kind + " ";
    return out;
}

HybridCode motivating_with(std::vector<PauliOperator> transversal) {
    return build_motivating(4, 2, 1).with_transversal(std::move(transversal));
}

PauliOperator grid_product(int ell, const std::vector<std::pair<int, int>>& cells, bool x_type) {
    PauliOperator out(2, ell * ell);
    for (auto [row, col] : cells) {
        const int site = bacon_shor_site(ell, row, col);
        out = multiply(out, PauliOperator::single(2, ell * ell, site, x_type ? 1 : 0, x_type ? 0 : 1));
    }
    return out;
}

TEST(Validate, MotivatingInstance) {
    const auto code = motivating_with({qubit("IIII"), qubit("XIII")});
    EXPECT_TRUE(validate(code).ok()) << issue_kinds(validate(code));
    EXPECT_EQ(code.s(), 2);
    EXPECT_EQ(code.r(), 1);
    EXPECT_EQ(code.k(), 1);
    EXPECT_EQ(code.sector_count(), 2u);
}

TEST(Validate, StabilizerRepresentativeSharesIdentityCoset) {
    const auto report = validate(motivating_with({qubit("IIII"), qubit("ZIII")}));
    EXPECT_TRUE(has_issue(report, "transversal_same_coset")) << issue_kinds(report);
}

TEST(Validate, SevenQubitCode) {
    const auto code = testing::seven_qubit_code();
    EXPECT_TRUE(validate(code).ok()) << issue_kinds(validate(code));
    EXPECT_EQ(code.s(), 6);
    EXPECT_EQ(code.r(), 0);
    EXPECT_EQ(code.k(), 1);
}

TEST(Validate, ReportsEachBrokenInvariant) {
    auto pairs = [](std::string a, std::string b) { return PauliPair{qubit(a), qubit(b)}; };
    EXPECT_TRUE(has_issue(validate(HybridCode(2, 2, {qubit("XI"), qubit("ZI")}, {}, {pairs("IX", "IZ")})),
                          "stabilizer_not_abelian"));
    EXPECT_TRUE(has_issue(validate(HybridCode(2, 2, {qubit("ZI"), qubit("-1 ZI")}, {}, {pairs("IX", "IZ")})),
                          "stabilizer_has_scalars"));
    EXPECT_TRUE(has_issue(validate(HybridCode(2, 2, {qubit("ZI")}, {}, {pairs("XX", "IZ")})), "not_in_normalizer"));
    EXPECT_TRUE(has_issue(validate(HybridCode(2, 3, {qubit("ZII")}, {pairs("IXI", "IZI")}, {pairs("IXX", "IIZ")})),
                          "gauge_logical_not_commuting"));
    EXPECT_TRUE(has_issue(validate(HybridCode(2, 2, {qubit("ZI")}, {}, {pairs("IX", "IX")})), "pair_not_conjugate"));
    EXPECT_TRUE(has_issue(validate(HybridCode(2, 3, {qubit("ZII")}, {}, {pairs("IXI", "IZI"), pairs("IXX", "IIZ")})),
                          "pairs_not_commuting"));
    EXPECT_TRUE(has_issue(validate(motivating_with({qubit("XIII")})), "transversal_first_not_identity"));
    EXPECT_TRUE(has_issue(validate(HybridCode(2, 3, {qubit("ZII")}, {pairs("IXI", "IZI")}, {pairs("IXI", "IZI")})),
                          "not_minimal"));
    EXPECT_TRUE(has_issue(validate(HybridCode(2, 3, {qubit("ZII")}, {}, {pairs("IXI", "IZI")})),
                          "normalizer_incomplete"));
}

TEST(Validate, IssuesCarryOffendingOperators) {
    const auto report = validate(HybridCode(2, 2, {qubit("ZI")}, {}, {{qubit("XX"), qubit("IZ")}}));
    ASSERT_FALSE(report.ok());
    const auto& issue = report.issues.front();
    EXPECT_FALSE(issue.message.empty());
    EXPECT_NE(std::find(issue.operators.begin(), issue.operators.end(), qubit("XX")), issue.operators.end());
}

TEST(Syndrome, IdentityAndBaconShorRowErrors) {
    const auto code = build_bacon_shor(8);
    EXPECT_EQ(syndrome(code, PauliOperator(2, 64)), Syndrome(14, 0));
    const auto error = grid_product(8, {{1, 1}, {1, 3}, {1, 5}, {1, 7}}, false);
    const Syndrome full = syndrome(code, error);
    // X-type checks come first.
    EXPECT_EQ(Syndrome(full.begin(), full.begin() + 7), Syndrome(7, 1));
    EXPECT_EQ(Syndrome(full.begin() + 7, full.end()), Syndrome(7, 0));
    const auto quiet = grid_product(8, {{1, 1}, {1, 2}}, false);
    EXPECT_EQ(syndrome(code, multiply(quiet, quiet)), Syndrome(14, 0));
}

TEST(Builders, MotivatingParameters) {
    for (int d : {2, 3}) {
        for (int n = 1; n <= 4; ++n) {
            for (int s = 0; s <= n; ++s) {
                const auto code = build_motivating(n, s, (n - s) / 2, d);
                EXPECT_TRUE(validate(code).ok()) << d << " " << n << " " << s;
                std::size_t expected = 1;
                for (int j = 0; j < s; ++j) expected *= d;
                EXPECT_EQ(code.sector_count(), expected);
                EXPECT_EQ(code.r() + code.k(), n - s);
            }
        }
    }
    EXPECT_EQ(build_motivating(4, 4, 0).k(), 0);
    EXPECT_EQ(build_motivating(4, 2, 1, 2, 3).sector_count(), 3u);
    EXPECT_THROW(build_motivating(3, 2, 2), std::invalid_argument);
}

TEST(Builders, BaconShorParameters) {
    const auto bs3 = build_bacon_shor(3);
    EXPECT_TRUE(validate(bs3).ok()) << issue_kinds(validate(bs3));
    EXPECT_EQ(bs3.num_sites(), 9);
    EXPECT_EQ(bs3.s(), 4);
    EXPECT_EQ(bs3.k(), 1);
    EXPECT_EQ(bs3.r(), 4);
    EXPECT_EQ(bs3.sector_count(), 1u);
    EXPECT_EQ(bs3.logical_pairs().front().first.weight(), 3);
    for (int ell : {2, 4, 5, 8}) {
        const auto code = build_bacon_shor(ell);
        EXPECT_TRUE(validate(code).ok()) << ell;
        EXPECT_EQ(code.s(), 2 * (ell - 1));
        EXPECT_EQ(code.k(), 1);
        EXPECT_EQ(code.r(), ell * ell - 2 * (ell - 1) - 1);
        for (const auto& g : code.stabilizer_generators()) EXPECT_EQ(g.weight(), 2 * ell);
        for (const auto& g : code.gauge_generators()) EXPECT_TRUE(centralizes(g, code.stabilizer()));
    }
    EXPECT_THROW(build_bacon_shor(1), std::invalid_argument);
}

TEST(Builders, ToricParameters) {
    const auto code = build_toric(4);
    EXPECT_TRUE(validate(code).ok()) << issue_kinds(validate(code));
    EXPECT_EQ(code.num_sites(), 16);
    EXPECT_EQ(code.s(), 14);
    EXPECT_EQ(code.k(), 2);
    EXPECT_THROW(build_toric(3), std::invalid_argument);
}

TEST(Builders, Gkp18) {
    const auto code = build_gkp18();
    EXPECT_TRUE(validate(code).ok()) << issue_kinds(validate(code));
    EXPECT_EQ(coset_count(code.stabilizer()), 9u);
    EXPECT_EQ(code.sector_count(), 3u);
    EXPECT_EQ(code.transversal()[1], PauliOperator::single(18, 1, 0, 1, 0));
    EXPECT_EQ(code.transversal()[2], PauliOperator::single(18, 1, 0, 17, 0));
    const auto full = build_gkp18(gkp18_full_transversal());
    EXPECT_TRUE(validate(full).ok());
    EXPECT_EQ(full.sector_count(), 9u);
    const auto plain = build_gkp18(std::vector<PauliOperator>{PauliOperator(18, 1)});
    EXPECT_TRUE(validate(plain).ok());
    EXPECT_EQ(plain.sector_count(), 1u);
}

TEST(Hybridize, RepetitionOnBaconShor8) {
    const auto base = build_bacon_shor(8);
    ASSERT_TRUE(is_css(base));
    const auto code = hybridize_css(base, LinearCode::repetition(7), LinearCode::repetition(7));
    EXPECT_TRUE(validate(code).ok()) << issue_kinds(validate(code));
    EXPECT_EQ(code.sector_count(), 4u);
    const auto row_z = grid_product(8, {{1, 1}, {1, 3}, {1, 5}, {1, 7}}, false);
    const auto column_x = grid_product(8, {{2, 1}, {4, 1}, {6, 1}, {8, 1}}, true);
    for (const auto& expected : {row_z, column_x, multiply(row_z, column_x)}) {
        const auto hits = std::count_if(code.transversal().begin(), code.transversal().end(),
                                        [&](const auto& g) { return same_coset(g, expected, code.stabilizer()); });
        EXPECT_EQ(hits, 1) << expected.str();
    }
}

TEST(Hybridize, ZeroCodesLeaveCodeUnchanged) {
    const auto base = build_bacon_shor(3);
    const auto code = hybridize_css(base, LinearCode::zero(2), LinearCode::zero(2));
    EXPECT_EQ(code.sector_count(), 1u);
    EXPECT_TRUE(code.transversal().front().is_identity());
    EXPECT_EQ(write_code(code), write_code(base));
}

TEST(Hybridize, HammingOnBaconShor8HasDistinctCosets) {
    const auto code = hybridize_css(build_bacon_shor(8), LinearCode::hamming743(), LinearCode::hamming743());
    EXPECT_EQ(code.sector_count(), 256u);
    std::set<Syndrome> syndromes;
    for (const auto& g : code.transversal()) syndromes.insert(syndrome(code, g));
    EXPECT_EQ(syndromes.size(), 256u);
    // Exhaustive pairwise check through the coset primitive.
    for (std::size_t i = 0; i < code.sector_count(); ++i) {
        for (std::size_t j = i + 1; j < code.sector_count(); ++j) {
            ASSERT_FALSE(same_coset(code.transversal()[i], code.transversal()[j], code.stabilizer()));
        }
    }
    EXPECT_TRUE(validate(code).ok());
}

TEST(Hybridize, RejectsBadInput) {
    EXPECT_THROW(hybridize_css(build_bacon_shor(3), LinearCode::repetition(3), LinearCode::repetition(2)),
                 std::invalid_argument);
    EXPECT_THROW(hybridize_css(testing::seven_qubit_code(), LinearCode::zero(1), LinearCode::zero(1)),
                 std::invalid_argument);
}

TEST(Hybridize, SolveSyndromeRoundTripsClassicalCodewords) {
    const auto code = build_bacon_shor(8);
    std::vector<PauliOperator> x_checks(code.stabilizer_generators().begin(), code.stabilizer_generators().begin() + 7);
    for (const auto& word : LinearCode::hamming743().codewords()) {
        const auto rep = solve_syndrome(2, 64, x_checks, word, PauliKind::kZOnly);
        ASSERT_TRUE(rep);
        EXPECT_EQ(syndrome(x_checks, *rep), word);
    }
}

TEST(SymplecticPairs, ProducesConjugatePairsAndIsotropicRest) {
    const auto reduction = symplectic_pairs({qubit("XXI"), qubit("ZZI"), qubit("IZZ"), qubit("IXX"), qubit("XXX")});
    for (std::size_t i = 0; i < reduction.pairs.size(); ++i) {
        EXPECT_EQ(symplectic_form(reduction.pairs[i].first, reduction.pairs[i].second), 1);
        for (std::size_t j = 0; j < reduction.pairs.size(); ++j) {
            if (i == j) continue;
            for (const auto& a : {reduction.pairs[i].first, reduction.pairs[i].second}) {
                EXPECT_EQ(symplectic_form(a, reduction.pairs[j].first), 0);
                EXPECT_EQ(symplectic_form(a, reduction.pairs[j].second), 0);
            }
        }
        for (const auto& iso : reduction.isotropic) {
            EXPECT_EQ(symplectic_form(iso, reduction.pairs[i].first), 0);
            EXPECT_EQ(symplectic_form(iso, reduction.pairs[i].second), 0);
        }
    }
    EXPECT_EQ(reduction.pairs.size(), 2u);
}

TEST(Generated, SubspaceDimensionsFromOracle) {
    for (int d : {2, 3}) {
        for (int n = 1; n <= (d == 2 ? 4 : 3); ++n) {
            for (int s = 0; s <= n; ++s) {
                const auto code = build_motivating(n, s, 0, d);
                const auto projector = oracle::stabilizer_projector(code.stabilizer());
                std::size_t expected = 1;
                for (int j = 0; j < n - s; ++j) expected *= d;
                EXPECT_EQ(static_cast<std::size_t>(oracle::projector_range(projector).cols()), expected);
            }
        }
    }
}

}  // namespace
}  // namespace hybridstab
