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

#include "cli.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "hybridstab/code.h"
#include "hybridstab/code_io.h"
#include "hybridstab/correctability.h"
#include "hybridstab/distance.h"
#include "hybridstab/oracle.h"
#include "json.hpp"

namespace hybridstab::cli {

namespace {

using Json = nlohmann::ordered_json;

class Stopwatch {
   public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// k with base^k == value, if any.
std::optional<int> exact_log(std::size_t value, int base) {
    int k = 0;
    while (value > 1 && value % static_cast<std::size_t>(base) == 0) {
        value /= static_cast<std::size_t>(base);
        ++k;
    }
    if (value != 1) return std::nullopt;
    return k;
}

Json code_summary(const HybridCode& code) {
    Json out;
    out["d"] = code.qudit_dim();
    out["n"] = code.num_sites();
    out["s"] = code.s();
    out["r"] = code.r();
    out["k"] = code.k();
    out["sectors"] = code.sector_count();
    if (auto m = exact_log(code.sector_count(), code.qudit_dim())) out["classical_dits"] = *m;
    return out;
}

std::string notation(const HybridCode& code, std::optional<int> distance) {
    auto m = exact_log(code.sector_count(), code.qudit_dim());
    if (!m) return {};
    std::string out = "[[" + std::to_string(code.num_sites()) + ", " + std::to_string(code.k()) + ":" + std::to_string(*m);
    if (distance) out += ", " + std::to_string(*distance);
    return out + "]]";
}

Json operator_list(const std::vector<PauliOperator>& ops) {
    Json out = Json::array();
    for (const auto& g : ops) out.push_back(g.str());
    return out;
}

Json validation_json(const ValidationReport& report) {
    Json out;
    out["valid"] = report.ok();
    Json issues = Json::array();
    for (const auto& issue : report.issues) {
        Json entry;
        entry["kind"] = issue.kind;
        entry["message"] = issue.message;
        entry["operators"] = operator_list(issue.operators);
        issues.push_back(std::move(entry));
    }
    out["issues"] = std::move(issues);
    out["warnings"] = report.warnings;
    return out;
}

Json tag_json(const ForbiddenTag& tag) {
    Json out;
    out["tag"] = tag.str();
    if (tag.kind == ForbiddenTag::Kind::kCrossCoset) {
        out["set"] = "cross_coset";
        out["sectors"] = {tag.i + 1, tag.j + 1};
    } else {
        out["set"] = "normalizer_minus_gauge";
    }
    return out;
}

void emit(std::ostream& out, const std::string& command, Json inputs, Json code, Json report, Json timing) {
    Json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["code"] = std::move(code);
    doc["report"] = std::move(report);
    doc["timing"] = std::move(timing);
    out << doc.dump(2) << "\n";
}

HybridCode load_code(const std::string& path) { return parse_code(read_text_file(path)); }

LinearCode load_classical(const std::string& name, std::size_t length, int d) {
    if (std::filesystem::is_regular_file(name)) return LinearCode::parse(read_text_file(name), d);
    return LinearCode::from_registry(name, length, d);
}

int cmd_validate(const std::string& path, std::ostream& out) {
    Stopwatch clock;
    const HybridCode code = load_code(path);
    const ValidationReport report = validate(code);
    emit(out, "validate", {{"code", path}}, code_summary(code), validation_json(report), {{"seconds", clock.seconds()}});
    return report.ok() ? kExitOk : kExitRejected;
}

int cmd_check(const std::string& code_path, const std::string& errors_path, bool with_oracle, std::ostream& out,
              std::ostream& err) {
    Stopwatch clock;
    const HybridCode code = load_code(code_path);
    const auto errors = parse_error_list(read_text_file(errors_path), code.qudit_dim(), code.num_sites());
    if (errors.empty()) throw ParseError("error file lists no operators");
    Json inputs = {{"code", code_path}, {"errors", errors_path}, {"oracle", with_oracle}};

    const ValidationReport validation = validate(code);
    if (!validation.ok()) {
        Json report;
        report["validation"] = validation_json(validation);
        report["verdict"] = nullptr;
        emit(out, "check", std::move(inputs), code_summary(code), std::move(report), {{"seconds", clock.seconds()}});
        err << "error: code fails validation\n";
        return kExitRejected;
    }

    const CorrectabilityReport result = check_errors(code, errors);
    Json report;
    report["error_count"] = errors.size();
    report["verdict"] = result.correctable ? "correctable" : "not_correctable";
    if (result.witness) {
        Json witness = tag_json(result.witness->tag);
        witness["k"] = result.witness->k + 1;
        witness["l"] = result.witness->l + 1;
        witness["product"] = result.witness->product.str();
        report["witness"] = std::move(witness);
    } else {
        report["witness"] = nullptr;
    }
    report["per_sector"] = result.per_sector;
    const double check_seconds = clock.seconds();

    int exit_code = result.correctable ? kExitOk : kExitRejected;
    if (with_oracle) {
        Json oracle_json;
        try {
            const bool verdict = oracle::check_oaqec_conditions(code, errors);
            oracle_json["status"] = "ok";
            oracle_json["verdict"] = verdict ? "correctable" : "not_correctable";
            oracle_json["agrees"] = verdict == result.correctable;
            if (verdict != result.correctable) {
                err << "error: dense oracle disagrees with the group-theoretic verdict\n";
                exit_code = kExitRejected;
            }
        } catch (const oracle::CapExceeded& e) {
            oracle_json["status"] = "cap_exceeded";
            oracle_json["reason"] = e.what();
            exit_code = kExitOracle;
        } catch (const oracle::Refusal& e) {
            oracle_json["status"] = "refused";
            oracle_json["reason"] = e.what();
            exit_code = kExitOracle;
        }
        report["oracle"] = std::move(oracle_json);
        if (exit_code == kExitOracle) err << "error: oracle did not run: " << report["oracle"]["reason"].get<std::string>() << "\n";
    }
    emit(out, "check", std::move(inputs), code_summary(code), std::move(report),
         {{"check_seconds", check_seconds}, {"seconds", clock.seconds()}});
    return exit_code;
}

int cmd_distance(const std::string& path, std::optional<int> max_weight, unsigned threads, std::ostream& out,
                 std::ostream& err) {
    Stopwatch clock;
    const HybridCode code = load_code(path);
    const ValidationReport validation = validate(code);
    const int cutoff = max_weight.value_or(std::min(code.num_sites(), 6));
    Json inputs = {{"code", path}, {"max_weight", cutoff}};
    if (!validation.ok()) {
        emit(out, "distance", std::move(inputs), code_summary(code), {{"validation", validation_json(validation)}},
             {{"seconds", clock.seconds()}});
        err << "error: code fails validation\n";
        return kExitRejected;
    }
    const DistanceResult result = exact_distance(code, {cutoff, threads});
    const AnticommuteDegree degree = anticommute_degree(code);

    Json report;
    report["exact_distance"] = result.exact_distance ? Json(*result.exact_distance) : Json(nullptr);
    report["lower_bound"] = result.lower_bound;
    report["upper_bound"] = result.upper_bound ? Json(*result.upper_bound) : Json(nullptr);
    report["search_cutoff"] = result.search_cutoff;
    if (result.witness) {
        report["witness"] = result.witness->str();
        const auto tags = forbidden_set_membership(code, *result.witness);
        report["witness_tag"] = tags.empty() ? Json(nullptr) : Json(tags.begin()->str());
        report["witness_tag_count"] = tags.size();
    } else {
        report["witness"] = nullptr;
    }
    Json degree_json;
    degree_json["m"] = degree.m;
    if (degree.x_type) degree_json["m_x"] = *degree.x_type;
    if (degree.z_type) degree_json["m_z"] = *degree.z_type;
    report["anticommute_degree"] = std::move(degree_json);
    if (auto text = notation(code, result.exact_distance); !text.empty()) report["notation"] = text;

    emit(out, "distance", std::move(inputs), code_summary(code), std::move(report),
         {{"seconds", clock.seconds()}, {"threads", threads}, {"candidates", result.candidates}});
    return kExitOk;
}

struct GenerateOptions {
    std::string family;
    int n = 0;
    int s = 0;
    int r = 0;
    int d = 2;
    std::optional<std::size_t> max_sectors;
    int ell = 3;
    std::optional<std::string> cx;
    std::optional<std::string> cz;
    bool full_transversal = false;
    std::optional<std::string> output;
};

int cmd_generate(const GenerateOptions& opts, std::ostream& out) {
    std::optional<HybridCode> code;
    if (opts.family == "motivating") {
        code = build_motivating(opts.n, opts.s, opts.r, opts.d, opts.max_sectors);
    } else if (opts.family == "bacon-shor" || opts.family == "bacon-shor-hybrid") {
        HybridCode base = build_bacon_shor(opts.ell);
        const bool hybrid = opts.family == "bacon-shor-hybrid" || opts.cx || opts.cz;
        const std::string fallback = opts.family == "bacon-shor-hybrid" ? "rep" : "zero";
        if (hybrid) {
            const auto length = static_cast<std::size_t>(opts.ell - 1);
            code = hybridize_css(base, load_classical(opts.cx.value_or(fallback), length, 2),
                                 load_classical(opts.cz.value_or(fallback), length, 2));
        } else {
            code = std::move(base);
        }
    } else if (opts.family == "gkp18") {
        code = opts.full_transversal ? build_gkp18(gkp18_full_transversal()) : build_gkp18();
    } else if (opts.family == "toric") {
        code = build_toric(opts.ell);
    } else {
        throw std::invalid_argument("unknown family " + opts.family);
    }
    const std::string text = write_code(*code);
    if (opts.output) {
        std::ofstream file(*opts.output, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + *opts.output);
        file << text;
    } else {
        out << text;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hybrid stabilizer code toolkit", "hybridstab"};
    app.require_subcommand(1);

    std::string code_path, errors_path;
    bool with_oracle = false;
    std::optional<int> max_weight;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    GenerateOptions gen;

    auto* validate_cmd = app.add_subcommand("validate", "Check every structural invariant of a code file");
    validate_cmd->add_option("code", code_path, "Code file")->required();

    auto* check_cmd = app.add_subcommand("check", "Decide whether a set of Pauli errors is correctable");
    check_cmd->add_option("code", code_path, "Code file")->required();
    check_cmd->add_option("errors", errors_path, "File with one Pauli per line")->required();
    check_cmd->add_flag("--oracle", with_oracle, "Cross-check with the dense-matrix oracle");

    auto* distance_cmd = app.add_subcommand("distance", "Exact distance by weight-limited search");
    distance_cmd->add_option("code", code_path, "Code file")->required();
    distance_cmd->add_option("--max-weight", max_weight, "Largest weight to enumerate (default min(n, 6))")
        ->check(CLI::PositiveNumber);
    distance_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* generate_cmd = app.add_subcommand("generate", "Write a code file for a built-in family");
    generate_cmd->add_option("family", gen.family, "motivating | bacon-shor | bacon-shor-hybrid | gkp18 | toric")
        ->required()
        ->check(CLI::IsMember({"motivating", "bacon-shor", "bacon-shor-hybrid", "gkp18", "toric"}));
    generate_cmd->add_option("--n", gen.n, "Sites (motivating)");
    generate_cmd->add_option("--s", gen.s, "Stabilizer generators (motivating)");
    generate_cmd->add_option("--r", gen.r, "Gauge qudits (motivating)");
    generate_cmd->add_option("--d", gen.d, "Qudit dimension (motivating)");
    generate_cmd->add_option("--max-sectors", gen.max_sectors, "Keep only the first sectors (motivating)");
    generate_cmd->add_option("--ell", gen.ell, "Lattice size (bacon-shor, toric)");
    generate_cmd->add_option("--cx", gen.cx, "Classical code for X-type syndromes: registry name or matrix file");
    generate_cmd->add_option("--cz", gen.cz, "Classical code for Z-type syndromes: registry name or matrix file");
    generate_cmd->add_flag("--full-transversal", gen.full_transversal, "All nine sectors (gkp18)");
    generate_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(code_path, out);
        if (check_cmd->parsed()) return cmd_check(code_path, errors_path, with_oracle, out, err);
        if (distance_cmd->parsed()) return cmd_distance(code_path, max_weight, threads, out, err);
        return cmd_generate(gen, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const oracle::CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitOracle;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace hybridstab::cli
