/**************************************************************************
 * cli.cpp
 *
 * Copyright 2026 The frcage Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "frc/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "frc/error.hpp"
#include "frc/io.hpp"

namespace frc::cli {

namespace {

struct Config {
    std::uint32_t q = 0;
    std::uint32_t n = 1;
    std::string input;
    std::string output;
    std::string format = "json";
    std::uint64_t u_tilde = 0;
    std::uint32_t node = 0;
    std::string policy = "lowest";
    std::uint64_t round = 0;
    std::uint32_t k = 0;
    std::uint32_t l = 0;
    bool json = false;
    std::optional<std::uint64_t> max_edges;
};

BuildOptions build_options(const Config& cfg) {
    BuildOptions opts;
    if (cfg.max_edges) {
        opts.max_edges = *cfg.max_edges;
    } else if (const char* env = std::getenv("FRC_MAX_EDGES"); env != nullptr && *env != '\0') {
        try {
            opts.max_edges = std::stoull(env);
        } catch (const std::exception&) {
            throw Error(Errc::OutOfRange, std::string("FRC_MAX_EDGES is not a number: ") + env);
        }
    }
    return opts;
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty() || cfg.output == "-") {
        out << text;
    } else {
        io::write_file(cfg.output, text);
    }
}

StorageDesign load(const std::string& path) {
    const std::string text = io::read_file(path);
    io::json doc;
    try {
        doc = io::json::parse(text);
    } catch (const io::json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
    return io::storage_from_json(doc);
}

std::string dump(const io::json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Girth-6 cage block designs for fractional-repetition storage placement", "frc"};
    app.require_subcommand(1);
    Config cfg;

    auto* construct = app.add_subcommand("construct", "Build the (q, n) storage design");
    construct->add_option("--q", cfg.q, "prime power q (replication q+1)")->required()->check(CLI::Range(2u, 65536u));
    construct->add_option("--n", cfg.n, "iteration n (node size p_n(q))")->check(CLI::Range(1u, 64u));
    construct->add_option("-o,--output", cfg.output, "output JSON file (default stdout)");
    construct->add_option("--max-edges", cfg.max_edges, "cap on chunks x replicas (default FRC_MAX_EDGES or 1e7)");

    auto* verify = app.add_subcommand("verify", "Run the degree, girth, Steiner and bound oracles");
    verify->add_option("-i,--input", cfg.input, "design JSON")->required();

    auto* expand_cmd = app.add_subcommand("expand", "Grow a (q, n) design to (q, n+1) without moving chunks");
    expand_cmd->add_option("-i,--input", cfg.input, "design JSON")->required();
    expand_cmd->add_option("-o,--output", cfg.output, "output JSON file (default stdout)");
    expand_cmd->add_option("--max-edges", cfg.max_edges, "cap on chunks x replicas");

    auto* fill = app.add_subcommand("fill", "Leave slots of chunk ids >= U empty");
    fill->add_option("-i,--input", cfg.input, "design JSON")->required();
    fill->add_option("--chunks", cfg.u_tilde, "number of chunks U actually stored")->required();
    fill->add_option("-o,--output", cfg.output, "output JSON file (default stdout)");

    auto* repair = app.add_subcommand("repair", "Plan single-node repair, one chunk per helper");
    repair->add_option("-i,--input", cfg.input, "design JSON")->required();
    repair->add_option("--node", cfg.node, "failed node id")->required();
    repair->add_option("--policy", cfg.policy, "helper choice")->check(CLI::IsMember({"lowest", "round-robin"}));
    repair->add_option("--round", cfg.round, "rotation for round-robin");

    auto* bounds = app.add_subcommand("bounds", "Lower bounds on |Y| and |X| for girth 6");
    bounds->add_option("--k", cfg.k, "degree of X (replication)")->required();
    bounds->add_option("--l", cfg.l, "degree of Y (node size)")->required();
    bounds->add_flag("--json", cfg.json, "print JSON");

    auto* mols = app.add_subcommand("mols", "Print the q mutually-orthogonal squares");
    mols->add_option("--q", cfg.q, "prime power q")->required()->check(CLI::Range(2u, 256u));
    mols->add_flag("--json", cfg.json, "print JSON nested arrays");

    auto* export_cmd = app.add_subcommand("export", "Convert a design to dot, csv or json");
    export_cmd->add_option("-i,--input", cfg.input, "design JSON")->required();
    export_cmd->add_option("--format", cfg.format, "dot|csv|json")->check(CLI::IsMember({"dot", "csv", "json"}));
    export_cmd->add_option("-o,--output", cfg.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            const auto d = build_scaled_cage(cfg.q, cfg.n, build_options(cfg));
            emit(cfg, dump(io::to_json(to_storage_design(d))), out);
        } else if (verify->parsed()) {
            const auto report = verify_design(to_bipartite(load(cfg.input)));
            out << dump(io::to_json(report));
            return report.all_ok() ? kExitOk : kExitVerifyFailed;
        } else if (expand_cmd->parsed()) {
            emit(cfg, dump(io::to_json(expand(load(cfg.input), build_options(cfg)))), out);
        } else if (fill->parsed()) {
            emit(cfg, dump(io::to_json(partial_fill(load(cfg.input), cfg.u_tilde, build_options(cfg)))), out);
        } else if (repair->parsed()) {
            const auto policy = cfg.policy == "round-robin" ? HelperPolicy::RoundRobin : HelperPolicy::LowestId;
            out << dump(io::to_json(repair_plan(load(cfg.input), cfg.node, policy, cfg.round)));
        } else if (bounds->parsed()) {
            const auto b = moore_bounds(cfg.k, cfg.l);
            if (cfg.json) {
                out << dump(io::to_json(b));
            } else {
                out << "v_min=" << b.v_min << '\n';
                if (b.u_min.integral()) {
                    out << "u_min=" << b.u_min.num << '\n';
                } else {
                    out << "u_min=" << b.u_min.num << '/' << b.u_min.den << " (ceil " << b.u_min.ceil() << ")\n";
                }
            }
        } else if (mols->parsed()) {
            const auto set = generate_mols(gf::Field(cfg.q));
            out << (cfg.json ? dump(io::to_json(set)) : io::to_text(set));
        } else if (export_cmd->parsed()) {
            const auto sd = load(cfg.input);
            if (cfg.format == "dot") {
                emit(cfg, io::to_dot(to_bipartite(sd)), out);
            } else if (cfg.format == "csv") {
                emit(cfg, io::to_csv(sd), out);
            } else {
                emit(cfg, dump(io::to_json(sd)), out);
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace frc::cli
