/**************************************************************************
 * cli_test.cpp
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

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "fixtures.hpp"
#include "frc/cli.hpp"
#include "frc/error.hpp"
#include "frc/io.hpp"

using namespace frc;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "frc");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("frc_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("json round trip preserves the design") {
    const auto sd = to_storage_design(build_scaled_cage(3, 2));
    CHECK(io::storage_from_json(io::to_json(sd)) == sd);

    const auto part = partial_fill(sd, 100);
    const auto doc = io::to_json(part);
    CHECK(io::storage_from_json(io::json::parse(doc.dump())) == part);
    CHECK(doc["nodes"][39].back().is_null());

    const auto bare = fixtures::storage_from_blocks(fixtures::kSteiner3_9, 4, 9);
    const auto bare_doc = io::to_json(bare);
    CHECK(bare_doc["header"]["q"].is_null());
    CHECK(io::storage_from_json(bare_doc) == bare);
}

TEST_CASE("json header layout") {
    const auto doc = io::to_json(to_storage_design(build_scaled_cage(4, 1)));
    const auto& h = doc["header"];
    CHECK(h["q"] == 4);
    CHECK(h["n"] == 1);
    CHECK(h["k"] == 5);
    CHECK(h["l"] == 5);
    CHECK(h["num_nodes"] == 21);
    CHECK(h["num_chunks"] == 21);
    CHECK(h["field"]["p"] == 2);
    CHECK(h["field"]["m"] == 2);
    CHECK(h["field"]["modulus"] == io::json::array({1, 1, 1}));
    CHECK(h["field"]["primitive"] == io::json::array({0, 1}));
    CHECK(h["version"] == kConstructionVersion);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(io::storage_from_json(io::json::parse(R"({"nodes": []})")), Error);
    CHECK_THROWS_AS(io::storage_from_json(io::json::parse(
                        R"({"header": {"k": 3, "l": 3, "num_chunks": 7, "num_nodes": 2}, "nodes": [[0,1,2]]})")),
                    Error);
}

TEST_CASE("csv and dot exports") {
    const auto sd = to_storage_design(build_scaled_cage(2, 2));
    const auto csv = io::to_csv(sd);
    std::istringstream lines(csv);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "node,slot0,slot1,slot2,slot3,slot4,slot5,slot6");
    CHECK(first == "b0,0,1,2,7,8,9,10");

    const auto blank = io::to_csv(partial_fill(sd, 34));
    CHECK(blank.find("b5,2,3,6,27,28,31,32") != std::string::npos);
    CHECK(blank.find("b6,2,4,5,29,30,33,\n") != std::string::npos);

    const auto dot = io::to_dot(build_regular_cage(2));
    CHECK(dot.rfind("graph frc {", 0) == 0);
    CHECK(dot.find("y0 [shape=box, layer=0];") != std::string::npos);
    CHECK(dot.find("x3 [shape=circle, layer=3];") != std::string::npos);
    CHECK(dot.find("y0 -- x0;") != std::string::npos);
}

TEST_CASE("cli construct then verify") {
    TempDir tmp;
    const auto design = tmp.file("d.json");
    auto r = run({"construct", "--q", "2", "--n", "2", "-o", design});
    CHECK(r.code == 0);
    r = run({"verify", "-i", design});
    CHECK(r.code == 0);
    const auto report = io::json::parse(r.out);
    CHECK(report["degrees_ok"] == true);
    CHECK(report["girth_ok"] == true);
    CHECK(report["steiner_exact"] == true);
    CHECK(report["bounds_tight"] == true);
    CHECK(report["witnesses"].empty());

    // in-memory verification gives the same report
    const auto direct = io::to_json(verify_design(build_scaled_cage(2, 2)));
    CHECK(report == direct);

    // output is deterministic
    const auto again = run({"construct", "--q", "2", "--n", "2"});
    CHECK(again.out == io::read_file(design));
}

TEST_CASE("cli verify fails on a broken design") {
    TempDir tmp;
    const auto path = tmp.file("bad.json");
    auto sd = fixtures::storage_from_blocks(fixtures::kSteiner3_7, 3, 7);
    sd.nodes[6][2] = sd.nodes[5][2]; // {2, 5, 4}: chunk 4 now has 4 replicas, chunk 6 two
    io::write_file(path, io::to_json(sd).dump());
    const auto r = run({"verify", "-i", path});
    CHECK(r.code == 1);
    const auto report = io::json::parse(r.out);
    CHECK(report["degrees_ok"] == false);
    CHECK(report["witnesses"].contains("degrees"));
}

TEST_CASE("cli bounds and mols") {
    auto r = run({"bounds", "--k", "3", "--l", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "v_min=15\nu_min=35\n");
    r = run({"bounds", "--k", "3", "--l", "5"});
    CHECK(r.out == "v_min=11\nu_min=55/3 (ceil 19)\n");
    r = run({"bounds", "--k", "4", "--l", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("InvalidDegrees") != std::string::npos);

    r = run({"mols", "--q", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "L0\n0 0 0\n1 1 1\n2 2 2\n\nL1\n0 1 2\n1 2 0\n2 0 1\n\nL2\n0 2 1\n1 0 2\n2 1 0\n\n");
    r = run({"mols", "--q", "2", "--json"});
    CHECK(io::json::parse(r.out)["squares"] == io::json::parse("[[[0,0],[1,1]],[[0,1],[1,0]]]"));
}

TEST_CASE("cli errors") {
    auto r = run({"construct", "--q", "6", "--n", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotPrimePower") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"construct"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "-i", "/nonexistent/design.json"}).code == 2);
    CHECK(run({"construct", "--q", "2", "--n", "6", "--max-edges", "1000"}).code == 2);

    setenv("FRC_MAX_EDGES", "50", 1);
    r = run({"construct", "--q", "2", "--n", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("ResourceLimit") != std::string::npos);
    unsetenv("FRC_MAX_EDGES");
}

TEST_CASE("cli expand, fill, repair, export") {
    TempDir tmp;
    const auto d1 = tmp.file("d1.json");
    const auto d2 = tmp.file("d2.json");
    const auto d2p = tmp.file("d2p.json");
    REQUIRE(run({"construct", "--q", "2", "--n", "1", "-o", d1}).code == 0);
    REQUIRE(run({"expand", "-i", d1, "-o", d2}).code == 0);
    CHECK(io::storage_from_json(io::json::parse(io::read_file(d2))) == to_storage_design(build_scaled_cage(2, 2)));

    REQUIRE(run({"fill", "-i", d2, "--chunks", "30", "-o", d2p}).code == 0);
    const auto part = io::storage_from_json(io::json::parse(io::read_file(d2p)));
    CHECK(fixtures::replica_counts(part).size() == 30);

    auto r = run({"fill", "-i", d2, "--chunks", "7"});
    CHECK(r.code == 2);
    CHECK(r.err.find("OutOfRange") != std::string::npos);

    r = run({"repair", "-i", d1, "--node", "0"});
    CHECK(r.code == 0);
    CHECK(io::json::parse(r.out) ==
          io::json::parse(R"({"failed_node":0,"assignments":[{"chunk":0,"helper":1},{"chunk":1,"helper":3},{"chunk":2,"helper":5}]})"));
    r = run({"repair", "-i", d1, "--node", "9"});
    CHECK(r.code == 2);
    CHECK(r.err.find("NodeOutOfRange") != std::string::npos);

    r = run({"export", "-i", d2, "--format", "csv"});
    CHECK(r.out.find("b0,0,1,2,7,8,9,10") != std::string::npos);
    r = run({"export", "-i", d2, "--format", "dot"});
    CHECK(r.out.find("layer=3") != std::string::npos);
    r = run({"export", "-i", d2, "--format", "xml"});
    CHECK(r.code == 2);

    const auto bare = tmp.file("bare.json");
    io::write_file(bare, io::to_json(fixtures::storage_from_blocks(fixtures::kSteiner3_9, 4, 9)).dump());
    CHECK(run({"expand", "-i", bare}).code == 2);
    // transposed S(2,3,9): four replicas on three-slot nodes admits no bound
    CHECK(run({"verify", "-i", bare}).code == 1);
    const auto fano = tmp.file("fano.json");
    io::write_file(fano, io::to_json(fixtures::storage_from_blocks(fixtures::kSteiner3_7, 3, 7)).dump());
    CHECK(run({"verify", "-i", fano}).code == 0);
}
