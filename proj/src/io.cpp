/**************************************************************************
 * io.cpp
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

#include "frc/io.hpp"

#include <fstream>
#include <sstream>

#include "frc/error.hpp"

namespace frc::io {

json to_json(const StorageDesign& sd) {
    json header;
    if (sd.provenance) {
        const auto& prov = *sd.provenance;
        header["q"] = prov.q;
        header["n"] = prov.n;
        header["field"] = {{"p", prov.field.p},
                           {"m", prov.field.m},
                           {"modulus", prov.field.modulus},
                           {"primitive", prov.field.primitive}};
        header["version"] = prov.version;
    } else {
        header["q"] = nullptr;
        header["n"] = nullptr;
        header["field"] = nullptr;
        header["version"] = nullptr;
    }
    header["k"] = sd.k;
    header["l"] = sd.l;
    header["num_nodes"] = sd.num_nodes();
    header["num_chunks"] = sd.num_chunks;

    json nodes = json::array();
    for (const auto& node : sd.nodes) {
        json row = json::array();
        for (const auto& slot : node) {
            row.push_back(slot ? json(*slot) : json(nullptr));
        }
        nodes.push_back(std::move(row));
    }
    return json{{"header", std::move(header)}, {"nodes", std::move(nodes)}};
}

StorageDesign storage_from_json(const json& doc) {
    try {
        const json& header = doc.at("header");
        StorageDesign sd;
        sd.k = header.at("k").get<std::uint32_t>();
        sd.l = header.at("l").get<std::uint32_t>();
        sd.num_chunks = header.at("num_chunks").get<std::uint64_t>();
        if (header.contains("q") && !header.at("q").is_null()) {
            Provenance prov;
            prov.q = header.at("q").get<std::uint32_t>();
            prov.n = header.at("n").get<std::uint32_t>();
            const json& field = header.at("field");
            prov.field.p = field.at("p").get<std::uint32_t>();
            prov.field.m = field.at("m").get<std::uint32_t>();
            prov.field.modulus = field.at("modulus").get<std::vector<std::uint32_t>>();
            prov.field.primitive = field.at("primitive").get<std::vector<std::uint32_t>>();
            prov.version = header.at("version").get<std::string>();
            sd.provenance = std::move(prov);
        }
        for (const auto& row : doc.at("nodes")) {
            std::vector<Slot> node;
            node.reserve(row.size());
            for (const auto& cell : row) {
                node.push_back(cell.is_null() ? Slot{} : Slot{cell.get<ChunkId>()});
            }
            sd.nodes.push_back(std::move(node));
        }
        if (header.contains("num_nodes") && header.at("num_nodes").get<std::size_t>() != sd.nodes.size()) {
            throw Error(Errc::ParseError, "num_nodes disagrees with the node list");
        }
        return sd;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

std::string to_csv(const StorageDesign& sd) {
    std::ostringstream out;
    out << "node";
    for (std::uint32_t s = 0; s < sd.l; ++s) {
        out << ",slot" << s;
    }
    out << '\n';
    for (std::size_t i = 0; i < sd.nodes.size(); ++i) {
        out << 'b' << i;
        for (const auto& slot : sd.nodes[i]) {
            out << ',';
            if (slot) {
                out << *slot;
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string to_dot(const BipartiteDesign& d) {
    const bool tagged = d.x_tags.size() == d.u() && d.y_tags.size() == d.v();
    std::ostringstream out;
    out << "graph frc {\n";
    if (d.provenance) {
        out << "  // q=" << d.provenance->q << " n=" << d.provenance->n << '\n';
    }
    out << "  // k=" << d.k << " l=" << d.l << " |X|=" << d.u() << " |Y|=" << d.v() << '\n';
    for (std::size_t y = 0; y < d.v(); ++y) {
        out << "  y" << y << " [shape=box";
        if (tagged) {
            out << ", layer=" << int{d.y_tags[y].layer};
        }
        out << "];\n";
    }
    for (std::size_t x = 0; x < d.u(); ++x) {
        out << "  x" << x << " [shape=circle";
        if (tagged) {
            out << ", layer=" << int{d.x_tags[x].layer};
        }
        out << "];\n";
    }
    for (std::size_t x = 0; x < d.u(); ++x) {
        for (const auto y : d.x_adj[x]) {
            out << "  y" << y << " -- x" << x << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

json to_json(const MolsSet& set) {
    json squares = json::array();
    for (const auto& s : set.squares) {
        squares.push_back(s.rows());
    }
    return json{{"q", set.q}, {"squares", std::move(squares)}};
}

std::string to_text(const MolsSet& set) {
    std::ostringstream out;
    for (const auto& s : set.squares) {
        out << "L" << s.index() << '\n';
        for (const auto& row : s.rows()) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                out << (j ? " " : "") << row[j];
            }
            out << '\n';
        }
        out << '\n';
    }
    return out.str();
}

namespace {

json rational_json(const Rational& r) {
    return json{{"num", r.num}, {"den", r.den}, {"ceil", r.ceil()}};
}

} // namespace

json to_json(const BoundPair& b) {
    return json{{"v_min", b.v_min}, {"u_min", rational_json(b.u_min)}};
}

json to_json(const VerificationReport& r) {
    json out{{"degrees_ok", r.degrees_ok},
             {"girth_ok", r.girth_ok},
             {"steiner_exact", r.steiner_exact},
             {"bounds_tight", r.bounds_tight}};
    json witnesses = json::object();
    if (r.degree_witness) {
        const auto& w = *r.degree_witness;
        witnesses["degrees"] = {{"side", w.side == Side::X ? "X" : "Y"},
                                {"vertex", w.vertex},
                                {"degree", w.degree},
                                {"expected", w.expected}};
    }
    if (r.girth_witness) {
        const auto& c = *r.girth_witness;
        witnesses["girth"] = {{"cycle", {"x" + std::to_string(c.x_a), "y" + std::to_string(c.y_a),
                                         "x" + std::to_string(c.x_b), "y" + std::to_string(c.y_b)}}};
    }
    if (r.steiner_witness) {
        const auto& w = *r.steiner_witness;
        witnesses["steiner"] = {{"pair", {w.a, w.b}}, {"count", w.count}};
    }
    if (r.bounds_witness) {
        const auto& w = *r.bounds_witness;
        json b{{"v", w.v}, {"u", w.u}};
        b["bounds"] = w.bounds ? to_json(*w.bounds) : json(nullptr);
        witnesses["bounds"] = std::move(b);
    }
    out["witnesses"] = std::move(witnesses);
    return out;
}

json to_json(const RepairPlan& plan) {
    json assignments = json::array();
    for (const auto& a : plan.assignments) {
        assignments.push_back({{"chunk", a.chunk}, {"helper", a.helper}});
    }
    return json{{"failed_node", plan.failed_node}, {"assignments", std::move(assignments)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::IoError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << contents)) {
        throw Error(Errc::IoError, "cannot write " + path);
    }
}

} // namespace frc::io
