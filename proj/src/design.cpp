/**************************************************************************
 * design.cpp
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

#include "frc/design.hpp"

#include <string>

#include "frc/error.hpp"

namespace frc {

StorageDesign to_storage_design(const BipartiteDesign& d) {
    StorageDesign sd;
    sd.provenance = d.provenance;
    sd.k = d.k;
    sd.l = d.l;
    sd.num_chunks = d.u();
    sd.nodes.reserve(d.v());
    for (const auto& chunks : d.y_adj) {
        sd.nodes.emplace_back(chunks.begin(), chunks.end());
    }
    return sd;
}

namespace {

BipartiteDesign canonical_build(const Provenance& prov, const BuildOptions& opts = {}) {
    return build_scaled_cage(prov.q, prov.n, opts);
}

// Returns the canonical cage sd was cut from, or throws NotCanonical.
BipartiteDesign match_canonical(const StorageDesign& sd, const BuildOptions& opts = {}) {
    if (!sd.provenance) {
        throw Error(Errc::NotCanonical, "design carries no construction header");
    }
    const Provenance& prov = *sd.provenance;
    if (prov.version != kConstructionVersion) {
        throw Error(Errc::NotCanonical, "construction version '" + prov.version + "' is not " + kConstructionVersion);
    }
    if (prov.n < 1) {
        throw Error(Errc::NotCanonical, "iteration n must be at least 1");
    }
    BipartiteDesign ref;
    try {
        ref = canonical_build(prov, opts);
    } catch (const Error& e) {
        if (e.code() == Errc::ResourceLimit) {
            throw;
        }
        throw Error(Errc::NotCanonical, e.what());
    }
    if (prov != *ref.provenance) {
        throw Error(Errc::NotCanonical, "field modulus or generator differs from this library's choice for q=" +
                                            std::to_string(prov.q));
    }
    if (sd.k != ref.k || sd.l != ref.l || sd.num_chunks != ref.u() || sd.nodes.size() != ref.v()) {
        throw Error(Errc::NotCanonical, "shape (k, l, chunks, nodes) does not match q=" + std::to_string(prov.q) +
                                            ", n=" + std::to_string(prov.n));
    }
    for (std::size_t i = 0; i < sd.nodes.size(); ++i) {
        const auto& node = sd.nodes[i];
        if (node.size() != ref.y_adj[i].size()) {
            throw Error(Errc::NotCanonical, "node " + std::to_string(i) + " has the wrong number of slots");
        }
        for (std::size_t s = 0; s < node.size(); ++s) {
            if (node[s] && *node[s] != ref.y_adj[i][s]) {
                throw Error(Errc::NotCanonical,
                            "node " + std::to_string(i) + " slot " + std::to_string(s) + " holds chunk " +
                                std::to_string(*node[s]) + ", expected " + std::to_string(ref.y_adj[i][s]));
            }
        }
    }
    return ref;
}

} // namespace

void require_canonical(const StorageDesign& sd) {
    match_canonical(sd);
}

BipartiteDesign to_bipartite(const StorageDesign& sd) {
    std::vector<std::vector<VertexId>> x_adj(sd.num_chunks);
    for (std::size_t i = 0; i < sd.nodes.size(); ++i) {
        for (const auto& slot : sd.nodes[i]) {
            if (!slot) {
                continue;
            }
            if (*slot >= sd.num_chunks) {
                throw Error(Errc::IndexOutOfRange, "node " + std::to_string(i) + " stores chunk " +
                                                       std::to_string(*slot) + " beyond num_chunks");
            }
            x_adj[*slot].push_back(static_cast<VertexId>(i));
        }
    }
    auto d = BipartiteDesign::from_x_adjacency(sd.nodes.size(), std::move(x_adj), sd.k, sd.l);
    d.provenance = sd.provenance;
    if (sd.provenance) {
        try {
            const auto ref = match_canonical(sd);
            d.x_tags = ref.x_tags;
            d.y_tags = ref.y_tags;
            d.spokes = ref.spokes;
            d.leaf_base = ref.leaf_base;
        } catch (const Error&) {
            // Not ours after all: verify it as a plain graph.
        }
    }
    return d;
}

StorageDesign expand(const StorageDesign& old, const BuildOptions& opts) {
    match_canonical(old, opts);
    const Provenance& prov = *old.provenance;
    StorageDesign grown = to_storage_design(build_scaled_cage(prov.q, prov.n + 1, opts));
    for (std::size_t i = 0; i < old.nodes.size(); ++i) {
        for (std::size_t s = 0; s < old.nodes[i].size(); ++s) {
            grown.nodes[i][s] = old.nodes[i][s];
        }
    }
    return grown;
}

StorageDesign partial_fill(const StorageDesign& full, std::uint64_t u_tilde, const BuildOptions& opts) {
    const auto ref = match_canonical(full, opts);
    const Provenance& prov = *full.provenance;
    const std::uint64_t lower = cage_x_count(prov.q, prov.n - 1);
    const std::uint64_t upper = ref.u();
    if (u_tilde <= lower || u_tilde > upper) {
        throw Error(Errc::OutOfRange, "chunk count " + std::to_string(u_tilde) + " outside (" +
                                          std::to_string(lower) + ", " + std::to_string(upper) + "]");
    }
    StorageDesign out = to_storage_design(ref);
    for (auto& node : out.nodes) {
        for (auto& slot : node) {
            if (slot && *slot >= u_tilde) {
                slot.reset();
            }
        }
    }
    return out;
}

RepairPlan repair_plan(const StorageDesign& sd, NodeId failed, HelperPolicy policy, std::uint64_t round) {
    if (failed >= sd.nodes.size()) {
        throw Error(Errc::NodeOutOfRange,
                    "node " + std::to_string(failed) + " out of range, design has " + std::to_string(sd.nodes.size()));
    }
    // Only chunks on the failed node matter, so index holders for those alone.
    std::vector<std::vector<NodeId>> holders(sd.num_chunks);
    std::vector<char> wanted(sd.num_chunks, 0);
    for (const auto& slot : sd.nodes[failed]) {
        if (slot && *slot < sd.num_chunks) {
            wanted[*slot] = 1;
        }
    }
    for (NodeId i = 0; i < sd.nodes.size(); ++i) {
        if (i == failed) {
            continue;
        }
        for (const auto& slot : sd.nodes[i]) {
            if (slot && *slot < sd.num_chunks && wanted[*slot]) {
                holders[*slot].push_back(i);
            }
        }
    }

    RepairPlan plan{failed, {}};
    std::vector<char> busy(sd.nodes.size(), 0);
    for (const auto& slot : sd.nodes[failed]) {
        if (!slot) {
            continue;
        }
        if (*slot >= sd.num_chunks) {
            throw Error(Errc::IndexOutOfRange, "chunk " + std::to_string(*slot) + " beyond num_chunks");
        }
        const auto& candidates = holders[*slot];
        if (candidates.empty()) {
            throw Error(Errc::NoSurvivingReplica, "chunk " + std::to_string(*slot) + " has no replica outside node " +
                                                      std::to_string(failed));
        }
        const NodeId helper = policy == HelperPolicy::LowestId ? candidates.front()
                                                                : candidates[round % candidates.size()];
        if (busy[helper]) {
            throw Error(Errc::HelpersNotDistinct, "node " + std::to_string(helper) +
                                                      " would serve two chunks of node " + std::to_string(failed));
        }
        busy[helper] = 1;
        plan.assignments.push_back(RepairAssignment{*slot, helper});
    }
    return plan;
}

} // namespace frc
