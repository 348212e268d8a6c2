/**************************************************************************
 * design.hpp
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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frc/cage.hpp"

namespace frc {

using ChunkId = std::uint32_t;
using NodeId = std::uint32_t;
using Slot = std::optional<ChunkId>; // nullopt marks a slot left empty for later fill-in

/**
 * Chunk placement: node i stores the chunks in nodes[i], slot by slot.
 *
 * Built from a cage by taking Y as the storage nodes and X as the chunks, so
 * every chunk has k replicas, every node has l slots and no two nodes share
 * more than one chunk.
 */
struct StorageDesign {
    std::optional<Provenance> provenance;
    std::uint32_t k = 0;          // replication degree
    std::uint32_t l = 0;          // node size
    std::uint64_t num_chunks = 0; // capacity, including chunks whose slots are empty
    std::vector<std::vector<Slot>> nodes;

    std::size_t num_nodes() const noexcept { return nodes.size(); }
    bool operator==(const StorageDesign&) const = default;
};

StorageDesign to_storage_design(const BipartiteDesign& d);

/// Inverse view used for verification: Y = nodes, X = chunk ids, empty slots dropped.
/// Layer tags are restored when the design is canonical.
BipartiteDesign to_bipartite(const StorageDesign& sd);

/// Throws Error(NotCanonical) unless sd matches this library's (q, n)
/// construction slot for slot (empty slots are allowed anywhere).
void require_canonical(const StorageDesign& sd);

/// The (q, n+1) design. Old nodes keep their slots, empty ones included, as a
/// prefix; new chunks only ever land in appended slots or new nodes.
StorageDesign expand(const StorageDesign& old, const BuildOptions& opts = {});

/// Canonical (q, n) design with every chunk id >= u_tilde left empty.
/// Requires u[n-1] < u_tilde <= u[n], else Error(OutOfRange).
StorageDesign partial_fill(const StorageDesign& full, std::uint64_t u_tilde, const BuildOptions& opts = {});

enum class HelperPolicy { LowestId, RoundRobin };

struct RepairAssignment {
    ChunkId chunk = 0;
    NodeId helper = 0;
    bool operator==(const RepairAssignment&) const = default;
};

struct RepairPlan {
    NodeId failed_node = 0;
    std::vector<RepairAssignment> assignments; // in slot order of the failed node
};

/**
 * One helper per stored chunk of the failed node, fetching a single chunk from each.
 *
 * LowestId picks the smallest surviving holder; RoundRobin rotates through the
 * holders by `round`, spreading load over repeated failures of the same node.
 * Throws NodeOutOfRange, NoSurvivingReplica, or HelpersNotDistinct (the last
 * only for inputs that break the pair-overlap property).
 */
RepairPlan repair_plan(const StorageDesign& sd, NodeId failed, HelperPolicy policy = HelperPolicy::LowestId,
                       std::uint64_t round = 0);

} // namespace frc
