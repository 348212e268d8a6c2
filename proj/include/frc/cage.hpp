/**************************************************************************
 * cage.hpp
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
#include <string>
#include <vector>

#include "frc/gf.hpp"

namespace frc {

using VertexId = std::uint32_t;

/// Bumped whenever a change would alter the edge lists produced for some (q, n).
inline constexpr const char* kConstructionVersion = "frcage-1";

/// Default cap on u * k for a single construction; FRC_MAX_EDGES overrides it in the CLI.
inline constexpr std::uint64_t kDefaultMaxEdges = 10'000'000;

struct FieldInfo {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> modulus;   // low-order first, monic
    std::vector<std::uint32_t> primitive; // polynomial-basis coefficients of alpha

    bool operator==(const FieldInfo&) const = default;
};

FieldInfo describe(const gf::Field& f);

/// Identifies a design produced by this library: parameters plus the pinned field choices.
struct Provenance {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    FieldInfo field;
    std::string version = kConstructionVersion;

    bool operator==(const Provenance&) const = default;
};

// Layer numbering follows the construction: Y holds layers 0 and 2, X holds 1 and 3.
struct YTag {
    std::uint8_t layer = 0;
    std::uint32_t j = 0; // layer 2: spoke index
    std::uint32_t m = 0; // layer 2: position among the spoke's q branches
    bool operator==(const YTag&) const = default;
};

struct XTag {
    std::uint8_t layer = 1;
    std::uint32_t j = 0; // layer 1: spoke index
    std::uint32_t h = 0; // layer 3: block of the previous iteration
    std::uint32_t m = 0; // layer 3: square index
    std::uint32_t i = 0; // layer 3: row index
    bool operator==(const XTag&) const = default;
};

/**
 * Bipartite graph (X, Y, E) with declared degrees k on X and l on Y.
 *
 * x_adj[x] lists the Y neighbours of x and y_adj[y] the X neighbours of y,
 * both ascending. Designs built by this library also carry provenance and
 * layer tags; hand-assembled ones leave those empty.
 */
struct BipartiteDesign {
    std::optional<Provenance> provenance;
    std::uint32_t k = 0;
    std::uint32_t l = 0;
    std::vector<std::vector<VertexId>> x_adj;
    std::vector<std::vector<VertexId>> y_adj;
    std::vector<XTag> x_tags;
    std::vector<YTag> y_tags;
    std::vector<VertexId> spokes;      // X id of layer-1 vertex x_j
    std::vector<VertexId> leaf_base;   // X id of the first layer-3 vertex built from block h

    std::size_t u() const noexcept { return x_adj.size(); }
    std::size_t v() const noexcept { return y_adj.size(); }

    /// Builds y_adj from x_adj; neighbour lists are sorted, duplicates kept.
    static BipartiteDesign from_x_adjacency(std::size_t num_y, std::vector<std::vector<VertexId>> x_adj,
                                            std::uint32_t k, std::uint32_t l);

    bool operator==(const BipartiteDesign&) const = default;
};

struct BlockCollection {
    std::size_t num_elements = 0;
    std::uint32_t block_size = 0;
    std::vector<std::vector<VertexId>> blocks;

    bool operator==(const BlockCollection&) const = default;
};

enum class Side { X, Y };

struct BuildOptions {
    std::uint64_t max_edges = kDefaultMaxEdges;
};

/// q^n + ... + q + 1. Throws Error(ResourceLimit) on 64-bit overflow.
std::uint64_t p_n(std::uint64_t q, std::uint32_t n);

/// Number of X vertices p_{n+1}(q) p_n(q) / (q + 1) of the iteration-n cage; u(q, 0) = 1.
std::uint64_t cage_x_count(std::uint64_t q, std::uint32_t n);

/// k = l = q + 1 cage on q^2 + q + 1 vertices per side.
BipartiteDesign build_regular_cage(std::uint32_t q, const BuildOptions& opts = {});

/// k = q + 1, l = p_n(q). n = 1 gives the regular cage.
BipartiteDesign build_scaled_cage(std::uint32_t q, std::uint32_t n, const BuildOptions& opts = {});

/// Side X: one block per x holding its Y neighbours. Side Y: the transpose.
BlockCollection blocks_from_graph(const BipartiteDesign& d, Side side);

/// Induced subgraph on y_0, the spokes and branches named by block h of the
/// previous iteration, and the layer-3 vertices built from that block,
/// relabelled into the regular-cage numbering.
BipartiteDesign b_h_subgraph(const BipartiteDesign& d, std::size_t h);

} // namespace frc
