/**************************************************************************
 * fixtures.hpp
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

// Golden tables transcribed from the published figures, plus brute-force
// oracles that deliberately share no code with the library's checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "frc/cage.hpp"
#include "frc/design.hpp"

namespace frc::fixtures {

using Blocks = std::vector<std::vector<std::uint32_t>>;

// S(2,3,9): 12 blocks over 9 elements.
inline const Blocks kSteiner3_9 = {{0, 1, 2}, {0, 3, 6}, {0, 4, 8}, {0, 5, 7}, {1, 3, 8}, {1, 4, 7},
                                   {1, 5, 6}, {2, 3, 7}, {2, 4, 6}, {2, 5, 8}, {3, 4, 5}, {6, 7, 8}};

// S(2,3,7), the k = l = 3 block design.
inline const Blocks kSteiner3_7 = {{0, 1, 2}, {0, 3, 6}, {0, 4, 5}, {1, 3, 5}, {1, 4, 6}, {2, 3, 4}, {2, 5, 6}};

// k = 3, l = 7: 15 storage nodes of 7 chunks, 35 chunks.
inline const Blocks kStorage3_15 = {
    {0, 1, 2, 7, 8, 9, 10},       {0, 3, 6, 11, 14, 15, 18},    {0, 4, 5, 12, 13, 16, 17},
    {1, 3, 5, 19, 22, 23, 26},    {1, 4, 6, 20, 21, 24, 25},    {2, 3, 4, 27, 30, 31, 34},
    {2, 5, 6, 28, 29, 32, 33},    {7, 11, 13, 19, 21, 27, 29},  {7, 12, 14, 20, 22, 28, 30},
    {8, 11, 12, 23, 25, 31, 33},  {8, 13, 14, 24, 26, 32, 34},  {9, 15, 17, 19, 20, 31, 32},
    {9, 16, 18, 21, 22, 33, 34},  {10, 15, 16, 23, 24, 27, 28}, {10, 17, 18, 25, 26, 29, 30},
};

/// Chunk relabelling from the library's q = 2 numbering to the figures'.
/// Node ids map to themselves. Inside every group of q^2 = 4 layer-3 chunks
/// built from one block, offsets 1 and 3 trade places; all other ids are fixed.
/// Found once by matching each chunk's holder set against the figure table.
inline std::uint32_t figure_label_q2(std::uint32_t chunk) {
    static const std::map<std::uint32_t, std::uint32_t> swaps = {
        {4, 6},   {6, 4},   {12, 14}, {14, 12}, {16, 18}, {18, 16}, {20, 22}, {22, 20},
        {24, 26}, {26, 24}, {28, 30}, {30, 28}, {32, 34}, {34, 32},
    };
    const auto it = swaps.find(chunk);
    return it == swaps.end() ? chunk : it->second;
}

inline Blocks sorted_blocks(Blocks b) {
    for (auto& block : b) {
        std::sort(block.begin(), block.end());
    }
    return b;
}

inline Blocks relabel(const Blocks& b, std::uint32_t (*f)(std::uint32_t)) {
    Blocks out;
    for (const auto& block : b) {
        std::vector<std::uint32_t> r;
        for (const auto e : block) {
            r.push_back(f(e));
        }
        std::sort(r.begin(), r.end());
        out.push_back(std::move(r));
    }
    return out;
}

inline Blocks node_table(const StorageDesign& sd) {
    Blocks out;
    for (const auto& node : sd.nodes) {
        std::vector<std::uint32_t> row;
        for (const auto& s : node) {
            if (s) {
                row.push_back(*s);
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline StorageDesign storage_from_blocks(const Blocks& nodes, std::uint32_t replicas, std::uint64_t chunks) {
    StorageDesign sd;
    sd.k = replicas;
    sd.l = nodes.empty() ? 0 : static_cast<std::uint32_t>(nodes.front().size());
    sd.num_chunks = chunks;
    for (const auto& n : nodes) {
        sd.nodes.emplace_back(n.begin(), n.end());
    }
    return sd;
}

/// Naive enumerator: any two X vertices with two distinct common Y neighbours.
inline bool has_four_cycle_naive(const BipartiteDesign& d) {
    for (std::size_t a = 0; a < d.u(); ++a) {
        for (std::size_t b = a + 1; b < d.u(); ++b) {
            for (std::size_t v1 = 0; v1 < d.v(); ++v1) {
                for (std::size_t v2 = v1 + 1; v2 < d.v(); ++v2) {
                    auto has = [&](std::size_t x, std::size_t y) {
                        const auto& nb = d.x_adj[x];
                        return std::find(nb.begin(), nb.end(), y) != nb.end();
                    };
                    if (has(a, v1) && has(a, v2) && has(b, v1) && has(b, v2)) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

/// Largest number of chunks shared by any two nodes, by direct set intersection.
inline std::size_t max_pairwise_overlap(const StorageDesign& sd) {
    std::vector<std::set<std::uint32_t>> sets;
    for (const auto& node : sd.nodes) {
        std::set<std::uint32_t> s;
        for (const auto& slot : node) {
            if (slot) {
                s.insert(*slot);
            }
        }
        sets.push_back(std::move(s));
    }
    std::size_t best = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            std::size_t common = 0;
            for (const auto c : sets[i]) {
                common += sets[j].count(c);
            }
            best = std::max(best, common);
        }
    }
    return best;
}

/// Replica count of every chunk id that appears at least once.
inline std::map<std::uint32_t, std::size_t> replica_counts(const StorageDesign& sd) {
    std::map<std::uint32_t, std::size_t> out;
    for (const auto& node : sd.nodes) {
        for (const auto& slot : node) {
            if (slot) {
                ++out[*slot];
            }
        }
    }
    return out;
}

} // namespace frc::fixtures
