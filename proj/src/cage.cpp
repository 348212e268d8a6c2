/**************************************************************************
 * cage.cpp
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

#include "frc/cage.hpp"

#include <algorithm>
#include <limits>

#include "frc/error.hpp"
#include "frc/mols.hpp"

namespace frc {

FieldInfo describe(const gf::Field& f) {
    return FieldInfo{f.characteristic(), f.degree(), f.modulus(), f.coefficients(f.alpha())};
}

BipartiteDesign BipartiteDesign::from_x_adjacency(std::size_t num_y, std::vector<std::vector<VertexId>> x_adj,
                                                  std::uint32_t k, std::uint32_t l) {
    BipartiteDesign d;
    d.k = k;
    d.l = l;
    d.y_adj.resize(num_y);
    for (std::size_t x = 0; x < x_adj.size(); ++x) {
        std::sort(x_adj[x].begin(), x_adj[x].end());
        for (const auto y : x_adj[x]) {
            if (y >= num_y) {
                throw Error(Errc::IndexOutOfRange,
                            "x" + std::to_string(x) + " names y" + std::to_string(y) + " but |Y| = " +
                                std::to_string(num_y));
            }
            d.y_adj[y].push_back(static_cast<VertexId>(x));
        }
    }
    d.x_adj = std::move(x_adj);
    return d;
}

std::uint64_t p_n(std::uint64_t q, std::uint32_t n) {
    std::uint64_t sum = 1, term = 1;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (std::uint32_t i = 0; i < n; ++i) {
        if (term > kMax / q || sum > kMax - term * q) {
            throw Error(Errc::ResourceLimit, "p_n overflows 64 bits");
        }
        term *= q;
        sum += term;
    }
    return sum;
}

std::uint64_t cage_x_count(std::uint64_t q, std::uint32_t n) {
    if (n == 0) {
        return 1;
    }
    const unsigned __int128 prod = static_cast<unsigned __int128>(p_n(q, n + 1)) * p_n(q, n);
    const unsigned __int128 u = prod / (q + 1);
    if (u > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(Errc::ResourceLimit, "block count overflows 64 bits");
    }
    return static_cast<std::uint64_t>(u);
}

BipartiteDesign build_regular_cage(std::uint32_t q, const BuildOptions& opts) {
    return build_scaled_cage(q, 1, opts);
}

BipartiteDesign build_scaled_cage(std::uint32_t q, std::uint32_t n, const BuildOptions& opts) {
    if (n < 1) {
        throw Error(Errc::OutOfRange, "iteration n must be at least 1");
    }
    const gf::Field field(q);

    const std::uint64_t l_final = p_n(q, n);
    const std::uint64_t v_final = p_n(q, n + 1);
    const std::uint64_t u_final = cage_x_count(q, n);
    if (u_final > opts.max_edges / (q + 1)) {
        throw Error(Errc::ResourceLimit, "q=" + std::to_string(q) + ", n=" + std::to_string(n) + " needs " +
                                             std::to_string(u_final) + " blocks of size " + std::to_string(q + 1) +
                                             ", over the cap of " + std::to_string(opts.max_edges) + " edges");
    }

    const MolsSet mols = generate_mols(field);
    const auto branch = [q](std::uint64_t j, std::uint32_t m) { return static_cast<VertexId>(1 + j * q + m); };

    BipartiteDesign d;
    d.provenance = Provenance{q, n, describe(field), kConstructionVersion};
    d.k = q + 1;
    d.l = static_cast<std::uint32_t>(l_final);
    d.x_adj.reserve(u_final);
    d.x_tags.reserve(u_final);
    d.y_tags.reserve(v_final);

    // Iteration 0: one spoke x_0 joined to y_0 and its q branches. Its single
    // block {y_0, ..., y_q} seeds iteration 1, which is the regular cage.
    d.y_tags.push_back(YTag{0, 0, 0});
    auto add_spoke = [&](std::uint64_t j) {
        std::vector<VertexId> nb{0};
        for (std::uint32_t m = 0; m < q; ++m) {
            nb.push_back(branch(j, m));
            d.y_tags.push_back(YTag{2, static_cast<std::uint32_t>(j), m});
        }
        d.spokes.push_back(static_cast<VertexId>(d.x_adj.size()));
        d.x_tags.push_back(XTag{1, static_cast<std::uint32_t>(j), 0, 0, 0});
        d.x_adj.push_back(std::move(nb));
    };
    add_spoke(0);

    // Vertices of iteration t-1 keep their ids in iteration t; each iteration
    // appends its new spokes, then the leaves of the blocks it consumes.
    std::size_t block_lo = 0;
    for (std::uint32_t t = 1; t <= n; ++t) {
        const std::uint64_t l_prev = p_n(q, t - 1);
        const std::uint64_t l_cur = p_n(q, t);
        const std::size_t block_hi = d.x_adj.size();
        for (std::uint64_t j = l_prev; j < l_cur; ++j) {
            add_spoke(j);
        }
        for (std::size_t h = block_lo; h < block_hi; ++h) {
            const std::vector<VertexId> g = d.x_adj[h];
            d.leaf_base.push_back(static_cast<VertexId>(d.x_adj.size()));
            for (std::uint32_t m = 0; m < q; ++m) {
                const Square& sq = mols.squares[m];
                for (std::uint32_t i = 0; i < q; ++i) {
                    std::vector<VertexId> nb;
                    nb.reserve(q + 1);
                    nb.push_back(branch(g[0], m));
                    for (std::uint32_t j = 0; j < q; ++j) {
                        nb.push_back(branch(g[j + 1], sq.at(i, j)));
                    }
                    d.x_tags.push_back(XTag{3, 0, static_cast<std::uint32_t>(h), m, i});
                    d.x_adj.push_back(std::move(nb));
                }
            }
        }
        block_lo = block_hi;
    }

    d.y_adj.resize(v_final);
    for (std::size_t x = 0; x < d.x_adj.size(); ++x) {
        for (const auto y : d.x_adj[x]) {
            d.y_adj[y].push_back(static_cast<VertexId>(x));
        }
    }
    return d;
}

BlockCollection blocks_from_graph(const BipartiteDesign& d, Side side) {
    if (side == Side::X) {
        return BlockCollection{d.v(), d.k, d.x_adj};
    }
    return BlockCollection{d.u(), d.l, d.y_adj};
}

BipartiteDesign b_h_subgraph(const BipartiteDesign& d, std::size_t h) {
    if (!d.provenance || d.leaf_base.empty() || d.x_tags.size() != d.u()) {
        throw Error(Errc::NotCanonical, "b_h subgraphs exist only for designs built by build_scaled_cage");
    }
    if (h >= d.leaf_base.size()) {
        throw Error(Errc::IndexOutOfRange,
                    "block " + std::to_string(h) + " out of range, previous iteration has " +
                        std::to_string(d.leaf_base.size()) + " blocks");
    }
    const std::uint32_t q = d.provenance->q;
    const std::vector<VertexId>& g = d.x_adj[h];
    const std::size_t side = std::size_t{q} * q + q + 1;

    constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> y_map(d.v(), kAbsent);
    y_map[0] = 0;
    for (std::uint32_t t = 0; t <= q; ++t) {
        for (std::uint32_t m = 0; m < q; ++m) {
            y_map[1 + std::size_t{g[t]} * q + m] = 1 + t * q + m;
        }
    }

    std::vector<std::vector<VertexId>> x_adj(side);
    auto take = [&](VertexId from, std::size_t to) {
        for (const auto y : d.x_adj[from]) {
            if (y_map[y] != kAbsent) {
                x_adj[to].push_back(y_map[y]);
            }
        }
    };
    for (std::uint32_t t = 0; t <= q; ++t) {
        take(d.spokes[g[t]], t);
    }
    for (std::uint32_t r = 0; r < q * q; ++r) {
        take(d.leaf_base[h] + r, q + 1 + r);
    }

    auto sub = BipartiteDesign::from_x_adjacency(side, std::move(x_adj), q + 1, q + 1);
    sub.provenance = Provenance{q, 1, d.provenance->field, d.provenance->version};
    return sub;
}

} // namespace frc
