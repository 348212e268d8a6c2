/**************************************************************************
 * mols.cpp
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

#include "frc/mols.hpp"

#include <algorithm>
#include <string>

#include "frc/error.hpp"

namespace frc {

Square::Square(std::uint32_t order, std::uint32_t index)
    : order_(order), index_(index), cells_(std::size_t{order} * order, 0) {}

Square::Square(std::uint32_t index, const std::vector<std::vector<std::uint32_t>>& rows)
    : order_(static_cast<std::uint32_t>(rows.size())), index_(index) {
    cells_.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw Error(Errc::OrderMismatch, "square rows must all have length " + std::to_string(rows.size()));
        }
        cells_.insert(cells_.end(), row.begin(), row.end());
    }
}

std::vector<std::vector<std::uint32_t>> Square::rows() const {
    std::vector<std::vector<std::uint32_t>> out(order_);
    for (std::uint32_t i = 0; i < order_; ++i) {
        out[i].assign(cells_.begin() + std::ptrdiff_t{i} * order_, cells_.begin() + std::ptrdiff_t{i + 1} * order_);
    }
    return out;
}

void normalize_zeroth_column(Square& s) {
    const std::uint32_t q = s.order();
    Square sorted(q, s.index());
    for (std::uint32_t i = 0; i < q; ++i) {
        const std::uint32_t target = s.at(i, 0);
        for (std::uint32_t j = 0; j < q; ++j) {
            sorted.at(target, j) = s.at(i, j);
        }
    }
    s = std::move(sorted);
}

MolsSet generate_mols(const gf::Field& f) {
    const std::uint32_t q = f.order();
    const auto e = f.elements();
    MolsSet set{q, {}};
    set.squares.reserve(q);

    Square base(q, 0);
    for (std::uint32_t i = 0; i < q; ++i) {
        for (std::uint32_t j = 0; j < q; ++j) {
            base.at(i, j) = i;
        }
    }
    set.squares.push_back(std::move(base));

    for (std::uint32_t m = 1; m < q; ++m) {
        Square s(q, m);
        for (std::uint32_t j = 0; j < q; ++j) {
            const gf::Element scaled = f.mul(e[m], e[j]);
            for (std::uint32_t i = 0; i < q; ++i) {
                s.at(i, j) = f.index_of(f.add(e[i], scaled));
            }
        }
        // e_0 = 0 already puts column 0 in natural order; kept for symbol maps where e_i != i.
        normalize_zeroth_column(s);
        set.squares.push_back(std::move(s));
    }
    return set;
}

bool check_latin(const Square& s) {
    const std::uint32_t q = s.order();
    std::vector<char> seen(q);
    for (std::uint32_t i = 0; i < q; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint32_t j = 0; j < q; ++j) {
            const auto v = s.at(i, j);
            if (v >= q || seen[v]) {
                return false;
            }
            seen[v] = 1;
        }
    }
    for (std::uint32_t j = 0; j < q; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint32_t i = 0; i < q; ++i) {
            const auto v = s.at(i, j);
            if (v >= q || seen[v]) {
                return false;
            }
            seen[v] = 1;
        }
    }
    return true;
}

bool check_orthogonal(const Square& a, const Square& b) {
    if (a.order() != b.order()) {
        throw Error(Errc::OrderMismatch,
                    "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()) + " differ");
    }
    const std::uint32_t q = a.order();
    std::vector<char> seen(std::size_t{q} * q, 0);
    for (std::uint32_t i = 0; i < q; ++i) {
        for (std::uint32_t j = 0; j < q; ++j) {
            const auto x = a.at(i, j), y = b.at(i, j);
            if (x >= q || y >= q) {
                return false;
            }
            auto& slot = seen[std::size_t{x} * q + y];
            if (slot) {
                return false;
            }
            slot = 1;
        }
    }
    return true;
}

bool check_zeroth_column_only_overlap(const MolsSet& set) {
    const std::uint32_t q = set.q;
    for (std::size_t a = 0; a < set.squares.size(); ++a) {
        for (std::size_t b = a + 1; b < set.squares.size(); ++b) {
            const auto& sa = set.squares[a];
            const auto& sb = set.squares[b];
            if (sa.order() != q || sb.order() != q) {
                return false;
            }
            for (std::uint32_t i = 0; i < q; ++i) {
                for (std::uint32_t j = 0; j < q; ++j) {
                    if ((sa.at(i, j) == sb.at(i, j)) != (j == 0)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace frc
