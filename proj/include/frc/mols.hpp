/**************************************************************************
 * mols.hpp
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
#include <vector>

#include "frc/gf.hpp"

namespace frc {

/// q x q array of symbols in [0, q), row-major.
class Square {
public:
    Square() = default;
    Square(std::uint32_t order, std::uint32_t index);
    Square(std::uint32_t index, const std::vector<std::vector<std::uint32_t>>& rows);

    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t index() const noexcept { return index_; }

    std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return cells_[row * order_ + col]; }
    std::uint32_t& at(std::uint32_t row, std::uint32_t col) { return cells_[row * order_ + col]; }

    std::vector<std::vector<std::uint32_t>> rows() const;

    bool operator==(const Square&) const = default;

private:
    std::uint32_t order_ = 0;
    std::uint32_t index_ = 0;
    std::vector<std::uint32_t> cells_;
};

struct MolsSet {
    std::uint32_t q = 0;
    std::vector<Square> squares; // squares[m] is L^(m)
};

/// Squares L^(m)[i][j] = index(e_i + e_m e_j) for m >= 1 and L^(0)[i][j] = i,
/// each with its zeroth column normalized to 0, 1, ..., q-1.
MolsSet generate_mols(const gf::Field& f);

/// Permutes rows so column 0 reads 0..q-1. Requires column 0 to be a permutation.
void normalize_zeroth_column(Square& s);

bool check_latin(const Square& s);

/// Throws Error(OrderMismatch) when the orders differ.
bool check_orthogonal(const Square& a, const Square& b);

/// True iff every pair of distinct squares agrees exactly on column 0.
bool check_zeroth_column_only_overlap(const MolsSet& set);

} // namespace frc
