/**************************************************************************
 * verify.hpp
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

#include "frc/cage.hpp"

namespace frc {

/// Non-negative fraction kept in lowest terms.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    bool integral() const noexcept { return den == 1; }
    std::uint64_t ceil() const noexcept { return (num + den - 1) / den; }
    bool operator==(const Rational&) const = default;
};

/// Smallest |Y| and |X| of a girth-6 bipartite graph with deg(X) = k, deg(Y) = l.
struct BoundPair {
    std::uint64_t v_min = 0;
    Rational u_min;
};

/// Throws Error(InvalidDegrees) unless l >= k >= 2.
BoundPair moore_bounds(std::uint32_t k, std::uint32_t l);

/// x_a ~ y_a ~ x_b ~ y_b ~ x_a.
struct FourCycle {
    VertexId x_a = 0;
    VertexId y_a = 0;
    VertexId x_b = 0;
    VertexId y_b = 0;
};

struct GirthResult {
    bool ok = true;
    std::optional<FourCycle> witness;
};

/// Common-neighbour counting; the witness is the first offending X pair in id order.
GirthResult girth_at_least_six(const BipartiteDesign& d);

struct PairCount {
    VertexId a = 0;
    VertexId b = 0;
    std::uint64_t count = 0;
};

struct SteinerResult {
    bool ok = true;
    std::optional<PairCount> witness;
};

/// Every element pair must lie in exactly one block; the witness is the first
/// pair (a < b, lexicographic) whose count differs from 1.
SteinerResult check_steiner_exact(const BlockCollection& bc);

struct DegreeViolation {
    Side side = Side::X;
    VertexId vertex = 0;
    std::size_t degree = 0;
    std::size_t expected = 0;
};

struct BoundsMismatch {
    std::uint64_t v = 0;
    std::uint64_t u = 0;
    std::optional<BoundPair> bounds; // empty when (k, l) admits no bound
};

struct VerificationReport {
    bool degrees_ok = true;
    bool girth_ok = true;
    bool steiner_exact = true;
    bool bounds_tight = true;
    std::optional<DegreeViolation> degree_witness;
    std::optional<FourCycle> girth_witness;
    std::optional<PairCount> steiner_witness;
    std::optional<BoundsMismatch> bounds_witness;

    bool all_ok() const noexcept { return degrees_ok && girth_ok && steiner_exact && bounds_tight; }
};

/// Runs every check; failures land in the report rather than being thrown.
VerificationReport verify_design(const BipartiteDesign& d);

/// Side-preserving isomorphism test by backtracking in breadth-first order.
/// Intended for small graphs (a few hundred vertices at most).
bool are_isomorphic(const BipartiteDesign& a, const BipartiteDesign& b);

} // namespace frc
