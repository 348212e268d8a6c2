/**************************************************************************
 * gf.hpp
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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace frc::gf {

/// Largest field order accepted by Field. Well beyond anything the cage
/// construction can use, since the squares alone need q^3 cells.
inline constexpr std::uint32_t kMaxOrder = 1u << 16;

/**
 * A field element in polynomial basis, packed as the integer
 * c_0 + c_1 p + ... + c_{m-1} p^{m-1}. The packing doubles as the
 * canonical enumeration order used when searching for a generator.
 */
struct Element {
    std::uint32_t code = 0;
    auto operator<=>(const Element&) const = default;
};

struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
};

/// Returns p, m with q = p^m, or nullopt when q < 2 or q has two distinct prime factors.
std::optional<PrimePower> factor_prime_power(std::uint64_t q);

/// Trial division by every monic polynomial of degree 1..deg/2.
/// Coefficients are low-order first; the leading coefficient must be nonzero.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// GF(p^m) with a pinned modulus and generator. Immutable once built.
class Field {
public:
    /// Throws Error(NotPrimePower) unless q = p^m, or Error(ResourceLimit) above kMaxOrder.
    explicit Field(std::uint64_t q);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }

    /// Monic modulus, low-order coefficient first (size m + 1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Element alpha() const noexcept { return alpha_; }

    /// e_0 = 0, e_1 = 1, e_i = alpha^(i-1).
    std::span<const Element> elements() const noexcept { return elements_; }
    std::uint32_t index_of(Element a) const { return index_of_.at(a.code); }

    bool contains(Element a) const noexcept { return a.code < q_; }
    std::vector<std::uint32_t> coefficients(Element a) const;
    Element from_coefficients(std::span<const std::uint32_t> coeffs) const;

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element pow(Element a, std::uint64_t e) const;

    /// Smallest e > 0 with a^e = 1; 0 for the zero element.
    std::uint32_t multiplicative_order(Element a) const;

private:
    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pow_p_; // p^0 .. p^(m-1)
    Element alpha_{};
    std::vector<Element> elements_;
    std::vector<std::uint32_t> index_of_;

};

/// Smallest nonzero element (by packed code) of multiplicative order q - 1.
Element find_primitive_element(const Field& f);

} // namespace frc::gf
