/**************************************************************************
 * gf.cpp
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

#include "frc/gf.hpp"

#include <string>

#include "frc/error.hpp"

namespace frc::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime, so a^(p-2) is the inverse.
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
        if (e & 1u) {
            result = result * base % p;
        }
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b must be trimmed and nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inverse_mod(b.back(), p);
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t factor = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

} // namespace

std::optional<PrimePower> factor_prime_power(std::uint64_t q) {
    if (q < 2) {
        return std::nullopt;
    }
    const auto primes = prime_divisors(q);
    if (primes.size() != 1) {
        return std::nullopt;
    }
    PrimePower pp{static_cast<std::uint32_t>(primes.front()), 0};
    for (std::uint64_t r = q; r > 1; r /= primes.front()) {
        ++pp.m;
    }
    return pp;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2 || !is_prime(p)) {
        return false;
    }
    const std::size_t deg = f.size() - 1;
    if (deg == 1) {
        return true;
    }
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            count *= p;
        }
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i, c /= p) {
                g[i] = static_cast<std::uint32_t>(c % p);
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

Field::Field(std::uint64_t q) {
    const auto pp = factor_prime_power(q);
    if (!pp) {
        throw Error(Errc::NotPrimePower, "field order " + std::to_string(q) + " is not a prime power");
    }
    if (q > kMaxOrder) {
        throw Error(Errc::ResourceLimit, "field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxOrder));
    }
    p_ = pp->p;
    m_ = pp->m;
    q_ = static_cast<std::uint32_t>(q);

    pow_p_.resize(m_);
    std::uint32_t w = 1;
    for (std::uint32_t i = 0; i < m_; ++i, w *= p_) {
        pow_p_[i] = w;
    }

    // Lowest monic irreducible, ordered by the packed code of its lower coefficients.
    for (std::uint32_t code = 0; code < q_; ++code) {
        Poly cand = coefficients(Element{code});
        cand.push_back(1);
        if (is_irreducible(cand, p_)) {
            modulus_ = std::move(cand);
            break;
        }
    }

    alpha_ = find_primitive_element(*this);

    elements_.reserve(q_);
    elements_.push_back(zero());
    Element power = one();
    for (std::uint32_t i = 1; i < q_; ++i) {
        elements_.push_back(power);
        power = mul(power, alpha_);
    }
    index_of_.assign(q_, q_);
    for (std::uint32_t i = 0; i < q_; ++i) {
        index_of_[elements_[i].code] = i;
    }
}

std::vector<std::uint32_t> Field::coefficients(Element a) const {
    std::vector<std::uint32_t> out(m_, 0);
    std::uint32_t c = a.code;
    for (std::uint32_t i = 0; i < m_; ++i, c /= p_) {
        out[i] = c % p_;
    }
    return out;
}

Element Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < coeffs.size() && i < m_; ++i) {
        code += (coeffs[i] % p_) * pow_p_[i];
    }
    return Element{code};
}

Element Field::add(Element a, Element b) const {
    std::uint32_t code = 0;
    std::uint32_t x = a.code, y = b.code;
    for (std::uint32_t i = 0; i < m_; ++i, x /= p_, y /= p_) {
        code += ((x % p_ + y % p_) % p_) * pow_p_[i];
    }
    return Element{code};
}

Element Field::neg(Element a) const {
    std::uint32_t code = 0;
    std::uint32_t x = a.code;
    for (std::uint32_t i = 0; i < m_; ++i, x /= p_) {
        code += ((p_ - x % p_) % p_) * pow_p_[i];
    }
    return Element{code};
}

Element Field::mul(Element a, Element b) const {
    if (a.code == 0 || b.code == 0) {
        return zero();
    }
    if (m_ == 1) {
        return Element{static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
    }
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    Poly prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        for (std::uint32_t j = 0; j < m_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_);
        }
    }
    return from_coefficients(poly_mod(std::move(prod), modulus_, p_));
}

Element Field::pow(Element a, std::uint64_t e) const {
    Element result = one();
    for (Element base = a; e != 0; e >>= 1) {
        if (e & 1u) {
            result = mul(result, base);
        }
        base = mul(base, base);
    }
    return result;
}

std::uint32_t Field::multiplicative_order(Element a) const {
    if (a.code == 0) {
        return 0;
    }
    Element x = a;
    std::uint32_t e = 1;
    while (x != one()) {
        x = mul(x, a);
        ++e;
    }
    return e;
}

Element find_primitive_element(const Field& f) {
    const std::uint32_t group = f.order() - 1;
    const auto divisors = prime_divisors(group);
    for (std::uint32_t code = 1; code < f.order(); ++code) {
        const Element a{code};
        bool generates = true;
        for (const auto r : divisors) {
            if (f.pow(a, group / r) == f.one()) {
                generates = false;
                break;
            }
        }
        if (generates) {
            return a;
        }
    }
    // Unreachable for a genuine field: the multiplicative group is cyclic.
    throw Error(Errc::NotPrimePower, "no generator found");
}

} // namespace frc::gf
