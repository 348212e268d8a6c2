/**************************************************************************
 * verify.cpp
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

#include "frc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "frc/error.hpp"

namespace frc {

BoundPair moore_bounds(std::uint32_t k, std::uint32_t l) {
    if (k < 2 || l < k) {
        throw Error(Errc::InvalidDegrees,
                    "need l >= k >= 2, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
    }
    const std::uint64_t kk = k, ll = l;
    BoundPair b;
    b.v_min = 1 + ll * (kk - 1);
    // l + l(l-1)(k-1)/k over the common denominator k
    const std::uint64_t num = ll * kk + ll * (ll - 1) * (kk - 1);
    const std::uint64_t g = std::gcd(num, kk);
    b.u_min = Rational{num / g, kk / g};
    return b;
}

GirthResult girth_at_least_six(const BipartiteDesign& d) {
    const std::size_t u = d.u();
    std::vector<std::uint32_t> count(u, 0);
    std::vector<VertexId> first_y(u, 0), second_y(u, 0);
    std::vector<VertexId> touched;
    for (VertexId x = 0; x < u; ++x) {
        touched.clear();
        for (const auto y : d.x_adj[x]) {
            for (const auto other : d.y_adj[y]) {
                if (other <= x) {
                    continue;
                }
                if (count[other] == 0) {
                    touched.push_back(other);
                    first_y[other] = y;
                } else if (count[other] == 1) {
                    second_y[other] = y;
                }
                ++count[other];
            }
        }
        std::optional<VertexId> hit;
        for (const auto other : touched) {
            if (count[other] >= 2 && (!hit || other < *hit)) {
                hit = other;
            }
        }
        GirthResult result;
        if (hit) {
            result = GirthResult{false, FourCycle{x, first_y[*hit], *hit, second_y[*hit]}};
        }
        for (const auto other : touched) {
            count[other] = 0;
        }
        if (!result.ok) {
            return result;
        }
    }
    return {};
}

SteinerResult check_steiner_exact(const BlockCollection& bc) {
    const std::size_t v = bc.num_elements;
    std::vector<std::vector<std::size_t>> blocks_of(v);
    for (std::size_t i = 0; i < bc.blocks.size(); ++i) {
        for (const auto e : bc.blocks[i]) {
            if (e >= v) {
                throw Error(Errc::IndexOutOfRange,
                            "block " + std::to_string(i) + " names element " + std::to_string(e));
            }
            blocks_of[e].push_back(i);
        }
    }

    std::vector<std::uint64_t> count(v, 0);
    std::vector<VertexId> touched;
    for (VertexId a = 0; a < v; ++a) {
        touched.clear();
        for (const auto i : blocks_of[a]) {
            for (const auto b : bc.blocks[i]) {
                if (b <= a) {
                    continue;
                }
                if (count[b]++ == 0) {
                    touched.push_back(b);
                }
            }
        }
        const bool exact = touched.size() == v - 1 - a &&
                           std::all_of(touched.begin(), touched.end(), [&](VertexId b) { return count[b] == 1; });
        SteinerResult result;
        if (!exact) {
            for (VertexId b = a + 1; b < v; ++b) {
                if (count[b] != 1) {
                    result = SteinerResult{false, PairCount{a, b, count[b]}};
                    break;
                }
            }
        }
        for (const auto b : touched) {
            count[b] = 0;
        }
        if (!result.ok) {
            return result;
        }
    }
    return {};
}

namespace {

std::optional<DegreeViolation> check_degrees(const std::vector<std::vector<VertexId>>& adj, std::size_t expected,
                                             Side side) {
    for (std::size_t x = 0; x < adj.size(); ++x) {
        std::vector<VertexId> nb = adj[x];
        std::sort(nb.begin(), nb.end());
        const auto distinct = static_cast<std::size_t>(std::unique(nb.begin(), nb.end()) - nb.begin());
        if (distinct != expected || adj[x].size() != expected) {
            return DegreeViolation{side, static_cast<VertexId>(x), distinct, expected};
        }
    }
    return std::nullopt;
}

} // namespace

VerificationReport verify_design(const BipartiteDesign& d) {
    VerificationReport r;

    r.degree_witness = check_degrees(d.x_adj, d.k, Side::X);
    if (!r.degree_witness) {
        r.degree_witness = check_degrees(d.y_adj, d.l, Side::Y);
    }
    r.degrees_ok = !r.degree_witness;

    const auto girth = girth_at_least_six(d);
    r.girth_ok = girth.ok;
    r.girth_witness = girth.witness;

    const auto steiner = check_steiner_exact(blocks_from_graph(d, Side::X));
    r.steiner_exact = steiner.ok;
    r.steiner_witness = steiner.witness;

    BoundsMismatch mismatch{d.v(), d.u(), std::nullopt};
    try {
        const auto b = moore_bounds(d.k, d.l);
        mismatch.bounds = b;
        r.bounds_tight = d.v() == b.v_min && b.u_min.integral() && d.u() == b.u_min.num;
    } catch (const Error&) {
        r.bounds_tight = false;
    }
    if (!r.bounds_tight) {
        r.bounds_witness = mismatch;
    }
    return r;
}

namespace {

class IsoSearch {
public:
    IsoSearch(const BipartiteDesign& a, const BipartiteDesign& b)
        : ny_(a.v()), n_(a.v() + a.u()), adj_a_(build(a)), adj_b_(build(b)), nb_a_(lists(a)), nb_b_(lists(b)) {
        order_.reserve(n_);
        std::vector<char> seen(n_, 0);
        for (std::size_t s = 0; s < n_; ++s) {
            if (seen[s]) {
                continue;
            }
            seen[s] = 1;
            order_.push_back(s);
            for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
                for (const auto w : nb_a_[order_[head]]) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        order_.push_back(w);
                    }
                }
            }
        }
        map_.assign(n_, kUnset);
        used_.assign(n_, 0);
        position_.assign(n_, 0);
        for (std::size_t t = 0; t < n_; ++t) {
            position_[order_[t]] = t;
        }
    }

    bool run() { return extend(0); }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    std::vector<char> build(const BipartiteDesign& d) const {
        std::vector<char> m(n_ * n_, 0);
        for (std::size_t x = 0; x < d.u(); ++x) {
            for (const auto y : d.x_adj[x]) {
                m[(ny_ + x) * n_ + y] = 1;
                m[y * n_ + ny_ + x] = 1;
            }
        }
        return m;
    }

    std::vector<std::vector<std::size_t>> lists(const BipartiteDesign& d) const {
        std::vector<std::vector<std::size_t>> out(n_);
        for (std::size_t x = 0; x < d.u(); ++x) {
            for (const auto y : d.x_adj[x]) {
                out[ny_ + x].push_back(y);
                out[y].push_back(ny_ + x);
            }
        }
        return out;
    }

    bool same_side(std::size_t s, std::size_t t) const { return (s < ny_) == (t < ny_); }

    bool consistent(std::size_t va, std::size_t vb, std::size_t depth) const {
        if (!same_side(va, vb) || nb_a_[va].size() != nb_b_[vb].size()) {
            return false;
        }
        for (std::size_t t = 0; t < depth; ++t) {
            const auto w = order_[t];
            if (adj_a_[va * n_ + w] != adj_b_[vb * n_ + map_[w]]) {
                return false;
            }
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == n_) {
            return true;
        }
        const auto va = order_[depth];
        std::optional<std::size_t> anchor;
        for (const auto w : nb_a_[va]) {
            if (position_[w] < depth) {
                anchor = w;
                break;
            }
        }
        auto attempt = [&](std::size_t vb) {
            if (used_[vb] || !consistent(va, vb, depth)) {
                return false;
            }
            map_[va] = vb;
            used_[vb] = 1;
            if (extend(depth + 1)) {
                return true;
            }
            used_[vb] = 0;
            map_[va] = kUnset;
            return false;
        };
        if (anchor) {
            for (const auto vb : nb_b_[map_[*anchor]]) {
                if (attempt(vb)) {
                    return true;
                }
            }
            return false;
        }
        for (std::size_t vb = 0; vb < n_; ++vb) {
            if (attempt(vb)) {
                return true;
            }
        }
        return false;
    }

    std::size_t ny_;
    std::size_t n_;
    std::vector<char> adj_a_, adj_b_;
    std::vector<std::vector<std::size_t>> nb_a_, nb_b_;
    std::vector<std::size_t> order_, map_, position_;
    std::vector<char> used_;
};

std::vector<std::size_t> degree_profile(const std::vector<std::vector<VertexId>>& adj) {
    std::vector<std::size_t> out;
    out.reserve(adj.size());
    for (const auto& nb : adj) {
        out.push_back(nb.size());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool are_isomorphic(const BipartiteDesign& a, const BipartiteDesign& b) {
    if (a.u() != b.u() || a.v() != b.v()) {
        return false;
    }
    if (degree_profile(a.x_adj) != degree_profile(b.x_adj) || degree_profile(a.y_adj) != degree_profile(b.y_adj)) {
        return false;
    }
    return IsoSearch(a, b).run();
}

} // namespace frc
