#pragma once

// Plain exhaustive oracles, deliberately independent of the library solvers.

#include <cstdint>
#include <vector>

#include "tnp/graph.hpp"
#include "tnp/instances.hpp"
#include "tnp/oracles.hpp"

namespace support {

using tnp::Graph;
using tnp::Vertex;

inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
    std::vector<std::uint32_t> m(g.n(), 0);
    for (std::size_t v = 0; v < g.n(); ++v) {
        m[v] |= 1u << v;
        for (Vertex u : g.neighbours(static_cast<Vertex>(v))) m[v] |= 1u << u;
    }
    return m;
}

// all 2^n subsets
inline int packing_number(const Graph& g) {
    const auto m = closed_masks(g);
    const std::size_t n = g.n();
    int best = 0;
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) ok = __builtin_popcount(m[v] & a) <= 2;
        if (ok) best = std::max(best, __builtin_popcount(a));
    }
    return best;
}

// all (V_1, V_2) pairs as disjoint masks; V_0 must be dominated by V_2
inline int roman_number(const Graph& g) {
    const auto m = closed_masks(g);
    const std::uint32_t full = g.n() == 32 ? ~0u : (1u << g.n()) - 1;
    int best = 2 * static_cast<int>(g.n());
    for (std::uint32_t two = 0; two <= full; ++two) {
        std::uint32_t dominated = 0;
        for (std::size_t v = 0; v < g.n(); ++v)
            if (two >> v & 1) dominated |= m[v];
        // cheapest completion labels every undominated vertex 1
        const int w = 2 * __builtin_popcount(two) + __builtin_popcount(full & ~dominated);
        best = std::min(best, w);
        if (two == full) break;
    }
    return best;
}

inline int domination_number(const Graph& g) {
    const auto m = closed_masks(g);
    const std::uint32_t full = (1u << g.n()) - 1;
    int best = static_cast<int>(g.n());
    for (std::uint32_t d = 0; d <= full; ++d) {
        std::uint32_t dom = 0;
        for (std::size_t v = 0; v < g.n(); ++v)
            if (d >> v & 1) dom |= m[v];
        if (dom == full) best = std::min(best, __builtin_popcount(d));
        if (d == full) break;
    }
    return best;
}

inline int independence_number(const Graph& g) {
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << g.n()); ++s) {
        bool ok = true;
        for (auto [u, v] : g.edges()) ok = ok && !((s >> u & 1) && (s >> v & 1));
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

// Seeded mixed suite: random graphs of assorted density plus random trees.
inline std::vector<Graph> random_suite(int count, int max_n, std::uint64_t seed) {
    tnp::Rng rng(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
        const std::uint64_t s = rng.below(1u << 30);
        if (i % 4 == 3)
            out.push_back(tnp::random_tree(n, s));
        else
            out.push_back(tnp::random_graph(n, 0.15 + 0.2 * (i % 4), s));
    }
    return out;
}

}  // namespace support
