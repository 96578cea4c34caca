#include "tnp/instances.hpp"

#include <algorithm>
#include <queue>

#include "tnp/errors.hpp"
#include "tnp/oracles.hpp"

namespace tnp {

Graph path(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph complete(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph empty(int n) {
    if (n < 1) throw InputError("empty graph needs n >= 1");
    return Graph(static_cast<std::size_t>(n));
}

Graph complete_multipartite(std::span<const int> parts) {
    if (parts.empty()) throw InputError("multipartite graph needs at least one part");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw InputError("part sizes must be positive");
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < part_of.size(); ++i)
        for (std::size_t j = i + 1; j < part_of.size(); ++j)
            if (part_of[i] != part_of[j]) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(part_of.size(), edges);
}

Graph star(int leaves) {
    if (leaves < 1) throw InputError("star needs at least one leaf");
    const int parts[] = {1, leaves};
    return complete_multipartite(parts);
}

LabeledInstance gap_family(int n) {
    if (n < 3) throw InputError("gap family needs n >= 3");
    std::vector<Edge> edges;
    Vertex next = n;
    std::vector<Vertex> clique;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                edges.emplace_back(a, next);
                edges.emplace_back(b, next);
                edges.emplace_back(c, next);
                clique.push_back(next++);
            }
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
    LabeledInstance out;
    out.graph = Graph(static_cast<std::size_t>(next), edges);
    out.family = "gap";
    out.params["n"] = n;
    out.packing = 2;
    out.roman_lower_bound = (2 * n + 2) / 3;
    return out;
}

LabeledInstance k_c4(int k) {
    if (k < 1) throw InputError("k_c4 needs k >= 1");
    std::vector<Graph> copies(static_cast<std::size_t>(k), cycle(4));
    LabeledInstance out;
    out.graph = disjoint_union(copies).graph;
    out.family = "kc4";
    out.params["k"] = k;
    out.packing = 2 * k;
    out.roman = 3 * k;
    return out;
}

bool no_three_packing(const Graph& g) {
    const std::size_t n = g.n();
    const std::size_t words = (n + 63) / 64;
    // closed[v] as a bitset; a triple fits in some N[x] iff the closed
    // neighbourhoods of its members share a vertex
    std::vector<std::uint64_t> closed(n * words, 0);
    auto set_bit = [&](std::size_t v, std::size_t u) { closed[v * words + u / 64] |= std::uint64_t{1} << (u % 64); };
    for (std::size_t v = 0; v < n; ++v) {
        set_bit(v, v);
        for (Vertex u : g.neighbours(static_cast<Vertex>(v))) set_bit(v, static_cast<std::size_t>(u));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                bool shared = false;
                for (std::size_t w = 0; w < words && !shared; ++w)
                    shared = (closed[a * words + w] & closed[b * words + w] & closed[c * words + w]) != 0;
                if (!shared) return false;
            }
    return true;
}

Reduction reduce_independent_set(const Graph& g) {
    const std::size_t n = g.n();
    const auto edges = g.edges();
    std::vector<Edge> out_edges;
    out_edges.reserve(6 * edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        auto x = [&](int i) { return gadget_vertex(n, e, i); };
        out_edges.insert(out_edges.end(),
                         {{u, x(1)}, {v, x(1)}, {x(1), x(2)}, {x(1), x(3)}, {x(3), x(4)}, {x(3), x(5)}});
    }
    Reduction r;
    r.graph = Graph(n + 5 * edges.size(), out_edges);
    r.offset = 3 * static_cast<int>(edges.size());
    r.original_vertices = n;
    return r;
}

VertexSet extract_independent_set(const Graph& g, const VertexSet& packing) {
    const Reduction r = reduce_independent_set(g);
    if (!is_two_neighbour_packing(r.graph, packing))
        throw InputError("extract_independent_set: not a two-neighbour packing of the reduction graph");
    const std::size_t n = g.n();
    const auto edges = g.edges();
    VertexSet a = packing;
    // N[v^3] = {v^1, v^3, v^4, v^5} holds at most two chosen vertices, so
    // trading v^1, v^3 for the two leaves never shrinks the packing
    for (std::size_t e = 0; e < edges.size(); ++e) {
        a.erase(gadget_vertex(n, e, 1));
        a.erase(gadget_vertex(n, e, 3));
        a.insert(gadget_vertex(n, e, 4));
        a.insert(gadget_vertex(n, e, 5));
    }
    // both ends of an edge chosen: v^2 is then free, swap it for one end
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (a.contains(u) && a.contains(v)) {
            a.erase(u);
            a.insert(gadget_vertex(n, e, 2));
        }
    }
    if (!is_two_neighbour_packing(r.graph, a) || a.size() < packing.size())
        throw std::logic_error("extract_independent_set: normalisation failed");
    VertexSet out(n);
    for (std::size_t v = 0; v < n; ++v)
        if (a.contains(static_cast<Vertex>(v))) out.insert(static_cast<Vertex>(v));
    if (!is_independent_set(g, out)) throw std::logic_error("extract_independent_set: result not independent");
    return out;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("Rng::below needs a positive bound");
    // largest multiple of bound representable, minus one
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw InputError("random_tree needs n >= 1");
    if (n == 1) return Graph(1);
    if (n == 2) {
        const Edge e[] = {{0, 1}};
        return Graph(2, e);
    }
    Rng rng(seed);
    std::vector<Vertex> prufer(static_cast<std::size_t>(n - 2));
    for (auto& x : prufer) x = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (Vertex x : prufer) ++degree[x];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    for (Vertex x : prufer) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.push(x);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InputError("random_graph needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_graph needs 0 <= p <= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) edges.emplace_back(i, j);
    return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace tnp
