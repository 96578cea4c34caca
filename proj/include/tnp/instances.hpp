#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tnp/graph.hpp"

namespace tnp {

/// A generated graph with whatever optimal values are known for it.
struct LabeledInstance {
    Graph graph;
    std::string family;
    std::map<std::string, long long> params;
    std::optional<int> packing;  // exact \bar gamma_R
    std::optional<int> roman;    // exact gamma_R
    std::optional<int> roman_lower_bound;
};

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
/// Parts occupy contiguous id ranges in the given order.
Graph complete_multipartite(std::span<const int> parts);
/// K_{1,leaves}, centre 0.
Graph star(int leaves);

/// Independent set 0..n-1 plus a clique with one vertex per 3-subset of it
/// (lexicographic order), each adjacent to exactly its triple.
LabeledInstance gap_family(int n);

/// Disjoint union of k copies of C_4.
LabeledInstance k_c4(int k);

/// True iff every 3-subset of V(g) lies in some closed neighbourhood, i.e. no
/// packing has three vertices.
bool no_three_packing(const Graph& g);

struct Reduction {
    Graph graph;
    /// 3 |E(G)|
    int offset = 0;
    std::size_t original_vertices = 0;
};

/// Gadget ids of edge number e (in Graph::edges() order): block of five
/// starting at n + 5e, holding v_e^1 .. v_e^5.
inline Vertex gadget_vertex(std::size_t original_vertices, std::size_t edge_index, int which) {
    return static_cast<Vertex>(original_vertices + 5 * edge_index + static_cast<std::size_t>(which - 1));
}

/// Replaces every edge uv of g by v^1 adjacent to u, v, v^2, v^3, with v^3
/// carrying the leaves v^4, v^5. g has an independent set of size k iff the
/// result has a two-neighbour packing of size k + 3|E(g)|.
Reduction reduce_independent_set(const Graph& g);

/// Maps a packing of the reduction graph back to an independent set of g of
/// size >= |packing| - 3|E(g)|. Throws InputError if `packing` is not a
/// packing of reduce_independent_set(g).
VertexSet extract_independent_set(const Graph& g, const VertexSet& packing);

/// Engine behind every seeded generator: std::mt19937_64 with explicit,
/// library-independent mappings to integers and reals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [0, 1) from the top 53 bits.
    double unit();

private:
    std::mt19937_64 engine_;
};

/// Uniform labelled tree via a random Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// G(n, p): pairs (i, j), i < j, in lexicographic order, each kept iff unit() < p.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace tnp
