#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tnp {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Dense subset of {0, ..., universe-1} with a cached cardinality.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Vertex v) const;
    /// Returns true if v was not present before.
    bool insert(Vertex v);
    /// Returns true if v was present before.
    bool erase(Vertex v);

    /// Members in increasing order.
    std::vector<Vertex> members() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    void check(Vertex v) const;

    std::size_t universe_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency.
///
/// Immutable after construction; the mutating operations below return new
/// graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    /// Throws InputError on self-loops, duplicate edges or ids >= n.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t n() const noexcept { return adjacency_.size(); }
    std::size_t m() const noexcept { return m_; }

    std::span<const Vertex> neighbours(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbours(v).size(); }
    std::size_t max_degree() const noexcept;
    bool adjacent(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < n(); }

    /// All edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    void require_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t m_ = 0;
};

/// Subtree-rooted view of a graph that is a tree.
class RootedTree {
public:
    /// Throws PreconditionError if g is not a tree, InputError on a bad root.
    RootedTree(Graph g, Vertex root);

    const Graph& graph() const noexcept { return graph_; }
    std::size_t n() const noexcept { return graph_.n(); }
    Vertex root() const noexcept { return root_; }
    /// Parent of v, or -1 for the root.
    Vertex parent(Vertex v) const { return parent_.at(static_cast<std::size_t>(v)); }
    std::span<const Vertex> children(Vertex v) const { return children_.at(static_cast<std::size_t>(v)); }
    /// Children before parents; the root is last.
    std::span<const Vertex> post_order() const noexcept { return post_order_; }
    /// True if u lies in the subtree rooted at v.
    bool in_subtree(Vertex u, Vertex v) const;

private:
    Graph graph_;
    Vertex root_;
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<Vertex> post_order_;
    std::vector<std::size_t> enter_;
    std::vector<std::size_t> exit_;
};

struct InducedSubgraph {
    Graph graph;
    /// original id of each new vertex
    std::vector<Vertex> to_original;
};

struct DisjointUnion {
    Graph graph;
    /// first vertex id of each component; offsets.size() == parts + 1
    std::vector<Vertex> offsets;
};

VertexSet closed_neighbourhood(const Graph& g, Vertex v);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

Graph delete_edge(const Graph& g, Vertex u, Vertex v);

Graph add_edge(const Graph& g, Vertex u, Vertex v);

DisjointUnion disjoint_union(std::span<const Graph> parts);

bool is_connected(const Graph& g);

bool is_forest(const Graph& g);

inline bool is_tree(const Graph& g) { return g.n() > 0 && g.m() + 1 == g.n() && is_connected(g); }

/// Connected component index per vertex, numbered by smallest member.
std::vector<std::size_t> connected_components(const Graph& g);

/// PACE `.gr`: `p tw n m` header, 1-indexed `u v` edge lines, `c` comments.
Graph read_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

}  // namespace tnp
