#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tnp/graph.hpp"

namespace tnp {

/// Bags over V(G) attached to the nodes of a tree.
struct TreeDecomposition {
    /// Tree over node ids 0..bags.size()-1.
    Graph tree;
    /// Sorted vertex lists, one per node.
    std::vector<std::vector<Vertex>> bags;

    /// max bag size - 1; -1 for a decomposition without nodes.
    int width() const;
};

struct TdViolation {
    enum class Condition { VertexCoverage = 1, EdgeCoverage = 2, Connectivity = 3, Structure = 4 };
    Condition condition;
    std::string detail;
};

/// Checks the three decomposition conditions (vertex coverage, edge coverage,
/// connected occurrence) plus basic well-formedness (tree shape, ids in range).
std::vector<TdViolation> validate(const Graph& g, const TreeDecomposition& td);

/// Width <= 1 decomposition of a forest. Throws PreconditionError on cycles.
TreeDecomposition decompose_tree(const Graph& g);

/// Min-fill elimination ordering (min-degree, then lowest id, break ties).
/// Always valid; the width is an upper bound on the tree-width.
TreeDecomposition decompose_heuristic(const Graph& g);

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NodeKind kind;
    /// sorted
    std::vector<Vertex> bag;
    /// leaf vertex, or the vertex introduced / forgotten; -1 for joins
    Vertex vertex = -1;
    std::vector<std::size_t> children;
};

/// Rooted decomposition made of Leaf / Introduce / Forget / Join nodes.
/// Children always have smaller ids than their parent, so a plain ascending
/// scan is a valid bottom-up order.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    std::size_t root = 0;

    int width() const;
    /// The same bags viewed as an ordinary decomposition.
    TreeDecomposition as_tree_decomposition() const;
};

/// Decomposition conditions plus the per-kind structure rules.
std::vector<TdViolation> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

/// Converts a valid decomposition into a nice one of the same width.
///
/// The node tree is rooted at a maximum-degree node, bag differences along
/// each edge become Forget-then-Introduce chains, nodes with several children
/// become Join cascades, and a Forget chain above the old root leaves a
/// single-vertex root bag. At most 4 (width+1) |V(T)| + |V(G)| + 1 nodes.
/// Throws InputError if td is not valid for g.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g);

/// PACE `.td`: `s td N maxbag n`, `b i v...` bag lines, `i j` tree edges.
/// Throws ParseError (with line) on malformed text or a decomposition that
/// is not valid for g.
TreeDecomposition read_td(std::string_view text, const Graph& g);
TreeDecomposition read_td_file(const std::string& path, const Graph& g);
std::string write_td(const TreeDecomposition& td, std::size_t graph_vertices);

}  // namespace tnp
