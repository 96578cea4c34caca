#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "tnp/graph.hpp"
#include "tnp/oracles.hpp"
#include "tnp/tree_decomposition.hpp"

namespace tnp::dp {

/// Per-vertex state of a bag vertex: whether it is in the partial packing B
/// and how many packing vertices its closed neighbourhood holds so far.
/// A vertex in B counts itself, so only five combinations are feasible.
struct VertexState {
    bool in_packing = false;
    int count = 0;  // 0..2

    /// Digit in the radix-5 table index: 0..2 = (out, count), 3..4 = (in, count)
    int digit() const noexcept { return in_packing ? count + 2 : count; }
    static VertexState from_digit(int d) noexcept { return d >= 3 ? VertexState{true, d - 2} : VertexState{false, d}; }
    bool feasible() const noexcept { return count >= (in_packing ? 1 : 0) && count <= 2; }
};

inline constexpr int kStatesPerVertex = 5;
inline constexpr std::int32_t kInfeasible = std::numeric_limits<std::int32_t>::min() / 4;

/// Mixed-radix index of a bag state; `states[i]` belongs to the i-th smallest
/// bag vertex. Throws InputError for an infeasible vertex state.
std::uint32_t encode(std::span<const VertexState> states);
std::vector<VertexState> decode(std::uint32_t index, std::size_t bag_size);

/// Best partial packing per bag state of one node.
///
/// `value[s]` is the size of the largest packing A of the subgraph induced by
/// the vertices in this node's subtree with A ∩ bag = B(s) and
/// |N[v] ∩ A| = count_v(s) for every bag vertex, or kInfeasible.
/// `choice[s]` is the child state the optimum came from (for joins: the left
/// child state; the right one is implied).
struct DpTable {
    std::vector<Vertex> bag;
    std::vector<std::int32_t> value;
    std::vector<std::uint32_t> choice;

    std::int32_t at(std::span<const VertexState> states) const { return value.at(encode(states)); }
};

DpTable dp_leaf(const NiceNode& node);
DpTable dp_forget(const NiceNode& node, const DpTable& child);
DpTable dp_introduce(const Graph& g, const NiceNode& node, const DpTable& child);
DpTable dp_join(const Graph& g, const NiceNode& node, const DpTable& left, const DpTable& right);

/// All node tables of one bottom-up pass.
struct DpRun {
    std::vector<DpTable> tables;
    std::uint64_t entries = 0;
};

/// Fills every table. Throws InputError if ntd is not a valid nice
/// decomposition of g.
DpRun run(const Graph& g, const NiceTreeDecomposition& ntd);

/// Packing realising entry `state` of `node` (restricted to that node's
/// subtree), rebuilt from the stored choices. Requires a finite entry.
VertexSet trace(const Graph& g, const NiceTreeDecomposition& ntd, const DpRun& run, std::size_t node,
                std::uint32_t state);

/// Maximum two-neighbour packing through the decomposition. The witness is
/// checked before returning; a failed check throws std::logic_error.
SolveResult solve(const Graph& g, const NiceTreeDecomposition& ntd);

/// Convenience: forest -> exact width-1 decomposition, otherwise min-fill.
SolveResult solve(const Graph& g);

}  // namespace tnp::dp
