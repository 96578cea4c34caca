#include "tnp/treewidth_dp.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "tnp/errors.hpp"

namespace tnp::dp {

namespace {

constexpr std::size_t kMaxBag = 9;

constexpr std::array<std::uint32_t, kMaxBag + 2> kPow = [] {
    std::array<std::uint32_t, kMaxBag + 2> p{};
    p[0] = 1;
    for (std::size_t i = 1; i < p.size(); ++i) p[i] = p[i - 1] * kStatesPerVertex;
    return p;
}();

constexpr bool in_packing(int digit) { return digit >= 3; }
constexpr int count_of(int digit) { return digit >= 3 ? digit - 2 : digit; }
constexpr int make_digit(bool in, int count) { return in ? count + 2 : count; }

std::uint32_t table_size(std::size_t bag_size) {
    if (bag_size > kMaxBag)
        throw PreconditionError("bag of size " + std::to_string(bag_size) + " exceeds the DP limit of " +
                                std::to_string(kMaxBag));
    return kPow[bag_size];
}

/// Bit i of masks[j] is set iff bag[i] ∈ N[bag[j]].
std::vector<std::uint32_t> closed_masks(const Graph& g, std::span<const Vertex> bag) {
    std::vector<std::uint32_t> masks(bag.size(), 0);
    for (std::size_t j = 0; j < bag.size(); ++j)
        for (std::size_t i = 0; i < bag.size(); ++i)
            if (i == j || g.adjacent(bag[i], bag[j])) masks[j] |= 1u << i;
    return masks;
}

void decode_digits(std::uint32_t index, std::size_t size, int* digits) {
    for (std::size_t i = 0; i < size; ++i) {
        digits[i] = static_cast<int>(index % kStatesPerVertex);
        index /= kStatesPerVertex;
    }
}

std::uint32_t packing_mask(const int* digits, std::size_t size) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < size; ++i)
        if (in_packing(digits[i])) mask |= 1u << i;
    return mask;
}

std::size_t position_of(std::span<const Vertex> bag, Vertex v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    if (it == bag.end() || *it != v) throw std::logic_error("vertex missing from bag");
    return static_cast<std::size_t>(it - bag.begin());
}

/// Per-position (left digit, right digit) pairs splitting a join entry.
struct SplitOptions {
    std::array<std::array<std::array<int, 2>, 3>, kMaxBag> pairs;
    std::array<int, kMaxBag> count;
};

/// f1 + f2 = f + |N[v] ∩ B| with both halves feasible for the membership of v.
bool split_options(const int* digits, std::size_t size, std::span<const std::uint32_t> masks, SplitOptions& out) {
    const std::uint32_t b = packing_mask(digits, size);
    for (std::size_t i = 0; i < size; ++i) {
        const bool in = in_packing(digits[i]);
        const int total = count_of(digits[i]) + std::popcount(masks[i] & b);
        const int lo = in ? 1 : 0;
        int k = 0;
        for (int f1 = lo; f1 <= 2; ++f1) {
            const int f2 = total - f1;
            if (f2 < lo || f2 > 2) continue;
            out.pairs[i][k++] = {make_digit(in, f1), make_digit(in, f2)};
        }
        if (k == 0) return false;
        out.count[i] = k;
    }
    return true;
}

}  // namespace

std::uint32_t encode(std::span<const VertexState> states) {
    if (states.size() > kMaxBag) throw InputError("bag too large");
    std::uint32_t index = 0;
    for (std::size_t i = states.size(); i-- > 0;) {
        if (!states[i].feasible()) throw InputError("infeasible vertex state");
        index = index * kStatesPerVertex + static_cast<std::uint32_t>(states[i].digit());
    }
    return index;
}

std::vector<VertexState> decode(std::uint32_t index, std::size_t bag_size) {
    std::vector<VertexState> out(bag_size);
    for (auto& s : out) {
        s = VertexState::from_digit(static_cast<int>(index % kStatesPerVertex));
        index /= kStatesPerVertex;
    }
    return out;
}

DpTable dp_leaf(const NiceNode& node) {
    if (node.kind != NodeKind::Leaf || node.bag.size() != 1) throw std::logic_error("dp_leaf: not a leaf node");
    DpTable t{node.bag, std::vector<std::int32_t>(kStatesPerVertex, kInfeasible),
              std::vector<std::uint32_t>(kStatesPerVertex, 0)};
    t.value[make_digit(false, 0)] = 0;
    t.value[make_digit(true, 1)] = 1;
    return t;
}

DpTable dp_forget(const NiceNode& node, const DpTable& child) {
    if (node.kind != NodeKind::Forget) throw std::logic_error("dp_forget: not a forget node");
    const std::size_t p = position_of(child.bag, node.vertex);
    const std::uint32_t size = table_size(node.bag.size());
    DpTable t{node.bag, std::vector<std::int32_t>(size, kInfeasible), std::vector<std::uint32_t>(size, 0)};
    const std::uint32_t low = kPow[p];
    for (std::uint32_t ci = 0; ci < child.value.size(); ++ci) {
        const std::int32_t v = child.value[ci];
        if (v == kInfeasible) continue;
        const std::uint32_t pi = ci % low + (ci / (low * kStatesPerVertex)) * low;
        // ascending child index + strict improvement = smallest argmax
        if (v > t.value[pi]) {
            t.value[pi] = v;
            t.choice[pi] = ci;
        }
    }
    return t;
}

DpTable dp_introduce(const Graph& g, const NiceNode& node, const DpTable& child) {
    if (node.kind != NodeKind::Introduce) throw std::logic_error("dp_introduce: not an introduce node");
    const std::size_t b = node.bag.size();
    const std::size_t p = position_of(node.bag, node.vertex);
    const std::uint32_t size = table_size(b);
    const auto masks = closed_masks(g, node.bag);
    DpTable t{node.bag, std::vector<std::int32_t>(size, kInfeasible), std::vector<std::uint32_t>(size, 0)};
    std::array<int, kMaxBag> d{};
    for (std::uint32_t s = 0; s < size; ++s) {
        decode_digits(s, b, d.data());
        const std::uint32_t packed = packing_mask(d.data(), b);
        const bool v_in = in_packing(d[p]);
        // every neighbour of v below this node is in the bag, so its count is final
        if (count_of(d[p]) != std::popcount(masks[p] & packed)) continue;
        std::uint32_t ci = 0;
        bool ok = true;
        for (std::size_t i = b; i-- > 0;) {
            if (i == p) continue;
            int digit = d[i];
            if (v_in && ((masks[p] >> i) & 1u)) {
                const int c = count_of(digit) - 1;
                if (c < (in_packing(digit) ? 1 : 0)) {
                    ok = false;
                    break;
                }
                digit = make_digit(in_packing(digit), c);
            }
            ci = ci * kStatesPerVertex + static_cast<std::uint32_t>(digit);
        }
        if (!ok || child.value[ci] == kInfeasible) continue;
        t.value[s] = child.value[ci] + (v_in ? 1 : 0);
        t.choice[s] = ci;
    }
    return t;
}

DpTable dp_join(const Graph& g, const NiceNode& node, const DpTable& left, const DpTable& right) {
    if (node.kind != NodeKind::Join) throw std::logic_error("dp_join: not a join node");
    if (left.bag != node.bag || right.bag != node.bag) throw std::logic_error("dp_join: bag mismatch");
    const std::size_t b = node.bag.size();
    const std::uint32_t size = table_size(b);
    const auto masks = closed_masks(g, node.bag);
    DpTable t{node.bag, std::vector<std::int32_t>(size, kInfeasible), std::vector<std::uint32_t>(size, 0)};
    std::array<int, kMaxBag> d{};
    std::array<int, kMaxBag> pick{};
    SplitOptions opts;
    for (std::uint32_t s = 0; s < size; ++s) {
        decode_digits(s, b, d.data());
        if (!split_options(d.data(), b, masks, opts)) continue;
        const int shared = std::popcount(packing_mask(d.data(), b));
        pick.fill(0);
        // odometer over split choices; lowest position turns fastest, so the
        // left index grows monotonically and the first maximum is the smallest
        while (true) {
            std::uint32_t li = 0, ri = 0;
            for (std::size_t i = b; i-- > 0;) {
                li = li * kStatesPerVertex + static_cast<std::uint32_t>(opts.pairs[i][pick[i]][0]);
                ri = ri * kStatesPerVertex + static_cast<std::uint32_t>(opts.pairs[i][pick[i]][1]);
            }
            const std::int32_t lv = left.value[li];
            const std::int32_t rv = right.value[ri];
            if (lv != kInfeasible && rv != kInfeasible && lv + rv - shared > t.value[s]) {
                t.value[s] = lv + rv - shared;
                t.choice[s] = li;
            }
            std::size_t i = 0;
            while (i < b && ++pick[i] == opts.count[i]) pick[i++] = 0;
            if (i == b) break;
        }
    }
    return t;
}

DpRun run(const Graph& g, const NiceTreeDecomposition& ntd) {
    if (auto violations = validate_nice(g, ntd); !violations.empty())
        throw InputError("invalid nice decomposition: " + violations.front().detail);
    for (const auto& node : ntd.nodes)
        if (node.bag.size() > kMaxBag)
            throw PreconditionError("bag of size " + std::to_string(node.bag.size()) + " exceeds the DP limit of " +
                                    std::to_string(kMaxBag));
    DpRun out;
    out.tables.reserve(ntd.nodes.size());
    for (const auto& node : ntd.nodes) {
        switch (node.kind) {
            case NodeKind::Leaf: out.tables.push_back(dp_leaf(node)); break;
            case NodeKind::Forget: out.tables.push_back(dp_forget(node, out.tables[node.children[0]])); break;
            case NodeKind::Introduce:
                out.tables.push_back(dp_introduce(g, node, out.tables[node.children[0]]));
                break;
            case NodeKind::Join:
                out.tables.push_back(dp_join(g, node, out.tables[node.children[0]], out.tables[node.children[1]]));
                break;
        }
        out.entries += out.tables.back().value.size();
    }
    return out;
}

VertexSet trace(const Graph& g, const NiceTreeDecomposition& ntd, const DpRun& run, std::size_t node,
                std::uint32_t state) {
    if (run.tables.at(node).value.at(state) == kInfeasible) throw InputError("trace: entry is infeasible");
    VertexSet out(g.n());
    std::vector<std::pair<std::size_t, std::uint32_t>> stack{{node, state}};
    std::array<int, kMaxBag> d{};
    std::array<int, kMaxBag> dl{};
    while (!stack.empty()) {
        auto [t, s] = stack.back();
        stack.pop_back();
        const auto& nn = ntd.nodes[t];
        const auto& table = run.tables[t];
        switch (nn.kind) {
            case NodeKind::Leaf:
                if (in_packing(static_cast<int>(s))) out.insert(nn.vertex);
                break;
            case NodeKind::Forget: stack.emplace_back(nn.children[0], table.choice[s]); break;
            case NodeKind::Introduce: {
                const std::size_t p = position_of(nn.bag, nn.vertex);
                if (in_packing(static_cast<int>((s / kPow[p]) % kStatesPerVertex))) out.insert(nn.vertex);
                stack.emplace_back(nn.children[0], table.choice[s]);
                break;
            }
            case NodeKind::Join: {
                const std::size_t b = nn.bag.size();
                const auto masks = closed_masks(g, nn.bag);
                decode_digits(s, b, d.data());
                const std::uint32_t li = table.choice[s];
                decode_digits(li, b, dl.data());
                const std::uint32_t packed = packing_mask(d.data(), b);
                std::uint32_t ri = 0;
                for (std::size_t i = b; i-- > 0;) {
                    const int f2 = count_of(d[i]) + std::popcount(masks[i] & packed) - count_of(dl[i]);
                    ri = ri * kStatesPerVertex + static_cast<std::uint32_t>(make_digit(in_packing(d[i]), f2));
                }
                stack.emplace_back(nn.children[0], li);
                stack.emplace_back(nn.children[1], ri);
                break;
            }
        }
    }
    return out;
}

SolveResult solve(const Graph& g, const NiceTreeDecomposition& ntd) {
    SolveResult out;
    if (g.n() == 0) {
        out.witness = VertexSet(0);
        return out;
    }
    const DpRun tables = run(g, ntd);
    const auto& root = tables.tables[ntd.root];
    std::uint32_t best = 0;
    for (std::uint32_t s = 1; s < root.value.size(); ++s)
        if (root.value[s] > root.value[best]) best = s;
    if (root.value[best] == kInfeasible) throw std::logic_error("DP root has no feasible entry");
    out.value = root.value[best];
    out.witness = trace(g, ntd, tables, ntd.root, best);
    out.nodes = tables.entries;
    if (!is_two_neighbour_packing(g, out.packing()) || static_cast<int>(out.packing().size()) != out.value)
        throw std::logic_error("DP witness failed verification");
    return out;
}

SolveResult solve(const Graph& g) {
    const TreeDecomposition td = is_forest(g) ? decompose_tree(g) : decompose_heuristic(g);
    return solve(g, make_nice(td, g));
}

}  // namespace tnp::dp
