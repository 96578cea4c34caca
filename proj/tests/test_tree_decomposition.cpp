#include <doctest.h>

#include <map>

#include "support.hpp"
#include "tnp/errors.hpp"
#include "tnp/instances.hpp"
#include "tnp/tree_decomposition.hpp"

using namespace tnp;
using Condition = TdViolation::Condition;

namespace {

TreeDecomposition td_of(std::size_t nodes, std::vector<Edge> tree_edges, std::vector<std::vector<Vertex>> bags) {
    return {Graph(nodes, tree_edges), std::move(bags)};
}

bool has_condition(const std::vector<TdViolation>& vs, Condition c) {
    for (const auto& v : vs)
        if (v.condition == c) return true;
    return false;
}

// introduce/forget/join bookkeeping per graph vertex
void check_vertex_threads(const Graph& g, const NiceTreeDecomposition& ntd) {
    std::map<Vertex, int> introduced, forgotten, joined;
    for (const auto& node : ntd.nodes) {
        if (node.kind == NodeKind::Leaf || node.kind == NodeKind::Introduce) ++introduced[node.vertex];
        if (node.kind == NodeKind::Forget) ++forgotten[node.vertex];
        if (node.kind == NodeKind::Join)
            for (Vertex v : node.bag) ++joined[v];
    }
    const auto& root_bag = ntd.nodes[ntd.root].bag;
    CHECK(root_bag.size() <= 1);
    for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) {
        const bool at_root = !root_bag.empty() && root_bag.front() == v;
        CHECK(forgotten[v] == (at_root ? 0 : 1));
        CHECK(introduced[v] - joined[v] == 1);
    }
}

}  // namespace

TEST_CASE("validate") {
    CHECK(validate(complete(3), td_of(1, {}, {{0, 1, 2}})).empty());
    CHECK(td_of(1, {}, {{0, 1, 2}}).width() == 2);
    CHECK(validate(path(3), td_of(2, {{0, 1}}, {{0, 1}, {1, 2}})).empty());
    CHECK(has_condition(validate(path(3), td_of(2, {{0, 1}}, {{0, 1}, {2}})), Condition::EdgeCoverage));
    CHECK(has_condition(validate(path(3), td_of(2, {{0, 1}}, {{0, 1}, {1}})), Condition::VertexCoverage));
    // vertex 0 in bags 0 and 2 but not in the bag between them
    CHECK(has_condition(validate(path(3), td_of(3, {{0, 1}, {1, 2}}, {{0, 1}, {1, 2}, {0}})), Condition::Connectivity));
    CHECK(has_condition(validate(path(3), td_of(2, {}, {{0, 1}, {1, 2}})), Condition::Structure));
}

TEST_CASE("decompose_tree") {
    const auto p4 = decompose_tree(path(4));
    CHECK(p4.bags.size() == 3);
    CHECK(p4.width() == 1);
    CHECK(validate(path(4), p4).empty());
    std::vector<std::vector<Vertex>> bags = p4.bags;
    std::sort(bags.begin(), bags.end());
    CHECK(bags == std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {2, 3}});

    const auto k1 = decompose_tree(Graph(1));
    CHECK(k1.bags.size() == 1);
    CHECK(k1.width() == 0);

    const auto s = decompose_tree(star(4));
    CHECK(s.bags.size() == 4);
    CHECK(s.width() == 1);
    for (const auto& b : s.bags) CHECK(std::find(b.begin(), b.end(), 0) != b.end());

    CHECK_THROWS_AS(decompose_tree(cycle(4)), PreconditionError);

    const Graph forest[] = {path(3), Graph(1), star(2)};
    const Graph f = disjoint_union(forest).graph;
    CHECK(validate(f, decompose_tree(f)).empty());
}

TEST_CASE("decompose_heuristic widths") {
    for (int n = 1; n <= 30; ++n) CHECK(decompose_heuristic(random_tree(n, static_cast<std::uint64_t>(n))).width() == (n == 1 ? 0 : 1));
    for (int n = 3; n <= 10; ++n) {
        const auto td = decompose_heuristic(cycle(n));
        CHECK(validate(cycle(n), td).empty());
        CHECK(td.width() == 2);
    }
    CHECK(decompose_heuristic(complete(5)).width() == 4);
    CHECK(decompose_heuristic(empty(3)).width() == 0);
}

TEST_CASE("heuristic decompositions are valid") {
    for (const Graph& g : support::random_suite(200, 30, 5)) CHECK(validate(g, decompose_heuristic(g)).empty());
}

TEST_CASE("make_nice") {
    const auto k1 = make_nice(decompose_tree(Graph(1)), Graph(1));
    REQUIRE(k1.nodes.size() == 1);
    CHECK(k1.nodes[0].kind == NodeKind::Leaf);

    const TreeDecomposition p3 = td_of(2, {{0, 1}}, {{0, 1}, {1, 2}});
    const auto n3 = make_nice(p3, path(3));
    CHECK(validate_nice(path(3), n3).empty());
    CHECK(n3.width() == 1);
    int leaves = 0, joins = 0;
    for (const auto& node : n3.nodes) {
        leaves += node.kind == NodeKind::Leaf;
        joins += node.kind == NodeKind::Join;
        if (node.kind == NodeKind::Introduce || node.kind == NodeKind::Forget) CHECK(node.children.size() == 1);
    }
    CHECK(leaves == 1);
    CHECK(joins == 0);
    check_vertex_threads(path(3), n3);

    const auto c6 = make_nice(decompose_heuristic(cycle(6)), cycle(6));
    CHECK(validate_nice(cycle(6), c6).empty());
    CHECK(c6.width() == 2);
    CHECK(c6.nodes.size() <= 60);

    CHECK_THROWS_AS(make_nice(td_of(2, {{0, 1}}, {{0, 1}, {2}}), path(3)), InputError);
}

TEST_CASE("make_nice preserves width and validity") {
    for (const Graph& g : support::random_suite(120, 30, 8)) {
        const auto td = decompose_heuristic(g);
        const auto ntd = make_nice(td, g);
        CHECK(validate_nice(g, ntd).empty());
        CHECK(ntd.width() == td.width());
        CHECK(validate(g, ntd.as_tree_decomposition()).empty());
        check_vertex_threads(g, ntd);
        for (std::size_t i = 0; i < ntd.nodes.size(); ++i)
            for (std::size_t c : ntd.nodes[i].children) CHECK(c < i);
    }
}

TEST_CASE("nice tree size is linear on trees") {
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + 5 * i;
        const Graph t = random_tree(n, 1000 + static_cast<std::uint64_t>(i));
        const auto td = decompose_tree(t);
        CHECK(td.width() == (n == 1 ? 0 : 1));
        const auto ntd = make_nice(td, t);
        CHECK(validate_nice(t, ntd).empty());
        CHECK(ntd.nodes.size() <= 6 * t.n());
    }
}

TEST_CASE("td text format") {
    const auto k3 = read_td("s td 1 3 3\nb 1 1 2 3\n", complete(3));
    CHECK(k3.bags.size() == 1);
    CHECK(k3.bags[0] == std::vector<Vertex>{0, 1, 2});

    const Graph p5 = path(5);
    const auto td = decompose_tree(p5);
    const auto back = read_td(write_td(td, p5.n()), p5);
    CHECK(back.bags == td.bags);
    CHECK(back.tree == td.tree);

    CHECK_THROWS_AS(read_td("s td 1 1 3\nb 1 9\n", complete(3)), ParseError);
    CHECK_THROWS_AS(read_td("c only a comment\n", complete(3)), ParseError);
    try {
        read_td("c x\ns td 2 2 3\nb 1 1 2\nb 2 2 3\n1 3\n", path(3));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
    }
}
