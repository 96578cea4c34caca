#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tnp/errors.hpp"
#include "tnp/instances.hpp"
#include "tnp/oracles.hpp"

using namespace tnp;

namespace {

VertexSet set_of(std::size_t n, std::initializer_list<Vertex> vs) {
    VertexSet s(n);
    for (Vertex v : vs) s.insert(v);
    return s;
}

RomanFunction rdf_of(std::initializer_list<std::uint8_t> labels) { return RomanFunction(std::vector<std::uint8_t>(labels)); }

bool has_property(const std::vector<RdfViolation>& vs, char p) {
    return std::any_of(vs.begin(), vs.end(), [p](const RdfViolation& v) { return v.property == p; });
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

TEST_CASE("two-neighbour packing checker") {
    CHECK(is_two_neighbour_packing(cycle(4), set_of(4, {0, 1})));
    CHECK_FALSE(is_two_neighbour_packing(cycle(4), set_of(4, {0, 1, 2})));
    for (const Graph& g : support::random_suite(20, 12, 1)) CHECK(is_two_neighbour_packing(g, VertexSet(g.n())));
    CHECK_FALSE(is_two_neighbour_packing(cycle(4), VertexSet(5)));
}

TEST_CASE("roman dominating checker") {
    CHECK(is_roman_dominating(path(3), rdf_of({0, 2, 0})));
    CHECK_FALSE(is_roman_dominating(path(3), rdf_of({0, 1, 0})));
    for (const Graph& g : support::random_suite(20, 12, 2)) {
        RomanFunction ones(g.n());
        for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) ones.set(v, 1);
        CHECK(is_roman_dominating(g, ones));
    }
    CHECK_THROWS_AS(RomanFunction(3).set(0, 3), InputError);
}

TEST_CASE("tnp_brute on small graphs") {
    CHECK(tnp_brute(path(4)).value == 3);
    CHECK(tnp_brute(cycle(4)).value == 2);
    const int k33[] = {3, 3};
    CHECK(tnp_brute(complete_multipartite(k33)).value == 2);
    CHECK(tnp_brute(empty(5)).value == 5);
    CHECK(tnp_brute(Graph(0)).value == 0);
    CHECK_THROWS_AS(tnp_brute(path(25)), SizeCapError);
    CHECK(tnp_brute(path(25), 25).value == 17);
}

TEST_CASE("roman_brute on small graphs") {
    CHECK(roman_brute(cycle(4)).value == 3);
    CHECK(roman_brute(path(5)).value == 4);
    CHECK(roman_brute(complete(5)).value == 2);
    CHECK(roman_brute(Graph(1)).value == 1);
    CHECK_THROWS_AS(roman_brute(path(15)), SizeCapError);
}

TEST_CASE("domination_brute on small graphs") {
    for (int n = 1; n <= 6; ++n) CHECK(domination_brute(complete(n)).value == 1);
    CHECK(domination_brute(path(4)).value == 2);
    CHECK(domination_brute(empty(4)).value == 4);
}

TEST_CASE("brute solvers agree with plain enumeration") {
    for (const Graph& g : support::random_suite(150, 12, 42)) {
        const auto p = tnp_brute(g);
        const auto r = roman_brute(g);
        const auto d = domination_brute(g);
        const auto a = independent_set_brute(g);
        CHECK(p.value == support::packing_number(g));
        CHECK(r.value == support::roman_number(g));
        CHECK(d.value == support::domination_number(g));
        CHECK(a.value == support::independence_number(g));
        CHECK(is_two_neighbour_packing(g, p.packing()));
        CHECK(static_cast<int>(p.packing().size()) == p.value);
        CHECK(is_roman_dominating(g, r.rdf()));
        CHECK(r.rdf().weight() == r.value);
        CHECK(is_dominating_set(g, d.packing()));
        CHECK(is_independent_set(g, a.packing()));
    }
}

TEST_CASE("size caps come from the environment") {
    setenv("TNP_CAP_ROMAN", "7", 1);
    CHECK(BruteCaps::from_environment().roman == 7);
    unsetenv("TNP_CAP_ROMAN");
    CHECK(BruteCaps::from_environment().roman == BruteCaps{}.roman);
}

TEST_CASE("minimal RDF property checker") {
    CHECK(check_min_rdf_properties(path(3), rdf_of({0, 2, 0})).empty());
    // two adjacent 1s still give max degree 1 inside V_1
    CHECK(check_min_rdf_properties(path(2), rdf_of({1, 1})).empty());
    CHECK(has_property(check_min_rdf_properties(path(3), rdf_of({1, 1, 1})), 'a'));
    CHECK(has_property(check_min_rdf_properties(path(2), rdf_of({1, 2})), 'b'));
}

TEST_CASE("private neighbours") {
    auto p3 = private_neighbours(path(3), 1, set_of(3, {1}));
    CHECK(p3.members.members() == std::vector<Vertex>{0, 1, 2});
    CHECK(p3.external.members() == std::vector<Vertex>{0, 2});

    auto p4 = private_neighbours(path(4), 1, set_of(4, {1, 2}));
    CHECK(p4.members.members() == std::vector<Vertex>{0});
    CHECK(p4.external.members() == std::vector<Vertex>{0});

    CHECK(private_neighbours(complete(3), 0, set_of(3, {0, 1})).members.empty());
}

TEST_CASE("closed forms") {
    const int p7[] = {7};
    CHECK(closed_form(Family::Path, p7).packing == 5);
    CHECK(closed_form(Family::Path, p7).roman == 5);
    const int c5[] = {5};
    CHECK(closed_form(Family::Cycle, c5).packing == 3);
    CHECK(closed_form(Family::Cycle, c5).roman == 4);
    const int k23[] = {2, 3};
    CHECK(closed_form(Family::Multipartite, k23).packing == 2);
    CHECK(closed_form(Family::Multipartite, k23).roman == 3);
    const int one[] = {4};
    CHECK_THROWS_AS(closed_form(Family::Multipartite, one), InputError);
    const int c2[] = {2};
    CHECK_THROWS_AS(closed_form(Family::Cycle, c2), InputError);
}

TEST_CASE("suite invariants") {
    for (const Graph& g : support::random_suite(120, 12, 7)) {
        const int n = static_cast<int>(g.n());
        const int p = tnp_brute(g).value;
        const auto r = roman_brute(g);
        const int d = domination_brute(g).value;
        CHECK(p <= r.value);
        CHECK(d <= r.value);
        CHECK(r.value <= 2 * d);
        if (g.max_degree() >= 1) CHECK(r.value >= ceil_div(2 * n, static_cast<int>(g.max_degree()) + 1));
        CHECK(check_min_rdf_properties(g, r.rdf()).empty());
        if (n >= 2 && static_cast<int>(g.max_degree()) == n - 1) CHECK(p == 2);
        if (n >= 2 && is_connected(g)) {
            CHECK((r.value == 2) == (static_cast<int>(g.max_degree()) == n - 1));
            CHECK((r.value == 3) == (static_cast<int>(g.max_degree()) == n - 2));
        }
        for (auto [u, v] : g.edges()) {
            const Graph h = delete_edge(g, u, v);
            CHECK(tnp_brute(h).value >= p);
            CHECK(roman_brute(h).value >= r.value);
        }
    }
}

TEST_CASE("values add over components") {
    const auto suite = support::random_suite(30, 6, 99);
    for (std::size_t i = 0; i + 1 < suite.size(); i += 2) {
        const Graph parts[] = {suite[i], suite[i + 1]};
        const Graph u = disjoint_union(parts).graph;
        CHECK(tnp_brute(u).value == tnp_brute(parts[0]).value + tnp_brute(parts[1]).value);
        CHECK(roman_brute(u).value == roman_brute(parts[0]).value + roman_brute(parts[1]).value);
    }
}
