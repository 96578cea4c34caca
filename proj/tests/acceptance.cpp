// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"
#include "tnp/graph.hpp"
#include "tnp/instances.hpp"
#include "tnp/lp_export.hpp"
#include "tnp/oracles.hpp"
#include "tnp/tree_decomposition.hpp"
#include "tnp/tree_duality.hpp"
#include "tnp/treewidth_dp.hpp"

using namespace tnp;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Check {
    int failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ == 0) first = what;
    }
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// ---------------------------------------------------------------------------

void closed_forms(Check& c) {
    const auto start = Clock::now();
    for (int n = 1; n <= 30; ++n) {
        const int want = ceil_div(2 * n, 3);
        c.expect(dp::solve(path(n)).value == want, "dp P_" + std::to_string(n));
        if (n <= 24) c.expect(tnp_brute(path(n)).value == want, "brute P_" + std::to_string(n));
        if (n <= 14) c.expect(roman_brute(path(n)).value == want, "roman P_" + std::to_string(n));
        if (n < 3) continue;
        const int wc = 2 * n / 3;
        c.expect(dp::solve(cycle(n)).value == wc, "dp C_" + std::to_string(n));
        if (n <= 24) c.expect(tnp_brute(cycle(n)).value == wc, "brute C_" + std::to_string(n));
        if (n <= 14) c.expect(roman_brute(cycle(n)).value == want, "roman C_" + std::to_string(n));
    }
    const double s = seconds_since(start);
    c.expect(s < 10.0, "runtime " + std::to_string(s) + " s");
}

void partitions(int remaining, int largest, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
    if (remaining == 0) {
        f(cur);
        return;
    }
    for (int k = std::min(remaining, largest); k >= 1; --k) {
        cur.push_back(k);
        partitions(remaining - k, k, cur, f);
        cur.pop_back();
    }
}

void multipartite(Check& c) {
    int seen = 0;
    for (int total = 2; total <= 12; ++total) {
        std::vector<int> cur;
        partitions(total, total, cur, [&](const std::vector<int>& parts) {
            if (parts.size() < 2) return;
            ++seen;
            const Graph g = complete_multipartite(parts);
            const int m1 = parts.back();  // smallest part
            const int want = m1 == 1 ? 2 : m1 == 2 ? 3 : 4;
            std::string name = "K_{";
            for (int p : parts) name += std::to_string(p) + ",";
            name.back() = '}';
            c.expect(tnp_brute(g).value == 2, "tnp " + name);
            c.expect(roman_brute(g).value == want, "roman " + name);
        });
    }
    c.expect(seen > 100, "too few partitions");
}

void tree_duality(Check& c) {
    const auto start = Clock::now();
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + i % 40;
        const Graph t = random_tree(n, 500000 + static_cast<std::uint64_t>(i));
        const auto cert = certify_tree(RootedTree(t, static_cast<Vertex>((i * 13) % n)));
        const std::string tag = "tree #" + std::to_string(i);
        c.expect(cert.verified, tag + " unverified");
        c.expect(is_roman_dominating(t, cert.rdf) && is_two_neighbour_packing(t, cert.packing), tag + " witness");
        c.expect(cert.rdf.weight() == static_cast<int>(cert.packing.size()), tag + " weights differ");
        if (n <= 14) {
            c.expect(cert.value == roman_brute(t).value, tag + " roman brute");
            c.expect(cert.value == tnp_brute(t).value, tag + " packing brute");
        }
    }
    const double s = seconds_since(start);
    c.expect(s < 30.0, "runtime " + std::to_string(s) + " s");
}

void dp_equivalence(Check& c) {
    int checked = 0;
    std::uint64_t seed = 7001;
    while (checked < 200) {
        for (const Graph& g : support::random_suite(100, 18, seed++)) {
            if (checked == 200) break;
            const auto td = decompose_heuristic(g);
            if (td.width() > 4) continue;
            ++checked;
            const auto r = dp::solve(g, make_nice(td, g));
            const auto& a = r.packing();
            c.expect(r.value == tnp_brute(g).value, "dp differs from brute on graph " + std::to_string(checked));
            c.expect(is_two_neighbour_packing(g, a) && static_cast<int>(a.size()) == r.value,
                     "bad witness on graph " + std::to_string(checked));
        }
    }
}

double best_of(int runs, const Graph& g) {
    double best = 1e9;
    for (int i = 0; i < runs; ++i) {
        const auto t = Clock::now();
        const auto r = dp::solve(g);
        best = std::min(best, seconds_since(t));
        if (r.value < 0) best = 1e9;
    }
    return best;
}

void scaling(Check& c, std::string& detail) {
    std::vector<double> times;
    best_of(2, path(1 << 17));  // warm-up: allocator and clock
    // equal time budget per size
    for (int e = 14; e <= 17; ++e) times.push_back(best_of(7 << (17 - e), path(1 << e)));
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double ratio = times[i] / times[i - 1];
        detail += " " + std::to_string(ratio).substr(0, 4);
        c.expect(ratio >= 1.5 && ratio <= 3.0, "ratio " + std::to_string(ratio) + " at doubling " + std::to_string(i));
    }
    const auto t = Clock::now();
    const auto r = dp::solve(path(100000));
    const double s = seconds_since(t);
    detail += ", P_1e5 " + std::to_string(s).substr(0, 5) + " s";
    c.expect(r.value == ceil_div(200000, 3), "P_1e5 value");
    c.expect(s < 2.0, "P_1e5 took " + std::to_string(s) + " s");
}

void reduction(Check& c) {
    Rng rng(8675309);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const Graph g = random_graph(n, 0.15 + 0.1 * (i % 6), rng.below(1u << 30));
        const auto r = reduce_independent_set(g);
        const int alpha = support::independence_number(g);
        const std::string tag = "graph #" + std::to_string(i);
        c.expect(r.offset == 3 * static_cast<int>(g.m()), tag + " offset");
        const auto p = tnp_brute(r.graph, r.graph.n());
        c.expect(p.value == alpha + r.offset, tag + " packing number");
        const auto s = extract_independent_set(g, p.packing());
        c.expect(is_independent_set(g, s) && static_cast<int>(s.size()) == alpha, tag + " extraction");
    }
}

// values summed over connected components
std::pair<int, int> by_components(const Graph& g) {
    const auto comp = connected_components(g);
    const std::size_t count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    int packing = 0, roman = 0;
    for (std::size_t k = 0; k < count; ++k) {
        VertexSet w(g.n());
        for (std::size_t v = 0; v < g.n(); ++v)
            if (comp[v] == k) w.insert(static_cast<Vertex>(v));
        const Graph h = induced_subgraph(g, w).graph;
        packing += tnp_brute(h).value;
        roman += roman_brute(h).value;
    }
    return {packing, roman};
}

void duality_gap(Check& c) {
    for (int k = 1; k <= 3; ++k) {
        const auto inst = k_c4(k);
        const int gap = roman_brute(inst.graph).value - tnp_brute(inst.graph).value;
        c.expect(gap == k, "kC4 gap for k=" + std::to_string(k));
    }
    for (int k = 1; k <= 10; ++k) {
        const auto inst = k_c4(k);
        const auto [p, r] = by_components(inst.graph);
        c.expect(p == 2 * k && p == *inst.packing, "kC4 packing for k=" + std::to_string(k));
        c.expect(r == 3 * k && r == *inst.roman, "kC4 roman for k=" + std::to_string(k));
        c.expect(dp::solve(inst.graph).value == 2 * k, "kC4 dp for k=" + std::to_string(k));
    }
    for (int n = 3; n <= 7; ++n) {
        const auto inst = gap_family(n);
        c.expect(no_three_packing(inst.graph), "G_" + std::to_string(n) + " has a 3-packing");
        c.expect(is_two_neighbour_packing(inst.graph, VertexSet(inst.graph.n(), std::vector<Vertex>{0, 1})),
                 "G_" + std::to_string(n) + " pair");
    }
    c.expect(roman_brute(gap_family(4).graph).value >= 3, "gamma_R(G_4) < 3");
}

std::vector<Graph> corpus() {
    auto g = support::random_suite(150, 12, 99);
    for (int i = 0; i < 50; ++i) g.push_back(random_tree(1 + i % 12, 880 + static_cast<std::uint64_t>(i)));
    return g;
}

void properties(Check& c) {
    int idx = 0;
    for (const Graph& g : corpus()) {
        const std::string tag = "corpus #" + std::to_string(idx++);
        const int n = static_cast<int>(g.n());
        const int p = tnp_brute(g).value;
        const auto r = roman_brute(g);
        const int d = domination_brute(g).value;
        c.expect(p <= r.value, tag + " weak duality");
        c.expect(d <= r.value && r.value <= 2 * d, tag + " sandwich");
        if (g.max_degree() >= 1)
            c.expect(r.value * (static_cast<int>(g.max_degree()) + 1) >= 2 * n, tag + " degree bound");
        c.expect(check_min_rdf_properties(g, r.rdf()).empty(), tag + " minimal RDF properties");
        for (auto [u, v] : g.edges()) {
            const Graph h = delete_edge(g, u, v);
            c.expect(tnp_brute(h).value >= p, tag + " packing monotonicity");
            c.expect(roman_brute(h).value >= r.value, tag + " roman monotonicity");
        }
        if (n >= 1 && is_tree(g)) {
            for (Vertex root = 0; root < static_cast<Vertex>(n); root += 2) {
                const RootedTree t(g, root);
                c.expect(check_lemma_properties(t, normalize_rdf(t, r.rdf())).empty(), tag + " lemma properties");
            }
        }
    }
}

void integrality(Check& c) {
    int trees = 0;
    for (const Graph& g : corpus()) {
        if (g.n() == 0 || g.n() > 12 || !is_tree(g)) continue;
        ++trees;
        c.expect(integer_optimum_primal(g) == integer_optimum_dual(g), "integer optima differ on a tree");
    }
    c.expect(trees >= 50, "too few trees");
}

Graph from_one_based(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Edge> e;
    for (auto [u, v] : edges) e.push_back({u - 1, v - 1});
    return Graph(n, e);
}

void fixtures(Check& c) {
    const Graph left = from_one_based(
        8, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {2, 5}, {3, 6}, {4, 7}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
    const Graph right = from_one_based(14, {{1, 4}, {4, 8}, {8, 12}, {12, 9}, {9, 13}, {13, 10}, {10, 14}, {14, 11},
                                            {11, 7}, {7, 10}, {10, 6}, {6, 9}, {9, 5}, {5, 2}, {2, 6}, {6, 3},
                                            {3, 7}, {1, 5}, {5, 8}});
    c.expect(roman_brute(left).value == 4, "left gamma_R");
    c.expect(tnp_brute(left).value == 4, "left packing");
    c.expect(roman_brute(right).value == 8, "right gamma_R");
    c.expect(tnp_brute(right).value == 8, "right packing");
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char* name;
        std::function<void(Check&, std::string&)> run;
    };
    const std::vector<Item> items = {
        {1, "closed forms on paths and cycles", [](Check& c, std::string&) { closed_forms(c); }},
        {2, "complete multipartite graphs", [](Check& c, std::string&) { multipartite(c); }},
        {3, "strong duality on trees", [](Check& c, std::string&) { tree_duality(c); }},
        {4, "treewidth DP against brute force", [](Check& c, std::string&) { dp_equivalence(c); }},
        {5, "linear scaling of the DP", scaling},
        {6, "independent set reduction", [](Check& c, std::string&) { reduction(c); }},
        {7, "duality gap families", [](Check& c, std::string&) { duality_gap(c); }},
        {8, "property suites", [](Check& c, std::string&) { properties(c); }},
        {9, "integrality on trees", [](Check& c, std::string&) { integrality(c); }},
        {10, "regression fixtures", [](Check& c, std::string&) { fixtures(c); }},
    };
    int failed = 0;
    for (const auto& item : items) {
        Check c;
        std::string detail;
        const auto t = Clock::now();
        try {
            item.run(c, detail);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t);
        char head[160];
        std::snprintf(head, sizeof head, "%s criterion %2d: %s (%.2f s)", c.failures ? "FAIL" : "PASS", item.id, item.name, s);
        std::string line = head;
        if (!detail.empty()) line += " [" + detail.substr(detail.front() == ' ' ? 1 : 0) + "]";
        if (c.failures) line += ": " + std::to_string(c.failures) + " failures, first " + c.first;
        std::puts(line.c_str());
        failed += c.failures ? 1 : 0;
    }
    return failed ? 1 : 0;
}
