#include "tnp/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tnp/errors.hpp"

namespace tnp {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

void VertexSet::check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_)
        throw InputError("vertex " + std::to_string(v) + " outside universe of size " +
                         std::to_string(universe_));
}

bool VertexSet::contains(Vertex v) const {
    check(v);
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
}

bool VertexSet::insert(Vertex v) {
    check(v);
    auto& w = words_[static_cast<std::size_t>(v) / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
}

bool VertexSet::erase(Vertex v) {
    check(v);
    auto& w = words_[static_cast<std::size_t>(v) / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (!(w & bit)) return false;
    w &= ~bit;
    --count_;
    return true;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
            w &= w - 1;
        }
    }
    return out;
}

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (auto [u, v] : edges) {
        require_vertex(u);
        require_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& a = adjacency_[v];
        std::sort(a.begin(), a.end());
        if (auto it = std::adjacent_find(a.begin(), a.end()); it != a.end())
            throw InputError("duplicate edge {" + std::to_string(v) + ", " + std::to_string(*it) + "}");
    }
    m_ = edges.size();
}

void Graph::require_vertex(Vertex v) const {
    if (!contains(v))
        throw InputError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n()));
}

std::span<const Vertex> Graph::neighbours(Vertex v) const {
    require_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adjacency_) d = std::max(d, a.size());
    return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nu = neighbours(u);
    require_vertex(v);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < n(); ++u)
        for (Vertex v : adjacency_[u])
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

RootedTree::RootedTree(Graph g, Vertex root) : graph_(std::move(g)), root_(root) {
    if (!graph_.contains(root)) throw InputError("root " + std::to_string(root) + " is not a vertex");
    if (!is_tree(graph_)) throw PreconditionError("graph is not a tree");
    const std::size_t n = graph_.n();
    parent_.assign(n, -1);
    children_.assign(n, {});
    enter_.assign(n, 0);
    exit_.assign(n, 0);
    post_order_.reserve(n);

    // iterative DFS; children visited in increasing id order
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    std::size_t clock = 0;
    enter_[root] = clock++;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        auto nb = graph_.neighbours(v);
        if (next < nb.size()) {
            Vertex u = nb[next++];
            if (u == parent_[v]) continue;
            parent_[u] = v;
            children_[v].push_back(u);
            enter_[u] = clock++;
            stack.emplace_back(u, 0);
        } else {
            exit_[v] = clock;
            post_order_.push_back(v);
            stack.pop_back();
        }
    }
}

bool RootedTree::in_subtree(Vertex u, Vertex v) const {
    const auto ui = static_cast<std::size_t>(u);
    const auto vi = static_cast<std::size_t>(v);
    return enter_.at(vi) <= enter_.at(ui) && enter_[ui] < exit_[vi];
}

VertexSet closed_neighbourhood(const Graph& g, Vertex v) {
    VertexSet out(g.n(), g.neighbours(v));
    out.insert(v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.universe() != g.n()) throw InputError("vertex set universe does not match graph");
    InducedSubgraph out;
    out.to_original = w.members();
    std::vector<Vertex> to_new(g.n(), -1);
    for (std::size_t i = 0; i < out.to_original.size(); ++i) to_new[out.to_original[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (to_new[u] >= 0 && to_new[v] >= 0) edges.emplace_back(to_new[u], to_new[v]);
    out.graph = Graph(out.to_original.size(), edges);
    return out;
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.contains(u) || !g.contains(v) || !g.adjacent(u, v))
        throw InputError("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} does not exist");
    auto edges = g.edges();
    const Edge key{std::min(u, v), std::max(u, v)};
    edges.erase(std::find(edges.begin(), edges.end(), key));
    return Graph(g.n(), edges);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    auto edges = g.edges();
    edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

DisjointUnion disjoint_union(std::span<const Graph> parts) {
    DisjointUnion out;
    std::vector<Edge> edges;
    Vertex offset = 0;
    out.offsets.push_back(0);
    for (const auto& part : parts) {
        for (auto [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
        offset += static_cast<Vertex>(part.n());
        out.offsets.push_back(offset);
    }
    out.graph = Graph(static_cast<std::size_t>(offset), edges);
    return out;
}

std::vector<std::size_t> connected_components(const Graph& g) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(g.n(), unset);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbours(v))
                if (comp[u] == unset) {
                    comp[u] = next;
                    stack.push_back(u);
                }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    auto comp = connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

bool is_forest(const Graph& g) {
    auto comp = connected_components(g);
    const std::size_t components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    return g.m() + components == g.n();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, std::size_t line) {
    long long value = 0;
    if (tok.empty()) throw ParseError(line, "expected integer");
    for (char c : tok) {
        if (c < '0' || c > '9') throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
        value = value * 10 + (c - '0');
        if (value > (1LL << 40)) throw ParseError(line, "integer too large");
    }
    return value;
}

}  // namespace

Graph read_graph(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (toks.size() != 4 || toks[1] != "tw") throw ParseError(line_no, "malformed header, expected 'p tw n m'");
            n = parse_int(toks[2], line_no);
            m = parse_int(toks[3], line_no);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "edge line before 'p tw' header");
        if (toks.size() != 2) throw ParseError(line_no, "malformed edge line");
        const long long u = parse_int(toks[0], line_no);
        const long long v = parse_int(toks[1], line_no);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        edge_lines.push_back(line_no);
    }
    if (!have_header) throw ParseError(line_no, "missing 'p tw n m' header");

    std::vector<std::pair<Edge, std::size_t>> keyed;
    keyed.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        keyed.push_back({{std::min(u, v), std::max(u, v)}, edge_lines[i]});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first == keyed[i - 1].first)
            throw ParseError(keyed[i].second, "duplicate edge " + std::to_string(keyed[i].first.first + 1) + " " +
                                                  std::to_string(keyed[i].first.second + 1));
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_graph(ss.str());
}

std::string write_graph(const Graph& g) {
    std::string out = "p tw " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

}  // namespace tnp
