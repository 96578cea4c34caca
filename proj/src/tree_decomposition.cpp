#include "tnp/tree_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "tnp/errors.hpp"

namespace tnp {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
    TreeDecomposition td;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        td.bags.push_back(nodes[i].bag);
        for (std::size_t c : nodes[i].children) edges.emplace_back(static_cast<Vertex>(c), static_cast<Vertex>(i));
    }
    td.tree = Graph(nodes.size(), edges);
    return td;
}

namespace {

std::string edge_name(Vertex u, Vertex v) { return "{" + std::to_string(u) + ", " + std::to_string(v) + "}"; }

}  // namespace

std::vector<TdViolation> validate(const Graph& g, const TreeDecomposition& td) {
    using C = TdViolation::Condition;
    std::vector<TdViolation> out;
    const std::size_t nodes = td.bags.size();
    if (td.tree.n() != nodes) {
        out.push_back({C::Structure, "tree has " + std::to_string(td.tree.n()) + " nodes but there are " +
                                         std::to_string(nodes) + " bags"});
        return out;
    }
    if (nodes > 0 && !is_tree(td.tree)) out.push_back({C::Structure, "node graph is not a tree"});
    if (nodes == 0 && g.n() > 0) out.push_back({C::VertexCoverage, "decomposition has no bags"});

    // occurrence lists per vertex
    std::vector<std::vector<Vertex>> occurs(g.n());
    for (std::size_t t = 0; t < nodes; ++t) {
        const auto& bag = td.bags[t];
        if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            out.push_back({C::Structure, "bag " + std::to_string(t) + " is not a sorted set"});
        for (Vertex v : bag) {
            if (!g.contains(v)) {
                out.push_back({C::Structure, "bag " + std::to_string(t) + " holds vertex " + std::to_string(v) +
                                                 " outside the graph"});
                continue;
            }
            occurs[v].push_back(static_cast<Vertex>(t));
        }
    }
    if (!out.empty()) return out;

    for (std::size_t v = 0; v < g.n(); ++v)
        if (occurs[v].empty())
            out.push_back({C::VertexCoverage, "vertex " + std::to_string(v) + " is in no bag"});

    for (auto [u, v] : g.edges()) {
        const auto& a = occurs[u];
        const auto& b = occurs[v];
        std::vector<Vertex> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) out.push_back({C::EdgeCoverage, "edge " + edge_name(u, v) + " is in no bag"});
    }

    // occurrence nodes of v induce a subtree iff they are connected in the tree
    if (nodes > 0 && is_tree(td.tree)) {
        std::vector<char> mark(nodes, 0);
        for (std::size_t v = 0; v < g.n(); ++v) {
            const auto& occ = occurs[v];
            if (occ.size() <= 1) continue;
            for (Vertex t : occ) mark[t] = 1;
            std::vector<Vertex> stack{occ.front()};
            mark[occ.front()] = 2;
            std::size_t reached = 1;
            while (!stack.empty()) {
                Vertex t = stack.back();
                stack.pop_back();
                for (Vertex s : td.tree.neighbours(t))
                    if (mark[s] == 1) {
                        mark[s] = 2;
                        ++reached;
                        stack.push_back(s);
                    }
            }
            if (reached != occ.size())
                out.push_back({C::Connectivity, "bags containing vertex " + std::to_string(v) + " are not connected"});
            for (Vertex t : occ) mark[t] = 0;
        }
    }
    return out;
}

TreeDecomposition decompose_tree(const Graph& g) {
    if (!is_forest(g)) throw PreconditionError("decompose_tree: graph contains a cycle");
    TreeDecomposition td;
    std::vector<Edge> links;
    std::vector<Vertex> parent(g.n(), -1);
    std::vector<bool> seen(g.n(), false);
    // node holding the edge {parent(v), v}
    std::vector<Vertex> edge_node(g.n(), -1);
    Vertex previous_component = -1;

    for (std::size_t s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        const auto root = static_cast<Vertex>(s);
        Vertex component_first = -1;
        if (g.degree(root) == 0) {
            component_first = static_cast<Vertex>(td.bags.size());
            td.bags.push_back({root});
        }
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbours(v)) {
                if (seen[u]) continue;
                seen[u] = true;
                parent[u] = v;
                const auto node = static_cast<Vertex>(td.bags.size());
                td.bags.push_back({std::min(u, v), std::max(u, v)});
                edge_node[u] = node;
                if (component_first < 0) {
                    component_first = node;
                } else if (parent[v] >= 0) {
                    links.emplace_back(node, edge_node[v]);
                } else {
                    // edges at the component root hang off its first edge bag
                    links.emplace_back(node, component_first);
                }
                stack.push_back(u);
            }
        }
        if (previous_component >= 0) links.emplace_back(previous_component, component_first);
        previous_component = component_first;
    }
    td.tree = Graph(td.bags.size(), links);
    return td;
}

TreeDecomposition decompose_heuristic(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> eliminated(n, false);
    std::vector<long long> fill(n, 0);

    auto compute_fill = [&](Vertex v) {
        long long missing = 0;
        for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
            for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                if (!adj[*it].count(*jt)) ++missing;
        return missing;
    };
    for (std::size_t v = 0; v < n; ++v) fill[v] = compute_fill(static_cast<Vertex>(v));

    std::vector<Vertex> order;
    std::vector<std::vector<Vertex>> bags_by_vertex(n);
    std::vector<std::size_t> position(n, 0);
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            if (best < 0 || fill[v] < fill[best] ||
                (fill[v] == fill[best] && adj[v].size() < adj[best].size()))
                best = static_cast<Vertex>(v);
        }
        const std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
        auto& bag = bags_by_vertex[best];
        bag = nb;
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        position[best] = step;
        order.push_back(best);
        eliminated[best] = true;

        for (Vertex u : nb) adj[u].erase(best);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        adj[best].clear();
        // fill scores can only change within distance two of the eliminated vertex
        std::set<Vertex> touched(nb.begin(), nb.end());
        for (Vertex u : nb) touched.insert(adj[u].begin(), adj[u].end());
        for (Vertex u : touched) fill[u] = compute_fill(u);
    }

    // node i holds the bag of the i-th eliminated vertex; it hangs below the
    // node of its earliest-eliminated later neighbour
    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<Edge> links;
    Vertex previous_root = -1;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        td.bags[i] = bags_by_vertex[v];
        std::size_t parent = std::numeric_limits<std::size_t>::max();
        for (Vertex u : bags_by_vertex[v])
            if (u != v) parent = std::min(parent, position[u]);
        if (parent != std::numeric_limits<std::size_t>::max()) {
            links.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(parent));
        } else {
            if (previous_root >= 0) links.emplace_back(previous_root, static_cast<Vertex>(i));
            previous_root = static_cast<Vertex>(i);
        }
    }
    td.tree = Graph(n, links);
    return td;
}

std::vector<TdViolation> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
    using C = TdViolation::Condition;
    std::vector<TdViolation> out;
    const std::size_t count = ntd.nodes.size();
    if (count == 0) {
        if (g.n() > 0) out.push_back({C::VertexCoverage, "decomposition has no nodes"});
        return out;
    }
    if (ntd.root >= count) {
        out.push_back({C::Structure, "root id out of range"});
        return out;
    }
    std::vector<int> parents(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& node = ntd.nodes[i];
        const auto where = "node " + std::to_string(i) + ": ";
        for (std::size_t c : node.children) {
            if (c >= i) {
                out.push_back({C::Structure, where + "child id not smaller than parent id"});
                return out;
            }
            ++parents[c];
        }
        if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
            std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end())
            out.push_back({C::Structure, where + "bag is not a sorted set"});
        auto bag_minus = [](std::vector<Vertex> bag, Vertex v) {
            bag.erase(std::remove(bag.begin(), bag.end(), v), bag.end());
            return bag;
        };
        switch (node.kind) {
            case NodeKind::Leaf:
                if (!node.children.empty() || node.bag.size() != 1 || node.bag.front() != node.vertex)
                    out.push_back({C::Structure, where + "leaf must be childless with bag {vertex}"});
                break;
            case NodeKind::Introduce: {
                if (node.children.size() != 1) {
                    out.push_back({C::Structure, where + "introduce needs one child"});
                    break;
                }
                const auto& child = ntd.nodes[node.children[0]].bag;
                if (std::find(child.begin(), child.end(), node.vertex) != child.end() ||
                    bag_minus(node.bag, node.vertex) != child ||
                    std::find(node.bag.begin(), node.bag.end(), node.vertex) == node.bag.end())
                    out.push_back({C::Structure, where + "introduce bag must be child bag plus a new vertex"});
                break;
            }
            case NodeKind::Forget: {
                if (node.children.size() != 1) {
                    out.push_back({C::Structure, where + "forget needs one child"});
                    break;
                }
                const auto& child = ntd.nodes[node.children[0]].bag;
                if (std::find(child.begin(), child.end(), node.vertex) == child.end() ||
                    bag_minus(child, node.vertex) != node.bag)
                    out.push_back({C::Structure, where + "forget bag must be child bag minus one vertex"});
                break;
            }
            case NodeKind::Join:
                if (node.children.size() != 2 || ntd.nodes[node.children[0]].bag != node.bag ||
                    ntd.nodes[node.children[1]].bag != node.bag)
                    out.push_back({C::Structure, where + "join needs two children with identical bags"});
                break;
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        const int expected = i == ntd.root ? 0 : 1;
        if (parents[i] != expected)
            out.push_back({C::Structure, "node " + std::to_string(i) + " has " + std::to_string(parents[i]) +
                                             " parents"});
    }
    if (!out.empty()) return out;
    auto more = validate(g, ntd.as_tree_decomposition());
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g) {
    if (auto violations = validate(g, td); !violations.empty())
        throw InputError("make_nice: invalid decomposition: " + violations.front().detail);
    NiceTreeDecomposition ntd;
    const std::size_t count = td.bags.size();
    if (count == 0) return ntd;

    auto add = [&](NiceNode node) {
        ntd.nodes.push_back(std::move(node));
        return ntd.nodes.size() - 1;
    };
    // walks the bag of node `from` to `target` by forgetting, then introducing
    auto chain = [&](std::size_t from, const std::vector<Vertex>& target) {
        std::vector<Vertex> bag = ntd.nodes[from].bag;
        std::vector<Vertex> drop, gain;
        std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(), std::back_inserter(drop));
        std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(), std::back_inserter(gain));
        for (Vertex v : drop) {
            bag.erase(std::find(bag.begin(), bag.end(), v));
            from = add({NodeKind::Forget, bag, v, {from}});
        }
        for (Vertex v : gain) {
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
            from = add({NodeKind::Introduce, bag, v, {from}});
        }
        return from;
    };

    std::size_t root = 0;
    for (std::size_t t = 1; t < count; ++t)
        if (td.tree.degree(static_cast<Vertex>(t)) > td.tree.degree(static_cast<Vertex>(root))) root = t;

    // BFS order from the root; processed in reverse so children come first
    std::vector<Vertex> order{static_cast<Vertex>(root)};
    std::vector<Vertex> parent(count, -1);
    std::vector<bool> seen(count, false);
    seen[root] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex s : td.tree.neighbours(order[i]))
            if (!seen[s]) {
                seen[s] = true;
                parent[s] = order[i];
                order.push_back(s);
            }

    std::vector<std::vector<std::size_t>> pending(count);
    std::optional<std::size_t> top;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto t = static_cast<std::size_t>(*it);
        const auto& bag = td.bags[t];
        std::vector<std::size_t> branches;
        for (std::size_t c : pending[t]) branches.push_back(chain(c, bag));
        std::optional<std::size_t> result;
        if (branches.empty()) {
            if (!bag.empty()) {
                std::size_t node = add({NodeKind::Leaf, {bag.front()}, bag.front(), {}});
                result = chain(node, bag);
            }
        } else {
            std::size_t acc = branches.front();
            for (std::size_t i = 1; i < branches.size(); ++i) acc = add({NodeKind::Join, bag, -1, {acc, branches[i]}});
            result = acc;
        }
        if (!result) continue;
        if (parent[t] >= 0)
            pending[parent[t]].push_back(*result);
        else
            top = result;
    }
    if (!top) return ntd;

    std::vector<Vertex> bag = ntd.nodes[*top].bag;
    std::size_t node = *top;
    while (bag.size() > 1) {
        const Vertex v = bag.back();
        bag.pop_back();
        node = add({NodeKind::Forget, bag, v, {node}});
    }
    ntd.root = node;
    return ntd;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
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

long long number(std::string_view tok, std::size_t line) {
    if (tok.empty() || tok.size() > 12) throw ParseError(line, "expected integer");
    long long value = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

TreeDecomposition read_td(std::string_view text, const Graph& g) {
    std::size_t line_no = 0;
    bool header = false;
    long long node_count = 0, declared_bag = 0, vertex_count = 0;
    std::vector<std::optional<std::vector<Vertex>>> bags;
    std::vector<Edge> links;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto toks = tokens(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "s") {
            if (header) throw ParseError(line_no, "duplicate header");
            if (toks.size() != 5 || toks[1] != "td") throw ParseError(line_no, "malformed header, expected 's td N w n'");
            node_count = number(toks[2], line_no);
            declared_bag = number(toks[3], line_no);
            vertex_count = number(toks[4], line_no);
            if (vertex_count != static_cast<long long>(g.n()))
                throw ParseError(line_no, "header declares " + std::to_string(vertex_count) +
                                              " vertices, graph has " + std::to_string(g.n()));
            bags.assign(static_cast<std::size_t>(node_count), std::nullopt);
            header = true;
            continue;
        }
        if (!header) throw ParseError(line_no, "content before 's td' header");
        if (toks[0] == "b") {
            if (toks.size() < 2) throw ParseError(line_no, "bag line without id");
            const long long id = number(toks[1], line_no);
            if (id < 1 || id > node_count) throw ParseError(line_no, "bag id out of range");
            auto& slot = bags[static_cast<std::size_t>(id - 1)];
            if (slot) throw ParseError(line_no, "bag " + std::to_string(id) + " defined twice");
            std::vector<Vertex> bag;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                const long long v = number(toks[i], line_no);
                if (v < 1 || v > vertex_count)
                    throw ParseError(line_no, "bag references vertex " + std::to_string(v) + " outside 1.." +
                                                  std::to_string(vertex_count));
                bag.push_back(static_cast<Vertex>(v - 1));
            }
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
                throw ParseError(line_no, "bag lists a vertex twice");
            if (static_cast<long long>(bag.size()) > declared_bag)
                throw ParseError(line_no, "bag larger than declared maximum " + std::to_string(declared_bag));
            slot = std::move(bag);
            continue;
        }
        if (toks.size() != 2) throw ParseError(line_no, "malformed tree edge line");
        const long long a = number(toks[0], line_no);
        const long long b = number(toks[1], line_no);
        if (a < 1 || a > node_count || b < 1 || b > node_count || a == b)
            throw ParseError(line_no, "tree edge references invalid node");
        links.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    }
    if (!header) throw ParseError(line_no, "missing 's td' header");
    TreeDecomposition td;
    for (std::size_t i = 0; i < bags.size(); ++i) {
        if (!bags[i]) throw ParseError(line_no, "bag " + std::to_string(i + 1) + " missing");
        td.bags.push_back(*bags[i]);
    }
    try {
        td.tree = Graph(td.bags.size(), links);
    } catch (const InputError& e) {
        throw ParseError(line_no, std::string("tree edges: ") + e.what());
    }
    if (auto violations = validate(g, td); !violations.empty())
        throw ParseError(line_no, "invalid decomposition: " + violations.front().detail);
    return td;
}

TreeDecomposition read_td_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_td(ss.str(), g);
}

std::string write_td(const TreeDecomposition& td, std::size_t graph_vertices) {
    std::string out = "s td " + std::to_string(td.bags.size()) + " " + std::to_string(td.width() + 1) + " " +
                      std::to_string(graph_vertices) + "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out += "b " + std::to_string(i + 1);
        for (Vertex v : td.bags[i]) out += " " + std::to_string(v + 1);
        out += "\n";
    }
    for (auto [a, b] : td.tree.edges()) out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

}  // namespace tnp
