#include "tnp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>

#include "tnp/errors.hpp"

namespace tnp {

RomanFunction::RomanFunction(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
    for (auto l : labels_) {
        if (l > 2) throw InputError("Roman labels must be 0, 1 or 2");
        weight_ += l;
    }
}

void RomanFunction::set(Vertex v, int label) {
    if (label < 0 || label > 2) throw InputError("Roman labels must be 0, 1 or 2");
    auto& slot = labels_.at(static_cast<std::size_t>(v));
    weight_ += label - slot;
    slot = static_cast<std::uint8_t>(label);
}

VertexSet RomanFunction::level(int label) const {
    VertexSet out(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label) out.insert(static_cast<Vertex>(v));
    return out;
}

BruteCaps BruteCaps::from_environment() {
    BruteCaps caps;
    auto read = [](const char* name, std::size_t& slot) {
        if (const char* s = std::getenv(name)) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(s, &end, 10);
            if (end != s && *end == '\0') slot = static_cast<std::size_t>(v);
        }
    };
    read("TNP_CAP_PACKING", caps.packing);
    read("TNP_CAP_ROMAN", caps.roman);
    read("TNP_CAP_DOMINATION", caps.domination);
    read("TNP_CAP_INDEPENDENT_SET", caps.independent_set);
    return caps;
}

bool is_two_neighbour_packing(const Graph& g, const VertexSet& a) {
    if (a.universe() != g.n()) return false;
    for (std::size_t v = 0; v < g.n(); ++v) {
        int count = a.contains(static_cast<Vertex>(v)) ? 1 : 0;
        for (Vertex u : g.neighbours(static_cast<Vertex>(v))) count += a.contains(u) ? 1 : 0;
        if (count > 2) return false;
    }
    return true;
}

bool is_roman_dominating(const Graph& g, const RomanFunction& f) {
    if (f.size() != g.n()) return false;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (f[static_cast<Vertex>(v)] != 0) continue;
        auto nb = g.neighbours(static_cast<Vertex>(v));
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return f[u] == 2; })) return false;
    }
    return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& d) {
    if (d.universe() != g.n()) return false;
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (d.contains(static_cast<Vertex>(v))) continue;
        auto nb = g.neighbours(static_cast<Vertex>(v));
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return d.contains(u); })) return false;
    }
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) return false;
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v)) return false;
    return true;
}

namespace {

/// Vertices in breadth-first order, each component started at its lowest id.
std::vector<Vertex> bfs_order(const Graph& g) {
    std::vector<Vertex> order;
    order.reserve(g.n());
    std::vector<bool> seen(g.n(), false);
    std::deque<Vertex> queue;
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        queue.push_back(static_cast<Vertex>(s));
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (Vertex u : g.neighbours(v))
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push_back(u);
                }
        }
    }
    return order;
}

class PackingSearch {
public:
    explicit PackingSearch(const Graph& g)
        : g_(g), n_(g.n()), chosen_(n_, false), count_(n_, 0), covered_(n_, false), best_set_(n_, false) {
        // small neighbourhoods first; they tile pendant structures tightly
        centres_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) centres_[v] = static_cast<Vertex>(v);
        std::stable_sort(centres_.begin(), centres_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    }

    SolveResult run() {
        recurse(0, 0);
        SolveResult out;
        out.value = best_;
        VertexSet a(n_);
        for (std::size_t v = 0; v < n_; ++v)
            if (best_set_[v]) a.insert(static_cast<Vertex>(v));
        out.witness = std::move(a);
        out.nodes = nodes_;
        return out;
    }

private:
    bool addable(Vertex v) const {
        if (count_[v] >= 2) return false;
        for (Vertex u : g_.neighbours(v))
            if (count_[u] >= 2) return false;
        return true;
    }

    /// Upper bound on how many of the undecided vertices (ids >= next) can
    /// still be added: closed neighbourhoods with pairwise disjoint free parts
    /// admit at most their residual capacity each, everything else one each.
    int bound(std::size_t next) {
        std::fill(covered_.begin(), covered_.end(), false);
        int free_total = 0;
        for (std::size_t v = next; v < n_; ++v) free_total += addable(static_cast<Vertex>(v)) ? 1 : 0;
        int saved = 0;
        for (Vertex c : centres_) {
            const int cap = 2 - count_[c];
            int k = 0;
            auto is_free = [&](Vertex u) {
                return static_cast<std::size_t>(u) >= next && !covered_[u] && addable(u);
            };
            k += is_free(c) ? 1 : 0;
            for (Vertex u : g_.neighbours(c)) k += is_free(u) ? 1 : 0;
            if (k <= cap) continue;
            if (is_free(c)) covered_[c] = true;
            for (Vertex u : g_.neighbours(c))
                if (is_free(u)) covered_[u] = true;
            saved += k - cap;
        }
        return free_total - saved;
    }

    void recurse(std::size_t next, int size) {
        ++nodes_;
        if (next == n_) {
            if (size > best_) {
                best_ = size;
                best_set_ = chosen_;
            }
            return;
        }
        if (size + bound(next) <= best_) return;
        const auto v = static_cast<Vertex>(next);
        if (addable(v)) {
            chosen_[next] = true;
            ++count_[v];
            for (Vertex u : g_.neighbours(v)) ++count_[u];
            recurse(next + 1, size + 1);
            chosen_[next] = false;
            --count_[v];
            for (Vertex u : g_.neighbours(v)) --count_[u];
        }
        recurse(next + 1, size);
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<bool> chosen_;
    std::vector<int> count_;  // |N[v] ∩ A|
    std::vector<bool> covered_;
    std::vector<bool> best_set_;
    std::vector<Vertex> centres_;
    int best_ = -1;
    std::uint64_t nodes_ = 0;
};

/// Shared machinery of the Roman and plain domination searches: vertices are
/// labelled in BFS order; a vertex is dominated once it carries label 1 or has
/// a 2 in its closed neighbourhood.
class DominationSearch {
public:
    DominationSearch(const Graph& g, std::vector<int> labels_to_try)
        : g_(g),
          n_(g.n()),
          order_(bfs_order(g)),
          try_(std::move(labels_to_try)),
          label_(n_, -1),
          twos_(n_, 0),
          unassigned_(n_, 0),
          spread_(static_cast<int>(g.max_degree()) + 1) {
        closed_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            auto nb = g.neighbours(static_cast<Vertex>(v));
            closed_[v].assign(nb.begin(), nb.end());
            closed_[v].push_back(static_cast<Vertex>(v));
            unassigned_[v] = static_cast<int>(closed_[v].size());
        }
        undominated_ = static_cast<int>(n_);
    }

    /// Runs the search with `initial` as the incumbent.
    std::vector<int> run(std::vector<int> initial, int initial_weight) {
        best_labels_ = std::move(initial);
        best_ = initial_weight;
        recurse(0, 0);
        return best_labels_;
    }

    int best() const noexcept { return best_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool dominated(Vertex v) const { return label_[v] == 1 || twos_[v] > 0; }

    // A 0-labelled vertex whose whole closed neighbourhood is assigned without
    // a 2 can never become dominated.
    bool dead(Vertex v) const { return label_[v] == 0 && twos_[v] == 0 && unassigned_[v] == 0; }

    void assign(Vertex v, int label) {
        label_[v] = label;
        if (label == 1 && twos_[v] == 0) --undominated_;
        if (label == 2) {
            for (Vertex u : closed(v)) {
                if (twos_[u]++ == 0 && label_[u] != 1) --undominated_;
            }
        }
        for (Vertex u : closed(v)) --unassigned_[u];
    }

    void unassign(Vertex v) {
        const int label = label_[v];
        for (Vertex u : closed(v)) ++unassigned_[u];
        if (label == 2) {
            for (Vertex u : closed(v)) {
                if (--twos_[u] == 0 && label_[u] != 1) ++undominated_;
            }
        }
        label_[v] = -1;
        if (label == 1 && twos_[v] == 0) ++undominated_;
    }

    std::span<const Vertex> closed(Vertex v) const { return closed_[static_cast<std::size_t>(v)]; }

    void recurse(std::size_t pos, int weight) {
        ++nodes_;
        // each unit of weight dominates at most (Δ+1)/2 new vertices
        const int lower = (2 * undominated_ + spread_ - 1) / spread_;
        if (weight + lower >= best_) return;
        if (pos == n_) {
            best_ = weight;
            best_labels_ = label_;
            return;
        }
        const Vertex v = order_[pos];
        for (int label : try_) {
            assign(v, label);
            bool ok = true;
            for (Vertex u : closed(v))
                if (dead(u)) ok = false;
            if (ok) recurse(pos + 1, weight + label);
            unassign(v);
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Vertex> order_;
    std::vector<int> try_;
    std::vector<std::vector<Vertex>> closed_;
    std::vector<int> label_;
    std::vector<int> twos_;        // 2-labelled vertices in N[v]
    std::vector<int> unassigned_;  // unassigned vertices in N[v]
    int spread_;
    int undominated_ = 0;
    std::vector<int> best_labels_;
    int best_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult tnp_brute(const Graph& g, std::size_t cap) {
    if (g.n() > cap) throw SizeCapError("tnp_brute", g.n(), cap);
    auto result = PackingSearch(g).run();
    if (!is_two_neighbour_packing(g, result.packing()) || static_cast<int>(result.packing().size()) != result.value)
        throw std::logic_error("tnp_brute produced an invalid witness");
    return result;
}

SolveResult roman_brute(const Graph& g, std::size_t cap) {
    if (g.n() > cap) throw SizeCapError("roman_brute", g.n(), cap);
    DominationSearch search(g, {2, 0, 1});
    const auto labels = search.run(std::vector<int>(g.n(), 1), static_cast<int>(g.n()));
    std::vector<std::uint8_t> bytes(labels.begin(), labels.end());
    SolveResult out;
    out.witness = RomanFunction(std::move(bytes));
    out.value = out.rdf().weight();
    out.nodes = search.nodes();
    if (!is_roman_dominating(g, out.rdf()) || out.value != search.best())
        throw std::logic_error("roman_brute produced an invalid witness");
    return out;
}

SolveResult domination_brute(const Graph& g, std::size_t cap) {
    if (g.n() > cap) throw SizeCapError("domination_brute", g.n(), cap);
    // a dominating set is a Roman function with labels in {0, 2}; weights halve
    DominationSearch search(g, {2, 0});
    const auto labels = search.run(std::vector<int>(g.n(), 2), 2 * static_cast<int>(g.n()) + 1);
    SolveResult out;
    VertexSet d(g.n());
    for (std::size_t v = 0; v < g.n(); ++v)
        if (labels[v] == 2) d.insert(static_cast<Vertex>(v));
    out.value = static_cast<int>(d.size());
    out.witness = std::move(d);
    out.nodes = search.nodes();
    if (!is_dominating_set(g, out.packing())) throw std::logic_error("domination_brute produced an invalid witness");
    return out;
}

SolveResult independent_set_brute(const Graph& g, std::size_t cap) {
    cap = std::min<std::size_t>(cap, 64);
    if (g.n() > cap) throw SizeCapError("independent_set_brute", g.n(), cap);
    const std::size_t n = g.n();
    std::vector<std::uint64_t> closed(n);
    for (std::size_t v = 0; v < n; ++v) {
        closed[v] = std::uint64_t{1} << v;
        for (Vertex u : g.neighbours(static_cast<Vertex>(v))) closed[v] |= std::uint64_t{1} << u;
    }
    int best = -1;
    std::uint64_t best_mask = 0;
    std::uint64_t nodes = 0;
    auto recurse = [&](auto&& self, std::uint64_t candidates, std::uint64_t current) -> void {
        ++nodes;
        const int size = std::popcount(current);
        if (size + std::popcount(candidates) <= best) return;
        if (candidates == 0) {
            best = size;
            best_mask = current;
            return;
        }
        const int v = std::countr_zero(candidates);
        self(self, candidates & ~closed[v], current | (std::uint64_t{1} << v));
        self(self, candidates & ~(std::uint64_t{1} << v), current);
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    recurse(recurse, all, 0);
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
        if ((best_mask >> v) & 1u) s.insert(static_cast<Vertex>(v));
    SolveResult out;
    out.value = best;
    out.witness = std::move(s);
    out.nodes = nodes;
    return out;
}

PrivateNeighbours private_neighbours(const Graph& g, Vertex v, const VertexSet& v2) {
    if (!g.contains(v)) throw InputError("vertex out of range");
    if (!v2.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in V_2");
    PrivateNeighbours out{VertexSet(g.n()), VertexSet(g.n())};
    auto twos_in_closed = [&](Vertex u) {
        int c = v2.contains(u) ? 1 : 0;
        for (Vertex w : g.neighbours(u)) c += v2.contains(w) ? 1 : 0;
        return c;
    };
    auto consider = [&](Vertex u) {
        // u ∈ N[v] with v ∈ V_2, so u is private iff v is the only V_2 vertex in N[u]
        if (twos_in_closed(u) == 1) {
            out.members.insert(u);
            if (!v2.contains(u)) out.external.insert(u);
        }
    };
    consider(v);
    for (Vertex u : g.neighbours(v)) consider(u);
    return out;
}

std::vector<RdfViolation> check_min_rdf_properties(const Graph& g, const RomanFunction& f) {
    if (f.size() != g.n()) throw InputError("labelling size does not match graph");
    std::vector<RdfViolation> out;
    const VertexSet v2 = f.level(2);
    for (std::size_t vi = 0; vi < g.n(); ++vi) {
        const auto v = static_cast<Vertex>(vi);
        const auto nb = g.neighbours(v);
        const auto ones = std::count_if(nb.begin(), nb.end(), [&](Vertex u) { return f[u] == 1; });
        if (f[v] == 1 && ones > 1) out.push_back({'a', {v}});
        if (f[v] == 1) {
            for (Vertex u : nb)
                if (f[u] == 2) out.push_back({'b', {v, u}});
        }
        if (f[v] == 0 && ones > 2) out.push_back({'c', {v}});
        if (f[v] == 2) {
            const auto pn = private_neighbours(g, v, v2);
            if (pn.members.size() < 2) out.push_back({'d', {v}});
            const bool isolated = std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return f[u] == 2; });
            if (isolated && pn.external.size() == 1) {
                const Vertex w = pn.external.members().front();
                for (Vertex x : g.neighbours(w))
                    if (f[x] == 1) out.push_back({'e', {v, w, x}});
            }
        }
    }
    return out;
}

ClosedForm closed_form(Family family, std::span<const int> params) {
    auto ceil_two_thirds = [](int n) { return (2 * n + 2) / 3; };
    switch (family) {
        case Family::Path: {
            if (params.size() != 1 || params[0] < 1) throw InputError("path needs n >= 1");
            const int n = params[0];
            return {ceil_two_thirds(n), ceil_two_thirds(n)};
        }
        case Family::Cycle: {
            if (params.size() != 1 || params[0] < 3) throw InputError("cycle needs n >= 3");
            const int n = params[0];
            return {2 * n / 3, ceil_two_thirds(n)};
        }
        case Family::Multipartite: {
            if (params.size() < 2) throw InputError("multipartite closed form needs at least two parts");
            if (std::any_of(params.begin(), params.end(), [](int p) { return p < 1; }))
                throw InputError("part sizes must be positive");
            const int smallest = *std::min_element(params.begin(), params.end());
            return {2, smallest == 1 ? 2 : smallest == 2 ? 3 : 4};
        }
    }
    throw InputError("unknown family");
}

}  // namespace tnp
