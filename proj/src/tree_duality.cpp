#include "tnp/tree_duality.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include <json.hpp>

#include "tnp/errors.hpp"

namespace tnp {

namespace {

// Subtree states of the Roman tree DP. For a vertex v and its subtree T_v:
//   Two      f(v) = 2
//   One      f(v) = 1
//   Covered  f(v) = 0 and some child carries 2
//   Needy    f(v) = 0, no child carries 2; only valid if the parent is 2
// cost[s][v] is the minimum weight on T_v of a labelling that is Roman
// dominating on T_v \ {v} (and on v too unless s = Needy).
//
//   Two     = 2 + Σ_c min(Two, One, Covered, Needy)(c)
//   One     = 1 + Σ_c min(Two, One, Covered)(c)
//   Covered = Σ_c min(Two, One, Covered)(c) + min_c [Two(c) - min(Two, One, Covered)(c)]
//   Needy   = Σ_c min(One, Covered)(c)
//
// A leaf has Two = 2, One = 1, Covered = ∞, Needy = 0. The root may not be Needy.
enum State { Two = 0, One = 1, Covered = 2, Needy = 3 };
constexpr long long kInf = std::numeric_limits<long long>::max() / 8;

/// Labels with |N[u] ∩ V_2| maintained per vertex.
class Labelling {
public:
    Labelling(const Graph& g, const RomanFunction& f) : g_(g), f_(f), twos_(g.n(), 0) {
        for (std::size_t v = 0; v < g.n(); ++v)
            if (f_[static_cast<Vertex>(v)] == 2) bump(static_cast<Vertex>(v), +1);
    }

    int operator[](Vertex v) const { return f_[v]; }
    const RomanFunction& function() const { return f_; }

    void set(Vertex v, int label) {
        if (f_[v] == 2) bump(v, -1);
        f_.set(v, label);
        if (label == 2) bump(v, +1);
        touched_.push_back(v);
    }

    /// u is a private neighbour of the unique V_2 vertex in N[u]
    bool private_vertex(Vertex u) const { return twos_[u] == 1; }

    int external_private_count(Vertex v) const {
        int k = 0;
        for (Vertex u : g_.neighbours(v))
            if (f_[u] != 2 && private_vertex(u)) ++k;
        return k;
    }

    /// The unique external private neighbour of v (caller checked the count).
    Vertex external_private(Vertex v) const {
        for (Vertex u : g_.neighbours(v))
            if (f_[u] != 2 && private_vertex(u)) return u;
        throw std::logic_error("no external private neighbour");
    }

    /// Roman domination around every vertex changed since the last call.
    bool locally_dominating() {
        bool ok = true;
        for (Vertex v : touched_) {
            auto check = [&](Vertex u) {
                if (f_[u] == 0 && twos_[u] == 0) ok = false;
            };
            check(v);
            for (Vertex u : g_.neighbours(v)) check(u);
        }
        touched_.clear();
        return ok;
    }

private:
    void bump(Vertex v, int delta) {
        twos_[v] += delta;
        for (Vertex u : g_.neighbours(v)) twos_[u] += delta;
    }

    const Graph& g_;
    RomanFunction f_;
    std::vector<int> twos_;
    std::vector<Vertex> touched_;
};

int private_below(const RootedTree& t, const Labelling& f, Vertex v) {
    int k = f.private_vertex(v) ? 1 : 0;
    for (Vertex c : t.children(v)) k += f.private_vertex(c) ? 1 : 0;
    return k;
}

bool marked(const Labelling& f, Vertex u) {
    return f[u] == 1 || (f[u] == 2 && f.external_private_count(u) == 1);
}

/// For a 2 that is its own private neighbour and has exactly one private
/// child, that child (the 2 then enters the packing itself); -1 otherwise.
Vertex self_selecting(const RootedTree& t, const Labelling& f, Vertex u) {
    if (f[u] != 2 || !f.private_vertex(u)) return -1;
    Vertex only = -1;
    for (Vertex c : t.children(u))
        if (f.private_vertex(c)) {
            if (only >= 0) return -1;
            only = c;
        }
    return only;
}

bool enters_packing(const RootedTree& t, const Labelling& f, Vertex u) {
    return f[u] == 1 || self_selecting(t, f, u) >= 0;
}

/// The private child of a 2 that also selects itself, when that child has a
/// 1-child x; -1 otherwise. Both v and the child would then sit in A next to x.
Vertex crowded_private_child(const RootedTree& t, const Labelling& f, Vertex v, Vertex* x) {
    const Vertex only = self_selecting(t, f, v);
    if (only < 0) return -1;
    for (Vertex y : t.children(only))
        if (f[y] == 1) {
            *x = y;
            return only;
        }
    return -1;
}

}  // namespace

SolveResult roman_tree_dp(const RootedTree& t) {
    const std::size_t n = t.n();
    std::vector<std::array<long long, 4>> cost(n);
    auto best3 = [&](Vertex c) { return std::min({cost[c][Two], cost[c][One], cost[c][Covered]}); };
    for (Vertex v : t.post_order()) {
        long long two = 2, one = 1, base = 0, needy = 0, bonus = kInf;
        for (Vertex c : t.children(v)) {
            const long long m = best3(c);
            two += std::min(m, cost[c][Needy]);
            one += m;
            base += m;
            needy += std::min(cost[c][One], cost[c][Covered]);
            bonus = std::min(bonus, cost[c][Two] - m);
        }
        cost[v] = {two, one, bonus >= kInf ? kInf : base + bonus, std::min(needy, kInf)};
    }

    // top-down reconstruction, earliest state wins ties
    RomanFunction f(n);
    std::vector<int> state(n, Two);
    const Vertex root = t.root();
    {
        int s = Two;
        for (int c : {One, Covered})
            if (cost[root][c] < cost[root][s]) s = c;
        state[root] = s;
    }
    for (auto it = t.post_order().rbegin(); it != t.post_order().rend(); ++it) {
        const Vertex v = *it;
        const int s = state[v];
        f.set(v, s == Two ? 2 : s == One ? 1 : 0);
        auto argmin = [&](Vertex c, std::initializer_list<int> allowed) {
            int best = *allowed.begin();
            for (int a : allowed)
                if (cost[c][a] < cost[c][best]) best = a;
            return best;
        };
        Vertex forced = -1;
        if (s == Covered) {
            long long bonus = kInf;
            for (Vertex c : t.children(v)) {
                const long long d = cost[c][Two] - best3(c);
                if (d < bonus) {
                    bonus = d;
                    forced = c;
                }
            }
        }
        for (Vertex c : t.children(v)) {
            if (c == forced)
                state[c] = Two;
            else if (s == Two)
                state[c] = argmin(c, {Two, One, Covered, Needy});
            else if (s == Needy)
                state[c] = argmin(c, {One, Covered});
            else
                state[c] = argmin(c, {Two, One, Covered});
        }
    }

    SolveResult out;
    out.value = static_cast<int>(std::min({cost[root][Two], cost[root][One], cost[root][Covered]}));
    out.witness = std::move(f);
    out.nodes = n;
    if (!is_roman_dominating(t.graph(), out.rdf()) || out.rdf().weight() != out.value)
        throw std::logic_error("roman_tree_dp produced an invalid witness");
    return out;
}

std::vector<LemmaViolation> check_lemma_properties(const RootedTree& t, const RomanFunction& f) {
    if (f.size() != t.n()) throw InputError("labelling size does not match tree");
    const Labelling lab(t.graph(), f);
    std::vector<LemmaViolation> out;
    for (std::size_t vi = 0; vi < t.n(); ++vi) {
        const auto v = static_cast<Vertex>(vi);
        const auto kids = t.children(v);
        const auto ones = (f[v] == 1 ? 1 : 0) + std::count_if(kids.begin(), kids.end(), [&](Vertex c) { return f[c] == 1; });
        if (ones > 1) out.push_back({1, v});
        if (f[v] == 2 && private_below(t, lab, v) < 2) out.push_back({2, v});
        if (f[v] == 0 && std::count_if(kids.begin(), kids.end(), [&](Vertex c) { return marked(lab, c); }) > 1)
            out.push_back({3, v});
        if (Vertex x; crowded_private_child(t, lab, v, &x) >= 0) out.push_back({4, v});
        if (f[v] == 0 &&
            std::count_if(kids.begin(), kids.end(), [&](Vertex c) { return enters_packing(t, lab, c); }) > 1)
            out.push_back({5, v});
    }
    return out;
}

RomanFunction normalize_rdf(const RootedTree& t, const RomanFunction& f, NormalizeStats* stats) {
    const Graph& g = t.graph();
    if (f.size() != t.n() || !is_roman_dominating(g, f))
        throw PreconditionError("normalize_rdf: input is not a Roman dominating function");
    if (f.weight() != roman_tree_dp(t).value)
        throw PreconditionError("normalize_rdf: input does not have minimum weight");

    Labelling lab(g, f);
    NormalizeStats local;
    auto not_minimum = [](const char* why) {
        return PreconditionError(std::string("normalize_rdf: ") + why + "; input is not a minimum-weight function");
    };
    auto step = [&] {
        ++local.steps;
        if (!lab.locally_dominating() || lab.function().weight() != f.weight())
            throw std::logic_error("normalize_rdf: transformation broke the Roman function");
    };
    auto first_child_labelled = [&](Vertex v, int label) -> Vertex {
        for (Vertex c : t.children(v))
            if (lab[c] == label) return c;
        return -1;
    };

    const std::size_t max_passes = t.n() + 1;
    while (true) {
        ++local.passes;
        for (Vertex v : t.post_order()) {
            if (lab[v] == 1) {
                // two neighbouring 1s: v becomes 2, the child 0
                if (Vertex u = first_child_labelled(v, 1); u >= 0) {
                    lab.set(v, 2);
                    lab.set(u, 0);
                    step();
                }
            } else if (lab[v] == 2) {
                const Vertex w = t.parent(v);
                if (private_below(t, lab, v) >= 2) {
                    Vertex x;
                    const Vertex u = crowded_private_child(t, lab, v, &x);
                    if (u < 0) continue;
                    // v, u and x would all enter A: move the 2 down to u, x
                    // becomes 0 and the parent, now undominated, takes a 1
                    if (w < 0 || lab[w] != 0 || !lab.private_vertex(w)) throw not_minimum("a 2 has a redundant label");
                    lab.set(v, 0);
                    lab.set(u, 2);
                    lab.set(x, 0);
                    lab.set(w, 1);
                    step();
                    continue;
                }
                if (w < 0 || lab[w] != 0 || !lab.private_vertex(w)) throw not_minimum("a 2 lacks private neighbours");
                std::vector<Vertex> private_kids;
                for (Vertex c : t.children(v))
                    if (lab.private_vertex(c)) private_kids.push_back(c);
                if (private_kids.empty()) {
                    if (!lab.private_vertex(v)) throw not_minimum("a 2 has a single private neighbour");
                    // every child is 0 and covered from below: hand the 2 to the parent
                    lab.set(v, 0);
                    lab.set(w, 2);
                    step();
                } else {
                    // private child u and parent w take a 1 each
                    const Vertex u = private_kids.front();
                    lab.set(v, 0);
                    lab.set(u, 1);
                    lab.set(w, 1);
                    step();
                    if (Vertex x = first_child_labelled(u, 1); x >= 0) {
                        lab.set(u, 2);
                        lab.set(x, 0);
                        step();
                    }
                }
            } else {
                std::vector<Vertex> ones, twos;
                for (Vertex c : t.children(v)) {
                    if (lab[c] == 1) ones.push_back(c);
                    else if (marked(lab, c) || self_selecting(t, lab, c) >= 0) twos.push_back(c);
                }
                if (ones.size() + twos.size() <= 1) continue;
                if (ones.size() + twos.size() > 2) throw not_minimum("a 0 has more than two marked children");
                // each such 2 hands its label to v and its remaining private
                // neighbour takes a 1
                std::vector<Vertex> to_one;
                for (Vertex c : twos) {
                    const Vertex pc = self_selecting(t, lab, c);
                    to_one.push_back(pc >= 0 ? pc : lab.external_private(c));
                }
                lab.set(v, 2);
                for (Vertex c : ones) lab.set(c, 0);
                for (Vertex c : twos) lab.set(c, 0);
                for (Vertex u : to_one) lab.set(u, 1);
                step();
            }
        }
        if (check_lemma_properties(t, lab.function()).empty()) break;
        if (local.passes >= max_passes) throw std::logic_error("normalize_rdf: no fixed point reached");
    }
    if (local.steps > 2 * t.n() * local.passes) throw std::logic_error("normalize_rdf: step bound exceeded");
    if (stats) *stats = local;
    return lab.function();
}

VertexSet build_packing(const RootedTree& t, const RomanFunction& f) {
    const Graph& g = t.graph();
    if (f.size() != t.n() || !is_roman_dominating(g, f))
        throw PreconditionError("build_packing: input is not a Roman dominating function");
    if (auto violations = check_lemma_properties(t, f); !violations.empty())
        throw PreconditionError("build_packing: property (" + std::to_string(violations.front().property) +
                                ") fails at vertex " + std::to_string(violations.front().vertex));
    const Labelling lab(g, f);
    VertexSet a(t.n());
    for (std::size_t v = 0; v < t.n(); ++v)
        if (f[static_cast<Vertex>(v)] == 1) a.insert(static_cast<Vertex>(v));
    for (std::size_t vi = 0; vi < t.n(); ++vi) {
        const auto v = static_cast<Vertex>(vi);
        if (f[v] != 2) continue;
        std::vector<Vertex> candidates;
        for (Vertex c : t.children(v))
            if (lab.private_vertex(c)) candidates.push_back(c);
        if (lab.private_vertex(v)) candidates.push_back(v);
        for (std::size_t i = 0; i < 2; ++i)
            if (!a.insert(candidates.at(i)))
                throw std::logic_error("build_packing: private neighbour selected twice");
    }
    if (!is_two_neighbour_packing(g, a))
        throw PreconditionError("build_packing: construction is not a packing; input is not minimum weight");
    return a;
}

DualityCertificate certify_tree(const RootedTree& t) {
    DualityCertificate c;
    c.n = t.n();
    c.root = t.root();
    const auto dp = roman_tree_dp(t);
    c.rdf = normalize_rdf(t, dp.rdf());
    c.packing = build_packing(t, c.rdf);
    c.value = c.rdf.weight();
    c.verified = is_roman_dominating(t.graph(), c.rdf) && is_two_neighbour_packing(t.graph(), c.packing) &&
                 static_cast<int>(c.packing.size()) == c.rdf.weight() && c.rdf.weight() == dp.value;
    return c;
}

std::string to_json(const DualityCertificate& c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["root"] = c.root;
    j["gamma_R"] = c.value;
    j["rdf"] = std::vector<int>(c.rdf.labels().begin(), c.rdf.labels().end());
    j["packing"] = c.packing.members();
    j["verified"] = c.verified;
    return j.dump();
}

}  // namespace tnp
