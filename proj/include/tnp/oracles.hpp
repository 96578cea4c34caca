#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tnp/graph.hpp"

namespace tnp {

/// Labelling V -> {0, 1, 2}.
class RomanFunction {
public:
    RomanFunction() = default;
    explicit RomanFunction(std::size_t n) : labels_(n, 0) {}
    /// Throws InputError on a label outside {0,1,2}.
    explicit RomanFunction(std::vector<std::uint8_t> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    int operator[](Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
    void set(Vertex v, int label);
    int weight() const noexcept { return weight_; }
    std::span<const std::uint8_t> labels() const noexcept { return labels_; }
    /// V_i
    VertexSet level(int label) const;

    friend bool operator==(const RomanFunction& a, const RomanFunction& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::uint8_t> labels_;
    int weight_ = 0;
};

/// Optimal value, certifying witness, and search effort of an exact solver.
struct SolveResult {
    int value = 0;
    std::variant<std::monostate, VertexSet, RomanFunction> witness;
    std::uint64_t nodes = 0;

    const VertexSet& packing() const { return std::get<VertexSet>(witness); }
    const RomanFunction& rdf() const { return std::get<RomanFunction>(witness); }
};

/// Refusal thresholds of the exhaustive solvers (vertex counts).
struct BruteCaps {
    std::size_t packing = 24;
    std::size_t roman = 14;
    std::size_t domination = 20;
    std::size_t independent_set = 40;

    /// Defaults overridden by TNP_CAP_PACKING, TNP_CAP_ROMAN, TNP_CAP_DOMINATION,
    /// TNP_CAP_INDEPENDENT_SET when set.
    static BruteCaps from_environment();
};

bool is_two_neighbour_packing(const Graph& g, const VertexSet& a);

bool is_roman_dominating(const Graph& g, const RomanFunction& f);

bool is_dominating_set(const Graph& g, const VertexSet& d);

bool is_independent_set(const Graph& g, const VertexSet& s);

/// Maximum two-neighbour packing by exhaustive branch and bound.
SolveResult tnp_brute(const Graph& g, std::size_t cap = BruteCaps{}.packing);

/// Minimum-weight Roman dominating function by exhaustive branch and bound.
SolveResult roman_brute(const Graph& g, std::size_t cap = BruteCaps{}.roman);

/// Minimum dominating set.
SolveResult domination_brute(const Graph& g, std::size_t cap = BruteCaps{}.domination);

/// Maximum independent set.
SolveResult independent_set_brute(const Graph& g, std::size_t cap = BruteCaps{}.independent_set);

struct PrivateNeighbours {
    VertexSet members;
    /// members outside V_2
    VertexSet external;
};

/// Private neighbours of v with respect to v2. Throws InputError if v is not in v2.
PrivateNeighbours private_neighbours(const Graph& g, Vertex v, const VertexSet& v2);

struct RdfViolation {
    char property;  // 'a' .. 'e'
    std::vector<Vertex> vertices;
};

/// Structural properties every minimum-weight Roman dominating function has:
///   (a) G[V_1] has maximum degree at most 1
///   (b) no edge joins V_1 and V_2
///   (c) each V_0 vertex has at most two neighbours in V_1
///   (d) each V_2 vertex has at least two private neighbours wrt V_2
///   (e) if v is isolated in G[V_2] with exactly one external private
///       neighbour w, then w has no neighbour in V_1
/// Reports violations; never assumes minimality.
std::vector<RdfViolation> check_min_rdf_properties(const Graph& g, const RomanFunction& f);

enum class Family { Path, Cycle, Multipartite };

struct ClosedForm {
    int packing;  // \bar gamma_R
    int roman;    // gamma_R
};

/// Known values on paths P_n, cycles C_n (n >= 3) and complete multipartite
/// graphs with at least two parts (the part sizes are `params`; for paths
/// and cycles `params` holds the single value n).
///
/// A one-part "multipartite" graph is edgeless and its packing number is the
/// part size, not 2, so it is rejected.
ClosedForm closed_form(Family family, std::span<const int> params);

}  // namespace tnp
