#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tnp/graph.hpp"
#include "tnp/oracles.hpp"

namespace tnp {

/// A Roman dominating function and a two-neighbour packing of equal weight on
/// the same tree; by weak duality both are optimal.
struct DualityCertificate {
    std::size_t n = 0;
    Vertex root = 0;
    int value = 0;
    RomanFunction rdf;
    VertexSet packing;
    /// Recomputed by the checkers, never copied from a solver claim.
    bool verified = false;
};

/// Minimum-weight Roman dominating function of a tree in linear time.
SolveResult roman_tree_dp(const RootedTree& t);

struct LemmaViolation {
    int property;  // 1..5
    Vertex vertex;
};

/// With T_v the subtree rooted at v and private neighbours taken wrt V_2:
///   (1) N[v] ∩ T_v holds at most one vertex labelled 1
///   (2) f(v) = 2  =>  N[v] ∩ T_v holds at least two private neighbours of v
///   (3) f(v) = 0  =>  N[v] ∩ T_v holds at most one vertex u with f(u) = 1,
///       or with f(u) = 2 and exactly one external private neighbour
///   (4) f(v) = 2 with exactly one private child u, v itself private  =>  no
///       child of u is labelled 1 (otherwise N[u] would meet the packing
///       built below in v, u and that child)
///   (5) f(v) = 0  =>  at most one child u with f(u) = 1, or with f(u) = 2,
///       u its own private neighbour and exactly one private child of u
///       (the children that enter the packing)
std::vector<LemmaViolation> check_lemma_properties(const RootedTree& t, const RomanFunction& f);

struct NormalizeStats {
    std::size_t steps = 0;
    std::size_t passes = 0;
};

/// Rewrites a minimum-weight Roman dominating function of t, bottom-up, into
/// one of the same weight satisfying check_lemma_properties. Throws
/// PreconditionError if f is not Roman dominating or not of minimum weight.
RomanFunction normalize_rdf(const RootedTree& t, const RomanFunction& f, NormalizeStats* stats = nullptr);

/// V_1 plus two private neighbours inside T_v for every v in V_2, children
/// first, lowest id first. Throws PreconditionError naming the failed lemma
/// property when f is not normalized.
VertexSet build_packing(const RootedTree& t, const RomanFunction& f);

/// roman_tree_dp -> normalize_rdf -> build_packing, with both witnesses
/// re-verified.
DualityCertificate certify_tree(const RootedTree& t);

/// {"n", "root", "gamma_R", "rdf", "packing", "verified"}
std::string to_json(const DualityCertificate& c);

}  // namespace tnp
