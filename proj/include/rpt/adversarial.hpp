#pragma once

// Graphs with few copies of H that are far from restricted, and the
// brute-force oracles used to cross-check everything else.

#include "rpt/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rpt {

struct HardInstanceSpec
{
    int N = 1;
    /// Core size; at most 24 so the core can be checked exhaustively.
    int m = 20;
    /// Total size, n >= m.
    int n = 20;
    Fraction eps{1, 20};
    Pattern pattern;
    std::uint64_t seed = 7;
    /// Allows m < 20N^2 for tiny exhaustive experiments.
    bool relaxed = false;
    int max_attempts = 100'000;
};

/// Throws PreconditionError unless n >= m >= 20N^2 (m >= 2 when relaxed),
/// m <= 24, ε in (0,1/18) and h >= 2.
void validate(const HardInstanceSpec & spec);

struct HardInstance
{
    Graph graph;
    /// The random core F, on vertices 0..m-1.
    VertexSet core;
    int attempts = 0;
};

/// A fair-coin random core with no weakly 6ε-restricted subset of size
/// >= ⌈m/N⌉, plus n-m independent vertices complete to it.
/// Throws SearchFailure when max_attempts cores all fail.
HardInstance generate_hard_graph(const HardInstanceSpec & spec);

/// A subset of s of size >= min_size with density <= ε or >= 1-ε, by
/// enumerating all subsets of s (|s| <= 24).
std::optional<VertexSet> find_weakly_restricted_subset(const Graph & g, const VertexSet & s, int min_size,
                                                       const Fraction & eps);
/// The same for ε-restricted subsets.
std::optional<VertexSet> find_restricted_subset(const Graph & g, const VertexSet & s, int min_size,
                                                const Fraction & eps);

struct HardGraphCheck
{
    bool ok = true;
    std::vector<std::string> verified_clauses;
    std::string failed_clause;
    BigInt ind;
    BigInt ind_bound;
};

/// ind_H(g) <= h m n^{h-1}; no 3ε-restricted core subset of size >= ⌈m/N⌉;
/// for |g| <= 12 the exact oracle rejects (N,ε)-restrictedness, and for
/// N = 1 both Δ(G) and Δ(Ḡ) exceed ε|G|.
HardGraphCheck verify_hard_graph(const Graph & g, const VertexSet & core, const HardInstanceSpec & spec);

/// A partition of s (default V(g)) into at most N ε-restricted sets, by
/// backtracking. Throws BudgetExceeded when |s| > max_vertices.
std::optional<std::vector<VertexSet>> exact_n_restricted(const Graph & g, int N, const Fraction & eps,
                                                         std::optional<VertexSet> s = std::nullopt,
                                                         int max_vertices = 12);

struct MinRemoval
{
    int size = 0;
    VertexSet removed;
    std::vector<VertexSet> parts;
};

/// Least |S| such that g - S is (N,ε)-restricted, by ascending search.
MinRemoval min_removal_oracle(const Graph & g, int N, const Fraction & eps, int max_vertices = 10);

/// ind_H(g) by trying every injective map. Throws BudgetExceeded when
/// n^h exceeds budget.
BigInt naive_count(const Graph & g, const Pattern & h, std::uint64_t budget = 100'000'000);

} // namespace rpt
