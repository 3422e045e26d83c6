#pragma once

#include "rpt/fraction.hpp"
#include "rpt/vertex_set.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rpt {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple graph on vertices 0..n-1, stored as adjacency bitsets
/// together with the complement rows so that both polarities cost the same.
class Graph
{
public:
    Graph() = default;

    /// Throws PreconditionError on out-of-range endpoints, self-loops, or
    /// duplicate edges.
    Graph(int n, std::span<const Edge> edges);

    static Graph empty(int n) { return Graph(n, {}); }
    static Graph complete(int n);

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    const VertexSet & neighbors(Vertex v) const { return adj_[v]; }
    /// V(G) minus v minus N(v).
    const VertexSet & non_neighbors(Vertex v) const { return non_adj_[v]; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    int degree(Vertex v) const { return adj_[v].size(); }
    int degree_in(Vertex v, const VertexSet & s) const { return adj_[v].count_common(s); }
    int non_degree_in(Vertex v, const VertexSet & s) const { return non_adj_[v].count_common(s); }

    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }

    std::vector<Edge> edges() const;

    friend bool operator==(const Graph & a, const Graph & b) { return a.adj_ == b.adj_; }

private:
    friend Graph complement(const Graph & g);

    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> non_adj_;
};

/// A pattern graph H with its labelled order v_1..v_h. Internally the graph
/// is stored relabelled so that index i is v_{i+1}.
class Pattern
{
public:
    Pattern() = default;
    /// order[i] is the vertex of `graph` that plays v_{i+1}; empty means identity.
    explicit Pattern(const Graph & graph, std::vector<Vertex> order = {});

    int size() const { return labelled_.order(); }
    /// Whether v_{i+1} v_{j+1} is an edge of H (0-based label indices).
    bool adjacent(int i, int j) const { return labelled_.adjacent(i, j); }
    const Graph & labelled() const { return labelled_; }
    const std::vector<Vertex> & order() const { return order_; }
    const std::string & name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// H[{v_1..v_t}] with the inherited labelling.
    Pattern prefix(int t) const;

private:
    Graph labelled_;
    std::vector<Vertex> order_;
    std::string name_;
};

/// K1..K5, P2..P5, C4, C5 (case-insensitive). Throws ParseError otherwise.
Pattern named_pattern(std::string_view name);
Pattern complement(const Pattern & p);

// --- I/O -------------------------------------------------------------------

/// Edge-list document: first non-comment line is n, then one "u v" per line.
/// '#' starts a comment. Errors carry the offending line number.
Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view text);
/// Dispatches to graph6 when the input is a single non-numeric token.
Graph parse_graph(std::string_view text);
std::string to_edge_list(const Graph & g);
std::string to_graph6(const Graph & g);

// --- Structure -------------------------------------------------------------

Graph complement(const Graph & g);

struct InducedSubgraph
{
    Graph graph;
    /// to_host[i] is the host-graph id of local vertex i.
    std::vector<Vertex> to_host;

    VertexSet lift(const VertexSet & local, int host_universe) const;
    VertexSet lower(const VertexSet & host) const;
};

InducedSubgraph induced_subgraph(const Graph & g, const VertexSet & s);

std::size_t edges_within(const Graph & g, const VertexSet & s);
std::size_t edges_between(const Graph & g, const VertexSet & a, const VertexSet & b);

/// |E(G[s])| / C(|s|,2), and exactly 0 when |s| <= 1.
Fraction edge_density(const Graph & g, const VertexSet & s);

/// Δ(G[s]) and Δ(Ḡ[s]); both 0 for |s| <= 1.
int max_degree_within(const Graph & g, const VertexSet & s);
int max_non_degree_within(const Graph & g, const VertexSet & s);

// --- Counting --------------------------------------------------------------

/// ind_H(G): injective maps preserving adjacency and non-adjacency.
BigInt count_induced_copies(const Graph & g, const Pattern & h);

/// Copies φ with φ(v_i) in parts[i]. Parts must be pairwise disjoint.
BigInt count_embeddings_into_parts(const Graph & g, const Pattern & h,
                                   std::span<const VertexSet> parts);

/// Worker cap for internally parallel routines (0 = hardware concurrency).
/// Defaults to RPT_THREADS when set.
void set_max_threads(unsigned threads);
unsigned max_threads();

} // namespace rpt
