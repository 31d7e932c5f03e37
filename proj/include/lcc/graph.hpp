#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lcc/bitset.hpp"

namespace lcc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>; // always stored with first < second

// Simple undirected graph on vertices 0..n-1.
//
// Edges are kept twice: as a sorted, duplicate-free pair list and as one
// adjacency bitset per vertex, so adjacency queries are O(1) and clique
// checks reduce to word-wise intersections.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Throws MalformedInput on loops or out-of-range endpoints. Endpoint
    // order is normalized and repeated pairs collapse to one edge.
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(static_cast<std::size_t>(v)); }
    const Bitset& neighborhood(Vertex v) const { return adj_[v]; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
    int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
    int max_degree() const;

    bool is_clique(const std::vector<Vertex>& vs) const;
    bool is_independent(const std::vector<Vertex>& vs) const;

    // Subgraph induced on `vs`; vertex i of the result is vs[i].
    Graph induced(const std::vector<Vertex>& vs) const;

    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
};

Graph complement(const Graph& g);

// Graphviz export: one `graph {}` block, vertex ids as-is.
std::string to_dot(const Graph& g);

// Maximum clique size (0 for the empty vertex set). Branch and bound with a
// greedy-colouring bound; exponential in the worst case.
int clique_number(const Graph& g);

// Independence number of the subgraph induced on `subset`.
int independence_number(const Graph& g, const Bitset& subset);

// A maximum independent set of g[subset] (vertex ids of g).
std::vector<Vertex> maximum_independent_set(const Graph& g, const Bitset& subset);

} // namespace lcc
