#pragma once

#include <cstdint>
#include <vector>

#include "lcc/graph.hpp"
#include "lcc/interval.hpp"

namespace lcc {

struct Seed {
    std::uint64_t value = 0;
};

// Two cliques X = {0..n-1}, Y = {n..2n-1}; X-vertex i (1-based) sees the
// first i vertices of Y. Requires n >= 1.
Graph gen_k_nabla(int n);

// The K_nabla graph as a linear interval model: points 1..2n, interval
// [i - 1/2, n + i + 1/2] for every i.
IntervalModel k_nabla_model(int n);

// Bipartite graph with rows x_1..x_n (ids 0..n-1) and columns y_1..y_n
// (ids n..2n-1); x_i ~ y_j iff i >= j.
Graph gen_staircase_bipartite(int n);

Graph gen_complete_multipartite(const std::vector<int>& part_sizes);

// Kneser graph KG(n, k); vertices are the k-subsets of {0..n-1} in
// lexicographic order of their sorted element lists. Requires n >= 2k, n <= 62.
Graph gen_kneser(int n, int k);

// Edge-intersection graph of a hypergraph given as a list of hyperedges
// (repeats allowed).
Graph gen_line_graph(const std::vector<std::vector<int>>& hyperedges);

// Random multigraph on `vertices` vertices with `edges` edges (parallel
// edges allowed, no loops), as a hyperedge list for gen_line_graph.
std::vector<std::vector<int>> random_multigraph(int vertices, int edges, Seed s);

// Cliques of sizes ceil(n/2), floor(n/2); each cross pair is an edge with
// probability p.
Graph gen_random_cobipartite(int n, double p, Seed s);

// Points at strictly increasing integer positions, intervals with endpoints
// on half-integers so no endpoint ever coincides with a point.
IntervalModel gen_random_linear_interval(int n_points, int n_intervals, Seed s);

} // namespace lcc
