#pragma once

#include <cstdint>
#include <vector>

#include "lcc/covering.hpp"
#include "lcc/generators.hpp"
#include "lcc/graph.hpp"

namespace lcc {

// Greedy maximal independent set over a seeded shuffle of the vertices.
std::vector<Vertex> maximal_independent_set(const Graph& g, Seed s);

// Partition of a triangle-free graph into independent sets, at most
// 2*ceil(sqrt(n)) of them, each of size <= ceil(sqrt(n)). While some vertex
// still has ceil(sqrt(n)) neighbours left, that many of them form a class;
// the rest has small degree and is coloured greedily, classes being cut into
// chunks. Throws PreconditionFailed with a triangle as witness.
std::vector<std::vector<Vertex>> triangle_free_coloring(const Graph& g);

struct Biclique {
    std::vector<Vertex> left, right;
    friend bool operator==(const Biclique&, const Biclique&) = default;
};

// Partition of E(g) into bicliques. The vertices are split into halves A, B;
// A is cut into blocks of t = max(1, floor(log2|B| - 2 log2 log2|B|))
// vertices and, per block, the B-vertices with the same neighbourhood
// pattern inside the block form one biclique with that pattern. Both halves
// are handled recursively.
std::vector<Biclique> biclique_partition_bounded(const Graph& g);

// ceil(n / max(1, log2 n - 2 log2 log2 n)) + 2 ceil(log2 n), the per-vertex
// count the partition above is checked against (0 for n <= 1).
int biclique_bound(int n);

// Bicliques partitioning the edges of g between the disjoint sets a and b,
// by the same block/pattern rule with a as the blocked side.
std::vector<Biclique> bipartite_biclique_partition(const Graph& g, const std::vector<Vertex>& a,
                                                   const std::vector<Vertex>& b);

// Cliques covering every edge of g[N[u]]: C_i + u for each colour class of
// the complement of g[N(u)], and one clique per biclique between every two
// classes. Throws PreconditionFailed with a claw (centre u first) when the
// complement has a triangle.
std::vector<Clique> cover_neighborhood(const Graph& g, Vertex u);

// The edges left uncovered after the neighbourhood coverings, as a graph H
// on the same vertex set.
struct ResidualGraph {
    Graph host;
    Graph h;
    std::vector<Vertex> mis;
    std::vector<int> segment; // index into mis of the unique I-neighbour, -1 when isolated in h
};

// Builds H from the edges of g not covered by `covered` and asserts that an
// edge is in H iff its endpoints share no I-neighbour, and that every
// non-isolated vertex of H has exactly one I-neighbour. Throws
// StructureViolation naming the edge or vertex.
ResidualGraph residual(const Graph& g, const std::vector<Vertex>& mis, const CliqueCovering& covered);

// Each check throws StructureViolation with a witness.
void check_h_neighbourhoods_are_cliques(const ResidualGraph& r); // N_H(x) is a clique of g
void check_cross_segment_edges(const ResidualGraph& r);         // y in N_i, z in N_j, i != j => yz in H
void check_components(const ResidualGraph& r);  // bipartite across two N_i or diameter <= 2; <= 2D vertices
void check_mis_degrees(const Graph& g, const std::vector<Vertex>& mis); // 1 or 2 I-neighbours

struct ClawfreeResult {
    CliqueCovering covering;
    int delta = 0;
    int valency = 0;          // after reduce_covering
    int raw_valency = 0;      // before it
    std::size_t mis_size = 0;
    std::size_t residual_edges = 0;
    std::size_t components = 0; // non-trivial components of H
};

// Neighbourhood coverings over a maximal independent set, then a biclique
// partition of every component of H read as cliques, then reduce_covering.
// Every structural check above runs on the way. Throws PreconditionFailed
// with a claw when g is not claw-free.
ClawfreeResult clawfree_cover(const Graph& g, Seed s);

// 8 * D / log2(D + 2), the valency envelope the pipeline is measured against.
double clawfree_envelope(int delta);

} // namespace lcc
