#pragma once

#include <vector>

#include "lcc/graph.hpp"

namespace lcc {

using Clique = std::vector<Vertex>; // strictly increasing

// A list of cliques meant to cover every edge of some host graph. The host
// is not stored; every operation takes it explicitly.
struct CliqueCovering {
    std::vector<Clique> cliques;

    friend bool operator==(const CliqueCovering&, const CliqueCovering&) = default;
};

struct CoverReport {
    bool valid = false;
    int max_valency = 0;
    std::vector<Edge> uncovered_edges;
    std::vector<std::size_t> non_clique_indices;
};

// Sort every clique and drop repeated vertices inside a clique.
CliqueCovering canonical(CliqueCovering c);

// valency[v] = number of cliques containing v.
std::vector<int> valencies(int n, const CliqueCovering& c);
int max_valency(int n, const CliqueCovering& c);

// Singleton cliques are allowed but cover nothing. Throws MalformedInput
// when a clique names a vertex outside g.
CoverReport verify_covering(const Graph& g, const CliqueCovering& c);

// Edges of g covered by at least one clique of size >= 2.
std::vector<Edge> covered_edges(const Graph& g, const CliqueCovering& c);

// Local improvement by two moves, repeated until neither applies:
//   drop  - remove v from a clique when every edge v has inside that clique
//           is covered by another clique (cliques left with < 2 vertices
//           disappear);
//   merge - replace two intersecting cliques by their union when the union
//           is a clique.
// Each pass scans drops first, then merges, both in lexicographic
// (clique index, vertex) order, so the result is deterministic. Neither move
// raises any vertex's valency. Throws InvalidCertificate on invalid input.
CliqueCovering reduce_covering(const Graph& g, const CliqueCovering& c);

} // namespace lcc
