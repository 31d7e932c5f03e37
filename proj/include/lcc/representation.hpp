#pragma once

#include <vector>

#include "lcc/covering.hpp"
#include "lcc/graph.hpp"

namespace lcc {

// Vertex -> set of labels drawn from 0..labels-1, such that two distinct
// vertices are adjacent exactly when their sets meet.
struct IntersectionRepresentation {
    int labels = 0;
    std::vector<std::vector<int>> sets; // one sorted set per vertex

    friend bool operator==(const IntersectionRepresentation&, const IntersectionRepresentation&) = default;
};

struct RepresentationReport {
    bool valid = false;
    // first offending pair when invalid: adjacent-but-disjoint or
    // non-adjacent-but-intersecting
    Vertex u = -1, v = -1;
};

RepresentationReport verify_representation(const Graph& g, const IntersectionRepresentation& r);

// Label i = clique index; vertex x gets the indices of the cliques that
// contain it. Throws InvalidCertificate unless c is a valid covering of g.
IntersectionRepresentation covering_to_representation(const Graph& g, const CliqueCovering& c);

// One clique per label carried by at least two vertices. Throws
// InvalidCertificate naming the offending pair when r does not represent g.
CliqueCovering representation_to_covering(const Graph& g, const IntersectionRepresentation& r);

bool is_injective(const IntersectionRepresentation& r);

// Every vertex whose set repeats an earlier vertex's set receives one fresh
// label, so sets grow by at most one and intersections are unchanged.
IntersectionRepresentation make_injective(const IntersectionRepresentation& r);

struct KneserCheck {
    bool embeds = false;
    int k = 0;        // common set size after padding
    int universe = 0; // label universe after padding
};

// Pads every set with fresh labels to the common size k = max |set| and
// checks that disjointness of padded sets coincides with non-adjacency,
// i.e. that the complement of g sits in KG(universe, k) as an induced
// subgraph. Throws PreconditionFailed when r is not injective.
KneserCheck kneser_embedding_check(const Graph& g, const IntersectionRepresentation& r);

} // namespace lcc
