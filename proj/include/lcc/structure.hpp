#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lcc/covering.hpp"
#include "lcc/graph.hpp"

namespace lcc {

// Twins are adjacent vertices with equal closed neighbourhoods. Collapsing
// each twin class to its smallest member leaves a twin-free induced
// subgraph with the same local clique cover number.
struct TwinReduction {
    Graph reduced;
    // classes[i] = original vertices represented by reduced vertex i,
    // sorted; classes are ordered by their smallest member.
    std::vector<std::vector<Vertex>> classes;
};

TwinReduction twin_reduce(const Graph& g);
bool is_twin_free(const Graph& g);

// Replaces each reduced vertex by its class. A class whose representative
// lies in no clique of size >= 2 is emitted as a clique of its own when it
// has at least two members. Throws MalformedInput when `classes` is not a
// partition of 0..N-1 or the covering names a vertex with no class.
CliqueCovering twin_lift(const CliqueCovering& reduced, const std::vector<std::vector<Vertex>>& classes);

struct Claw {
    Vertex center = -1;
    std::array<Vertex, 3> leaves{};
};

// nullopt when g is claw-free, otherwise one induced K_{1,3}.
std::optional<Claw> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

// nullopt when triangle-free, otherwise a triangle (sorted).
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

// max over v of the independence number of g[N(v)]; exact, exponential in
// the neighbourhood size.
int alpha_local(const Graph& g);

struct LccBounds {
    int lower = 0;
    int upper = 0;
};

// lower = max(ceil(D/(w-1)), alpha_local), upper = D; (0,0) without edges.
LccBounds lcc_bounds(const Graph& g);

// lcc = 1 exactly for these (among graphs with at least one edge).
bool is_disjoint_union_of_cliques(const Graph& g);

} // namespace lcc
