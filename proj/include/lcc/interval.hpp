#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lcc/covering.hpp"
#include "lcc/graph.hpp"

namespace lcc {

using Rational = boost::rational<long long>;

struct Interval {
    Rational lo, hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Points on a line (vertex i is points[i]) plus closed intervals; two
// vertices are adjacent when some interval contains both.
struct IntervalModel {
    std::vector<Rational> points; // strictly increasing
    std::vector<Interval> intervals;
    friend bool operator==(const IntervalModel&, const IntervalModel&) = default;
};

// Inclusive range of point indices covered by one interval.
struct PointRange {
    int first = 0, last = 0;
    friend bool operator==(const PointRange&, const PointRange&) = default;
    friend auto operator<=>(const PointRange&, const PointRange&) = default;
};

// Throws MalformedInput when points are not strictly increasing or some
// interval has lo >= hi.
void validate(const IntervalModel& m);

// Point range of every interval, in input order; intervals covering no
// point yield {0,-1}.
std::vector<PointRange> point_ranges(const IntervalModel& m);

// Canonical form with the same derived graph. Intervals covering fewer than
// two points, repeats and intervals contained in others are removed; points
// move to positions 0..m-1, the survivor covering points a..b becomes
// [a - 1/4, b + 1/4], and intervals are sorted left to right. Afterwards no
// endpoint meets a point or another endpoint, consecutive openings (and
// closings) have a point between them, and an interval opens before
// another closes only when the two share a point.
IntervalModel normalize(const IntervalModel& m);
bool is_normalized(const IntervalModel& m);

Graph derived_graph(const IntervalModel& m);

// Greedy left-to-right anchor decomposition of a normalized model.
struct SegmentDecomposition {
    std::vector<int> anchors;             // interval indices I_1..I_k
    std::vector<std::vector<int>> groups; // intervals opening inside anchor i
    std::vector<PointRange> vertex_sets;  // V_i, always a contiguous run
};

// Throws PreconditionFailed on an un-normalized model and
// StructureViolation if the disjointness properties between anchors and
// vertex sets fail.
SegmentDecomposition segment_decompose(const IntervalModel& m);

struct IntervalCoverResult {
    CliqueCovering covering;
    int delta = 0;
    int valency = 0;
    int max_group = 0; // largest t over segments
    std::size_t segments = 0;
};

// Per segment: twin-reduce G_i, confirm it is K_nabla(t,t) minus vertex t+1
// under the left-to-right labelling, cover it through the staircase
// rectangle construction, lift back. The input is normalized first. Throws
// StructureViolation when the isomorphism check fails.
IntervalCoverResult interval_cover(const IntervalModel& m);

// Lower bound on lcc of the derived graph from the largest opening count N
// over anchors: exact lcc of K_nabla(N,N) when N <= 5, otherwise
// max(1, floor(log2(N)/2)). N = 1 (disjoint cliques) gives 1 and no edges
// give 0; otherwise throws PreconditionFailed when the derived graph has twins.
int interval_lcc_lower(const IntervalModel& m);

// log2(D) + log2(log2(D))/2 + 4 with D clamped to at least 2.
double interval_envelope(int delta);

std::string to_string(const Rational& q);

} // namespace lcc
