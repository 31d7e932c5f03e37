#include "lcc/interval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lcc/error.hpp"
#include "lcc/exact.hpp"
#include "lcc/generators.hpp"
#include "lcc/rect_cover.hpp"
#include "lcc/structure.hpp"

namespace lcc {

void validate(const IntervalModel& m) {
    for (std::size_t i = 1; i < m.points.size(); ++i)
        if (!(m.points[i - 1] < m.points[i])) throw MalformedInput("points must be strictly increasing");
    for (std::size_t k = 0; k < m.intervals.size(); ++k)
        if (!(m.intervals[k].lo < m.intervals[k].hi))
            throw MalformedInput("interval " + std::to_string(k) + " has lo >= hi");
}

std::vector<PointRange> point_ranges(const IntervalModel& m) {
    validate(m);
    std::vector<PointRange> out;
    out.reserve(m.intervals.size());
    for (const auto& iv : m.intervals) {
        auto first = std::lower_bound(m.points.begin(), m.points.end(), iv.lo);
        auto past = std::upper_bound(m.points.begin(), m.points.end(), iv.hi);
        if (first >= past) {
            out.push_back({0, -1});
            continue;
        }
        out.push_back({static_cast<int>(first - m.points.begin()), static_cast<int>(past - m.points.begin()) - 1});
    }
    return out;
}

namespace {

// Ranges with >= 2 points, without repeats or contained ranges, sorted.
std::vector<PointRange> essential_ranges(const std::vector<PointRange>& ranges) {
    std::vector<PointRange> rs;
    for (auto r : ranges)
        if (r.last > r.first) rs.push_back(r);
    // longest first among equal starts, so a later range is kept only if it
    // reaches strictly further than everything before it
    std::sort(rs.begin(), rs.end(), [](const PointRange& a, const PointRange& b) {
        return a.first != b.first ? a.first < b.first : a.last > b.last;
    });
    std::vector<PointRange> out;
    int reach = -1;
    for (auto r : rs)
        if (r.last > reach) {
            out.push_back(r);
            reach = r.last;
        }
    return out;
}

} // namespace

IntervalModel normalize(const IntervalModel& m) {
    IntervalModel out;
    const auto ranges = essential_ranges(point_ranges(m));
    for (std::size_t p = 0; p < m.points.size(); ++p) out.points.emplace_back(static_cast<long long>(p));
    for (auto r : ranges)
        out.intervals.push_back({Rational(4LL * r.first - 1, 4), Rational(4LL * r.last + 1, 4)});
    return out;
}

bool is_normalized(const IntervalModel& m) {
    try {
        validate(m);
    } catch (const MalformedInput&) {
        return false;
    }
    std::set<Rational> marks(m.points.begin(), m.points.end());
    for (const auto& iv : m.intervals)
        if (!marks.insert(iv.lo).second || !marks.insert(iv.hi).second) return false;
    const auto rs = point_ranges(m);
    for (auto r : rs)
        if (r.last <= r.first) return false;
    if (essential_ranges(rs).size() != rs.size()) return false;
    // an opening before another interval's closing needs a point in between,
    // i.e. no closing bracket falls between an opening and its first point
    std::vector<Rational> closings;
    for (const auto& iv : m.intervals) closings.push_back(iv.hi);
    std::sort(closings.begin(), closings.end());
    for (std::size_t a = 0; a < rs.size(); ++a) {
        auto it = std::upper_bound(closings.begin(), closings.end(), m.intervals[a].lo);
        if (it != closings.end() && *it < m.points[rs[a].first]) return false;
    }
    return true;
}

Graph derived_graph(const IntervalModel& m) {
    const auto ranges = point_ranges(m);
    const int n = static_cast<int>(m.points.size());
    // reach[u] = furthest point sharing an interval with u
    std::vector<int> reach(static_cast<std::size_t>(n), -1);
    for (auto r : ranges)
        if (r.last >= r.first) reach[r.first] = std::max(reach[r.first], r.last);
    std::vector<Edge> es;
    int run = -1;
    for (int u = 0; u < n; ++u) {
        run = std::max(run, reach[u]);
        for (int v = u + 1; v <= run; ++v) es.emplace_back(u, v);
    }
    return Graph(n, es);
}

SegmentDecomposition segment_decompose(const IntervalModel& m) {
    if (!is_normalized(m)) throw PreconditionFailed("interval model is not normalized; run normalize first", {});
    const auto rs = point_ranges(m);
    std::vector<int> order(rs.size());
    for (std::size_t k = 0; k < rs.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rs[a].first < rs[b].first; });

    SegmentDecomposition d;
    for (int k : order) {
        if (d.anchors.empty() || rs[k].first > rs[d.anchors.back()].last) {
            d.anchors.push_back(k);
            d.groups.push_back({});
            d.vertex_sets.push_back(rs[k]);
        }
        d.groups.back().push_back(k);
        d.vertex_sets.back().last = std::max(d.vertex_sets.back().last, rs[k].last);
    }

    // I_i meets no V_j except j = i-1, i; V_i \ I_i meets no V_j except j = i+1.
    const std::size_t k = d.anchors.size();
    int prefix_last = -1; // max last of V_j, j <= i-2
    for (std::size_t i = 0; i < k; ++i) {
        const PointRange anchor = rs[d.anchors[i]];
        if (i >= 2) prefix_last = std::max(prefix_last, d.vertex_sets[i - 2].last);
        const bool later_ok = i + 1 >= k || d.vertex_sets[i + 1].first > anchor.last;
        const bool earlier_ok = prefix_last < anchor.first;
        const bool tail_later_ok = i + 2 >= k || d.vertex_sets[i + 2].first > d.vertex_sets[i].last;
        const bool tail_earlier_ok = i == 0 || std::max(prefix_last, d.vertex_sets[i - 1].last) <= anchor.last;
        if (!(later_ok && earlier_ok && tail_later_ok && tail_earlier_ok))
            throw StructureViolation("segment " + std::to_string(i) + " overlaps a non-adjacent segment",
                                     {static_cast<int>(i)});
    }
    return d;
}

namespace {

CliqueCovering cover_segment(const Graph& g, PointRange vs_range, int t) {
    std::vector<Vertex> vs;
    for (int p = vs_range.first; p <= vs_range.last; ++p) vs.push_back(p);
    const Graph gi = g.induced(vs);
    const TwinReduction tr = twin_reduce(gi);
    const int size = tr.reduced.n();
    if (size != 2 * t - 1)
        throw StructureViolation("segment with " + std::to_string(t) + " intervals reduces to " +
                                     std::to_string(size) + " vertices, expected " + std::to_string(2 * t - 1),
                                 {vs_range.first, vs_range.last});

    // Representatives are ordered left to right. Position p (1-based) goes to
    // K_nabla vertex p for p <= t and p+1 beyond, skipping the twin t+1.
    auto to_knabla = [t](int p0) { return p0 < t ? p0 : p0 + 1; }; // 0-based in, 0-based out
    const Graph kn = gen_k_nabla(t);
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b)
            if (tr.reduced.adjacent(a, b) != kn.adjacent(to_knabla(a), to_knabla(b)))
                throw StructureViolation("segment graph is not K_nabla(t,t) minus vertex t+1",
                                         {vs[tr.classes[a][0]], vs[tr.classes[b][0]]});

    const int r = lrb_upper(static_cast<std::uint64_t>(t));
    const CliqueCovering kc = rect_to_clique_cover(t, staircase_cover(t, {r, r}));
    std::vector<int> back(static_cast<std::size_t>(2 * t), -1);
    for (int p = 0; p < size; ++p) back[to_knabla(p)] = p;
    CliqueCovering reduced;
    for (const auto& c : kc.cliques) {
        Clique m;
        for (Vertex v : c)
            if (back[v] >= 0) m.push_back(back[v]);
        if (m.size() >= 2) reduced.cliques.push_back(std::move(m));
    }
    CliqueCovering lifted = twin_lift(reduced, tr.classes);
    for (auto& c : lifted.cliques)
        for (auto& v : c) v = vs[v];
    return lifted;
}

} // namespace

IntervalCoverResult interval_cover(const IntervalModel& m) {
    const IntervalModel nm = normalize(m);
    const Graph g = derived_graph(nm);
    const SegmentDecomposition d = segment_decompose(nm);
    IntervalCoverResult res;
    res.delta = g.max_degree();
    res.segments = d.anchors.size();
    for (std::size_t i = 0; i < d.anchors.size(); ++i) {
        const int t = static_cast<int>(d.groups[i].size());
        res.max_group = std::max(res.max_group, t);
        auto part = cover_segment(g, d.vertex_sets[i], t);
        res.covering.cliques.insert(res.covering.cliques.end(), part.cliques.begin(), part.cliques.end());
    }
    res.covering = canonical(std::move(res.covering));
    res.valency = max_valency(g.n(), res.covering);
    return res;
}

int interval_lcc_lower(const IntervalModel& m) {
    const IntervalModel nm = normalize(m);
    const Graph g = derived_graph(nm);
    if (g.edge_count() == 0) return 0;
    const SegmentDecomposition d = segment_decompose(nm);
    int n_max = 0;
    for (const auto& grp : d.groups) n_max = std::max(n_max, static_cast<int>(grp.size()));
    // disjoint cliques: exact, and never twin-free, so answered before the check
    if (n_max == 1) return 1;
    if (!is_twin_free(g))
        throw PreconditionFailed("derived graph has twins; apply twin_reduce first", {});
    if (n_max <= 5) return std::max(1, exact_lcc(gen_k_nabla(n_max)).value);
    return std::max(1, static_cast<int>(std::floor(0.5 * std::log2(static_cast<double>(n_max)))));
}

double interval_envelope(int delta) {
    const double d = std::max(2, delta);
    return std::log2(d) + 0.5 * std::log2(std::log2(d)) + 4.0;
}

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

} // namespace lcc
