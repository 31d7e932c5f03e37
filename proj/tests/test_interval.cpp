#include <doctest.h>

#include <cmath>

#include "lcc/error.hpp"
#include "lcc/exact.hpp"
#include "lcc/generators.hpp"
#include "lcc/interval.hpp"
#include "lcc/rect_cover.hpp"
#include "lcc/structure.hpp"
#include "oracles.hpp"

using namespace lcc;

namespace {

IntervalModel model(int points, std::vector<std::pair<Rational, Rational>> ivs) {
    IntervalModel m;
    for (int p = 1; p <= points; ++p) m.points.emplace_back(p);
    for (auto [lo, hi] : ivs) m.intervals.push_back({lo, hi});
    return m;
}

Rational q(long long a, long long b = 1) { return Rational(a, b); }

// Vertex count of each V_i containing v.
int segments_containing(const SegmentDecomposition& d, int v) {
    int c = 0;
    for (const auto& r : d.vertex_sets) c += r.first <= v && v <= r.last;
    return c;
}

} // namespace

TEST_CASE("validate and point ranges") {
    CHECK_THROWS_AS(validate(model(2, {{q(3), q(1)}})), MalformedInput);
    IntervalModel bad;
    bad.points = {q(2), q(1)};
    CHECK_THROWS_AS(validate(bad), MalformedInput);
    const auto rs = point_ranges(model(5, {{q(3, 2), q(7, 2)}, {q(10), q(11)}, {q(1), q(5)}}));
    CHECK(rs == std::vector<PointRange>{{1, 2}, {0, -1}, {0, 4}});
}

TEST_CASE("derived_graph examples") {
    CHECK(derived_graph(model(5, {{q(0), q(6)}})) == oracle::complete(5));
    for (int n = 1; n <= 10; ++n) CHECK(derived_graph(k_nabla_model(n)) == gen_k_nabla(n));
    const auto disjoint = model(6, {{q(1, 2), q(5, 2)}, {q(5, 2) + q(1, 4), q(9, 2)}, {q(9, 2) + q(1, 4), q(13, 2)}});
    const Graph g = derived_graph(disjoint);
    CHECK(is_disjoint_union_of_cliques(g));
    CHECK(exact_lcc(g).value == 1);
    for (std::uint64_t s = 0; s < 60; ++s) {
        const auto m = gen_random_linear_interval(25, 1 + static_cast<int>(s % 9), Seed{s});
        CHECK(derived_graph(m) == oracle::derived_graph(m));
    }
}

TEST_CASE("normalize examples") {
    SUBCASE("nested interval dropped") {
        IntervalModel m;
        for (int p = 1; p <= 9; ++p) m.points.emplace_back(p);
        m.intervals = {{q(0), q(10)}, {q(2), q(3)}};
        const auto nm = normalize(m);
        CHECK(nm.intervals.size() == 1);
        CHECK(derived_graph(nm) == derived_graph(m));
        CHECK(is_normalized(nm));
        CHECK_FALSE(is_normalized(m));
    }
    SUBCASE("fixed point") {
        const auto nm = normalize(k_nabla_model(6));
        CHECK(is_normalized(nm));
        CHECK(normalize(nm) == nm);
    }
    SUBCASE("openings without a point between them") {
        // both open between points 1 and 2
        const auto m = model(4, {{q(3, 2), q(5, 2)}, {q(7, 4), q(7, 2)}});
        CHECK_FALSE(is_normalized(m));
        const auto nm = normalize(m);
        CHECK(is_normalized(nm));
        CHECK(derived_graph(nm) == derived_graph(m));
    }
    SUBCASE("endpoint on a point") {
        const auto m = model(3, {{q(1), q(3)}});
        CHECK_FALSE(is_normalized(m));
        CHECK(derived_graph(normalize(m)) == oracle::complete(3));
    }
    SUBCASE("seeded samples keep the derived graph") {
        for (std::uint64_t s = 0; s < 100; ++s) {
            const auto m = gen_random_linear_interval(40, 3 + static_cast<int>(s % 20), Seed{s});
            const auto nm = normalize(m);
            CHECK(is_normalized(nm));
            CHECK(oracle::derived_graph(nm) == oracle::derived_graph(m));
            CHECK(normalize(nm) == nm);
        }
    }
}

TEST_CASE("segment_decompose examples") {
    SUBCASE("K_nabla is one segment") {
        for (int n = 1; n <= 8; ++n) {
            const auto d = segment_decompose(normalize(k_nabla_model(n)));
            CHECK(d.anchors.size() == 1);
            CHECK(d.groups[0].size() == static_cast<std::size_t>(n));
        }
    }
    SUBCASE("disjoint intervals") {
        const auto m = normalize(model(9, {{q(1, 2), q(5, 2)}, {q(7, 2), q(11, 2)}, {q(13, 2), q(19, 2)}}));
        const auto d = segment_decompose(m);
        CHECK(d.anchors.size() == 3);
        for (const auto& grp : d.groups) CHECK(grp.size() == 1);
    }
    SUBCASE("un-normalized input rejected") {
        CHECK_THROWS_AS(segment_decompose(model(3, {{q(1), q(3)}})), PreconditionFailed);
    }
    SUBCASE("every vertex in at most two vertex sets, every interval in one group") {
        for (std::uint64_t s = 0; s < 100; ++s) {
            const auto m = normalize(gen_random_linear_interval(60, 10 + static_cast<int>(s % 30), Seed{s}));
            const auto d = segment_decompose(m);
            std::vector<int> owner(m.intervals.size(), 0);
            for (const auto& grp : d.groups)
                for (int k : grp) ++owner[k];
            for (int o : owner) CHECK(o == 1);
            for (int v = 0; v < static_cast<int>(m.points.size()); ++v) CHECK(segments_containing(d, v) <= 2);
            // anchors pairwise disjoint, in order
            const auto rs = point_ranges(m);
            for (std::size_t i = 1; i < d.anchors.size(); ++i)
                CHECK(rs[d.anchors[i - 1]].last < rs[d.anchors[i]].first);
            // each interval meets at most its own anchor and the next one
            for (std::size_t i = 0; i < d.groups.size(); ++i)
                for (int k : d.groups[i])
                    for (std::size_t j = 0; j < d.anchors.size(); ++j) {
                        const auto a = rs[d.anchors[j]];
                        const bool meets = rs[k].first <= a.last && a.first <= rs[k].last;
                        if (meets) CHECK((j == i || j == i + 1));
                    }
        }
    }
}

TEST_CASE("interval_cover examples") {
    SUBCASE("K_nabla models stay within lrb_upper + 1") {
        for (int n = 1; n <= 40; ++n) {
            const auto m = k_nabla_model(n);
            const auto res = interval_cover(m);
            CHECK(res.segments == 1);
            CHECK(oracle::covers(gen_k_nabla(n), res.covering));
            CHECK(res.valency <= lrb_upper(static_cast<std::uint64_t>(n)) + 1);
        }
    }
    SUBCASE("disjoint cliques") {
        const auto m = model(9, {{q(1, 2), q(5, 2)}, {q(7, 2), q(11, 2)}, {q(13, 2), q(19, 2)}});
        const Graph g = derived_graph(m);
        const auto res = interval_cover(m);
        CHECK(oracle::covers(g, res.covering));
        CHECK(max_valency(g.n(), reduce_covering(g, res.covering)) == 1);
    }
    SUBCASE("seeded models, valid and inside the envelope") {
        for (std::uint64_t s = 0; s < 60; ++s) {
            const auto m = gen_random_linear_interval(80 + static_cast<int>(s * 7), 20 + static_cast<int>(s * 3), Seed{s});
            const Graph g = oracle::derived_graph(m);
            const auto res = interval_cover(m);
            CHECK(oracle::covers(g, res.covering));
            CHECK(res.delta == g.max_degree());
            if (res.delta > 0) CHECK(res.valency <= interval_envelope(res.delta));
            CHECK(res.valency <= 2 * (lrb_upper(static_cast<std::uint64_t>(std::max(1, res.max_group))) + 1));
        }
    }
    SUBCASE("small models are never below the exact value") {
        for (std::uint64_t s = 0; s < 80; ++s) {
            const auto m = gen_random_linear_interval(8, 2 + static_cast<int>(s % 5), Seed{s});
            const Graph g = derived_graph(m);
            const auto res = interval_cover(m);
            CHECK(oracle::covers(g, res.covering));
            CHECK(res.valency >= exact_lcc(g).value);
        }
    }
    SUBCASE("doubling n raises the K_nabla valency by at most one") {
        int prev = interval_cover(k_nabla_model(8)).valency;
        for (int n = 16; n <= 1024; n *= 2) {
            const int v = interval_cover(k_nabla_model(n)).valency;
            CHECK(v >= prev);
            CHECK(v <= prev + 1);
            prev = v;
        }
    }
}

TEST_CASE("interval_lcc_lower examples") {
    SUBCASE("K_nabla without its twin") {
        for (int n = 1; n <= 5; ++n) {
            auto m = k_nabla_model(n);
            m.points.erase(m.points.begin() + n); // drop point n+1, the twin of n
            const Graph g = derived_graph(m);
            REQUIRE(oracle::twin_free(g));
            CHECK(interval_lcc_lower(m) == (n == 1 ? 0 : exact_lcc(gen_k_nabla(n)).value));
            CHECK(interval_lcc_lower(m) <= exact_lcc(g).value);
        }
    }
    SUBCASE("single interval") {
        CHECK(interval_lcc_lower(model(2, {{q(1, 2), q(5, 2)}})) == 1);
        CHECK(interval_lcc_lower(model(4, {{q(1, 2), q(9, 2)}})) == 1);
        CHECK(interval_lcc_lower(model(4, {})) == 0);
    }
    SUBCASE("twins rejected") {
        // K_nabla(3) keeps its twin pair
        CHECK_THROWS_AS(interval_lcc_lower(k_nabla_model(3)), PreconditionFailed);
    }
    SUBCASE("sandwich on twin-free samples") {
        int tested = 0;
        for (std::uint64_t s = 0; s < 400 && tested < 40; ++s) {
            const auto m = gen_random_linear_interval(9, 3 + static_cast<int>(s % 4), Seed{s});
            const Graph g = derived_graph(m);
            if (!oracle::twin_free(g) || g.edge_count() == 0) continue;
            ++tested;
            const int lo = interval_lcc_lower(m);
            const int ex = exact_lcc(g).value;
            CHECK(lo <= ex);
            CHECK(ex <= interval_cover(m).valency);
        }
        CHECK(tested > 0);
    }
}

TEST_CASE("interval envelope and rational printing") {
    CHECK(interval_envelope(1) == doctest::Approx(5.0));
    CHECK(interval_envelope(16) == doctest::Approx(4 + 0.5 * 2 + 4));
    CHECK(to_string(q(3)) == "3");
    CHECK(to_string(q(-3, 4)) == "-3/4");
}
