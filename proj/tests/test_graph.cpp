#include <doctest.h>

#include "lcc/covering.hpp"
#include "lcc/error.hpp"
#include "lcc/generators.hpp"
#include "lcc/graph.hpp"
#include "oracles.hpp"

using namespace lcc;

TEST_CASE("graph construction normalizes and rejects bad edges") {
    Graph g(3, {{2, 0}, {0, 2}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.degree(2) == 2);
    CHECK(g.max_degree() == 2);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), MalformedInput);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), MalformedInput);
    CHECK_THROWS_AS(Graph(2, {{-1, 1}}), MalformedInput);
}

TEST_CASE("induced subgraph relabels in the given order") {
    const Graph c5 = oracle::cycle(5);
    const Graph p = c5.induced({4, 0, 1});
    CHECK(p.n() == 3);
    CHECK(p.adjacent(0, 1));
    CHECK(p.adjacent(1, 2));
    CHECK_FALSE(p.adjacent(0, 2));
}

TEST_CASE("clique and independence predicates") {
    const Graph k4 = oracle::complete(4);
    CHECK(k4.is_clique({0, 1, 3}));
    CHECK_FALSE(oracle::cycle(4).is_clique({0, 1, 2}));
    CHECK(oracle::cycle(4).is_independent({0, 2}));
}

TEST_CASE("clique and independence numbers match subset enumeration") {
    for (std::uint32_t code = 0; code < (1u << 10); code += 7) {
        const Graph g = oracle::from_code(5, code);
        CHECK(clique_number(g) == oracle::omega(g));
        Bitset all(5);
        for (int v = 0; v < 5; ++v) all.set(v);
        CHECK(independence_number(g, all) == oracle::omega(complement(g)));
        const auto mis = maximum_independent_set(g, all);
        CHECK(g.is_independent(mis));
        CHECK(static_cast<int>(mis.size()) == oracle::omega(complement(g)));
    }
}

TEST_CASE("complement") {
    CHECK(complement(oracle::complete(5)).edge_count() == 0);
    const Graph c5 = oracle::cycle(5);
    const Graph cc = complement(c5);
    CHECK(cc.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
    for (std::uint32_t code : {0u, 1u, 0x2A5u, 0x3FFu, 0x155u}) {
        const Graph g = oracle::from_code(5, code);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("dot export") {
    const std::string dot = to_dot(Graph(3, {{0, 2}}));
    CHECK(dot.find("graph {") == 0);
    CHECK(dot.find("0 -- 2") != std::string::npos);
    CHECK(dot.find("1") != std::string::npos);
}

TEST_CASE("verify_covering examples") {
    SUBCASE("triangle by itself") {
        const auto rep = verify_covering(oracle::complete(3), {{{0, 1, 2}}});
        CHECK(rep.valid);
        CHECK(rep.max_valency == 1);
    }
    SUBCASE("star by its edges") {
        const auto rep = verify_covering(oracle::star(3), {{{0, 1}, {0, 2}, {0, 3}}});
        CHECK(rep.valid);
        CHECK(rep.max_valency == 3);
    }
    SUBCASE("C4 with two edges missing") {
        const auto rep = verify_covering(oracle::cycle(4), {{{0, 1}, {1, 2}}});
        CHECK_FALSE(rep.valid);
        CHECK(rep.uncovered_edges == std::vector<Edge>{{0, 3}, {2, 3}});
    }
    SUBCASE("non-clique is reported") {
        const auto rep = verify_covering(oracle::cycle(4), {{{0, 1, 2}, {2, 3}, {0, 3}}});
        CHECK_FALSE(rep.valid);
        CHECK(rep.non_clique_indices == std::vector<std::size_t>{0});
    }
    SUBCASE("out of range vertex") {
        CHECK_THROWS_AS(verify_covering(oracle::complete(3), {{{0, 3}}}), MalformedInput);
    }
    SUBCASE("singletons cover nothing") {
        const auto rep = verify_covering(Graph(2, {{0, 1}}), {{{0}, {1}}});
        CHECK_FALSE(rep.valid);
    }
}

TEST_CASE("valencies count clique memberships") {
    const CliqueCovering c{{{0, 1}, {1, 2}, {1}}};
    CHECK(valencies(3, c) == std::vector<int>{1, 3, 1});
    CHECK(max_valency(3, c) == 3);
    CHECK(canonical({{{2, 0, 2}}}).cliques == std::vector<Clique>{{0, 2}});
}

TEST_CASE("reduce_covering examples") {
    SUBCASE("edges of a triangle merge") {
        const auto out = reduce_covering(oracle::complete(3), {{{0, 1}, {0, 2}, {1, 2}}});
        CHECK(out.cliques == std::vector<Clique>{{0, 1, 2}});
        CHECK(max_valency(3, out) == 1);
    }
    SUBCASE("star is rigid") {
        const CliqueCovering c{{{0, 1}, {0, 2}, {0, 3}}};
        CHECK(reduce_covering(oracle::star(3), c) == c);
    }
    SUBCASE("singleton is dropped") {
        const Graph p3(3, {{0, 1}, {1, 2}});
        CHECK(reduce_covering(p3, {{{0, 1}, {1, 2}, {1}}}).cliques == std::vector<Clique>{{0, 1}, {1, 2}});
    }
    SUBCASE("invalid input rejected") {
        CHECK_THROWS_AS(reduce_covering(oracle::cycle(4), {{{0, 1}}}), InvalidCertificate);
    }
    SUBCASE("never raises valency and stays valid") {
        for (std::uint32_t code = 1; code < (1u << 10); code += 13) {
            const Graph g = oracle::from_code(5, code);
            CliqueCovering edges;
            for (auto [u, v] : g.edges()) edges.cliques.push_back({u, v});
            // add every triangle too, to give the drop move work
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b)
                    for (int c = b + 1; c < 5; ++c)
                        if (g.is_clique({a, b, c})) edges.cliques.push_back({a, b, c});
            const auto before = valencies(5, edges);
            const auto out = reduce_covering(g, edges);
            CHECK(oracle::covers(g, out));
            const auto after = valencies(5, out);
            for (int v = 0; v < 5; ++v) CHECK(after[v] <= before[v]);
            CHECK(reduce_covering(g, out) == out);
        }
    }
}
