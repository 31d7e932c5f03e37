#include <doctest.h>

#include "lcc/error.hpp"
#include "lcc/exact.hpp"
#include "lcc/generators.hpp"
#include "lcc/interval.hpp"
#include "lcc/structure.hpp"
#include "oracles.hpp"

using namespace lcc;

TEST_CASE("gen_k_nabla") {
    CHECK(gen_k_nabla(1) == oracle::complete(2));

    const Graph g2 = gen_k_nabla(2);
    // 1-based labels: X-pair, Y-pair, (1,3), (2,3), (2,4)
    CHECK(g2 == Graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 2}, {1, 3}}));
    CHECK(exact_lcc(g2).value == 2);

    const Graph g5 = gen_k_nabla(5);
    CHECK(g5.n() == 10);
    for (int i = 0; i < 5; ++i) {
        int cross = 0;
        for (int j = 5; j < 10; ++j) cross += g5.adjacent(i, j);
        CHECK(cross == i + 1);
    }
    CHECK(g5.is_clique({0, 1, 2, 3, 4}));
    CHECK(g5.is_clique({5, 6, 7, 8, 9}));
    CHECK_THROWS(gen_k_nabla(0));
}

TEST_CASE("k_nabla model derives k_nabla") {
    for (int n = 1; n <= 64; ++n) {
        const auto m = k_nabla_model(n);
        CHECK(derived_graph(m) == gen_k_nabla(n));
        if (n <= 12) CHECK(oracle::derived_graph(m) == gen_k_nabla(n));
    }
}

TEST_CASE("gen_staircase_bipartite") {
    CHECK(gen_staircase_bipartite(1) == oracle::complete(2));
    CHECK(gen_staircase_bipartite(2) == Graph(4, {{0, 2}, {1, 2}, {1, 3}}));
    const Graph g = gen_staircase_bipartite(6);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) CHECK(g.adjacent(i - 1, 6 + j - 1) == (i >= j));
    CHECK(g.is_independent({0, 1, 2, 3, 4, 5}));
}

TEST_CASE("staircase graph and K_nabla differ by at most one") {
    // lbc(G_n) is the staircase local boolean rank
    for (int n = 1; n <= 5; ++n) {
        const int lcc_val = exact_lcc(gen_k_nabla(n)).value;
        const int lrb = exact_lrb_staircase(n);
        CHECK(lcc_val >= lrb);
        CHECK(lcc_val <= lrb + 1);
    }
}

TEST_CASE("gen_complete_multipartite") {
    CHECK(gen_complete_multipartite({1, 1, 1}) == oracle::complete(3));
    const Graph oct = gen_complete_multipartite({2, 2, 2});
    CHECK(oct.n() == 6);
    CHECK(oct.edge_count() == 12);
    CHECK(alpha_local(oct) == 2);
    CHECK(gen_complete_multipartite({4}) == Graph(4));
}

TEST_CASE("gen_kneser") {
    CHECK(gen_kneser(2, 1) == oracle::complete(2));
    const Graph m = gen_kneser(4, 2);
    CHECK(m.n() == 6);
    CHECK(m.edge_count() == 3);
    for (int v = 0; v < 6; ++v) CHECK(m.degree(v) == 1);
    const Graph pet = gen_kneser(5, 2);
    CHECK(pet.n() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK_FALSE(find_triangle(pet).has_value());
    CHECK_THROWS_AS(gen_kneser(3, 2), MalformedInput);
}

TEST_CASE("gen_line_graph") {
    CHECK(gen_line_graph({{0, 1}, {1, 2}, {0, 2}}) == oracle::complete(3));
    CHECK(gen_line_graph({{0, 1}, {0, 2}, {0, 3}}) == oracle::complete(3));
    const Graph lk4 = gen_line_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(lk4.n() == 6);
    CHECK(lk4.edge_count() == 12);
    CHECK(alpha_local(lk4) == 2);
    CHECK(exact_lcc(lk4).value == 2);
    // parallel edges become twins
    const Graph par = gen_line_graph({{0, 1}, {0, 1}, {1, 2}});
    CHECK(par == oracle::complete(3));
    CHECK_FALSE(is_twin_free(par));
}

TEST_CASE("line graphs of multigraphs are claw-free") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto h = random_multigraph(8 + static_cast<int>(s % 10), 10 + static_cast<int>(s % 20), Seed{s});
        for (const auto& e : h) {
            CHECK(e.size() == 2);
            CHECK(e[0] != e[1]);
        }
        CHECK(is_claw_free(gen_line_graph(h)));
    }
}

TEST_CASE("gen_random_cobipartite") {
    CHECK(gen_random_cobipartite(7, 1.0, Seed{3}) == oracle::complete(7));
    const Graph two = gen_random_cobipartite(7, 0.0, Seed{3});
    CHECK(two.edge_count() == 6 + 3);
    CHECK(is_disjoint_union_of_cliques(two));
    CHECK(exact_lcc(two).value == 1);
    CHECK(gen_random_cobipartite(12, 0.5, Seed{99}) == gen_random_cobipartite(12, 0.5, Seed{99}));
    const Graph g = gen_random_cobipartite(11, 0.5, Seed{5});
    CHECK(g.is_clique({0, 1, 2, 3, 4, 5}));
    CHECK(g.is_clique({6, 7, 8, 9, 10}));
}

TEST_CASE("gen_random_linear_interval") {
    const auto a = gen_random_linear_interval(30, 12, Seed{8});
    CHECK(a == gen_random_linear_interval(30, 12, Seed{8}));
    CHECK(a.points.size() == 30);
    CHECK(a.intervals.size() == 12);
    validate(a);
    for (std::size_t i = 1; i < a.points.size(); ++i) {
        CHECK(a.points[i].denominator() == 1);
        CHECK(a.points[i - 1] < a.points[i]);
    }
    for (const auto& iv : a.intervals) {
        CHECK(iv.lo.denominator() == 2);
        CHECK(iv.hi.denominator() == 2);
    }
    CHECK(is_normalized(normalize(a)));
    CHECK(derived_graph(a) == oracle::derived_graph(a));

    IntervalModel one;
    for (int p = 1; p <= 6; ++p) one.points.emplace_back(p);
    one.intervals.push_back({Rational(1, 2), Rational(13, 2)});
    CHECK(derived_graph(one) == oracle::complete(6));
}

TEST_CASE("seeded generators reproduce") {
    CHECK(random_multigraph(10, 20, Seed{1}) == random_multigraph(10, 20, Seed{1}));
    CHECK(random_multigraph(10, 20, Seed{1}) != random_multigraph(10, 20, Seed{2}));
}
