#include <doctest.h>

#include <cmath>

#include "lcc/covering.hpp"
#include "lcc/error.hpp"
#include "lcc/generators.hpp"
#include "lcc/rect_cover.hpp"
#include "oracles.hpp"

using namespace lcc;

TEST_CASE("f values") {
    for (int k = 1; k <= 25; ++k) {
        CHECK(f_closed(k, 1) == k);
        CHECK(f_closed(1, k) == k);
    }
    CHECK(f_closed(2, 2) == 4);
    CHECK(f_closed(3, 3) == 14);
    CHECK(f_closed(4, 4) == 50);
    CHECK(f_closed(5, 5) == 182);
    CHECK(f_recurrence(2, 2) == 4);
    CHECK(f_recurrence(1, 7) == 7);
    for (int r = 1; r <= 14; ++r)
        for (int s = 1; s <= 14; ++s) {
            const long double want = oracle::binom(r + s - 1, r - 1) + oracle::binom(r + s - 2, r);
            CHECK(static_cast<long double>(f_closed(r, s).convert_to<long long>()) == want);
        }
    CHECK_THROWS_AS(f_closed(0, 3), MalformedInput);
}

TEST_CASE("f table: recurrence, closed form and symmetry") {
    const auto t = f_table(25);
    for (int r = 1; r <= 25; ++r)
        for (int s = 1; s <= 25; ++s) {
            CHECK(t[r][s] == f_closed(r, s));
            CHECK(f_recurrence(r, s) == f_closed(r, s));
            CHECK(f_closed(r, s) == f_closed(s, r));
        }
    CHECK(f_closed(64, 64) > BigInt(1) << 120); // no overflow
}

TEST_CASE("lrb_upper") {
    CHECK(lrb_upper(1) == 1);
    CHECK(lrb_upper(4) == 2);
    CHECK(lrb_upper(5) == 3);
    CHECK(lrb_upper(14) == 3);
    CHECK(lrb_upper(15) == 4);
    CHECK(lrb_upper(16) == 4);
    CHECK(lrb_upper(100) == 5);
    CHECK_THROWS_AS(lrb_upper(0), MalformedInput);
}

TEST_CASE("staircase_cover examples") {
    SUBCASE("n=1") {
        for (int r = 1; r <= 3; ++r) {
            const auto c = staircase_cover(1, {r, r});
            REQUIRE(c.rects.size() == 1);
            CHECK(c.rects[0] == Rectangle::range(1, 1, 1, 1));
        }
    }
    SUBCASE("n=4 at (2,2)") {
        const auto c = staircase_cover(4, {2, 2});
        const auto rep = verify_rect_cover(c);
        CHECK(rep.valid);
        CHECK(rep.max_row_valency <= 2);
        CHECK(rep.max_col_valency <= 2);
        CHECK(oracle::covers_staircase(c, 2, 2));
    }
    SUBCASE("r=1 and s=1 shapes") {
        const auto rows = staircase_cover(4, {1, 4});
        CHECK(rows.rects.size() == 4);
        CHECK(oracle::covers_staircase(rows, 1, 4));
        const auto cols = staircase_cover(4, {4, 1});
        CHECK(cols.rects.size() == 4);
        CHECK(oracle::covers_staircase(cols, 4, 1));
    }
    SUBCASE("every n up to f(r,s) for small budgets") {
        for (int r = 1; r <= 5; ++r)
            for (int s = 1; s <= 5; ++s) {
                const int f = f_closed(r, s).convert_to<int>();
                for (int n = 1; n <= f; ++n) {
                    const auto c = staircase_cover(n, {r, s});
                    CHECK(oracle::covers_staircase(c, r, s));
                    for (const auto& rc : c.rects) CHECK(rc.contiguous());
                }
            }
    }
    SUBCASE("boundary at f(r,r)") {
        for (int r = 1; r <= 8; ++r) {
            const int f = f_closed(r, r).convert_to<int>();
            CHECK(oracle::covers_staircase(staircase_cover(f, {r, r}), r, r));
            try {
                staircase_cover(f + 1, {r, r});
                FAIL("expected InfeasibleBudget");
            } catch (const InfeasibleBudget& e) {
                CHECK(e.max_feasible == static_cast<unsigned long long>(f));
            }
        }
    }
}

TEST_CASE("thirds_cover") {
    CHECK(thirds_cover(1).rects.size() == 1);
    const auto rep3 = verify_rect_cover(thirds_cover(3));
    CHECK(rep3.valid);
    CHECK(std::max(rep3.max_row_valency, rep3.max_col_valency) <= 3);

    int pow3 = 1;
    for (int k = 0; k <= 7; ++k, pow3 *= 3) {
        const auto c = thirds_cover(pow3);
        const auto rep = verify_rect_cover(c);
        CHECK(rep.valid);
        CHECK(std::max(rep.max_row_valency, rep.max_col_valency) == 2 * k + 1);
    }
    for (int n = 1; n <= 400; ++n) {
        const auto c = thirds_cover(n);
        if (n <= 40) CHECK(oracle::covers_staircase(c, n, n));
        const auto rep = verify_rect_cover(c);
        CHECK(rep.valid);
        const int ceil_log3 = static_cast<int>(std::ceil(std::log(n) / std::log(3.0) - 1e-12));
        CHECK(std::max(rep.max_row_valency, rep.max_col_valency) <= 2 * ceil_log3 + 2);
    }
}

TEST_CASE("verify_rect_cover examples") {
    SUBCASE("illegal rectangle above the diagonal") {
        RectCovering c{2, {Rectangle{{1}, {2}}, Rectangle::range(1, 2, 1, 1), Rectangle::range(2, 2, 2, 2)}};
        const auto rep = verify_rect_cover(c);
        CHECK_FALSE(rep.valid);
        CHECK(rep.illegal_rects == std::vector<std::size_t>{0});
    }
    SUBCASE("empty covering") {
        const auto rep = verify_rect_cover(RectCovering{2, {}});
        CHECK_FALSE(rep.valid);
        CHECK(rep.uncovered == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}});
    }
    SUBCASE("non-contiguous sets accepted") {
        RectCovering c{3, {Rectangle{{1, 3}, {1}}, Rectangle{{2, 3}, {1, 2}}, Rectangle{{3}, {3}}}};
        const auto rep = verify_rect_cover(c);
        CHECK(rep.valid);
        CHECK(rep.max_row_valency == 3);
        CHECK(rep.max_col_valency == 2);
    }
    SUBCASE("index out of range") {
        CHECK_THROWS_AS(verify_rect_cover(RectCovering{2, {Rectangle{{3}, {1}}}}), MalformedInput);
    }
}

TEST_CASE("rect_to_clique_cover") {
    SUBCASE("n=1") {
        const auto c = rect_to_clique_cover(1, staircase_cover(1, {1, 1}));
        CHECK(oracle::covers(gen_k_nabla(1), c));
        CHECK(max_valency(2, reduce_covering(gen_k_nabla(1), c)) == 1);
    }
    SUBCASE("n=4 at (2,2)") {
        const auto c = rect_to_clique_cover(4, staircase_cover(4, {2, 2}));
        CHECK(oracle::covers(gen_k_nabla(4), c));
        CHECK(oracle::valency(8, c) <= 3);
    }
    SUBCASE("valency at most lrb_upper + 1") {
        for (int n = 1; n <= 60; ++n) {
            const int r = lrb_upper(static_cast<std::uint64_t>(n));
            const auto c = rect_to_clique_cover(n, staircase_cover(n, {r, r}));
            CHECK(oracle::covers(gen_k_nabla(n), c));
            CHECK(oracle::valency(2 * n, c) <= r + 1);
        }
    }
    SUBCASE("invalid rectangle covering rejected") {
        CHECK_THROWS_AS(rect_to_clique_cover(2, RectCovering{2, {Rectangle::range(2, 2, 1, 2)}}), InvalidCertificate);
        CHECK_THROWS_AS(rect_to_clique_cover(3, staircase_cover(2, {2, 2})), InvalidCertificate);
    }
}

TEST_CASE("lrb_upper growth window") {
    for (int e = 4; e <= 20; e += 2) {
        const double n = std::ldexp(1.0, e);
        const double ref = 0.5 * e + 0.25 * std::log2(static_cast<double>(e));
        const double diff = lrb_upper(static_cast<std::uint64_t>(n)) - ref;
        CHECK(diff >= -3.0);
        CHECK(diff <= 3.0);
    }
}
