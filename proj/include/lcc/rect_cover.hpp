#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcc/covering.hpp"

namespace lcc {

using BigInt = boost::multiprecision::cpp_int;

// All-ones submatrix of the lower-triangular staircase matrix T_n, where
// T_n(i,j) = 1 iff i >= j. Indices are 1-based in this module. Sets are
// kept sorted; constructions here always produce contiguous runs.
struct Rectangle {
    std::vector<int> rows;
    std::vector<int> cols;

    static Rectangle range(int row_lo, int row_hi, int col_lo, int col_hi);
    bool contiguous() const;
    friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

struct RectCovering {
    int n = 0;
    std::vector<Rectangle> rects;
    friend bool operator==(const RectCovering&, const RectCovering&) = default;
};

struct ValencyBudget {
    int r = 1; // per-row
    int s = 1; // per-column
};

// f(r,s) = C(r+s-1, r-1) + C(r+s-2, r): the largest n that staircase_cover
// handles with row valency <= r and column valency <= s. Not the true
// maximum: T_5 already has a (2,2) covering.
BigInt f_closed(int r, int s);

// Same value from f(r,1) = r, f(1,s) = s, f(r,s) = f(r-1,s) + f(r,s-1).
BigInt f_recurrence(int r, int s);

// f_recurrence for every 1 <= r,s <= max; table[r][s], row/column 0 unused.
std::vector<std::vector<BigInt>> f_table(int max);

// Least r with n <= f(r,r).
int lrb_upper(std::uint64_t n);

// Row/column valency <= budget, built by peeling the top f(r,s-1) indices
// off with one cross rectangle and recursing on both triangles. Throws
// InfeasibleBudget when n > f(r,s).
RectCovering staircase_cover(int n, ValencyBudget budget);

// Three near-equal blocks A < B < C, rectangles B x A, C x A, C x B, then
// recursion inside each block. Valency 2k+1 for n = 3^k.
RectCovering thirds_cover(int n);

struct RectReport {
    bool valid = false;
    int max_row_valency = 0;
    int max_col_valency = 0;
    std::vector<std::pair<int, int>> uncovered; // (row, col), capped at 10000
    std::vector<std::size_t> illegal_rects;
};

// Throws MalformedInput for indices outside 1..n.
RectReport verify_rect_cover(const RectCovering& c);

// Rectangle (R, C) becomes the clique {x_i : i in R} u {y_j : j in C} of
// K_nabla(n,n) (x_i = i-1, y_j = n+j-1); the cliques X and Y are appended.
// Throws InvalidCertificate when c does not cover T_n.
CliqueCovering rect_to_clique_cover(int n, const RectCovering& c);

} // namespace lcc
