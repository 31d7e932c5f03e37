#include "lcc/rect_cover.hpp"

#include <algorithm>
#include <numeric>

#include "lcc/bitset.hpp"
#include "lcc/error.hpp"

namespace lcc {

Rectangle Rectangle::range(int row_lo, int row_hi, int col_lo, int col_hi) {
    Rectangle r;
    r.rows.resize(static_cast<std::size_t>(row_hi - row_lo + 1));
    std::iota(r.rows.begin(), r.rows.end(), row_lo);
    r.cols.resize(static_cast<std::size_t>(col_hi - col_lo + 1));
    std::iota(r.cols.begin(), r.cols.end(), col_lo);
    return r;
}

bool Rectangle::contiguous() const {
    auto run = [](const std::vector<int>& v) {
        return !v.empty() && v.back() - v.front() + 1 == static_cast<int>(v.size());
    };
    return run(rows) && run(cols);
}

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i; // exact at every step
    return c;
}

void check_rs(int r, int s) {
    if (r < 1 || s < 1) throw MalformedInput("f(r,s) needs r,s >= 1");
}

} // namespace

BigInt f_closed(int r, int s) {
    check_rs(r, s);
    return binomial(r + s - 1, r - 1) + binomial(r + s - 2, r);
}

std::vector<std::vector<BigInt>> f_table(int max) {
    std::vector<std::vector<BigInt>> f(static_cast<std::size_t>(max) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(max) + 1, 0));
    for (int r = 1; r <= max; ++r)
        for (int s = 1; s <= max; ++s) {
            if (s == 1) f[r][s] = r;
            else if (r == 1) f[r][s] = s;
            else f[r][s] = f[r - 1][s] + f[r][s - 1];
        }
    return f;
}

BigInt f_recurrence(int r, int s) {
    check_rs(r, s);
    return f_table(std::max(r, s))[r][s];
}

int lrb_upper(std::uint64_t n) {
    if (n == 0) throw MalformedInput("lrb_upper needs n >= 1");
    int r = 1;
    while (f_closed(r, r) < n) ++r;
    return r;
}

namespace {

// f(r,s) clamped to fit the index arithmetic below.
long long f_small(int r, int s) {
    BigInt v = f_closed(r, s);
    const BigInt cap = BigInt(1) << 40;
    return static_cast<long long>(v > cap ? cap : v);
}

void staircase_rec(int lo, int hi, int r, int s, std::vector<Rectangle>& out) {
    if (lo > hi) return;
    if (r == 1) {
        for (int i = lo; i <= hi; ++i) out.push_back(Rectangle::range(i, i, lo, i));
        return;
    }
    if (s == 1) {
        for (int j = lo; j <= hi; ++j) out.push_back(Rectangle::range(j, hi, j, j));
        return;
    }
    const long long m = hi - lo + 1;
    const int top = static_cast<int>(std::min(f_small(r, s - 1), m));
    if (top < m) out.push_back(Rectangle::range(lo + top, hi, lo, lo + top - 1));
    staircase_rec(lo, lo + top - 1, r, s - 1, out);
    staircase_rec(lo + top, hi, r - 1, s, out);
}

void thirds_rec(int lo, int hi, std::vector<Rectangle>& out) {
    const int m = hi - lo + 1;
    if (m <= 0) return;
    if (m == 1) {
        out.push_back(Rectangle::range(lo, lo, lo, lo));
        return;
    }
    const int a = (m + 2) / 3;
    const int b = (m - a + 1) / 2;
    const int c = m - a - b;
    const int a_lo = lo, a_hi = lo + a - 1;
    const int b_lo = a_hi + 1, b_hi = b_lo + b - 1;
    const int c_lo = b_hi + 1, c_hi = hi;
    if (b > 0) out.push_back(Rectangle::range(b_lo, b_hi, a_lo, a_hi));
    if (c > 0) {
        out.push_back(Rectangle::range(c_lo, c_hi, a_lo, a_hi));
        out.push_back(Rectangle::range(c_lo, c_hi, b_lo, b_hi));
    }
    thirds_rec(a_lo, a_hi, out);
    thirds_rec(b_lo, b_hi, out);
    if (c > 0) thirds_rec(c_lo, c_hi, out);
}

} // namespace

RectCovering staircase_cover(int n, ValencyBudget budget) {
    check_rs(budget.r, budget.s);
    if (n < 1) throw MalformedInput("staircase_cover needs n >= 1");
    BigInt cap = f_closed(budget.r, budget.s);
    if (BigInt(n) > cap)
        throw InfeasibleBudget("T_" + std::to_string(n) + " is beyond the recursive construction at (r,s) = (" +
                                   std::to_string(budget.r) + "," + std::to_string(budget.s) +
                                   "); it reaches n = f(r,s) = " + cap.str(),
                               static_cast<unsigned long long>(cap));
    RectCovering c;
    c.n = n;
    staircase_rec(1, n, budget.r, budget.s, c.rects);
    return c;
}

RectCovering thirds_cover(int n) {
    if (n < 1) throw MalformedInput("thirds_cover needs n >= 1");
    RectCovering c;
    c.n = n;
    thirds_rec(1, n, c.rects);
    return c;
}

RectReport verify_rect_cover(const RectCovering& c) {
    const int n = c.n;
    if (n < 0) throw MalformedInput("negative matrix order");
    RectReport rep;
    std::vector<int> row_val(static_cast<std::size_t>(n) + 1, 0), col_val(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<std::size_t>> rects_of_row(static_cast<std::size_t>(n) + 1);
    std::vector<Bitset> col_sets;
    col_sets.reserve(c.rects.size());
    for (std::size_t k = 0; k < c.rects.size(); ++k) {
        const auto& rc = c.rects[k];
        Bitset cols(static_cast<std::size_t>(n) + 1);
        for (int i : rc.rows)
            if (i < 1 || i > n) throw MalformedInput("row index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        for (int j : rc.cols)
            if (j < 1 || j > n) throw MalformedInput("column index " + std::to_string(j) + " outside 1.." + std::to_string(n));
        for (int j : rc.cols) cols.set(static_cast<std::size_t>(j));
        col_sets.push_back(std::move(cols));
        const bool legal = !rc.rows.empty() && !rc.cols.empty() &&
                           *std::min_element(rc.rows.begin(), rc.rows.end()) >=
                               *std::max_element(rc.cols.begin(), rc.cols.end());
        if (!legal) {
            rep.illegal_rects.push_back(k);
            continue;
        }
        Bitset seen_rows(static_cast<std::size_t>(n) + 1);
        for (int i : rc.rows)
            if (!seen_rows.test(static_cast<std::size_t>(i))) {
                seen_rows.set(static_cast<std::size_t>(i));
                ++row_val[i];
                rects_of_row[i].push_back(k);
            }
        col_sets.back().for_each([&](std::size_t j) { ++col_val[j]; });
    }
    for (int i = 1; i <= n; ++i) {
        Bitset covered(static_cast<std::size_t>(n) + 1);
        for (auto k : rects_of_row[i]) covered |= col_sets[k];
        for (int j = 1; j <= i; ++j)
            if (!covered.test(static_cast<std::size_t>(j))) {
                if (rep.uncovered.size() < 10000) rep.uncovered.emplace_back(i, j);
                else break;
            }
    }
    rep.max_row_valency = n ? *std::max_element(row_val.begin(), row_val.end()) : 0;
    rep.max_col_valency = n ? *std::max_element(col_val.begin(), col_val.end()) : 0;
    rep.valid = rep.uncovered.empty() && rep.illegal_rects.empty();
    return rep;
}

CliqueCovering rect_to_clique_cover(int n, const RectCovering& c) {
    if (c.n != n) throw InvalidCertificate("rectangle covering is for T_" + std::to_string(c.n));
    if (!verify_rect_cover(c).valid) throw InvalidCertificate("rectangle covering does not cover T_" + std::to_string(n));
    CliqueCovering out;
    for (const auto& rc : c.rects) {
        Clique k;
        for (int i : rc.rows) k.push_back(i - 1);
        for (int j : rc.cols) k.push_back(n + j - 1);
        std::sort(k.begin(), k.end());
        k.erase(std::unique(k.begin(), k.end()), k.end());
        out.cliques.push_back(std::move(k));
    }
    Clique x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    std::iota(x.begin(), x.end(), 0);
    std::iota(y.begin(), y.end(), n);
    out.cliques.push_back(std::move(x));
    out.cliques.push_back(std::move(y));
    return out;
}

} // namespace lcc
