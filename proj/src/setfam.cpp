#include "lcc/setfam.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "lcc/error.hpp"

namespace lcc {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool meets(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

} // namespace

SetPairFamily covering_to_family(const RectCovering& c, ValencyBudget budget) {
    const RectReport rep = verify_rect_cover(c);
    if (!rep.valid) throw InvalidCertificate("rectangle covering does not cover T_" + std::to_string(c.n));
    if (rep.max_row_valency > budget.r || rep.max_col_valency > budget.s)
        throw InvalidCertificate("covering has valency (" + std::to_string(rep.max_row_valency) + "," +
                                 std::to_string(rep.max_col_valency) + "), above the budget (" +
                                 std::to_string(budget.r) + "," + std::to_string(budget.s) + ")");
    SetPairFamily f;
    f.r = budget.r;
    f.s = budget.s;
    f.pairs.resize(static_cast<std::size_t>(c.n));
    for (std::size_t x = 0; x < c.rects.size(); ++x) {
        const int id = static_cast<int>(x);
        for (int i : sorted_unique(c.rects[x].rows)) f.pairs[i - 1].first.push_back(id);
        for (int j : sorted_unique(c.rects[x].cols)) f.pairs[j - 1].second.push_back(id);
    }
    return f;
}

FamilyReport verify_family(const SetPairFamily& f) {
    FamilyReport rep;
    const int k = static_cast<int>(f.pairs.size());
    std::vector<std::vector<int>> a, b;
    std::optional<std::pair<int, int>> size_breach;
    for (int i = 0; i < k; ++i) {
        a.push_back(sorted_unique(f.pairs[i].first));
        b.push_back(sorted_unique(f.pairs[i].second));
        if (!size_breach && (static_cast<int>(a.back().size()) > f.r || static_cast<int>(b.back().size()) > f.s))
            size_breach = std::make_pair(i + 1, i + 1);
    }
    rep.sizes_ok = !size_breach;
    rep.intersections_ok = true;
    for (int i = 0; i < k && rep.intersections_ok; ++i)
        for (int j = 0; j < k; ++j)
            if (meets(a[i], b[j]) != (i >= j)) {
                rep.intersections_ok = false;
                rep.violation = std::make_pair(i + 1, j + 1);
                break;
            }
    if (!rep.violation) rep.violation = size_breach;
    rep.within_bound = f.r >= 1 && f.s >= 1 ? BigInt(k) <= f_closed(f.r, f.s) : k == 0;
    rep.valid = rep.sizes_ok && rep.intersections_ok && rep.within_bound;
    return rep;
}

RectCovering family_to_covering(const SetPairFamily& f) {
    const FamilyReport rep = verify_family(f);
    if (!rep.intersections_ok)
        throw InvalidCertificate("intersection condition fails at (" + std::to_string(rep.violation->first) + "," +
                                     std::to_string(rep.violation->second) + ")",
                                 {rep.violation->first, rep.violation->second});
    std::map<int, Rectangle> by_element;
    const int k = static_cast<int>(f.pairs.size());
    for (int i = 0; i < k; ++i) {
        for (int x : sorted_unique(f.pairs[i].first)) by_element[x].rows.push_back(i + 1);
        for (int x : sorted_unique(f.pairs[i].second)) by_element[x].cols.push_back(i + 1);
    }
    RectCovering c;
    c.n = k;
    for (auto& [x, rc] : by_element)
        if (!rc.rows.empty() && !rc.cols.empty()) c.rects.push_back(std::move(rc));
    return c;
}

SetPairFamily extremal_family(int r, int s) {
    const BigInt n = f_closed(r, s);
    if (n > 1'000'000) throw MalformedInput("extremal family too large: f(r,s) = " + n.str());
    const int size = static_cast<int>(n);
    return covering_to_family(staircase_cover(size, {r, s}), {r, s});
}

} // namespace lcc
