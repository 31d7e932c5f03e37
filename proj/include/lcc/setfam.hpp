#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcc/rect_cover.hpp"

namespace lcc {

// Pairs (A_1,B_1)..(A_k,B_k) of integer sets with |A_i| <= r, |B_i| <= s and
// A_i meeting B_j exactly when i >= j. Pair indices are 1-based in reports.
struct SetPairFamily {
    int r = 0;
    int s = 0;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    friend bool operator==(const SetPairFamily&, const SetPairFamily&) = default;
};

// A_i = indices of the rectangles containing row i, B_j = those containing
// column j (0-based rectangle indices). Throws InvalidCertificate when c does
// not cover T_n, or its row/column valency exceeds the budget.
SetPairFamily covering_to_family(const RectCovering& c, ValencyBudget budget);

// One rectangle per ground element x: rows {i : x in A_i}, columns
// {j : x in B_j}, emitted when both are nonempty. Ground elements are
// relabelled densely in increasing order. Throws InvalidCertificate naming
// the first (i,j) that breaks the intersection condition.
RectCovering family_to_covering(const SetPairFamily& f);

struct FamilyReport {
    bool valid = false;
    bool sizes_ok = false;        // |A_i| <= r, |B_i| <= s
    bool intersections_ok = false; // A_i meets B_j iff i >= j
    bool within_bound = false;    // k <= f(r,s)
    // first (i,j) breaking the intersection rule, else (i,i) for the first size breach
    std::optional<std::pair<int, int>> violation;
};

FamilyReport verify_family(const SetPairFamily& f);

// covering_to_family(staircase_cover(f(r,s), (r,s)), (r,s)).
SetPairFamily extremal_family(int r, int s);

} // namespace lcc
