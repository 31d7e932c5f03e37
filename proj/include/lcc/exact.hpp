#pragma once

#include <cstdint>
#include <optional>

#include "lcc/covering.hpp"
#include "lcc/generators.hpp"
#include "lcc/graph.hpp"
#include "lcc/rect_cover.hpp"

namespace lcc {

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    double time_hint = 0.0; // seconds, advisory only
};

struct ExactResult {
    int value = 0;             // lcc when proved, best known upper bound otherwise
    CliqueCovering certificate; // a covering with max valency == value
    bool proved = false;
    std::uint64_t nodes = 0;
};

// Exact local clique cover number. Decides "lcc <= k" for k rising from the
// lower bound of lcc_bounds; each decision is a branch and bound over the
// edges (ordered by non-increasing min endpoint degree): an edge already
// inside a clique is skipped, otherwise it joins an existing clique that
// stays a clique or opens a new clique consisting of exactly that edge.
// Running out of nodes returns proved = false with the best covering found.
ExactResult exact_lcc(const Graph& g, SearchBudget b = {});

enum class SearchStatus { feasible, infeasible, budget_exhausted };

struct StaircaseSearch {
    SearchStatus status = SearchStatus::infeasible;
    std::optional<RectCovering> witness; // set when feasible
    std::uint64_t nodes = 0;
};

// Exhaustive decision: does T_n admit a rectangle covering with row
// valency <= r and column valency <= s? Rectangles are arbitrary
// (row set, column set) pairs, not just contiguous ones.
StaircaseSearch staircase_feasible(int n, int r, int s, SearchBudget b = {});

// Exact local boolean rank of T_n (min k with staircase_feasible(n,k,k)).
// Throws BudgetExhausted when the search does not finish.
int exact_lrb_staircase(int n, SearchBudget b = {});

// Largest t <= n^2/8 with n^2/4 > n log2(t) + n t log2(e n^2 / (4t)), the
// left side shrunk by a relative 1e-9; 0 when no t >= 1 qualifies. Such a
// t certifies a cobipartite graph on n vertices with lcc > t. Requires n
// even, n >= 4.
std::uint64_t cobipartite_lower_bound(std::uint64_t n);

struct CobipartiteWitness {
    Graph graph;
    ExactResult exact;
    std::uint64_t attempts = 0;
};

// Samples seeded random cobipartite graphs on n vertices until exact_lcc
// proves lcc >= target; `budget` bounds each exact solve and `max_attempts`
// the number of samples. target <= 0 returns the p = 0 sample at once.
std::optional<CobipartiteWitness> search_high_lcc_cobipartite(int n, int target, Seed s,
                                                              SearchBudget budget = {},
                                                              std::uint64_t max_attempts = 2000);

} // namespace lcc
