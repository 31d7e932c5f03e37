#include "lcc/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_set>

#include "lcc/error.hpp"
#include "lcc/structure.hpp"

namespace lcc {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// Decision search for "lcc(g) <= k" on graphs with at most 64 vertices.
class CliqueCoverSearch {
public:
    CliqueCoverSearch(const Graph& g, std::uint64_t node_limit, std::uint64_t& nodes)
        : n_(g.n()), limit_(node_limit), nodes_(nodes) {
        nbr_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) nbr_[v] |= bit(w);
        edges_ = g.edges();
        std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
            return std::min(g.degree(a.first), g.degree(a.second)) >
                   std::min(g.degree(b.first), g.degree(b.second));
        });
    }

    // true: feasible (solution() holds the cliques); false: infeasible.
    // Throws BudgetExhausted.
    bool decide(int k) {
        k_ = k;
        members_.clear();
        ext_.clear();
        val_.assign(static_cast<std::size_t>(n_), 0);
        cov_.assign(static_cast<std::size_t>(n_), 0);
        return rec(0);
    }

    CliqueCovering solution() const {
        CliqueCovering c;
        for (Mask m : members_) {
            Clique k;
            for (int v = 0; v < n_; ++v)
                if (m & bit(v)) k.push_back(v);
            c.cliques.push_back(std::move(k));
        }
        return c;
    }

private:
    struct Undo {
        std::size_t clique;
        Mask members, ext;
        std::vector<Mask> cov;
        std::vector<int> val;
    };

    bool rec(std::size_t idx) {
        if (++nodes_ > limit_) throw BudgetExhausted("exact_lcc node budget exhausted");
        while (idx < edges_.size() && (cov_[edges_[idx].first] & bit(edges_[idx].second))) ++idx;
        if (idx == edges_.size()) return true;
        const auto [u, v] = edges_[idx];

        for (std::size_t c = 0; c < members_.size(); ++c) {
            const Mask room = members_[c] | ext_[c];
            if (!(room & bit(u)) || !(room & bit(v))) continue;
            const Mask added = (bit(u) | bit(v)) & ~members_[c];
            bool ok = true;
            for (int a : {u, v})
                if ((added & bit(a)) && val_[a] >= k_) ok = false;
            if (!ok) continue;
            Undo undo = snapshot(c);
            grow(c, added);
            if (viable() && rec(idx + 1)) return true;
            restore(undo);
        }

        if (val_[u] < k_ && val_[v] < k_) {
            Undo undo = snapshot(members_.size());
            members_.push_back(0);
            ext_.push_back(~Mask{0});
            grow(members_.size() - 1, bit(u) | bit(v));
            if (viable() && rec(idx + 1)) return true;
            restore(undo);
            members_.pop_back();
            ext_.pop_back();
        }
        return false;
    }

    Undo snapshot(std::size_t c) const {
        Undo u{c, c < members_.size() ? members_[c] : 0, c < ext_.size() ? ext_[c] : 0, cov_, val_};
        return u;
    }

    void restore(const Undo& u) {
        if (u.clique < members_.size()) {
            members_[u.clique] = u.members;
            ext_[u.clique] = u.ext;
        }
        cov_ = u.cov;
        val_ = u.val;
    }

    void grow(std::size_t c, Mask added) {
        Mask m = members_[c] | added;
        for (int a = 0; a < n_; ++a)
            if (added & bit(a)) {
                ++val_[a];
                ext_[c] &= nbr_[a];
            }
        for (int w = 0; w < n_; ++w)
            if (m & bit(w)) cov_[w] |= m & ~bit(w);
        members_[c] = m;
    }

    // Every vertex still needs its uncovered edges; those that cannot join a
    // clique already containing the vertex need fresh cliques, at least as
    // many as a greedy independent set among them.
    bool viable() const {
        for (int x = 0; x < n_; ++x) {
            Mask need = nbr_[x] & ~cov_[x];
            if (!need) continue;
            for (std::size_t c = 0; c < members_.size(); ++c)
                if (members_[c] & bit(x)) need &= ~ext_[c];
            if (!need) continue;
            const int slots = k_ - val_[x];
            if (slots <= 0) return false;
            int indep = 0;
            Mask rest = need;
            while (rest) {
                int w = std::countr_zero(rest);
                ++indep;
                rest &= ~(nbr_[w] | bit(w));
            }
            if (indep > slots) return false;
        }
        return true;
    }

    int n_;
    std::uint64_t limit_;
    std::uint64_t& nodes_;
    int k_ = 0;
    std::vector<Mask> nbr_;
    std::vector<Edge> edges_;
    std::vector<Mask> members_, ext_, cov_;
    std::vector<int> val_;
};

} // namespace

ExactResult exact_lcc(const Graph& g, SearchBudget b) {
    if (g.n() > 64) throw MalformedInput("exact_lcc supports at most 64 vertices");
    ExactResult res;
    if (g.edge_count() == 0) {
        res.proved = true;
        return res;
    }
    const auto bounds = lcc_bounds(g);

    CliqueCovering edges;
    for (auto [u, v] : g.edges()) edges.cliques.push_back({u, v});
    CliqueCovering best = reduce_covering(g, edges);
    int best_val = max_valency(g.n(), best);

    CliqueCoverSearch search(g, b.max_nodes, res.nodes);
    try {
        for (int k = bounds.lower; k < best_val; ++k) {
            if (search.decide(k)) {
                best = search.solution();
                best_val = k;
                break;
            }
        }
        res.proved = true;
    } catch (const BudgetExhausted&) {
        res.proved = false;
    }
    res.value = best_val;
    res.certificate = canonical(best);
    return res;
}

// ---------------------------------------------------------------------------
// Staircase search.
//
// Index k = 1..n is processed as "column k, then row k". Each rectangle is
// summarised by the set of columns it has so far (a bitmask) and whether it
// has been given a row. Once a rectangle has a row it can take no further
// columns (its columns must not exceed its smallest row). Column k picks
// at most s rectangles that have no row yet, or fresh ones. Row k must meet
// every column 1..k, so it picks at most r rectangles whose column masks
// together cover 1..k; rectangles with no column yet are useless in a row.
// The only effect of a row choice on the future is which rectangles stop
// taking columns, so only inclusion-minimal such sets are branched on.
// Failed states are memoised on a canonical key.

namespace {

class StaircaseSearcher {
public:
    StaircaseSearcher(int n, int r, int s, std::uint64_t limit) : n_(n), r_(r), s_(s), limit_(limit) {}

    bool run() {
        if (n_ < 1) return true;
        return column_step(1);
    }

    RectCovering witness() const {
        RectCovering c;
        c.n = n_;
        for (std::size_t x = 0; x < rects_.size(); ++x) {
            Rectangle rc;
            for (int k = 1; k <= n_; ++k)
                if (std::find(rows_[k].begin(), rows_[k].end(), x) != rows_[k].end()) rc.rows.push_back(k);
            for (int j = 1; j <= n_; ++j)
                if (rects_[x].mask & (Mask{1} << j)) rc.cols.push_back(j);
            if (!rc.rows.empty() && !rc.cols.empty()) c.rects.push_back(std::move(rc));
        }
        return c;
    }

    std::uint64_t nodes = 0;

private:
    struct Rect {
        Mask mask = 0;
        bool closed = false;
        bool dead = false; // no later row needs it
    };

    void tick() {
        if (++nodes > limit_) throw BudgetExhausted("staircase search node budget exhausted");
    }

    std::vector<std::uint64_t> key(int k) const {
        std::vector<std::uint64_t> open, closed;
        for (const auto& x : rects_)
            if (!x.dead) (x.closed ? closed : open).push_back(x.mask);
        std::sort(open.begin(), open.end());
        std::sort(closed.begin(), closed.end());
        closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
        std::vector<std::uint64_t> out;
        out.push_back(static_cast<std::uint64_t>(k));
        out.insert(out.end(), open.begin(), open.end());
        out.push_back(~std::uint64_t{0});
        out.insert(out.end(), closed.begin(), closed.end());
        return out;
    }

    bool column_step(int k) {
        tick();
        auto kk = key(k);
        if (failed_.count(kk)) return false;

        // open rectangles grouped by mask
        std::map<Mask, std::vector<std::size_t>> groups;
        for (std::size_t x = 0; x < rects_.size(); ++x)
            if (!rects_[x].closed && !rects_[x].dead) groups[rects_[x].mask].push_back(x);
        std::vector<std::pair<Mask, std::vector<std::size_t>>> g(groups.begin(), groups.end());

        std::vector<int> take(g.size(), 0);
        bool ok = choose_column(k, g, take, 0, 0);
        if (!ok) failed_.insert(std::move(kk));
        return ok;
    }

    bool choose_column(int k, const std::vector<std::pair<Mask, std::vector<std::size_t>>>& g,
                       std::vector<int>& take, std::size_t gi, int used) {
        if (gi == g.size()) {
            // fresh rectangles first: feasible instances then fall out quickly
            for (int fresh = s_ - used; fresh >= (used == 0 ? 1 : 0); --fresh) {
                std::vector<std::size_t> touched;
                for (std::size_t i = 0; i < g.size(); ++i)
                    for (int t = 0; t < take[i]; ++t) touched.push_back(g[i].second[t]);
                const std::size_t before = rects_.size();
                for (int f = 0; f < fresh; ++f) {
                    rects_.push_back({});
                    touched.push_back(rects_.size() - 1);
                }
                for (auto x : touched) rects_[x].mask |= Mask{1} << k;
                if (row_step(k)) return true;
                for (auto x : touched) rects_[x].mask &= ~(Mask{1} << k);
                rects_.resize(before);
            }
            return false;
        }
        const int avail = static_cast<int>(g[gi].second.size());
        for (int t = std::min(avail, s_ - used); t >= 0; --t) {
            take[gi] = t;
            if (choose_column(k, g, take, gi + 1, used + t)) return true;
        }
        take[gi] = 0;
        return false;
    }

    bool row_step(int k) {
        tick();
        const Mask full = ((Mask{1} << (k + 1)) - 1) & ~Mask{1};

        // distinct masks; a mask is "free" when some rectangle with it is already closed
        std::map<Mask, std::pair<bool, std::size_t>> masks; // mask -> (free, representative)
        for (std::size_t x = 0; x < rects_.size(); ++x) {
            if (rects_[x].dead) continue;
            auto& e = masks[rects_[x].mask];
            if (rects_[x].closed) e = {true, x};
        }
        for (std::size_t x = 0; x < rects_.size(); ++x) {
            if (rects_[x].dead) continue;
            auto& e = masks[rects_[x].mask];
            if (!e.first) e.second = x;
        }
        std::vector<Mask> ms;
        std::vector<bool> is_free;
        std::vector<std::size_t> rep;
        for (auto& [m, e] : masks) {
            ms.push_back(m);
            is_free.push_back(e.first);
            rep.push_back(e.second);
        }

        // enumerate hitting choices of <= r distinct masks
        std::vector<std::vector<std::size_t>> options; // indices into ms
        std::vector<std::size_t> cur;
        enumerate(ms, full, 0, 0, cur, options);

        // reduce to inclusion-minimal newly-closed sets
        std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> closing; // (closed part, full pick)
        for (auto& o : options) {
            std::vector<std::size_t> nc;
            for (auto i : o)
                if (!is_free[i]) nc.push_back(i);
            closing.emplace_back(std::move(nc), o);
        }
        std::sort(closing.begin(), closing.end(), [](const auto& a, const auto& b) {
            return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
        });
        std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> minimal;
        for (auto& c : closing) {
            bool dominated = false;
            for (auto& m : minimal)
                if (std::includes(c.first.begin(), c.first.end(), m.first.begin(), m.first.end())) {
                    dominated = true;
                    break;
                }
            if (!dominated) minimal.push_back(c);
        }

        for (auto& [nc, pick] : minimal) {
            std::vector<std::size_t> row;
            std::vector<std::size_t> newly;
            for (auto i : pick) row.push_back(rep[i]);
            for (auto i : nc) newly.push_back(rep[i]);
            for (auto x : newly) rects_[x].closed = true;
            auto killed = bury();
            const auto idle = retire(full);
            killed.insert(killed.end(), idle.begin(), idle.end());
            if (static_cast<int>(rows_.size()) <= k) rows_.resize(static_cast<std::size_t>(k) + 1);
            rows_[k] = row;
            if (k == n_ || column_step(k + 1)) return true;
            for (auto x : killed) rects_[x].dead = false;
            for (auto x : newly) rects_[x].closed = false;
        }
        return false;
    }

    // A closed rectangle whose columns lie inside another closed one's is
    // never needed by a later row.
    std::vector<std::size_t> bury() {
        std::vector<std::size_t> killed;
        for (std::size_t x = 0; x < rects_.size(); ++x) {
            if (!rects_[x].closed || rects_[x].dead) continue;
            for (std::size_t y = 0; y < rects_.size(); ++y) {
                if (y == x || !rects_[y].closed || rects_[y].dead) continue;
                const Mask mx = rects_[x].mask, my = rects_[y].mask;
                if ((mx & ~my) == 0 && (mx != my || y < x)) {
                    rects_[x].dead = true;
                    killed.push_back(x);
                    break;
                }
            }
        }
        return killed;
    }

    // A rectangle no later row can use: the columns 1..k it lacks cannot be
    // covered by r-1 other live rectangles.
    std::vector<std::size_t> retire(Mask full) {
        std::vector<std::size_t> killed;
        std::vector<Mask> live;
        std::vector<std::size_t> idx;
        for (std::size_t x = 0; x < rects_.size(); ++x)
            if (!rects_[x].dead) {
                live.push_back(rects_[x].mask & full);
                idx.push_back(x);
            }
        for (std::size_t i = 0; i < live.size(); ++i) {
            if (coverable(live, i, full & ~live[i], r_ - 1)) continue;
            rects_[idx[i]].dead = true;
            killed.push_back(idx[i]);
        }
        return killed;
    }

    static bool coverable(const std::vector<Mask>& live, std::size_t skip, Mask need, int budget) {
        if (need == 0) return true;
        if (budget == 0) return false;
        const Mask low = need & (~need + 1);
        for (std::size_t j = 0; j < live.size(); ++j)
            if (j != skip && (live[j] & low) && coverable(live, skip, need & ~live[j], budget - 1)) return true;
        return false;
    }

    void enumerate(const std::vector<Mask>& ms, Mask full, std::size_t from, Mask acc, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) const {
        if ((acc & full) == full) {
            out.push_back(cur);
            return; // supersets are dominated
        }
        if (static_cast<int>(cur.size()) == r_) return;
        for (std::size_t i = from; i < ms.size(); ++i) {
            if ((ms[i] & full & ~acc) == 0) continue;
            cur.push_back(i);
            enumerate(ms, full, i + 1, acc | ms[i], cur, out);
            cur.pop_back();
        }
    }

    int n_, r_, s_;
    std::uint64_t limit_;
    std::vector<Rect> rects_;
    std::vector<std::vector<std::size_t>> rows_;
    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const {
            std::uint64_t h = 14695981039346656037ULL;
            for (auto x : v) h = (h ^ x) * 1099511628211ULL;
            return static_cast<std::size_t>(h);
        }
    };
    std::unordered_set<std::vector<std::uint64_t>, KeyHash> failed_;
};

} // namespace

StaircaseSearch staircase_feasible(int n, int r, int s, SearchBudget b) {
    if (n < 1 || n > 62) throw MalformedInput("staircase_feasible supports 1 <= n <= 62");
    if (r < 1 || s < 1) throw MalformedInput("valency budget must be >= 1");
    StaircaseSearcher searcher(n, r, s, b.max_nodes);
    StaircaseSearch out;
    try {
        if (searcher.run()) {
            out.status = SearchStatus::feasible;
            out.witness = searcher.witness();
        } else {
            out.status = SearchStatus::infeasible;
        }
    } catch (const BudgetExhausted&) {
        out.status = SearchStatus::budget_exhausted;
    }
    out.nodes = searcher.nodes;
    return out;
}

int exact_lrb_staircase(int n, SearchBudget b) {
    for (int k = 1;; ++k) {
        auto res = staircase_feasible(n, k, k, b);
        if (res.status == SearchStatus::budget_exhausted)
            throw BudgetExhausted("exact_lrb_staircase: budget exhausted at k=" + std::to_string(k));
        if (res.status == SearchStatus::feasible) return k;
    }
}

std::uint64_t cobipartite_lower_bound(std::uint64_t n) {
    if (n < 4 || n % 2) throw MalformedInput("cobipartite_lower_bound needs even n >= 4");
    using LD = long double;
    const LD nn = static_cast<LD>(n);
    const LD lhs = nn * nn / 4 * (1 - 1e-9L);
    const std::uint64_t t_max = n * n / 8;
    auto holds = [&](std::uint64_t t) {
        const LD tt = static_cast<LD>(t);
        const LD rhs = nn * std::log2(tt) + nn * tt * std::log2(std::exp(1.0L) * nn * nn / (4 * tt));
        return lhs > rhs;
    };
    // the right side increases in t on 1..n^2/8, so the admissible t form a prefix
    if (t_max < 1 || !holds(1)) return 0;
    std::uint64_t lo = 1, hi = t_max;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (holds(mid)) lo = mid; else hi = mid - 1;
    }
    return lo;
}

std::optional<CobipartiteWitness> search_high_lcc_cobipartite(int n, int target, Seed s, SearchBudget budget,
                                                              std::uint64_t max_attempts) {
    if (n < 0) throw MalformedInput("negative vertex count");
    if (target <= 0) {
        Graph g = gen_random_cobipartite(n, 0.0, s);
        return CobipartiteWitness{g, exact_lcc(g, budget), 0};
    }
    for (std::uint64_t a = 0; a < max_attempts; ++a) {
        Graph g = gen_random_cobipartite(n, 0.5, Seed{s.value * 0x9E3779B97F4A7C15ULL + a});
        if (g.max_degree() < target) continue;
        ExactResult ex = exact_lcc(g, budget);
        if (ex.proved && ex.value >= target) return CobipartiteWitness{g, ex, a + 1};
    }
    return std::nullopt;
}

} // namespace lcc
