#include "lcc/structure.hpp"

#include <algorithm>
#include <map>

#include "lcc/error.hpp"

namespace lcc {

TwinReduction twin_reduce(const Graph& g) {
    std::map<std::vector<std::uint64_t>, std::size_t> index;
    TwinReduction out;
    for (int v = 0; v < g.n(); ++v) {
        Bitset closed = g.neighborhood(v);
        closed.set(static_cast<std::size_t>(v));
        auto [it, fresh] = index.emplace(closed.words(), out.classes.size());
        if (fresh) out.classes.push_back({});
        out.classes[it->second].push_back(v);
    }
    std::vector<Vertex> reps;
    for (const auto& cls : out.classes) reps.push_back(cls.front());
    out.reduced = g.induced(reps);
    return out;
}

bool is_twin_free(const Graph& g) {
    return twin_reduce(g).reduced.n() == g.n();
}

CliqueCovering twin_lift(const CliqueCovering& reduced, const std::vector<std::vector<Vertex>>& classes) {
    std::size_t total = 0;
    for (const auto& cls : classes) {
        if (cls.empty()) throw MalformedInput("twin_lift: empty class");
        total += cls.size();
    }
    std::vector<bool> seen(total, false);
    for (const auto& cls : classes)
        for (Vertex v : cls) {
            if (v < 0 || static_cast<std::size_t>(v) >= total || seen[v])
                throw MalformedInput("twin_lift: classes do not partition 0.." + std::to_string(total - 1));
            seen[v] = true;
        }

    CliqueCovering out;
    std::vector<bool> used(classes.size(), false);
    for (const auto& k : reduced.cliques) {
        for (Vertex r : k)
            if (r < 0 || static_cast<std::size_t>(r) >= classes.size())
                throw MalformedInput("twin_lift: reduced vertex " + std::to_string(r) + " has no class");
        if (k.size() < 2) continue;
        Clique lifted;
        for (Vertex r : k) {
            used[r] = true;
            lifted.insert(lifted.end(), classes[r].begin(), classes[r].end());
        }
        std::sort(lifted.begin(), lifted.end());
        out.cliques.push_back(std::move(lifted));
    }
    for (std::size_t r = 0; r < classes.size(); ++r)
        if (!used[r] && classes[r].size() >= 2) {
            Clique k = classes[r];
            std::sort(k.begin(), k.end());
            out.cliques.push_back(std::move(k));
        }
    return out;
}

std::optional<Claw> find_claw(const Graph& g) {
    for (int c = 0; c < g.n(); ++c) {
        const auto& nb = g.neighbors(c);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.adjacent(nb[a], nb[b])) continue;
                Bitset rest = g.neighborhood(c);
                rest.and_not(g.neighborhood(nb[a]));
                rest.and_not(g.neighborhood(nb[b]));
                rest.reset(static_cast<std::size_t>(nb[a]));
                rest.reset(static_cast<std::size_t>(nb[b]));
                auto x = rest.find_first();
                if (x < rest.size()) {
                    std::array<Vertex, 3> l{nb[a], nb[b], static_cast<Vertex>(x)};
                    std::sort(l.begin(), l.end());
                    return Claw{c, l};
                }
            }
    }
    return std::nullopt;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        auto common = g.neighborhood(u) & g.neighborhood(v);
        auto w = common.find_first();
        if (w < common.size()) {
            std::array<Vertex, 3> t{u, v, static_cast<Vertex>(w)};
            std::sort(t.begin(), t.end());
            return t;
        }
    }
    return std::nullopt;
}

int alpha_local(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) <= best) continue;
        best = std::max(best, independence_number(g, g.neighborhood(v)));
    }
    return best;
}

LccBounds lcc_bounds(const Graph& g) {
    if (g.edge_count() == 0) return {0, 0};
    const int delta = g.max_degree();
    const int omega = clique_number(g); // >= 2 here
    int lower = (delta + omega - 2) / (omega - 1);
    lower = std::max(lower, alpha_local(g));
    return {lower, delta};
}

bool is_disjoint_union_of_cliques(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        Bitset a = g.neighborhood(u);
        a.set(static_cast<std::size_t>(u));
        Bitset b = g.neighborhood(v);
        b.set(static_cast<std::size_t>(v));
        if (!(a == b)) return false;
    }
    return true;
}

} // namespace lcc
