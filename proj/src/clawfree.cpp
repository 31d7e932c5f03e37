#include "lcc/clawfree.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

#include "lcc/error.hpp"
#include "lcc/structure.hpp"
#include "rng.hpp"

namespace lcc {

std::vector<Vertex> maximal_independent_set(const Graph& g, Seed s) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    detail::Rng rng(s.value);
    rng.shuffle(order);
    Bitset blocked(static_cast<std::size_t>(g.n()));
    std::vector<Vertex> out;
    for (Vertex v : order) {
        if (blocked.test(static_cast<std::size_t>(v))) continue;
        out.push_back(v);
        blocked.set(static_cast<std::size_t>(v));
        blocked |= g.neighborhood(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int ceil_sqrt(int n) {
    int c = 0;
    while (c * c < n) ++c;
    return c;
}

} // namespace

std::vector<std::vector<Vertex>> triangle_free_coloring(const Graph& g) {
    if (auto t = find_triangle(g)) throw PreconditionFailed("graph has a triangle", {(*t)[0], (*t)[1], (*t)[2]});
    const int n = g.n();
    std::vector<std::vector<Vertex>> classes;
    if (n == 0) return classes;
    const int cap = ceil_sqrt(n);

    Bitset left(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) left.set(static_cast<std::size_t>(v));
    for (bool found = true; found;) {
        found = false;
        for (int v = 0; v < n && !found; ++v) {
            if (!left.test(static_cast<std::size_t>(v))) continue;
            Bitset nb = g.neighborhood(v) & left;
            if (static_cast<int>(nb.count()) < cap) continue;
            std::vector<Vertex> cls;
            nb.for_each([&](std::size_t w) {
                if (static_cast<int>(cls.size()) < cap) cls.push_back(static_cast<Vertex>(w));
            });
            for (Vertex w : cls) left.reset(static_cast<std::size_t>(w));
            classes.push_back(std::move(cls));
            found = true;
        }
    }

    // what is left has degree < cap inside itself, so greedy needs <= cap colours
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> by_colour;
    left.for_each([&](std::size_t vi) {
        const Vertex v = static_cast<Vertex>(vi);
        std::vector<bool> used(by_colour.size() + 1, false);
        for (Vertex w : g.neighbors(v))
            if (colour[w] >= 0) used[colour[w]] = true;
        int c = 0;
        while (used[c]) ++c;
        colour[v] = c;
        if (c == static_cast<int>(by_colour.size())) by_colour.emplace_back();
        by_colour[c].push_back(v);
    });
    for (const auto& cls : by_colour)
        for (std::size_t at = 0; at < cls.size(); at += static_cast<std::size_t>(cap))
            classes.emplace_back(cls.begin() + static_cast<std::ptrdiff_t>(at),
                                 cls.begin() + static_cast<std::ptrdiff_t>(std::min(cls.size(), at + cap)));
    return classes;
}

std::vector<Biclique> bipartite_biclique_partition(const Graph& g, const std::vector<Vertex>& a,
                                                   const std::vector<Vertex>& b) {
    std::vector<Biclique> out;
    if (a.empty() || b.empty()) return out;
    int t = 1;
    if (b.size() >= 2) {
        const double lb = std::log2(static_cast<double>(b.size()));
        t = std::max(1, static_cast<int>(std::floor(lb - 2.0 * std::log2(lb > 0 ? lb : 1.0))));
    }
    t = std::min(t, 62);
    for (std::size_t lo = 0; lo < a.size(); lo += static_cast<std::size_t>(t)) {
        const std::size_t hi = std::min(a.size(), lo + static_cast<std::size_t>(t));
        std::map<std::uint64_t, std::vector<Vertex>> buckets;
        for (Vertex y : b) {
            std::uint64_t pattern = 0;
            for (std::size_t i = lo; i < hi; ++i)
                if (g.adjacent(a[i], y)) pattern |= std::uint64_t{1} << (i - lo);
            if (pattern) buckets[pattern].push_back(y);
        }
        for (auto& [pattern, ys] : buckets) {
            Biclique bc;
            for (std::size_t i = lo; i < hi; ++i)
                if (pattern & (std::uint64_t{1} << (i - lo))) bc.left.push_back(a[i]);
            bc.right = std::move(ys);
            out.push_back(std::move(bc));
        }
    }
    return out;
}

namespace {

void partition_rec(const Graph& g, const std::vector<Vertex>& vs, std::vector<Biclique>& out) {
    if (vs.size() < 2) return;
    const auto mid = vs.begin() + static_cast<std::ptrdiff_t>(vs.size() / 2);
    std::vector<Vertex> a(vs.begin(), mid), b(mid, vs.end());
    auto part = bipartite_biclique_partition(g, a, b);
    out.insert(out.end(), part.begin(), part.end());
    partition_rec(g, a, out);
    partition_rec(g, b, out);
}

} // namespace

std::vector<Biclique> biclique_partition_bounded(const Graph& g) {
    std::vector<Vertex> vs(static_cast<std::size_t>(g.n()));
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Biclique> out;
    partition_rec(g, vs, out);
    return out;
}

int biclique_bound(int n) {
    if (n < 2) return 0;
    const double l = std::log2(static_cast<double>(n));
    const double d = std::max(1.0, l - 2.0 * std::log2(l));
    return static_cast<int>(std::ceil(n / d)) + 2 * static_cast<int>(std::ceil(l));
}

namespace {

Clique merge_sides(const Biclique& b) {
    Clique c = b.left;
    c.insert(c.end(), b.right.begin(), b.right.end());
    std::sort(c.begin(), c.end());
    return c;
}

} // namespace

std::vector<Clique> cover_neighborhood(const Graph& g, Vertex u) {
    g.check_vertex(u);
    const auto& nb = g.neighbors(u);
    std::vector<Clique> out;
    if (nb.empty()) return out;
    const Graph comp = complement(g.induced(nb));
    if (comp.edge_count() == 0) {
        Clique c(nb.begin(), nb.end());
        c.push_back(u);
        std::sort(c.begin(), c.end());
        return {c};
    }
    if (auto t = find_triangle(comp))
        throw PreconditionFailed("claw at vertex " + std::to_string(u), {u, nb[(*t)[0]], nb[(*t)[1]], nb[(*t)[2]]});
    auto classes = triangle_free_coloring(comp);
    for (auto& cls : classes)
        for (auto& v : cls) v = nb[v];
    for (const auto& cls : classes) {
        Clique c = cls;
        c.push_back(u);
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            for (const auto& bc : bipartite_biclique_partition(g, classes[i], classes[j]))
                out.push_back(merge_sides(bc));
    return out;
}

ResidualGraph residual(const Graph& g, const std::vector<Vertex>& mis, const CliqueCovering& covered) {
    const auto n = static_cast<std::size_t>(g.n());
    Bitset in_i(n);
    for (Vertex u : mis) {
        g.check_vertex(u);
        in_i.set(static_cast<std::size_t>(u));
    }
    std::vector<Bitset> cov(n, Bitset(n));
    for (const auto& c : covered.cliques)
        for (Vertex x : c) {
            g.check_vertex(x);
            for (Vertex y : c)
                if (x != y) cov[x].set(static_cast<std::size_t>(y));
        }

    std::vector<Edge> f;
    for (auto [x, y] : g.edges()) {
        // x and y lie together in some N[u], u in I
        Bitset cx = g.neighborhood(x), cy = g.neighborhood(y);
        cx.set(static_cast<std::size_t>(x));
        cy.set(static_cast<std::size_t>(y));
        const bool shared = (cx & cy & in_i).any();
        const bool uncovered = !cov[x].test(static_cast<std::size_t>(y));
        if (uncovered == shared)
            throw StructureViolation(std::string("edge ") + (uncovered ? "left uncovered despite" : "covered without") +
                                         " a common I-neighbour",
                                     {x, y});
        if (uncovered) f.emplace_back(x, y);
    }

    ResidualGraph r{g, Graph(g.n(), f), mis, std::vector<int>(n, -1)};
    std::vector<int> index_of(n, -1);
    for (std::size_t k = 0; k < mis.size(); ++k) index_of[mis[k]] = static_cast<int>(k);
    for (int v = 0; v < g.n(); ++v) {
        if (r.h.degree(v) == 0) continue;
        Bitset ni = g.neighborhood(v) & in_i;
        if (ni.count() != 1) throw StructureViolation("H-vertex without exactly one I-neighbour", {v});
        r.segment[v] = index_of[ni.find_first()];
    }
    return r;
}

void check_h_neighbourhoods_are_cliques(const ResidualGraph& r) {
    for (int x = 0; x < r.h.n(); ++x)
        if (!r.host.is_clique(r.h.neighbors(x))) throw StructureViolation("N_H(x) is not a clique", {x});
}

void check_cross_segment_edges(const ResidualGraph& r) {
    for (int x = 0; x < r.h.n(); ++x) {
        const auto& nb = r.h.neighbors(x);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (r.segment[nb[a]] != r.segment[nb[b]] && !r.h.adjacent(nb[a], nb[b]))
                    throw StructureViolation("H-neighbours from different segments are not H-adjacent",
                                             {x, nb[a], nb[b]});
    }
}

namespace {

std::vector<int> bfs(const Graph& h, Vertex s) {
    std::vector<int> dist(static_cast<std::size_t>(h.n()), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : h.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<std::vector<Vertex>> components(const Graph& h) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(static_cast<std::size_t>(h.n()), false);
    for (int v = 0; v < h.n(); ++v) {
        if (seen[v] || h.degree(v) == 0) continue;
        auto dist = bfs(h, v);
        std::vector<Vertex> comp;
        for (int w = 0; w < h.n(); ++w)
            if (dist[w] >= 0) {
                comp.push_back(w);
                seen[w] = true;
            }
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace

void check_components(const ResidualGraph& r) {
    const int delta = r.host.max_degree();
    for (const auto& comp : components(r.h)) {
        if (static_cast<int>(comp.size()) > 2 * delta)
            throw StructureViolation("H-component larger than 2*Delta", {comp.front()});
        std::vector<int> segs;
        for (Vertex v : comp) segs.push_back(r.segment[v]);
        std::sort(segs.begin(), segs.end());
        segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
        if (segs.size() == 2) continue; // H has no edge inside one segment, so this is bipartite
        for (Vertex v : comp) {
            auto dist = bfs(r.h, v);
            for (Vertex w : comp)
                if (dist[w] > 2) throw StructureViolation("H-component of diameter > 2 over > 2 segments", {v, w});
        }
    }
}

void check_mis_degrees(const Graph& g, const std::vector<Vertex>& mis) {
    Bitset in_i(static_cast<std::size_t>(g.n()));
    for (Vertex u : mis) in_i.set(static_cast<std::size_t>(u));
    for (int v = 0; v < g.n(); ++v) {
        if (in_i.test(static_cast<std::size_t>(v))) continue;
        const auto k = (g.neighborhood(v) & in_i).count();
        if (k < 1 || k > 2) throw StructureViolation("vertex with " + std::to_string(k) + " I-neighbours", {v});
    }
}

ClawfreeResult clawfree_cover(const Graph& g, Seed s) {
    if (auto claw = find_claw(g))
        throw PreconditionFailed("graph has a claw",
                                 {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]});
    ClawfreeResult res;
    res.delta = g.max_degree();
    const auto mis = maximal_independent_set(g, s);
    res.mis_size = mis.size();
    check_mis_degrees(g, mis);

    CliqueCovering cover;
    for (Vertex u : mis) {
        auto part = cover_neighborhood(g, u);
        cover.cliques.insert(cover.cliques.end(), part.begin(), part.end());
    }

    const ResidualGraph r = residual(g, mis, cover);
    check_h_neighbourhoods_are_cliques(r);
    check_cross_segment_edges(r);
    check_components(r);
    res.residual_edges = r.h.edge_count();

    for (const auto& comp : components(r.h)) {
        ++res.components;
        const Graph hc = r.h.induced(comp);
        for (const auto& bc : biclique_partition_bounded(hc)) {
            Clique c;
            for (Vertex v : bc.left) c.push_back(comp[v]);
            for (Vertex v : bc.right) c.push_back(comp[v]);
            std::sort(c.begin(), c.end());
            cover.cliques.push_back(std::move(c));
        }
    }
    cover = canonical(std::move(cover));
    res.raw_valency = max_valency(g.n(), cover);
    res.covering = reduce_covering(g, cover);
    res.valency = max_valency(g.n(), res.covering);
    return res;
}

double clawfree_envelope(int delta) {
    return 8.0 * delta / std::log2(delta + 2.0);
}

} // namespace lcc
