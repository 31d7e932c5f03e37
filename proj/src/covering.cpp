#include "lcc/covering.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "lcc/error.hpp"

namespace lcc {

CliqueCovering canonical(CliqueCovering c) {
    for (auto& k : c.cliques) {
        std::sort(k.begin(), k.end());
        k.erase(std::unique(k.begin(), k.end()), k.end());
    }
    return c;
}

std::vector<int> valencies(int n, const CliqueCovering& c) {
    std::vector<int> val(static_cast<std::size_t>(n), 0);
    for (const auto& k : c.cliques)
        for (Vertex v : k) {
            if (v < 0 || v >= n)
                throw MalformedInput("clique vertex " + std::to_string(v) + " out of range");
            ++val[v];
        }
    return val;
}

int max_valency(int n, const CliqueCovering& c) {
    auto val = valencies(n, c);
    return val.empty() ? 0 : *std::max_element(val.begin(), val.end());
}

namespace {

std::uint64_t key(int n, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
}

} // namespace

CoverReport verify_covering(const Graph& g, const CliqueCovering& c) {
    CoverReport rep;
    auto val = valencies(g.n(), c);
    rep.max_valency = val.empty() ? 0 : *std::max_element(val.begin(), val.end());

    std::vector<Bitset> cover(static_cast<std::size_t>(g.n()), Bitset(static_cast<std::size_t>(g.n())));
    for (std::size_t i = 0; i < c.cliques.size(); ++i) {
        const auto& k = c.cliques[i];
        Bitset members(static_cast<std::size_t>(g.n()));
        for (Vertex v : k) members.set(static_cast<std::size_t>(v));
        bool ok = true;
        for (Vertex v : k) {
            Bitset others = members;
            others.reset(static_cast<std::size_t>(v));
            if (!others.subset_of(g.neighborhood(v))) ok = false;
        }
        if (!ok) {
            rep.non_clique_indices.push_back(i);
            continue;
        }
        for (Vertex v : k) cover[v] |= members;
    }
    for (auto [u, v] : g.edges())
        if (!cover[u].test(static_cast<std::size_t>(v))) rep.uncovered_edges.emplace_back(u, v);
    rep.valid = rep.uncovered_edges.empty() && rep.non_clique_indices.empty();
    return rep;
}

std::vector<Edge> covered_edges(const Graph& g, const CliqueCovering& c) {
    std::vector<Edge> out;
    for (const auto& k : c.cliques)
        for (std::size_t a = 0; a < k.size(); ++a)
            for (std::size_t b = a + 1; b < k.size(); ++b)
                if (g.adjacent(k[a], k[b])) out.emplace_back(std::min(k[a], k[b]), std::max(k[a], k[b]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CliqueCovering reduce_covering(const Graph& g, const CliqueCovering& input) {
    CliqueCovering c = canonical(input);
    auto rep = verify_covering(g, c);
    if (!rep.valid) throw InvalidCertificate("reduce_covering: input covering is not valid for the graph");

    const int n = g.n();
    std::vector<Clique>& cl = c.cliques;
    std::vector<bool> alive(cl.size(), true);
    std::unordered_map<std::uint64_t, int> count;
    auto add_pairs = [&](const Clique& k, int delta) {
        for (std::size_t a = 0; a < k.size(); ++a)
            for (std::size_t b = a + 1; b < k.size(); ++b) count[key(n, k[a], k[b])] += delta;
    };
    for (const auto& k : cl) add_pairs(k, +1);

    bool changed = true;
    while (changed) {
        changed = false;

        // drop moves
        for (std::size_t i = 0; i < cl.size(); ++i) {
            if (!alive[i]) continue;
            std::size_t pos = 0;
            while (pos < cl[i].size()) {
                Vertex v = cl[i][pos];
                bool droppable = true;
                for (Vertex w : cl[i])
                    if (w != v && count[key(n, v, w)] < 2) {
                        droppable = false;
                        break;
                    }
                if (!droppable) {
                    ++pos;
                    continue;
                }
                for (Vertex w : cl[i])
                    if (w != v) --count[key(n, v, w)];
                cl[i].erase(cl[i].begin() + static_cast<std::ptrdiff_t>(pos));
                changed = true;
            }
            if (cl[i].size() < 2) {
                alive[i] = false;
                if (!cl[i].empty()) changed = true;
                cl[i].clear();
            }
        }

        // merge moves
        std::vector<std::vector<std::size_t>> by_vertex(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cl.size(); ++i)
            if (alive[i])
                for (Vertex v : cl[i]) by_vertex[v].push_back(i);
        for (std::size_t i = 0; i < cl.size(); ++i) {
            if (!alive[i]) continue;
            bool merged = true;
            while (merged) {
                merged = false;
                std::vector<std::size_t> cand;
                for (Vertex v : cl[i])
                    for (std::size_t j : by_vertex[v])
                        if (j > i && alive[j]) cand.push_back(j);
                std::sort(cand.begin(), cand.end());
                cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
                for (std::size_t j : cand) {
                    bool ok = true;
                    for (Vertex a : cl[j]) {
                        if (std::binary_search(cl[i].begin(), cl[i].end(), a)) continue;
                        for (Vertex b : cl[i])
                            if (!g.adjacent(a, b)) {
                                ok = false;
                                break;
                            }
                        if (!ok) break;
                    }
                    if (!ok) continue;
                    Clique u;
                    std::set_union(cl[i].begin(), cl[i].end(), cl[j].begin(), cl[j].end(),
                                   std::back_inserter(u));
                    add_pairs(cl[i], -1);
                    add_pairs(cl[j], -1);
                    add_pairs(u, +1);
                    for (Vertex a : cl[j])
                        if (!std::binary_search(cl[i].begin(), cl[i].end(), a)) by_vertex[a].push_back(i);
                    cl[i] = std::move(u);
                    cl[j].clear();
                    alive[j] = false;
                    merged = changed = true;
                    break;
                }
            }
        }
    }

    CliqueCovering out;
    for (std::size_t i = 0; i < cl.size(); ++i)
        if (alive[i]) out.cliques.push_back(std::move(cl[i]));
    return out;
}

} // namespace lcc
