#include "lcc/representation.hpp"

#include <algorithm>
#include <map>

#include "lcc/error.hpp"

namespace lcc {

namespace {

bool meets(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

void check_shape(const Graph& g, const IntersectionRepresentation& r) {
    if (static_cast<int>(r.sets.size()) != g.n())
        throw MalformedInput("representation has " + std::to_string(r.sets.size()) +
                             " sets for a graph on " + std::to_string(g.n()) + " vertices");
    for (const auto& s : r.sets)
        for (int l : s)
            if (l < 0 || l >= r.labels)
                throw MalformedInput("label " + std::to_string(l) + " outside 0.." +
                                     std::to_string(r.labels - 1));
}

IntersectionRepresentation sorted_sets(IntersectionRepresentation r) {
    for (auto& s : r.sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return r;
}

} // namespace

RepresentationReport verify_representation(const Graph& g, const IntersectionRepresentation& raw) {
    check_shape(g, raw);
    auto r = sorted_sets(raw);
    RepresentationReport rep;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v) != meets(r.sets[u], r.sets[v])) {
                rep.u = u;
                rep.v = v;
                return rep;
            }
    rep.valid = true;
    return rep;
}

IntersectionRepresentation covering_to_representation(const Graph& g, const CliqueCovering& c) {
    auto rep = verify_covering(g, c);
    if (!rep.valid) throw InvalidCertificate("covering is not valid for the graph");
    IntersectionRepresentation r;
    r.labels = static_cast<int>(c.cliques.size());
    r.sets.assign(static_cast<std::size_t>(g.n()), {});
    for (std::size_t i = 0; i < c.cliques.size(); ++i)
        for (Vertex v : c.cliques[i]) r.sets[v].push_back(static_cast<int>(i));
    return sorted_sets(std::move(r));
}

CliqueCovering representation_to_covering(const Graph& g, const IntersectionRepresentation& r) {
    auto rep = verify_representation(g, r);
    if (!rep.valid)
        throw InvalidCertificate("intersection invariant violated at pair (" + std::to_string(rep.u) +
                                     "," + std::to_string(rep.v) + ")",
                                 {rep.u, rep.v});
    std::vector<Clique> by_label(static_cast<std::size_t>(r.labels));
    for (int v = 0; v < g.n(); ++v)
        for (int l : r.sets[v]) by_label[l].push_back(v);
    CliqueCovering c;
    for (auto& k : by_label) {
        std::sort(k.begin(), k.end());
        k.erase(std::unique(k.begin(), k.end()), k.end());
        if (k.size() >= 2) c.cliques.push_back(std::move(k));
    }
    return c;
}

bool is_injective(const IntersectionRepresentation& raw) {
    auto r = sorted_sets(raw);
    auto s = r.sets;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

IntersectionRepresentation make_injective(const IntersectionRepresentation& raw) {
    auto r = sorted_sets(raw);
    std::map<std::vector<int>, int> seen;
    for (auto& s : r.sets) {
        if (seen.emplace(s, 1).second) continue;
        s.push_back(r.labels++);
    }
    return r;
}

KneserCheck kneser_embedding_check(const Graph& g, const IntersectionRepresentation& raw) {
    check_shape(g, raw);
    if (!is_injective(raw))
        throw PreconditionFailed("kneser_embedding_check requires an injective representation");
    auto r = sorted_sets(raw);
    KneserCheck out;
    for (const auto& s : r.sets) out.k = std::max(out.k, static_cast<int>(s.size()));
    int next = r.labels;
    for (auto& s : r.sets)
        while (static_cast<int>(s.size()) < out.k) s.push_back(next++);
    out.universe = next;

    // padded sets must be pairwise distinct k-subsets
    auto sorted = r.sets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;

    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool disjoint = !meets(r.sets[u], r.sets[v]);
            if (disjoint != !g.adjacent(u, v)) return out;
        }
    out.embeds = true;
    return out;
}

} // namespace lcc
