#include "lcc/graph.hpp"

#include <algorithm>
#include <sstream>

#include "lcc/error.hpp"

namespace lcc {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw MalformedInput("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    nbrs_.assign(static_cast<std::size_t>(n), {});
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw MalformedInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") out of range for n=" + std::to_string(n));
        if (u == v) throw MalformedInput("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].set(static_cast<std::size_t>(v));
        adj_[v].set(static_cast<std::size_t>(u));
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
    }
    for (auto& l : nbrs_) std::sort(l.begin(), l.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& l : nbrs_) d = std::max(d, static_cast<int>(l.size()));
    return d;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw MalformedInput("vertex " + std::to_string(v) + " out of range for n=" +
                             std::to_string(n_));
}

bool Graph::is_clique(const std::vector<Vertex>& vs) const {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (!adjacent(vs[a], vs[b])) return false;
    return true;
}

bool Graph::is_independent(const std::vector<Vertex>& vs) const {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (adjacent(vs[a], vs[b])) return false;
    return true;
}

Graph Graph::induced(const std::vector<Vertex>& vs) const {
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        check_vertex(vs[i]);
        pos[vs[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (Vertex w : nbrs_[vs[i]])
            if (pos[w] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), pos[w]);
    return Graph(static_cast<int>(vs.size()), es);
}

Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return Graph(g.n(), es);
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph {\n";
    for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

// Maximum clique over an explicit adjacency family restricted to `cand`.
class MaxClique {
public:
    explicit MaxClique(const std::vector<Bitset>& adj) : adj_(adj) {}

    std::vector<int> run(const Bitset& cand) {
        std::vector<int> r;
        expand(r, cand);
        return best_;
    }

private:
    void expand(std::vector<int>& r, Bitset p) {
        if (p.none()) {
            if (r.size() > best_.size()) best_ = r;
            return;
        }
        // greedy colouring of p; colour index bounds the clique size reachable
        std::vector<int> order;
        std::vector<int> colour;
        Bitset uncoloured = p;
        int c = 0;
        while (uncoloured.any()) {
            ++c;
            Bitset q = uncoloured;
            while (q.any()) {
                auto v = q.find_first();
                q.reset(v);
                q.and_not(adj_[v]);
                uncoloured.reset(v);
                order.push_back(static_cast<int>(v));
                colour.push_back(c);
            }
        }
        for (std::size_t k = order.size(); k-- > 0;) {
            if (r.size() + static_cast<std::size_t>(colour[k]) <= best_.size()) return;
            int v = order[k];
            r.push_back(v);
            expand(r, p & adj_[v]);
            r.pop_back();
            p.reset(static_cast<std::size_t>(v));
        }
    }

    const std::vector<Bitset>& adj_;
    std::vector<int> best_;
};

std::vector<Bitset> adjacency_of(const Graph& g) {
    std::vector<Bitset> adj;
    adj.reserve(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) adj.push_back(g.neighborhood(v));
    return adj;
}

} // namespace

int clique_number(const Graph& g) {
    Bitset all(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all.set(static_cast<std::size_t>(v));
    auto adj = adjacency_of(g);
    return static_cast<int>(MaxClique(adj).run(all).size());
}

std::vector<Vertex> maximum_independent_set(const Graph& g, const Bitset& subset) {
    std::vector<Bitset> co(static_cast<std::size_t>(g.n()), Bitset(static_cast<std::size_t>(g.n())));
    subset.for_each([&](std::size_t v) {
        Bitset row = subset;
        row.and_not(g.neighborhood(static_cast<int>(v)));
        row.reset(v);
        co[v] = row;
    });
    auto s = MaxClique(co).run(subset);
    std::sort(s.begin(), s.end());
    return s;
}

int independence_number(const Graph& g, const Bitset& subset) {
    return static_cast<int>(maximum_independent_set(g, subset).size());
}

} // namespace lcc
