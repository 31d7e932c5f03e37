#include "lcc/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "lcc/error.hpp"
#include "rng.hpp"

namespace lcc {

Graph gen_k_nabla(int n) {
    if (n < 1) throw MalformedInput("K_nabla needs n >= 1");
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            es.emplace_back(a, b);
            es.emplace_back(n + a, n + b);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) es.emplace_back(i - 1, n + j - 1);
    return Graph(2 * n, es);
}

IntervalModel k_nabla_model(int n) {
    if (n < 1) throw MalformedInput("K_nabla needs n >= 1");
    IntervalModel m;
    for (int p = 1; p <= 2 * n; ++p) m.points.emplace_back(p);
    for (int i = 1; i <= n; ++i)
        m.intervals.push_back({Rational(2 * i - 1, 2), Rational(2 * (n + i) + 1, 2)});
    return m;
}

Graph gen_staircase_bipartite(int n) {
    if (n < 1) throw MalformedInput("staircase bipartite graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) es.emplace_back(i - 1, n + j - 1);
    return Graph(2 * n, es);
}

Graph gen_complete_multipartite(const std::vector<int>& part_sizes) {
    std::vector<int> part;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        if (part_sizes[p] < 0) throw MalformedInput("negative part size");
        part.insert(part.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
    }
    std::vector<Edge> es;
    const int n = static_cast<int>(part.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[u] != part[v]) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph gen_kneser(int n, int k) {
    if (k < 0 || n < 2 * k) throw MalformedInput("Kneser graph needs n >= 2k >= 0");
    if (n > 62) throw MalformedInput("Kneser graph limited to n <= 62");
    std::vector<std::uint64_t> subsets;
    std::function<void(int, int, std::uint64_t)> rec = [&](int start, int left, std::uint64_t mask) {
        if (left == 0) {
            subsets.push_back(mask);
            if (subsets.size() > 200000) throw MalformedInput("Kneser graph too large");
            return;
        }
        for (int e = start; e <= n - left; ++e) rec(e + 1, left - 1, mask | (std::uint64_t{1} << e));
    };
    rec(0, k, 0);
    std::vector<Edge> es;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b)
            if ((subsets[a] & subsets[b]) == 0) es.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return Graph(static_cast<int>(subsets.size()), es);
}

Graph gen_line_graph(const std::vector<std::vector<int>>& hyperedges) {
    std::vector<std::vector<int>> h = hyperedges;
    for (auto& e : h) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    std::vector<Edge> es;
    for (std::size_t a = 0; a < h.size(); ++a)
        for (std::size_t b = a + 1; b < h.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(h[a].begin(), h[a].end(), h[b].begin(), h[b].end(), std::back_inserter(common));
            if (!common.empty()) es.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return Graph(static_cast<int>(h.size()), es);
}

std::vector<std::vector<int>> random_multigraph(int vertices, int edges, Seed s) {
    if (vertices < 2 || edges < 0) throw MalformedInput("random multigraph needs >= 2 vertices");
    detail::Rng rng(s.value);
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(edges));
    for (int e = 0; e < edges; ++e) {
        int u = rng.range(0, vertices - 1);
        int v = rng.range(0, vertices - 2);
        if (v >= u) ++v;
        out.push_back({std::min(u, v), std::max(u, v)});
    }
    return out;
}

Graph gen_random_cobipartite(int n, double p, Seed s) {
    if (n < 0) throw MalformedInput("negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw MalformedInput("probability outside [0,1]");
    detail::Rng rng(s.value);
    const int left = (n + 1) / 2;
    std::vector<Edge> es;
    for (int a = 0; a < left; ++a)
        for (int b = a + 1; b < left; ++b) es.emplace_back(a, b);
    for (int a = left; a < n; ++a)
        for (int b = a + 1; b < n; ++b) es.emplace_back(a, b);
    for (int a = 0; a < left; ++a)
        for (int b = left; b < n; ++b)
            if (rng.bernoulli(p)) es.emplace_back(a, b);
    return Graph(n, es);
}

IntervalModel gen_random_linear_interval(int n_points, int n_intervals, Seed s) {
    if (n_points < 1 || n_intervals < 0) throw MalformedInput("interval model needs >= 1 point");
    detail::Rng rng(s.value);
    IntervalModel m;
    long long pos = 0;
    std::vector<long long> at;
    for (int i = 0; i < n_points; ++i) {
        pos += rng.range(1, 3);
        at.push_back(pos);
        m.points.emplace_back(pos);
    }
    int max_span = 1;
    while (max_span * max_span < n_points) ++max_span;
    for (int k = 0; k < n_intervals; ++k) {
        int a = rng.range(0, n_points - 1);
        int b = std::min(n_points - 1, a + rng.range(1, max_span));
        m.intervals.push_back({Rational(2 * at[a] - 1, 2), Rational(2 * at[b] + 1, 2)});
    }
    return m;
}

} // namespace lcc
