#pragma once

// Brute-force reference computations. Written directly from the
// definitions and kept deliberately naive; they share no code with the
// library beyond the Edge type.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "isg/sum_graph.hpp"

namespace isg::oracle {

struct Graph {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;  // a < b
};

/// Every unordered pair of kept labels whose sum passes `sum_ok`.
inline Graph by_rule(int lo, int hi, const std::function<bool(int)>& label_ok,
                     const std::function<bool(int)>& sum_ok) {
    Graph g;
    for (int x = lo; x <= hi; ++x) {
        if (label_ok(x)) g.vertices.push_back(x);
    }
    for (int a : g.vertices) {
        for (int b : g.vertices) {
            if (a < b && sum_ok(a + b)) g.edges.emplace_back(a, b);
        }
    }
    return g;
}

inline Graph gn(int n) {
    return by_rule(1, n, [](int) { return true; }, [n](int k) { return 1 <= k && k <= n; });
}

inline Graph grs(int r, int s) {
    return by_rule(r, s, [](int) { return true; }, [r, s](int k) { return r <= k && k <= s; });
}

inline Graph h(int i, int s, int m, int j) {
    auto keep = [=](int x) { return x != -m && x != j; };
    return by_rule(-i, s, keep, [=](int k) { return -i <= k && k <= s && keep(k); });
}

inline std::map<int, int> degrees(const Graph& g) {
    std::map<int, int> d;
    for (int v : g.vertices) d[v] = 0;
    for (auto [a, b] : g.edges) {
        ++d[a];
        ++d[b];
    }
    return d;
}

inline int max_degree(const Graph& g) {
    int best = 0;
    for (auto [v, d] : degrees(g)) best = std::max(best, d);
    return best;
}

inline int distinct_sums(const Graph& g) {
    std::set<int> sums;
    for (auto [a, b] : g.edges) sums.insert(a + b);
    return static_cast<int>(sums.size());
}

/// True iff the edges can be split into k matchings. Plain backtracking
/// over edges in input order, no pruning beyond conflict checks.
inline bool colorable(const Graph& g, int k) {
    const std::size_t m = g.edges.size();
    std::vector<int> color(m, -1);
    std::function<bool(std::size_t)> go = [&](std::size_t e) {
        if (e == m) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t f = 0; f < e && ok; ++f) {
                if (color[f] != c) continue;
                auto [a, b] = g.edges[e];
                auto [x, y] = g.edges[f];
                if (a == x || a == y || b == x || b == y) ok = false;
            }
            if (!ok) continue;
            color[e] = c;
            if (go(e + 1)) return true;
            color[e] = -1;
        }
        return false;
    };
    return go(0);
}

/// Smallest k with a proper k-edge-coloring. Starts at the maximum degree,
/// which no coloring can beat. Only for small graphs.
inline int chromatic_index(const Graph& g) {
    if (g.edges.empty()) return 0;
    for (int k = max_degree(g);; ++k) {
        if (colorable(g, k)) return k;
    }
}

inline std::vector<Edge> as_edges(const Graph& g) {
    std::vector<Edge> out;
    for (auto [a, b] : g.edges) out.push_back({a, b});
    return out;
}

}  // namespace isg::oracle
