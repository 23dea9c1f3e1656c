#include "isg/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace isg {

void SolverBudget::validate() const {
    if (max_edges <= 0) throw std::invalid_argument("max_edges must be positive");
    if (time_limit.count() <= 0) throw std::invalid_argument("time_limit must be positive");
}

const char* to_string(SolveStatus s) { return s == SolveStatus::Exact ? "exact" : "timeout"; }

int ExactResult::vizing_class() const noexcept {
    if (!exact()) return 0;
    return chi_prime <= max_degree ? 1 : 2;
}

namespace {

/// Edge list over dense vertex indices.
struct IndexedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;

    explicit IndexedGraph(const SumGraph& g) : n(g.order()), degree(static_cast<std::size_t>(n)) {
        for (const Edge& e : g.edges()) {
            const int a = g.index_of(e.u);
            const int b = g.index_of(e.v);
            edges.emplace_back(a, b);
            ++degree[static_cast<std::size_t>(a)];
            ++degree[static_cast<std::size_t>(b)];
        }
    }
};

EdgeColoring to_coloring(const SumGraph& g, const std::vector<int>& color_of_edge, int colors,
                         Provenance provenance) {
    EdgeColoring out;
    out.provenance = provenance;
    out.classes.resize(static_cast<std::size_t>(colors));
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        out.classes[static_cast<std::size_t>(color_of_edge[e])].push_back(g.edges()[e]);
    }
    std::erase_if(out.classes, [](const auto& cls) { return cls.empty(); });
    return out;
}

class DeltaSearch {
public:
    DeltaSearch(const IndexedGraph& ig, int colors, const SolverBudget& budget)
        : ig_(ig), colors_(colors), budget_(budget),
          used_(static_cast<std::size_t>(ig.n) * static_cast<std::size_t>(colors), 0),
          color_of_edge_(ig.edges.size(), -1), deadline_(Clock::now() + budget.time_limit) {}

    enum class Outcome { Found, Exhausted, OutOfBudget };

    Outcome run() {
        // All edges at a maximum-degree vertex are pairwise adjacent, so any
        // coloring can be relabeled to give them colors 0, 1, 2, ... in order.
        const int hub = static_cast<int>(
            std::max_element(ig_.degree.begin(), ig_.degree.end()) - ig_.degree.begin());

        std::vector<int> order(ig_.edges.size());
        std::iota(order.begin(), order.end(), 0);
        auto weight = [&](int e) {
            const auto [a, b] = ig_.edges[static_cast<std::size_t>(e)];
            return ig_.degree[static_cast<std::size_t>(a)] + ig_.degree[static_cast<std::size_t>(b)];
        };
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return weight(x) > weight(y); });

        int next_color = 0;
        for (int e : order) {
            const auto [a, b] = ig_.edges[static_cast<std::size_t>(e)];
            if (a == hub || b == hub) assign(e, next_color++);
        }
        std::erase_if(order, [&](int e) { return color_of_edge_[static_cast<std::size_t>(e)] >= 0; });
        order_ = std::move(order);

        return search(0);
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<int>& colors() const noexcept { return color_of_edge_; }

private:
    using Clock = std::chrono::steady_clock;

    unsigned char& used(int v, int c) {
        return used_[static_cast<std::size_t>(v) * static_cast<std::size_t>(colors_) +
                     static_cast<std::size_t>(c)];
    }

    void assign(int e, int c) {
        const auto [a, b] = ig_.edges[static_cast<std::size_t>(e)];
        used(a, c) = 1;
        used(b, c) = 1;
        color_of_edge_[static_cast<std::size_t>(e)] = c;
    }

    void unassign(int e) {
        const auto [a, b] = ig_.edges[static_cast<std::size_t>(e)];
        const int c = color_of_edge_[static_cast<std::size_t>(e)];
        used(a, c) = 0;
        used(b, c) = 0;
        color_of_edge_[static_cast<std::size_t>(e)] = -1;
    }

    bool over_budget() {
        if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) return true;
        if ((nodes_ & 0xFFF) == 0 && Clock::now() > deadline_) timed_out_ = true;
        return timed_out_;
    }

    Outcome search(std::size_t depth) {
        ++nodes_;
        if (over_budget()) return Outcome::OutOfBudget;
        if (depth == order_.size()) return Outcome::Found;

        const int e = order_[depth];
        const auto [a, b] = ig_.edges[static_cast<std::size_t>(e)];
        for (int c = 0; c < colors_; ++c) {
            if (used(a, c) || used(b, c)) continue;
            assign(e, c);
            const Outcome sub = search(depth + 1);
            if (sub != Outcome::Exhausted) return sub;
            unassign(e);
        }
        return Outcome::Exhausted;
    }

    const IndexedGraph& ig_;
    int colors_;
    SolverBudget budget_;
    std::vector<unsigned char> used_;
    std::vector<int> color_of_edge_;
    std::vector<int> order_;
    Clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

ExactResult exact_chromatic_index(const SumGraph& g, const SolverBudget& budget) {
    budget.validate();
    ExactResult result;
    result.max_degree = g.order() == 0 ? 0 : max_degree(g);
    if (g.size() > budget.max_edges) return result;

    if (g.size() == 0) {
        result.status = SolveStatus::Exact;
        result.witness = EdgeColoring{{}, Provenance::Exact, {}};
        return result;
    }

    const IndexedGraph ig(g);
    const int delta = result.max_degree;

    // Overfull: more edges than delta matchings can hold.
    const bool overfull =
        static_cast<long long>(g.size()) > static_cast<long long>(delta) * (g.order() / 2);

    if (!overfull) {
        DeltaSearch search(ig, delta, budget);
        const auto outcome = search.run();
        result.nodes_expanded = search.nodes();
        if (outcome == DeltaSearch::Outcome::OutOfBudget) return result;
        if (outcome == DeltaSearch::Outcome::Found) {
            result.status = SolveStatus::Exact;
            result.chi_prime = delta;
            result.witness = to_coloring(g, search.colors(), delta, Provenance::Exact);
            return result;
        }
    }

    result.status = SolveStatus::Exact;
    result.chi_prime = delta + 1;
    EdgeColoring witness = misra_gries_coloring(g);
    witness.provenance = Provenance::Exact;
    if (witness.count() != delta + 1) {
        throw std::logic_error("Delta-coloring search and Misra-Gries disagree");
    }
    result.witness = std::move(witness);
    return result;
}

EdgeColoring greedy_coloring(const SumGraph& g) {
    const IndexedGraph ig(g);
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(ig.n));
    std::vector<int> color_of_edge(ig.edges.size(), -1);
    int colors = 0;
    for (std::size_t e = 0; e < ig.edges.size(); ++e) {
        auto& ua = used[static_cast<std::size_t>(ig.edges[e].first)];
        auto& ub = used[static_cast<std::size_t>(ig.edges[e].second)];
        int c = 0;
        while ((c < static_cast<int>(ua.size()) && ua[static_cast<std::size_t>(c)]) ||
               (c < static_cast<int>(ub.size()) && ub[static_cast<std::size_t>(c)])) {
            ++c;
        }
        for (auto* u : {&ua, &ub}) {
            if (static_cast<int>(u->size()) <= c) u->resize(static_cast<std::size_t>(c) + 1, false);
            (*u)[static_cast<std::size_t>(c)] = true;
        }
        color_of_edge[e] = c;
        colors = std::max(colors, c + 1);
    }
    return to_coloring(g, color_of_edge, colors, Provenance::Greedy);
}

int greedy_upper_bound(const SumGraph& g) { return greedy_coloring(g).count(); }

namespace {

class MisraGries {
public:
    explicit MisraGries(const IndexedGraph& ig)
        : n_(ig.n), palette_(1 + *std::max_element(ig.degree.begin(), ig.degree.end())),
          color_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1),
          at_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(palette_), -1),
          adj_(static_cast<std::size_t>(n_)) {
        for (const auto& [a, b] : ig.edges) {
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
    }

    void color_edge(int u, int v) {
        std::vector<int> fan = maximal_fan(u, v);
        const int c = free_color(u);
        const int d = free_color(fan.back());
        invert_path(u, c, d);

        // First fan prefix ending at a vertex where d is free.
        std::size_t w = fan.size();
        for (std::size_t idx = 0; idx < fan.size(); ++idx) {
            if (idx > 0) {
                const int col = get(u, fan[idx]);
                if (col < 0 || !is_free(fan[idx - 1], col)) break;
            }
            if (is_free(fan[idx], d)) {
                w = idx;
                break;
            }
        }
        if (w == fan.size()) throw std::logic_error("Misra-Gries: no rotatable fan prefix");
        for (std::size_t idx = 0; idx < w; ++idx) {
            const int next = get(u, fan[idx + 1]);
            clear(u, fan[idx + 1]);
            set(u, fan[idx], next);
        }
        set(u, fan[w], d);
    }

    [[nodiscard]] int get(int a, int b) const {
        return color_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(b)];
    }

private:
    int& slot(int v, int c) {
        return at_[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) +
                   static_cast<std::size_t>(c)];
    }
    [[nodiscard]] bool is_free(int v, int c) const {
        return at_[static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_) +
                   static_cast<std::size_t>(c)] < 0;
    }

    void set(int a, int b, int c) {
        color_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] = c;
        color_[static_cast<std::size_t>(b) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a)] = c;
        slot(a, c) = b;
        slot(b, c) = a;
    }

    void clear(int a, int b) {
        const int c = get(a, b);
        if (c < 0) return;
        slot(a, c) = -1;
        slot(b, c) = -1;
        color_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] = -1;
        color_[static_cast<std::size_t>(b) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a)] = -1;
    }

    [[nodiscard]] int free_color(int v) const {
        for (int c = 0; c < palette_; ++c) {
            if (is_free(v, c)) return c;
        }
        throw std::logic_error("no free color: palette smaller than Delta + 1");
    }

    std::vector<int> maximal_fan(int u, int v) const {
        std::vector<int> fan{v};
        std::vector<bool> in_fan(static_cast<std::size_t>(n_), false);
        in_fan[static_cast<std::size_t>(v)] = true;
        for (bool grown = true; grown;) {
            grown = false;
            for (int w : adj_[static_cast<std::size_t>(u)]) {
                if (in_fan[static_cast<std::size_t>(w)]) continue;
                const int col = get(u, w);
                if (col >= 0 && is_free(fan.back(), col)) {
                    fan.push_back(w);
                    in_fan[static_cast<std::size_t>(w)] = true;
                    grown = true;
                    break;
                }
            }
        }
        return fan;
    }

    // Swap colors c and d along the alternating path leaving u by a d-edge.
    void invert_path(int u, int c, int d) {
        std::vector<std::pair<int, int>> path;
        int x = u;
        int want = d;
        while (true) {
            const int y = at_[static_cast<std::size_t>(x) * static_cast<std::size_t>(palette_) +
                              static_cast<std::size_t>(want)];
            if (y < 0) break;
            path.emplace_back(x, y);
            x = y;
            want = want == d ? c : d;
        }
        std::vector<int> old;
        for (const auto& [a, b] : path) old.push_back(get(a, b));
        for (const auto& [a, b] : path) clear(a, b);
        for (std::size_t idx = 0; idx < path.size(); ++idx) {
            set(path[idx].first, path[idx].second, old[idx] == d ? c : d);
        }
    }

    int n_;
    int palette_;
    std::vector<int> color_;  // n x n edge colors
    std::vector<int> at_;     // vertex x color -> neighbor
    std::vector<std::vector<int>> adj_;
};

}  // namespace

EdgeColoring misra_gries_coloring(const SumGraph& g) {
    if (g.size() == 0) return EdgeColoring{{}, Provenance::Exact, {}};
    const IndexedGraph ig(g);
    MisraGries mg(ig);
    for (const auto& [a, b] : ig.edges) mg.color_edge(a, b);

    std::vector<int> color_of_edge;
    int colors = 0;
    for (const auto& [a, b] : ig.edges) {
        color_of_edge.push_back(mg.get(a, b));
        colors = std::max(colors, color_of_edge.back() + 1);
    }
    return to_coloring(g, color_of_edge, colors, Provenance::Exact);
}

}  // namespace isg
