#include "isg/sum_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace isg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_label_range(long long x, const char* what) {
    if (x < -kMaxLabel || x > kMaxLabel) {
        throw std::invalid_argument(std::string(what) + " exceeds the supported label range");
    }
}

// Floor division for possibly negative numerators.
int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

std::vector<Edge> pairs_with_allowed_sum(const std::vector<Label>& vertices, auto&& allowed) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (allowed(vertices[a] + vertices[b])) {
                edges.push_back({vertices[a], vertices[b]});
            }
        }
    }
    return edges;
}

}  // namespace

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

LabelSet::LabelSet(Label lower, Label upper) : lower_(lower), upper_(upper) {
    if (lower > 0 || upper < 0) {
        throw std::invalid_argument("label set requires lower <= 0 <= upper");
    }
    check_label_range(lower, "lower bound");
    check_label_range(upper, "upper bound");
}

bool HParams::valid() const noexcept {
    return 1 <= m && m < i && 1 <= j && j < s && i <= kMaxLabel && s <= kMaxLabel;
}

void HParams::validate() const {
    if (!(1 <= m && m < i)) {
        throw std::invalid_argument("H parameters require 1 <= m < i (got m=" + std::to_string(m) +
                                    ", i=" + std::to_string(i) + ")");
    }
    if (!(1 <= j && j < s)) {
        throw std::invalid_argument("H parameters require 1 <= j < s (got j=" + std::to_string(j) +
                                    ", s=" + std::to_string(s) + ")");
    }
    check_label_range(i, "i");
    check_label_range(s, "s");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::Gn: return "Gn";
        case Family::Grs: return "Grs";
        case Family::H: return "H";
    }
    return "?";
}

std::string describe(const FamilyParams& p) {
    return std::visit(Overloaded{
                          [](const GnParams& g) {
                              return std::string(g.negated ? "-G_" : "G_") + std::to_string(g.n);
                          },
                          [](const GrsParams& g) {
                              return "G_{" + std::to_string(g.r) + "," + std::to_string(g.s) + "}";
                          },
                          [](const HParams& h) {
                              std::ostringstream os;
                              os << "H^{-" << h.i << "," << h.s << "}_{" << h.m << "," << h.j << "}";
                              return os.str();
                          },
                      },
                      p);
}

SumGraph::SumGraph(FamilyParams params, std::vector<Label> vertices, std::vector<Edge> edges)
    : params_(std::move(params)), vertices_(std::move(vertices)), edges_(std::move(edges)),
      degree_(vertices_.size(), 0) {
    for (const Edge& e : edges_) {
        ++degree_[static_cast<std::size_t>(index_of(e.u))];
        ++degree_[static_cast<std::size_t>(index_of(e.v))];
    }
}

SumGraph SumGraph::from_parts(FamilyParams params, std::vector<Label> vertices,
                              std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw std::invalid_argument("duplicate vertex label");
    }
    for (Label x : vertices) check_label_range(x, "vertex label");

    for (Edge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop " + to_string(e));
        e = e.canonical();
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw std::invalid_argument("duplicate edge " + to_string(*dup));
    }
    for (const Edge& e : edges) {
        if (!std::binary_search(vertices.begin(), vertices.end(), e.u) ||
            !std::binary_search(vertices.begin(), vertices.end(), e.v)) {
            throw std::invalid_argument("edge " + to_string(e) + " references a missing vertex");
        }
    }

    // The family fixes both sets, so the parts must equal a fresh build.
    SumGraph expected = build_graph(params);
    if (expected.vertices_ != vertices) {
        throw std::invalid_argument("vertex set does not match " + describe(params));
    }
    if (expected.edges_ != edges) {
        throw std::invalid_argument("edge set does not match " + describe(params));
    }
    return expected;
}

Family SumGraph::family() const noexcept {
    return std::visit(Overloaded{
                          [](const GnParams&) { return Family::Gn; },
                          [](const GrsParams&) { return Family::Grs; },
                          [](const HParams&) { return Family::H; },
                      },
                      params_);
}

int SumGraph::index_of(Label x) const noexcept {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    if (it == vertices_.end() || *it != x) return -1;
    return static_cast<int>(it - vertices_.begin());
}

bool SumGraph::has_vertex(Label x) const noexcept { return index_of(x) >= 0; }

bool SumGraph::has_edge(Edge e) const noexcept {
    return std::binary_search(edges_.begin(), edges_.end(), e.canonical());
}

int SumGraph::degree(Label x) const {
    int idx = index_of(x);
    if (idx < 0) throw std::out_of_range("label " + std::to_string(x) + " is not a vertex");
    return degree_[static_cast<std::size_t>(idx)];
}

std::vector<DegreeRecord> SumGraph::degrees() const {
    std::vector<DegreeRecord> out;
    out.reserve(vertices_.size());
    for (std::size_t k = 0; k < vertices_.size(); ++k) out.push_back({vertices_[k], degree_[k]});
    return out;
}

bool SumGraph::sum_allowed(Label k) const noexcept {
    return std::visit(Overloaded{
                          [k](const GnParams& g) {
                              return g.negated ? (-g.n <= k && k <= -1) : (1 <= k && k <= g.n);
                          },
                          [k](const GrsParams& g) { return g.r <= k && k <= g.s; },
                          [k](const HParams& h) {
                              return -h.i <= k && k <= h.s && k != -h.m && k != h.j;
                          },
                      },
                      params_);
}

SumGraph build_sum_graph(int n) {
    if (n < 1) throw std::invalid_argument("G_n requires n >= 1");
    check_label_range(n, "n");
    std::vector<Label> vertices;
    for (Label x = 1; x <= n; ++x) vertices.push_back(x);
    auto edges = pairs_with_allowed_sum(vertices, [n](Label k) { return k <= n; });
    return SumGraph(GnParams{n, false}, std::move(vertices), std::move(edges));
}

SumGraph build_integral_sum_graph(int r, int s) {
    if (r > 0) throw std::invalid_argument("G_{r,s} requires r <= 0");
    if (s < 0) throw std::invalid_argument("G_{r,s} requires s >= 0");
    if (s - r < 1) throw std::invalid_argument("G_{r,s} requires s - r >= 1");
    LabelSet labels(r, s);
    std::vector<Label> vertices;
    for (Label x = r; x <= s; ++x) vertices.push_back(x);
    auto edges = pairs_with_allowed_sum(vertices, [&](Label k) { return labels.contains(k); });
    return SumGraph(GrsParams{r, s}, std::move(vertices), std::move(edges));
}

SumGraph build_h_graph(const HParams& p) {
    p.validate();
    std::vector<Label> vertices;
    for (Label x = -p.i; x <= p.s; ++x) {
        if (x != -p.m && x != p.j) vertices.push_back(x);
    }
    auto edges = pairs_with_allowed_sum(vertices, [&](Label k) {
        return -p.i <= k && k <= p.s && k != -p.m && k != p.j;
    });
    return SumGraph(p, std::move(vertices), std::move(edges));
}

SumGraph build_graph(const FamilyParams& p) {
    return std::visit(Overloaded{
                          [](const GnParams& g) {
                              SumGraph base = build_sum_graph(g.n);
                              return g.negated ? negate_labels(base) : base;
                          },
                          [](const GrsParams& g) { return build_integral_sum_graph(g.r, g.s); },
                          [](const HParams& h) { return build_h_graph(h); },
                      },
                      p);
}

int gn_degree_formula(Label t, int n) {
    if (t < 1 || t > n) throw std::out_of_range("label outside [1, n]");
    return t <= n / 2 ? n - t - 1 : n - t;
}

int degree_formula(Label t, int r, int s) {
    if (!(r < 0 && 0 < s)) throw std::domain_error("degree formula requires r < 0 < s");
    if (t < r || t > s) throw std::out_of_range("label outside [r, s]");
    const int n = s - r + 1;
    if (t == 0) return n - 1;
    if (t > 0) return t <= s / 2 ? n - t - 1 : n - t;
    return -t <= (-r) / 2 ? n + t - 1 : n + t;
}

int degree_formula_branch_count(Label t, int r, int s) {
    const int abs_t = std::abs(t);
    int count = 0;
    if (t > 0 && 1 <= t && t <= s / 2) ++count;
    if (t > 0 && s / 2 < t && t <= s) ++count;
    if (t == 0) ++count;
    if (t < 0 && 1 <= abs_t && abs_t <= (-r) / 2) ++count;
    if (t < 0 && (-r) / 2 < abs_t && abs_t <= -r) ++count;
    return count;
}

std::int64_t edge_count_formula(int r, int s) {
    if (std::abs(r) + s < 3) throw std::domain_error("edge-count formula requires |r| + s >= 3");
    const std::int64_t R = r;
    const std::int64_t S = s;
    // 4|E| = r^2 + s^2 - 3r + 3s - 4rs - 2(floor(|r|/2) + floor(s/2))
    const std::int64_t four_e =
        R * R + S * S - 3 * R + 3 * S - 4 * R * S - 2 * (std::abs(r) / 2 + floor_half(s));
    if (four_e % 4 != 0) {
        throw std::domain_error("edge-count formula is not integral at r=" + std::to_string(r) +
                                ", s=" + std::to_string(s));
    }
    return four_e / 4;
}

int max_degree(const SumGraph& g) {
    if (g.order() == 0) throw std::invalid_argument("max_degree of an empty graph");
    int best = 0;
    for (const auto& rec : g.degrees()) best = std::max(best, rec.degree);
    return best;
}

SumGraph negate_labels(const SumGraph& g) {
    FamilyParams mirrored = std::visit(
        Overloaded{
            [](const GnParams& p) -> FamilyParams { return GnParams{p.n, !p.negated}; },
            [](const GrsParams& p) -> FamilyParams { return GrsParams{-p.s, -p.r}; },
            [](const HParams& p) -> FamilyParams { return HParams{p.s, p.i, p.j, p.m}; },
        },
        g.params());

    std::vector<Label> vertices;
    vertices.reserve(g.vertices().size());
    for (auto it = g.vertices().rbegin(); it != g.vertices().rend(); ++it) vertices.push_back(-*it);

    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.push_back(Edge{-e.v, -e.u});
    std::sort(edges.begin(), edges.end());

    return SumGraph(std::move(mirrored), std::move(vertices), std::move(edges));
}

}  // namespace isg
