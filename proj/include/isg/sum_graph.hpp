#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace isg {

using Label = std::int32_t;

/// Labels are confined to [-kMaxLabel, kMaxLabel] so sums never overflow.
inline constexpr Label kMaxLabel = 1'000'000;

/// Unordered pair of labels. Graph edges are always stored canonically
/// (u < v); colorings may carry pairs in the orientation they were written.
struct Edge {
    Label u = 0;
    Label v = 0;

    static constexpr Edge canonical(Label a, Label b) noexcept {
        return a < b ? Edge{a, b} : Edge{b, a};
    }
    [[nodiscard]] constexpr Edge canonical() const noexcept { return canonical(u, v); }
    [[nodiscard]] constexpr Label sum() const noexcept { return u + v; }
    [[nodiscard]] constexpr bool touches(Label x) const noexcept { return u == x || v == x; }

    auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Contiguous integer interval [lower, upper] with lower <= 0 <= upper.
class LabelSet {
public:
    LabelSet(Label lower, Label upper);

    [[nodiscard]] Label lower() const noexcept { return lower_; }
    [[nodiscard]] Label upper() const noexcept { return upper_; }
    [[nodiscard]] bool contains(Label k) const noexcept { return lower_ <= k && k <= upper_; }
    [[nodiscard]] int size() const noexcept { return upper_ - lower_ + 1; }

private:
    Label lower_;
    Label upper_;
};

/// G_n: labels {1..n}. A negated G_n has labels {-n..-1}.
struct GnParams {
    int n = 0;
    bool negated = false;
    bool operator==(const GnParams&) const = default;
};

/// G_{r,s}: labels [r, s].
struct GrsParams {
    int r = 0;
    int s = 0;
    bool operator==(const GrsParams&) const = default;
};

/// H^{-i,s}_{m,j}: G_{-i,s} without vertices -m, j and without edges whose
/// endpoint sum is -m or j.
struct HParams {
    int i = 0;
    int s = 0;
    int m = 0;
    int j = 0;

    /// Throws std::invalid_argument unless 1 <= m < i and 1 <= j < s.
    void validate() const;
    [[nodiscard]] bool valid() const noexcept;
    bool operator==(const HParams&) const = default;
};

using FamilyParams = std::variant<GnParams, GrsParams, HParams>;

enum class Family { Gn, Grs, H };

std::string to_string(Family f);
std::string describe(const FamilyParams& p);

struct DegreeRecord {
    Label label = 0;
    int degree = 0;
    bool operator==(const DegreeRecord&) const = default;
};

/// Immutable integer-labeled simple graph belonging to one of the sum-graph
/// families. Vertices are sorted ascending, edges canonical and sorted.
class SumGraph {
public:
    /// Assembles a graph from explicit parts and checks every structural and
    /// family invariant; throws std::invalid_argument on violation.
    static SumGraph from_parts(FamilyParams params, std::vector<Label> vertices,
                               std::vector<Edge> edges);

    [[nodiscard]] const FamilyParams& params() const noexcept { return params_; }
    [[nodiscard]] Family family() const noexcept;
    [[nodiscard]] const std::vector<Label>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] int order() const noexcept { return static_cast<int>(vertices_.size()); }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(edges_.size()); }

    [[nodiscard]] bool has_vertex(Label x) const noexcept;
    /// Orientation-insensitive.
    [[nodiscard]] bool has_edge(Edge e) const noexcept;
    /// Position of x in vertices(), or -1.
    [[nodiscard]] int index_of(Label x) const noexcept;

    /// Throws std::out_of_range for labels that are not vertices.
    [[nodiscard]] int degree(Label x) const;
    [[nodiscard]] std::vector<DegreeRecord> degrees() const;

    /// True iff k may appear as an endpoint sum in this family.
    [[nodiscard]] bool sum_allowed(Label k) const noexcept;

    bool operator==(const SumGraph& other) const {
        return params_ == other.params_ && vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    SumGraph(FamilyParams params, std::vector<Label> vertices, std::vector<Edge> edges);

    friend SumGraph build_sum_graph(int n);
    friend SumGraph build_integral_sum_graph(int r, int s);
    friend SumGraph build_h_graph(const HParams& p);
    friend SumGraph negate_labels(const SumGraph& g);

    FamilyParams params_;
    std::vector<Label> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
};

SumGraph build_sum_graph(int n);
SumGraph build_integral_sum_graph(int r, int s);
SumGraph build_h_graph(const HParams& p);
/// Dispatches to the matching builder.
SumGraph build_graph(const FamilyParams& p);

/// Closed-form degree of label t in G_n for 1 <= t <= n.
int gn_degree_formula(Label t, int n);

/// Closed-form degree of label t in G_{r,s}, r < 0 < s. Negative labels use
/// n + t - 1 when 1 <= |t| <= floor(-r/2) and n + t otherwise.
int degree_formula(Label t, int r, int s);

/// Number of piecewise branches of degree_formula that apply to t. Exactly
/// one for every label of a valid G_{r,s}.
int degree_formula_branch_count(Label t, int r, int s);

/// Closed-form |E(G_{r,s})|, defined for |r| + s >= 3. Throws
/// std::domain_error if the expression is not an integer.
std::int64_t edge_count_formula(int r, int s);

/// Throws std::invalid_argument for a graph with no vertices.
int max_degree(const SumGraph& g);

/// Maps every label t to -t; H^{-i,s}_{m,j} becomes H^{-s,i}_{j,m}.
SumGraph negate_labels(const SumGraph& g);

}  // namespace isg
