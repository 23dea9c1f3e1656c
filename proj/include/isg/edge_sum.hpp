#pragma once

#include <vector>

#include "isg/sum_graph.hpp"

namespace isg {

/// All surviving edges whose endpoints sum to k. Always a matching.
struct EdgeSumClass {
    Label k = 0;
    std::vector<Edge> edges;
    bool operator==(const EdgeSumClass&) const = default;
};

/// Partition of E(g) by endpoint sum; classes ascending by k, none empty.
struct EdgeSumColoring {
    std::vector<EdgeSumClass> classes;

    [[nodiscard]] int count() const noexcept { return static_cast<int>(classes.size()); }
    [[nodiscard]] const EdgeSumClass* find(Label k) const noexcept;
};

EdgeSumColoring edge_sum_classes(const SumGraph& g);

/// Number of distinct endpoint sums over E(g), computed from the graph.
int edge_sum_chromatic(const SumGraph& g);

enum class Perfection { Perfect, NonPerfect };

const char* to_string(Perfection p);

/// Perfect iff edge_sum_chromatic(g) == chi_prime. Throws std::invalid_argument
/// when chi_prime < max_degree(g), which no proper coloring can achieve.
Perfection classify_perfect(const SumGraph& g, int chi_prime);

/// Sums the family allows whose class is empty in g, ascending.
std::vector<Label> empty_allowed_sums(const SumGraph& g);

}  // namespace isg
