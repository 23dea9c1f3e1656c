#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "isg/coloring.hpp"
#include "isg/sum_graph.hpp"

namespace isg {

struct SolverBudget {
    int max_edges = 400;
    std::chrono::milliseconds time_limit{10'000};
    /// Deterministic cap on search nodes; 0 means unlimited.
    std::uint64_t max_nodes = 0;

    /// Throws std::invalid_argument unless every limit is positive.
    void validate() const;
};

enum class SolveStatus { Exact, Timeout };

const char* to_string(SolveStatus s);

struct ExactResult {
    SolveStatus status = SolveStatus::Timeout;
    int chi_prime = 0;  // meaningful only when status == Exact
    int max_degree = 0;
    std::uint64_t nodes_expanded = 0;
    /// A coloring with chi_prime classes when status == Exact.
    std::optional<EdgeColoring> witness;

    [[nodiscard]] bool exact() const noexcept { return status == SolveStatus::Exact; }
    /// 1 or 2 by Vizing; 0 when unresolved.
    [[nodiscard]] int vizing_class() const noexcept;
};

/// Decides whether g is Delta-edge-colorable by backtracking; otherwise the
/// answer is Delta + 1 and a Misra-Gries coloring is returned as witness.
/// Exceeding any budget yields status Timeout, never a number.
ExactResult exact_chromatic_index(const SumGraph& g, const SolverBudget& budget = {});

/// Edges in canonical order, each given the lowest class free at both ends.
EdgeColoring greedy_coloring(const SumGraph& g);
int greedy_upper_bound(const SumGraph& g);

/// Proper coloring with at most Delta + 1 classes (fan rotation and cd-path
/// inversion).
EdgeColoring misra_gries_coloring(const SumGraph& g);

}  // namespace isg
