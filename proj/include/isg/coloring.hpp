#pragma once

#include <string>
#include <vector>

#include "isg/sum_graph.hpp"

namespace isg {

enum class Provenance { PaperScheme, Exact, Greedy, EdgeSum };

const char* to_string(Provenance p);

/// Indexed edge classes; class index is the position in `classes`. Pairs keep
/// the orientation they were produced in; comparisons use canonical form.
struct EdgeColoring {
    std::vector<std::vector<Edge>> classes;
    Provenance provenance = Provenance::Exact;
    std::string case_id;  // paper-scheme case, e.g. "Hi2/C"; empty otherwise

    [[nodiscard]] int count() const noexcept { return static_cast<int>(classes.size()); }
};

struct Violation {
    enum class Kind {
        Clash,      // two edges of one class share a vertex
        Foreign,    // pair is not an edge of the graph
        Duplicate,  // edge listed more than once
        Missing,    // graph edge in no class
        Empty,      // class with no edges
    };
    Kind kind = Kind::Clash;
    int class_index = -1;  // -1 for Missing
    std::vector<Edge> edges;

    [[nodiscard]] std::string describe() const;
};

const char* to_string(Violation::Kind k);

struct VerificationReport {
    bool proper = false;
    bool complete = false;
    int class_count = 0;
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const noexcept { return proper && complete; }
};

/// proper: every class is a matching of g (edges of g, pairwise
/// vertex-disjoint). complete: the classes partition E(g) into non-empty
/// parts. Every failure is listed; nothing throws.
VerificationReport verify_coloring(const SumGraph& g, const EdgeColoring& c);

bool is_proper_edge_coloring(const SumGraph& g, const EdgeColoring& c);

/// Class index of every edge of g, aligned with g.edges(); -1 where the edge
/// is uncolored. Requires a verified coloring for a meaningful result.
std::vector<int> class_of_edges(const SumGraph& g, const EdgeColoring& c);

/// Same classes with every pair in canonical form and each class sorted.
EdgeColoring canonicalized(EdgeColoring c);

}  // namespace isg
