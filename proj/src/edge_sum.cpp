#include "isg/edge_sum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace isg {

const EdgeSumClass* EdgeSumColoring::find(Label k) const noexcept {
    auto it = std::lower_bound(classes.begin(), classes.end(), k,
                               [](const EdgeSumClass& c, Label key) { return c.k < key; });
    return it != classes.end() && it->k == k ? &*it : nullptr;
}

EdgeSumColoring edge_sum_classes(const SumGraph& g) {
    std::map<Label, std::vector<Edge>> by_sum;
    for (const Edge& e : g.edges()) by_sum[e.sum()].push_back(e);

    EdgeSumColoring out;
    out.classes.reserve(by_sum.size());
    for (auto& [k, edges] : by_sum) out.classes.push_back({k, std::move(edges)});
    return out;
}

int edge_sum_chromatic(const SumGraph& g) {
    std::vector<Label> sums;
    sums.reserve(g.edges().size());
    for (const Edge& e : g.edges()) sums.push_back(e.sum());
    std::sort(sums.begin(), sums.end());
    return static_cast<int>(std::unique(sums.begin(), sums.end()) - sums.begin());
}

const char* to_string(Perfection p) {
    return p == Perfection::Perfect ? "perfect" : "non-perfect";
}

Perfection classify_perfect(const SumGraph& g, int chi_prime) {
    const int delta = g.order() == 0 ? 0 : max_degree(g);
    if (chi_prime < delta) {
        throw std::invalid_argument("chromatic index " + std::to_string(chi_prime) +
                                    " is below the maximum degree " + std::to_string(delta));
    }
    return edge_sum_chromatic(g) == chi_prime ? Perfection::Perfect : Perfection::NonPerfect;
}

std::vector<Label> empty_allowed_sums(const SumGraph& g) {
    if (g.order() == 0) return {};
    const EdgeSumColoring coloring = edge_sum_classes(g);
    // Every allowed sum lies between twice the extreme labels.
    const Label lo = g.vertices().front() * 2;
    const Label hi = g.vertices().back() * 2;
    std::vector<Label> out;
    for (Label k = std::min<Label>(lo, 0); k <= std::max<Label>(hi, 0); ++k) {
        if (g.sum_allowed(k) && coloring.find(k) == nullptr) out.push_back(k);
    }
    return out;
}

}  // namespace isg
