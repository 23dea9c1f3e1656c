#include <gtest/gtest.h>

#include <set>

#include "isg/edge_sum.hpp"
#include "isg/exact.hpp"
#include "isg/io.hpp"
#include "isg/sum_graph.hpp"

using namespace isg;

namespace {

std::vector<HParams> grid(int max_i, int max_s) {
    std::vector<HParams> out;
    for (int i = 2; i <= max_i; ++i)
        for (int s = 2; s <= max_s; ++s)
            for (int m = 1; m < i; ++m)
                for (int j = 1; j < s; ++j) out.push_back({i, s, m, j});
    return out;
}

bool is_matching(const std::vector<Edge>& edges) {
    std::set<Label> seen;
    for (const Edge& e : edges) {
        if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
    }
    return true;
}

}  // namespace

class HGrid : public ::testing::TestWithParam<HParams> {};

TEST_P(HGrid, Invariants) {
    const HParams p = GetParam();
    const auto g = build_h_graph(p);

    for (const auto& cls : edge_sum_classes(g).classes) EXPECT_TRUE(is_matching(cls.edges));
    std::set<Label> sums;
    for (const Edge& e : g.edges()) sums.insert(e.sum());
    EXPECT_EQ(edge_sum_chromatic(g), static_cast<int>(sums.size()));

    const int delta = max_degree(g);
    EXPECT_EQ(delta, g.order() - 1);
    const auto ex = exact_chromatic_index(g);
    ASSERT_TRUE(ex.exact());
    EXPECT_TRUE(ex.chi_prime == delta || ex.chi_prime == delta + 1);
    EXPECT_GE(greedy_upper_bound(g), ex.chi_prime);

    const auto mirror = negate_labels(g);
    EXPECT_EQ(mirror, build_h_graph({p.s, p.i, p.j, p.m}));
    EXPECT_EQ(negate_labels(mirror), g);

    EXPECT_EQ(graph_from_json(parse_json(dump(graph_to_json(g)))), g);
}

INSTANTIATE_TEST_SUITE_P(UpToTen, HGrid, ::testing::ValuesIn(grid(10, 10)),
                         [](const ::testing::TestParamInfo<HParams>& info) {
                             const auto& p = info.param;
                             return "i" + std::to_string(p.i) + "_s" + std::to_string(p.s) + "_m" +
                                    std::to_string(p.m) + "_j" + std::to_string(p.j);
                         });
