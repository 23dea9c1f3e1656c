#include <gtest/gtest.h>

#include <set>

#include "isg/edge_sum.hpp"
#include "oracles.hpp"

using namespace isg;

TEST(EdgeSum, WorkedInstance) {
    const auto g = build_h_graph({4, 3, 1, 2});
    const auto c = edge_sum_classes(g);
    EXPECT_EQ(c.count(), 6);
    EXPECT_EQ(edge_sum_chromatic(g), 6);
    std::vector<Label> ks;
    for (const auto& cls : c.classes) ks.push_back(cls.k);
    EXPECT_EQ(ks, (std::vector<Label>{-4, -3, -2, 0, 1, 3}));
    ASSERT_NE(c.find(-3), nullptr);
    EXPECT_EQ(c.find(-3)->edges, (std::vector<Edge>{{-4, 1}, {-3, 0}}));
    EXPECT_EQ(c.find(2), nullptr);
}

TEST(EdgeSum, ClassesPartitionAndAreMatchings) {
    for (int i = 2; i <= 7; ++i)
        for (int s = 2; s <= 7; ++s)
            for (int m = 1; m < i; ++m)
                for (int j = 1; j < s; ++j) {
                    const auto g = build_h_graph({i, s, m, j});
                    const auto c = edge_sum_classes(g);
                    std::set<Edge> seen;
                    for (const auto& cls : c.classes) {
                        std::set<Label> touched;
                        ASSERT_FALSE(cls.edges.empty());
                        for (const Edge& e : cls.edges) {
                            EXPECT_EQ(e.sum(), cls.k);
                            EXPECT_TRUE(touched.insert(e.u).second);
                            EXPECT_TRUE(touched.insert(e.v).second);
                            EXPECT_TRUE(seen.insert(e).second);
                        }
                    }
                    EXPECT_EQ(seen.size(), g.edges().size());
                    EXPECT_EQ(edge_sum_chromatic(g), oracle::distinct_sums(oracle::h(i, s, m, j)));
                }
}

TEST(EdgeSum, EmptyClassOfMinusTwoFamily) {
    // Both pairs summing to 0 lose an endpoint when -1 and 2 are removed.
    for (int s = 3; s <= 12; ++s) {
        const auto g = build_h_graph({2, s, 1, 2});
        EXPECT_EQ(empty_allowed_sums(g), (std::vector<Label>{0}));
        EXPECT_EQ(edge_sum_chromatic(g), s);
    }
    EXPECT_TRUE(empty_allowed_sums(build_h_graph({2, 9, 1, 1})).empty());
}

TEST(EdgeSum, Perfection) {
    EXPECT_EQ(classify_perfect(build_h_graph({4, 3, 1, 2}), 5), Perfection::NonPerfect);
    EXPECT_EQ(classify_perfect(build_h_graph({2, 5, 1, 2}), 5), Perfection::Perfect);
    EXPECT_THROW(classify_perfect(build_h_graph({4, 3, 1, 2}), 4), std::invalid_argument);
    EXPECT_STREQ(to_string(Perfection::Perfect), "perfect");
    EXPECT_STREQ(to_string(Perfection::NonPerfect), "non-perfect");
}

TEST(EdgeSum, GnSums) {
    // Sums of G_n run over 3..n.
    for (int n = 3; n <= 12; ++n) EXPECT_EQ(edge_sum_chromatic(build_sum_graph(n)), n - 2);
    EXPECT_EQ(edge_sum_chromatic(build_sum_graph(2)), 0);
}
