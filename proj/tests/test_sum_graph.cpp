#include <gtest/gtest.h>

#include <cstdlib>

#include "isg/sum_graph.hpp"
#include "oracles.hpp"

using namespace isg;

namespace {

void expect_matches(const SumGraph& g, const oracle::Graph& o) {
    ASSERT_EQ(g.vertices(), o.vertices);
    EXPECT_EQ(g.edges(), oracle::as_edges(o));
    for (auto [v, d] : oracle::degrees(o)) EXPECT_EQ(g.degree(v), d) << "label " << v;
}

}  // namespace

TEST(SumGraph, GnMatchesEnumeration) {
    for (int n = 1; n <= 15; ++n) expect_matches(build_sum_graph(n), oracle::gn(n));
}

TEST(SumGraph, GrsMatchesEnumeration) {
    for (int r = -9; r <= 0; ++r) {
        for (int s = 0; s <= 9; ++s) {
            if (s - r < 1) continue;
            expect_matches(build_integral_sum_graph(r, s), oracle::grs(r, s));
        }
    }
}

TEST(SumGraph, HMatchesEnumeration) {
    for (int i = 2; i <= 8; ++i)
        for (int s = 2; s <= 8; ++s)
            for (int m = 1; m < i; ++m)
                for (int j = 1; j < s; ++j) {
                    expect_matches(build_h_graph({i, s, m, j}), oracle::h(i, s, m, j));
                }
}

TEST(SumGraph, HVertexCount) {
    EXPECT_EQ(build_h_graph({2, 11, 1, 3}).order(), 12);
    EXPECT_EQ(build_h_graph({4, 3, 1, 2}).order(), 6);
}

TEST(SumGraph, RejectsInvalidH) {
    EXPECT_THROW(build_h_graph({2, 3, 2, 1}), std::invalid_argument);
    EXPECT_THROW(build_h_graph({2, 3, 0, 1}), std::invalid_argument);
    EXPECT_THROW(build_h_graph({2, 3, 1, 3}), std::invalid_argument);
    EXPECT_THROW(build_h_graph({2, kMaxLabel + 1, 1, 1}), std::invalid_argument);
}

TEST(SumGraph, RejectsInvalidGrsAndGn) {
    EXPECT_THROW(build_integral_sum_graph(1, 3), std::invalid_argument);
    EXPECT_THROW(build_integral_sum_graph(-3, -1), std::invalid_argument);
    EXPECT_THROW(build_integral_sum_graph(0, 0), std::invalid_argument);
    EXPECT_THROW(build_sum_graph(0), std::invalid_argument);
}

TEST(SumGraph, LabelSetBounds) {
    EXPECT_THROW(LabelSet(1, 3), std::invalid_argument);
    EXPECT_THROW(LabelSet(-3, -1), std::invalid_argument);
    LabelSet l(-2, 3);
    EXPECT_EQ(l.size(), 6);
    EXPECT_TRUE(l.contains(0));
    EXPECT_FALSE(l.contains(4));
}

TEST(SumGraph, ZeroIsUniversalInH) {
    const auto g = build_h_graph({4, 3, 1, 2});
    EXPECT_EQ(g.degree(0), g.order() - 1);
    EXPECT_EQ(max_degree(g), 5);
}

TEST(SumGraph, MaxDegree) {
    EXPECT_EQ(max_degree(build_integral_sum_graph(-2, 3)), 5);
    EXPECT_EQ(max_degree(build_sum_graph(3)), 1);
    EXPECT_EQ(max_degree(build_sum_graph(1)), 0);
}

TEST(SumGraph, EdgeLookupIgnoresOrientation) {
    const auto g = build_integral_sum_graph(-2, 3);
    EXPECT_TRUE(g.has_edge({0, -2}));
    EXPECT_TRUE(g.has_edge({-2, 0}));
    EXPECT_FALSE(g.has_edge({2, 3}));
    EXPECT_FALSE(g.has_edge({7, 8}));
}

TEST(SumGraph, DegreeOfMissingLabelThrows) {
    const auto g = build_h_graph({2, 3, 1, 2});
    EXPECT_THROW((void)g.degree(2), std::out_of_range);
    EXPECT_THROW((void)g.degree(-1), std::out_of_range);
}

TEST(SumGraph, FromPartsChecksInvariants) {
    const auto g = build_h_graph({2, 3, 1, 2});
    EXPECT_EQ(SumGraph::from_parts(g.params(), g.vertices(), g.edges()), g);

    auto flipped = g.edges();
    for (auto& e : flipped) e = {e.v, e.u};
    EXPECT_EQ(SumGraph::from_parts(g.params(), g.vertices(), flipped), g);

    auto extra = g.edges();
    extra.push_back({1, 3});
    EXPECT_THROW(SumGraph::from_parts(g.params(), g.vertices(), extra), std::invalid_argument);

    auto dup = g.edges();
    dup.push_back(dup.front());
    EXPECT_THROW(SumGraph::from_parts(g.params(), g.vertices(), dup), std::invalid_argument);

    auto loop = g.edges();
    loop.push_back({1, 1});
    EXPECT_THROW(SumGraph::from_parts(g.params(), g.vertices(), loop), std::invalid_argument);

    auto missing = g.vertices();
    missing.pop_back();
    EXPECT_THROW(SumGraph::from_parts(g.params(), missing, g.edges()), std::invalid_argument);
}

TEST(DegreeFormula, MatchesEnumeration) {
    for (int r = -8; r <= -1; ++r) {
        for (int s = 1; s <= 8; ++s) {
            const auto d = oracle::degrees(oracle::grs(r, s));
            for (auto [t, deg] : d) {
                EXPECT_EQ(degree_formula(t, r, s), deg) << "r=" << r << " s=" << s << " t=" << t;
                EXPECT_EQ(degree_formula_branch_count(t, r, s), 1);
            }
        }
    }
}

TEST(DegreeFormula, Examples) {
    // G_{-2,3}: n = 6, label 0 is universal.
    EXPECT_EQ(degree_formula(0, -2, 3), 5);
    EXPECT_EQ(degree_formula(1, -2, 3), 4);
    EXPECT_EQ(degree_formula(3, -2, 3), 3);
    EXPECT_EQ(degree_formula(-1, -2, 3), 4);
    EXPECT_EQ(degree_formula(-2, -2, 3), 4);
}

TEST(DegreeFormula, Domain) {
    EXPECT_THROW(degree_formula(0, 0, 3), std::domain_error);
    EXPECT_THROW(degree_formula(0, -3, 0), std::domain_error);
    EXPECT_THROW(degree_formula(5, -2, 3), std::out_of_range);
}

TEST(GnDegreeFormula, MatchesEnumeration) {
    for (int n = 1; n <= 20; ++n) {
        for (auto [t, deg] : oracle::degrees(oracle::gn(n))) EXPECT_EQ(gn_degree_formula(t, n), deg);
    }
}

TEST(EdgeCountFormula, MatchesEnumeration) {
    for (int r = -8; r <= -1; ++r) {
        for (int s = 1; s <= 8; ++s) {
            if (std::abs(r) + s < 3) continue;
            EXPECT_EQ(edge_count_formula(r, s), static_cast<std::int64_t>(oracle::grs(r, s).edges.size()))
                << "r=" << r << " s=" << s;
        }
    }
}

TEST(EdgeCountFormula, Examples) {
    EXPECT_EQ(edge_count_formula(-2, 3), 12);
    EXPECT_EQ(edge_count_formula(-1, 2), 5);
    EXPECT_EQ(edge_count_formula(0, 3), 4);
    EXPECT_EQ(build_integral_sum_graph(-1, 2).size(), 5);
    EXPECT_EQ(build_integral_sum_graph(0, 3).size(), 4);
}

TEST(EdgeCountFormula, RejectsSmall) {
    EXPECT_THROW(edge_count_formula(-1, 1), std::domain_error);
    EXPECT_THROW(edge_count_formula(0, 2), std::domain_error);
}

TEST(EdgeCountFormula, NoOverflowAtLargeLabels) {
    const std::int64_t e = edge_count_formula(-100000, 100000);
    EXPECT_GT(e, 0);
}

TEST(NegateLabels, HMapsToMirror) {
    const auto g = build_h_graph({2, 11, 1, 3});
    EXPECT_EQ(negate_labels(g), build_h_graph({11, 2, 3, 1}));
    EXPECT_EQ(negate_labels(negate_labels(g)), g);
}

TEST(NegateLabels, GrsAndGn) {
    EXPECT_EQ(negate_labels(build_integral_sum_graph(-2, 3)), build_integral_sum_graph(-3, 2));
    const auto g = build_sum_graph(6);
    const auto ng = negate_labels(g);
    EXPECT_EQ(ng.vertices().front(), -6);
    EXPECT_EQ(ng.size(), g.size());
    EXPECT_EQ(negate_labels(ng), g);
    EXPECT_EQ(build_graph(ng.params()), ng);
}
