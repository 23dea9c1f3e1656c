#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "isg/audit.hpp"
#include "isg/schemes.hpp"
#include "reference_listings.hpp"

using namespace isg;

namespace {

std::set<Edge> as_set(const std::vector<Edge>& cls) {
    std::set<Edge> out;
    for (const Edge& e : cls) out.insert(e.canonical());
    return out;
}

EdgeColoring negated(const EdgeColoring& c) {
    EdgeColoring out = c;
    for (auto& cls : out.classes)
        for (auto& e : cls) e = {-e.u, -e.v};
    return out;
}

}  // namespace

TEST(Schemes, CatalogHasEveryCase) {
    const auto cat = scheme_catalog();
    EXPECT_EQ(cat.size(), 18u);
    std::set<std::string> ids;
    for (const auto& d : cat) EXPECT_TRUE(ids.insert(d.id()).second) << d.id();
    int per_family[4] = {0, 0, 0, 0};
    for (const auto& d : cat) ++per_family[static_cast<int>(d.family)];
    EXPECT_EQ(per_family[0], 3);
    EXPECT_EQ(per_family[1], 6);
    EXPECT_EQ(per_family[2], 3);
    EXPECT_EQ(per_family[3], 6);
}

TEST(Schemes, FirstFourSizesOfEveryCaseVerify) {
    for (const auto& a : audit_constructions(4)) {
        EXPECT_TRUE(a.report.ok()) << a.case_id << " size " << a.size << ": "
                                   << (a.findings.empty() ? "" : a.findings.front());
        EXPECT_EQ(a.class_count, a.claimed_count) << a.case_id << " size " << a.size;
    }
}

TEST(Schemes, ManySizesVerify) {
    for (const auto& d : scheme_catalog()) {
        for (int size = d.min_size; size < d.min_size + 30; ++size) {
            const auto a = audit_case(d, size);
            EXPECT_TRUE(a.ok()) << a.case_id << " size " << size;
        }
    }
}

TEST(Schemes, ClassCountIsMaxDegree) {
    for (const auto& d : scheme_catalog()) {
        for (int size = d.min_size; size < d.min_size + 6; ++size) {
            const auto p = family_params(d.family, size, d.m, d.j);
            const auto g = build_h_graph(p);
            EXPECT_EQ(generate_scheme(d, size).count(), max_degree(g)) << d.id();
            EXPECT_EQ(max_degree(g), g.order() - 1);
        }
    }
}

TEST(Schemes, ReproducesReferenceListings) {
    for (const auto& l : fixtures::reference_listings()) {
        const auto c = scheme_for(l.params);
        EXPECT_EQ(c.case_id, l.case_id);
        ASSERT_EQ(c.count(), static_cast<int>(l.classes.size())) << l.case_id;
        for (std::size_t n = 0; n < l.classes.size(); ++n) {
            EXPECT_EQ(as_set(c.classes[n]), as_set(l.classes[n].edges))
                << l.case_id << " class " << n << " (" << l.classes[n].color << ")";
            // Pairs keep the orientation they are written in.
            EXPECT_EQ(c.classes[n], l.classes[n].edges) << l.case_id << " class " << n;
        }
    }
}

TEST(Schemes, NamedEntryPoints) {
    EXPECT_EQ(scheme_hi2(11, 3).count(), 11);
    EXPECT_EQ(scheme_hi3(12, 3, 2).count(), 13);
    EXPECT_EQ(scheme_h2s(11, 3).count(), 11);
    EXPECT_EQ(scheme_h3s(12, 2, 3).count(), 13);
    const auto c = scheme_hi3(10, 2, 1);
    EXPECT_EQ(c.count(), 11);
    EXPECT_TRUE(verify_coloring(build_h_graph({10, 3, 2, 1}), c).ok());
    EXPECT_TRUE(verify_coloring(build_h_graph({2, 7, 1, 1}), scheme_h2s(7, 1)).ok());
    EXPECT_EQ(scheme_h2s(7, 1).count(), 7);
}

TEST(Schemes, BelowThresholdHasNoScheme) {
    EXPECT_THROW(scheme_hi3(7, 1, 1), NoSchemeError);
    EXPECT_THROW(scheme_h2s(6, 1), NoSchemeError);
    EXPECT_THROW(scheme_for({5, 5, 1, 1}), NoSchemeError);
    EXPECT_THROW(scheme_h2s(20, 4), NoSchemeError);
}

TEST(Schemes, MirrorOfMinusTwoFamily) {
    for (int j = 1; j <= 3; ++j) {
        for (int s = 7; s <= 20; ++s) {
            if (!find_scheme(SchemeFamily::H2s, s, 1, j)) continue;
            const auto c = scheme_h2s(s, j);
            const auto g = build_h_graph({s, 2, j, 1});
            const auto r = verify_coloring(g, negated(c));
            EXPECT_TRUE(r.ok()) << "s=" << s << " j=" << j;
            EXPECT_EQ(r.class_count, c.count());
        }
    }
}

TEST(Schemes, MirrorOfMinusThreeFamily) {
    for (int m = 1; m <= 2; ++m)
        for (int j = 1; j <= 3; ++j)
            for (int s = 4; s <= 20; ++s) {
                if (!find_scheme(SchemeFamily::H3s, s, m, j)) continue;
                const auto c = scheme_h3s(s, m, j);
                EXPECT_TRUE(verify_coloring(build_h_graph({s, 3, j, m}), negated(c)).ok())
                    << "s=" << s << " m=" << m << " j=" << j;
            }
}

TEST(Schemes, ClassOriginsAlignWithClasses) {
    for (const auto& d : scheme_catalog()) {
        const auto origins = class_origins(d, d.min_size + 2);
        EXPECT_EQ(static_cast<int>(origins.size()), generate_scheme(d, d.min_size + 2).count()) << d.id();
        for (const auto& o : origins) {
            EXPECT_GE(o.line, 1);
            EXPECT_LE(o.line, static_cast<int>(d.lines.size()));
        }
    }
}

TEST(Schemes, AsPrintedReadingExposesMisprint) {
    const SchemeDescriptor* d = nullptr;
    for (const auto& c : scheme_catalog()) {
        if (c.id() == "Hi3/A") d = &c;
    }
    ASSERT_NE(d, nullptr);
    const auto printed = audit_case(*d, d->min_size, Reading::AsPrinted);
    EXPECT_FALSE(printed.report.ok());
    ASSERT_FALSE(printed.findings.empty());
    EXPECT_NE(printed.findings.front().find("Hi3/A line"), std::string::npos);
    EXPECT_TRUE(audit_case(*d, d->min_size).ok());
}

TEST(Schemes, DisplayNotes) {
    const auto notes = display_notes();
    auto has = [&](const std::string& id, int line, const std::string& fragment) {
        return std::any_of(notes.begin(), notes.end(), [&](const DisplayNote& n) {
            return n.case_id == id && n.line == line && n.detail.find(fragment) != std::string::npos;
        });
    };
    EXPECT_TRUE(has("Hi3/A", 6, "read as"));
    EXPECT_TRUE(has("Hi3/C", 2, "does not follow its chain"));
    EXPECT_TRUE(has("H2s/B", 3, "dangling comma"));
    EXPECT_TRUE(has("H3s/F", 3, "doubled parenthesis"));
}

TEST(Schemes, SmallCaseClaims) {
    EXPECT_EQ(small_case_expected(SchemeFamily::H2s, 3, 1, 2).chi_prime, 3);
    EXPECT_EQ(small_case_expected(SchemeFamily::H3s, 4, 2, 1).chi_prime, 5);
    EXPECT_EQ(small_case_expected(SchemeFamily::Hi2, 5, 1, 1).chi_prime, 5);
    EXPECT_EQ(small_case_expected(SchemeFamily::Hi3, 4, 1, 2).chi_prime, 5);
    EXPECT_THROW(small_case_expected(SchemeFamily::H2s, 7, 1, 1), std::out_of_range);
    EXPECT_THROW(small_case_expected(SchemeFamily::H2s, 2, 1, 1), std::out_of_range);
}

TEST(Schemes, CoverageIsSeamless) {
    // Small-case ranges end exactly where the first construction starts.
    for (int j = 1; j <= 3; ++j)
        for (int s = 3; s <= 30; ++s) {
            HParams p{2, s, 1, j};
            if (!p.valid()) continue;
            EXPECT_NE(coverage_of(p), Coverage::Uncovered) << describe(p);
        }
    for (int m = 1; m <= 3; ++m)
        for (int i = 3; i <= 30; ++i) {
            HParams p{i, 2, m, 1};
            if (!p.valid()) continue;
            EXPECT_NE(coverage_of(p), Coverage::Uncovered) << describe(p);
        }
    EXPECT_EQ(coverage_of({2, 6, 1, 1}), Coverage::LemmaClaim);
    EXPECT_EQ(coverage_of({2, 7, 1, 1}), Coverage::CaseConstruction);
    EXPECT_EQ(coverage_of({5, 5, 2, 2}), Coverage::Uncovered);
}

TEST(Schemes, SmallCaseListings) {
    const auto audits = audit_small_case_listings();
    ASSERT_EQ(audits.size(), 3u);
    // j = 1: (0,3) is listed twice and (0,2) is missing.
    ASSERT_TRUE(audits[0].report.has_value());
    EXPECT_TRUE(audits[0].report->proper);
    EXPECT_FALSE(audits[0].report->complete);
    // j = 2 verifies.
    ASSERT_TRUE(audits[1].report.has_value());
    EXPECT_TRUE(audits[1].report->ok());
    // j = 3 is outside 1 <= j < s.
    EXPECT_FALSE(audits[2].in_domain);
}
