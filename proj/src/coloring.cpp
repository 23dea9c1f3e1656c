#include "isg/coloring.hpp"

#include <algorithm>
#include <map>

namespace isg {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::PaperScheme: return "paper-scheme";
        case Provenance::Exact: return "exact";
        case Provenance::Greedy: return "greedy";
        case Provenance::EdgeSum: return "edge-sum";
    }
    return "?";
}

const char* to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::Clash: return "clash";
        case Violation::Kind::Foreign: return "foreign";
        case Violation::Kind::Duplicate: return "duplicate";
        case Violation::Kind::Missing: return "missing";
        case Violation::Kind::Empty: return "empty";
    }
    return "?";
}

std::string Violation::describe() const {
    std::string out = to_string(kind);
    if (class_index >= 0) out += " in class " + std::to_string(class_index);
    out += ":";
    for (const Edge& e : edges) out += " " + to_string(e);
    return out;
}

VerificationReport verify_coloring(const SumGraph& g, const EdgeColoring& c) {
    VerificationReport report;
    report.class_count = c.count();

    std::map<Edge, int> first_class;  // canonical edge -> class of first listing
    for (int idx = 0; idx < c.count(); ++idx) {
        const auto& cls = c.classes[static_cast<std::size_t>(idx)];
        if (cls.empty()) {
            report.violations.push_back({Violation::Kind::Empty, idx, {}});
            continue;
        }
        std::map<Label, Edge> owner;
        for (const Edge& raw : cls) {
            const Edge e = raw.canonical();
            if (e.u == e.v || !g.has_edge(e)) {
                report.violations.push_back({Violation::Kind::Foreign, idx, {raw}});
            }
            auto [it, inserted] = first_class.emplace(e, idx);
            if (!inserted) report.violations.push_back({Violation::Kind::Duplicate, idx, {raw}});

            for (Label x : {e.u, e.v}) {
                auto [slot, fresh] = owner.emplace(x, raw);
                if (!fresh && slot->second.canonical() != e) {
                    report.violations.push_back({Violation::Kind::Clash, idx, {slot->second, raw}});
                }
                if (e.u == e.v) break;
            }
        }
    }

    std::vector<Edge> missing;
    for (const Edge& e : g.edges()) {
        if (!first_class.contains(e)) missing.push_back(e);
    }
    if (!missing.empty()) report.violations.push_back({Violation::Kind::Missing, -1, missing});

    report.proper = true;
    report.complete = true;
    for (const auto& v : report.violations) {
        switch (v.kind) {
            case Violation::Kind::Clash: report.proper = false; break;
            case Violation::Kind::Foreign:
                report.proper = false;
                report.complete = false;
                break;
            case Violation::Kind::Duplicate:
            case Violation::Kind::Missing:
            case Violation::Kind::Empty: report.complete = false; break;
        }
    }
    return report;
}

bool is_proper_edge_coloring(const SumGraph& g, const EdgeColoring& c) {
    for (const auto& cls : c.classes) {
        std::vector<Label> touched;
        for (const Edge& raw : cls) {
            const Edge e = raw.canonical();
            if (e.u == e.v || !g.has_edge(e)) return false;
            touched.push_back(e.u);
            touched.push_back(e.v);
        }
        std::sort(touched.begin(), touched.end());
        if (std::adjacent_find(touched.begin(), touched.end()) != touched.end()) return false;
    }
    return true;
}

std::vector<int> class_of_edges(const SumGraph& g, const EdgeColoring& c) {
    std::vector<int> out(g.edges().size(), -1);
    for (int idx = 0; idx < c.count(); ++idx) {
        for (const Edge& raw : c.classes[static_cast<std::size_t>(idx)]) {
            const Edge e = raw.canonical();
            auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
            if (it != g.edges().end() && *it == e) {
                auto& slot = out[static_cast<std::size_t>(it - g.edges().begin())];
                if (slot < 0) slot = idx;
            }
        }
    }
    return out;
}

EdgeColoring canonicalized(EdgeColoring c) {
    for (auto& cls : c.classes) {
        for (Edge& e : cls) e = e.canonical();
        std::sort(cls.begin(), cls.end());
    }
    return c;
}

}  // namespace isg
