#include "isg/io.hpp"

#include <sstream>

namespace isg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json pair_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back(pair_json(e));
    return out;
}

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw FormatError(std::string("missing or non-integer field '") + key + "'");
    }
    return j.at(key).get<int>();
}

Edge edge_from(const Json& p) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        throw FormatError("edge must be a pair of integers, got " + p.dump());
    }
    return {p[0].get<Label>(), p[1].get<Label>()};
}

std::vector<Edge> edges_from(const Json& arr) {
    if (!arr.is_array()) throw FormatError("edge list must be an array");
    std::vector<Edge> out;
    for (const auto& p : arr) out.push_back(edge_from(p));
    return out;
}

void add_report_flags(Json& out, const VerificationReport* report) {
    if (report) {
        out["proper"] = report->proper;
        out["complete"] = report->complete;
    }
}

}  // namespace

Json graph_to_json(const SumGraph& g) {
    Json out;
    std::visit(Overloaded{
                   [&](const GnParams& p) {
                       out["family"] = "Gn";
                       out["n"] = p.n;
                       if (p.negated) out["negated"] = true;
                   },
                   [&](const GrsParams& p) {
                       out["family"] = "Grs";
                       out["r"] = p.r;
                       out["s"] = p.s;
                   },
                   [&](const HParams& p) {
                       out["family"] = "H";
                       out["i"] = p.i;
                       out["s"] = p.s;
                       out["m"] = p.m;
                       out["j"] = p.j;
                   },
               },
               g.params());
    out["vertices"] = g.vertices();
    out["edges"] = edges_json(g.edges());
    return out;
}

SumGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
        throw FormatError("graph JSON needs a string 'family'");
    }
    const std::string family = j.at("family").get<std::string>();
    FamilyParams params;
    if (family == "Gn") {
        bool negated = false;
        if (j.contains("negated")) {
            if (!j.at("negated").is_boolean()) throw FormatError("'negated' must be boolean");
            negated = j.at("negated").get<bool>();
        }
        params = GnParams{get_int(j, "n"), negated};
    } else if (family == "Grs") {
        params = GrsParams{get_int(j, "r"), get_int(j, "s")};
    } else if (family == "H") {
        params = HParams{get_int(j, "i"), get_int(j, "s"), get_int(j, "m"), get_int(j, "j")};
    } else {
        throw FormatError("unknown family '" + family + "'");
    }
    if (!j.contains("vertices") || !j.at("vertices").is_array()) {
        throw FormatError("graph JSON needs a 'vertices' array");
    }
    std::vector<Label> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_number_integer()) throw FormatError("vertex labels must be integers");
        vertices.push_back(v.get<Label>());
    }
    if (!j.contains("edges")) throw FormatError("graph JSON needs an 'edges' array");
    try {
        return SumGraph::from_parts(params, std::move(vertices), edges_from(j.at("edges")));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Json coloring_to_json(const EdgeColoring& c, const VerificationReport* report) {
    Json out;
    out["kind"] = to_string(c.provenance);
    if (!c.case_id.empty()) out["case"] = c.case_id;
    Json classes = Json::array();
    for (const auto& cls : c.classes) classes.push_back(edges_json(cls));
    out["classes"] = std::move(classes);
    out["count"] = c.count();
    add_report_flags(out, report);
    return out;
}

Json edge_sum_to_json(const EdgeSumColoring& c, const VerificationReport* report) {
    Json out;
    out["kind"] = "edge-sum";
    Json classes = Json::array();
    for (const auto& cls : c.classes) {
        Json entry;
        entry["k"] = cls.k;
        entry["edges"] = edges_json(cls.edges);
        classes.push_back(std::move(entry));
    }
    out["classes"] = std::move(classes);
    out["count"] = c.count();
    add_report_flags(out, report);
    return out;
}

EdgeColoring to_edge_coloring(const EdgeSumColoring& c) {
    EdgeColoring out;
    out.provenance = Provenance::EdgeSum;
    for (const auto& cls : c.classes) out.classes.push_back(cls.edges);
    return out;
}

EdgeColoring coloring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("classes") || !j.at("classes").is_array()) {
        throw FormatError("coloring JSON needs a 'classes' array");
    }
    EdgeColoring out;
    const std::string kind = j.value("kind", std::string("exact"));
    if (kind == "paper-scheme") {
        out.provenance = Provenance::PaperScheme;
    } else if (kind == "exact") {
        out.provenance = Provenance::Exact;
    } else if (kind == "greedy") {
        out.provenance = Provenance::Greedy;
    } else if (kind == "edge-sum") {
        out.provenance = Provenance::EdgeSum;
    } else {
        throw FormatError("unknown coloring kind '" + kind + "'");
    }
    if (j.contains("case")) {
        if (!j.at("case").is_string()) throw FormatError("'case' must be a string");
        out.case_id = j.at("case").get<std::string>();
    }
    for (const auto& cls : j.at("classes")) {
        if (cls.is_object()) {
            if (!cls.contains("edges")) throw FormatError("class object needs 'edges'");
            out.classes.push_back(edges_from(cls.at("edges")));
        } else {
            out.classes.push_back(edges_from(cls));
        }
    }
    if (j.contains("count") && (!j.at("count").is_number_integer() ||
                                j.at("count").get<int>() != out.count())) {
        throw FormatError("'count' does not match the number of classes");
    }
    return out;
}

Json report_to_json(const VerificationReport& r) {
    Json out;
    out["proper"] = r.proper;
    out["complete"] = r.complete;
    out["class_count"] = r.class_count;
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json entry;
        entry["kind"] = to_string(v.kind);
        if (v.class_index >= 0) {
            entry["class"] = v.class_index;
        } else {
            entry["class"] = nullptr;
        }
        entry["edges"] = edges_json(v.edges);
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    return out;
}

Json exact_to_json(const ExactResult& r) {
    Json out;
    if (r.exact()) {
        out["chi_prime"] = r.chi_prime;
        out["class"] = std::to_string(r.vizing_class());
    } else {
        out["chi_prime"] = nullptr;
        out["class"] = nullptr;
    }
    out["nodes_expanded"] = r.nodes_expanded;
    out["status"] = to_string(r.status);
    return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(e.what());
    }
}

const char* palette_color(int class_index) {
    if (class_index < 0) throw std::out_of_range("negative class index");
    return kPalette[static_cast<std::size_t>(class_index) % kPalette.size()];
}

std::string to_dot(const SumGraph& g, const EdgeColoring& c) {
    const VerificationReport report = verify_coloring(g, c);
    if (!report.ok()) {
        std::string why = report.violations.empty() ? "coloring does not verify"
                                                    : report.violations.front().describe();
        throw UnverifiedColoringError("refusing to export: " + why);
    }
    const auto index = class_of_edges(g, c);
    std::ostringstream os;
    os << "graph \"" << describe(g.params()) << "\" {\n";
    for (Label x : g.vertices()) os << "  \"" << x << "\" [label=\"" << x << "\"];\n";
    for (std::size_t n = 0; n < g.edges().size(); ++n) {
        const Edge& e = g.edges()[n];
        os << "  \"" << e.u << "\" -- \"" << e.v << "\" [color=\"" << palette_color(index[n])
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace isg
