// isgtool: build sum graphs, color, verify, sweep and export.
//
// Exit codes: 0 ok, 1 usage or input error, 2 verification failed,
// 3 solver timeout, 4 no construction for the parameters.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "isg/audit.hpp"
#include "isg/coloring.hpp"
#include "isg/edge_sum.hpp"
#include "isg/exact.hpp"
#include "isg/io.hpp"
#include "isg/schemes.hpp"
#include "isg/sum_graph.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kUnverified = 2, kTimeout = 3, kNoScheme = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphArgs {
    std::string family = "h";
    std::optional<int> i, s, m, j, r, n;
};

void add_graph_args(CLI::App* cmd, GraphArgs& a) {
    cmd->add_option("--family", a.family, "h, grs or gn")
        ->check(CLI::IsMember({"h", "grs", "gn"}))
        ->capture_default_str();
    cmd->add_option("-i", a.i, "H: lowest label is -i");
    cmd->add_option("-s", a.s, "H, Grs: highest label s");
    cmd->add_option("-m", a.m, "H: removed label -m");
    cmd->add_option("-j", a.j, "H: removed label j");
    cmd->add_option("-r", a.r, "Grs: lowest label r");
    cmd->add_option("-n", a.n, "Gn: labels 1..n");
}

int need(const std::optional<int>& v, const char* name, const std::string& family) {
    if (!v) throw UsageError(std::string("--family ") + family + " requires -" + name);
    return *v;
}

isg::FamilyParams params_of(const GraphArgs& a) {
    if (a.family == "h") {
        return isg::HParams{need(a.i, "i", a.family), need(a.s, "s", a.family),
                            need(a.m, "m", a.family), need(a.j, "j", a.family)};
    }
    if (a.family == "grs") return isg::GrsParams{need(a.r, "r", a.family), need(a.s, "s", a.family)};
    return isg::GnParams{need(a.n, "n", a.family), false};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

struct BudgetArgs {
    int max_edges = 400;
    int time_limit_ms = 10'000;
    std::uint64_t max_nodes = 0;

    isg::SolverBudget budget() const {
        isg::SolverBudget b;
        b.max_edges = max_edges;
        b.time_limit = std::chrono::milliseconds(time_limit_ms);
        b.max_nodes = max_nodes;
        b.validate();
        return b;
    }
};

void add_budget_args(CLI::App* cmd, BudgetArgs& b) {
    cmd->add_option("--max-edges", b.max_edges, "exact solver edge limit")->capture_default_str();
    cmd->add_option("--time-limit-ms", b.time_limit_ms, "exact solver wall-clock limit")
        ->capture_default_str();
    cmd->add_option("--max-nodes", b.max_nodes, "exact solver node limit, 0 for none")
        ->capture_default_str();
}

struct Colored {
    isg::Json json;
    isg::EdgeColoring coloring;
    int exit = kOk;
};

// Runs one engine; the JSON carries proper/complete flags from the verifier.
Colored color_graph(const isg::SumGraph& g, const std::string& engine, const BudgetArgs& b) {
    Colored out;
    if (engine == "edge-sum") {
        const auto es = isg::edge_sum_classes(g);
        out.coloring = isg::to_edge_coloring(es);
        const auto rep = isg::verify_coloring(g, out.coloring);
        out.json = isg::edge_sum_to_json(es, &rep);
        if (!rep.ok()) out.exit = kUnverified;
        return out;
    }
    if (engine == "paper") {
        const auto* h = std::get_if<isg::HParams>(&g.params());
        if (!h) throw isg::NoSchemeError("constructions exist only for the H family");
        out.coloring = isg::scheme_for(*h);
    } else if (engine == "greedy") {
        out.coloring = isg::greedy_coloring(g);
    } else {
        auto res = isg::exact_chromatic_index(g, b.budget());
        if (!res.exact()) {
            out.json = isg::exact_to_json(res);
            out.exit = kTimeout;
            return out;
        }
        out.coloring = std::move(*res.witness);
    }
    const auto rep = isg::verify_coloring(g, out.coloring);
    out.json = isg::coloring_to_json(out.coloring, &rep);
    if (!rep.ok()) out.exit = kUnverified;
    return out;
}

isg::IntRange range_or(const std::string& text, isg::IntRange fallback) {
    return text.empty() ? fallback : isg::IntRange::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral sum graph edge colorings"};
    app.require_subcommand(1);

    GraphArgs build_args;
    std::string build_out = "-";
    auto* build = app.add_subcommand("build", "Emit the graph JSON");
    add_graph_args(build, build_args);
    build->add_option("-o,--output", build_out, "output file or -")->capture_default_str();

    GraphArgs color_args;
    std::string engine = "paper";
    std::string color_out = "-";
    BudgetArgs color_budget;
    auto* color = app.add_subcommand("color", "Emit a coloring JSON");
    add_graph_args(color, color_args);
    color->add_option("--engine", engine, "paper, exact, edge-sum or greedy")
        ->check(CLI::IsMember({"paper", "exact", "edge-sum", "greedy"}))
        ->capture_default_str();
    add_budget_args(color, color_budget);
    color->add_option("-o,--output", color_out, "output file or -")->capture_default_str();

    std::string verify_graph, verify_coloring_path, verify_out = "-";
    auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
    verify->add_option("graph", verify_graph, "graph JSON file or -")->required();
    verify->add_option("coloring", verify_coloring_path, "coloring JSON file or -")->required();
    verify->add_option("-o,--output", verify_out, "output file or -")->capture_default_str();

    std::string sweep_family = "h";
    std::string si, ss, sm, sj, sr, sn;
    std::string sweep_engines = "edge-sum,paper,exact";
    unsigned sweep_threads = 1;
    std::string sweep_out = "-";
    BudgetArgs sweep_budget;
    auto* sweep = app.add_subcommand("sweep", "Audit a parameter grid as CSV");
    sweep->add_option("--family", sweep_family, "h2s, h3s, hi2, hi3, h, grs or gn")
        ->capture_default_str();
    sweep->add_option("-i", si, "range a:b");
    sweep->add_option("-s", ss, "range a:b");
    sweep->add_option("-m", sm, "range a:b");
    sweep->add_option("-j", sj, "range a:b");
    sweep->add_option("-r", sr, "range a:b");
    sweep->add_option("-n", sn, "range a:b");
    sweep->add_option("--engines", sweep_engines, "comma-separated engines")->capture_default_str();
    sweep->add_option("--threads", sweep_threads, "worker threads")->capture_default_str();
    add_budget_args(sweep, sweep_budget);
    sweep->add_option("-o,--output", sweep_out, "output file or -")->capture_default_str();

    GraphArgs export_args;
    std::string export_engine = "paper";
    std::string export_graph, export_coloring, export_out = "-";
    std::string export_format = "dot";
    BudgetArgs export_budget;
    auto* exp = app.add_subcommand("export", "Emit DOT or JSON for a colored graph");
    add_graph_args(exp, export_args);
    exp->add_option("--engine", export_engine, "paper, exact, edge-sum or greedy")
        ->check(CLI::IsMember({"paper", "exact", "edge-sum", "greedy"}))
        ->capture_default_str();
    exp->add_option("--graph", export_graph, "graph JSON file instead of parameters");
    exp->add_option("--coloring", export_coloring, "coloring JSON file instead of an engine");
    exp->add_option("--format", export_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();
    add_budget_args(exp, export_budget);
    exp->add_option("-o,--output", export_out, "output file or -")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*build) {
            const auto g = isg::build_graph(params_of(build_args));
            write_output(build_out, isg::dump(isg::graph_to_json(g)));
            return kOk;
        }
        if (*color) {
            const auto g = isg::build_graph(params_of(color_args));
            auto res = color_graph(g, engine, color_budget);
            write_output(color_out, isg::dump(res.json));
            return res.exit;
        }
        if (*verify) {
            if (verify_graph == "-" && verify_coloring_path == "-") {
                throw UsageError("graph and coloring cannot both come from stdin");
            }
            const auto g = isg::graph_from_json(isg::parse_json(read_input(verify_graph)));
            const auto c = isg::coloring_from_json(isg::parse_json(read_input(verify_coloring_path)));
            const auto rep = isg::verify_coloring(g, c);
            write_output(verify_out, isg::dump(isg::report_to_json(rep)));
            return rep.ok() ? kOk : kUnverified;
        }
        if (*sweep) {
            isg::SweepSpec spec;
            auto fam = isg::sweep_family_from_string(sweep_family);
            if (!fam) throw UsageError("unknown sweep family '" + sweep_family + "'");
            spec.family = *fam;
            spec.i = range_or(si, {1, 0});
            spec.s = range_or(ss, {1, 0});
            spec.m = range_or(sm, {1, 0});
            spec.j = range_or(sj, {1, 0});
            spec.r = range_or(sr, {1, 0});
            spec.n = range_or(sn, {1, 0});
            spec.options.engines = isg::Engines::parse(sweep_engines);
            spec.options.budget = sweep_budget.budget();
            spec.threads = sweep_threads;
            const auto reports = isg::run_sweep(spec);
            std::ostringstream csv;
            isg::write_audit_csv(csv, reports);
            write_output(sweep_out, csv.str());
            std::cerr << "summary: " << isg::to_string(isg::summarize(reports)) << '\n';
            return kOk;
        }
        if (*exp) {
            const auto g = export_graph.empty()
                               ? isg::build_graph(params_of(export_args))
                               : isg::graph_from_json(isg::parse_json(read_input(export_graph)));
            isg::EdgeColoring c;
            isg::Json cjson;
            if (export_coloring.empty()) {
                auto res = color_graph(g, export_engine, export_budget);
                if (res.exit == kTimeout) {
                    std::cerr << "error: exact solver exceeded its budget\n";
                    return kTimeout;
                }
                c = std::move(res.coloring);
                cjson = std::move(res.json);
            } else {
                c = isg::coloring_from_json(isg::parse_json(read_input(export_coloring)));
                const auto rep = isg::verify_coloring(g, c);
                cjson = isg::coloring_to_json(c, &rep);
            }
            if (export_format == "dot") {
                write_output(export_out, isg::to_dot(g, c));
            } else {
                if (!isg::verify_coloring(g, c).ok()) {
                    throw isg::UnverifiedColoringError("refusing to export: coloring does not verify");
                }
                isg::Json doc;
                doc["graph"] = isg::graph_to_json(g);
                doc["coloring"] = std::move(cjson);
                write_output(export_out, isg::dump(doc));
            }
            return kOk;
        }
    } catch (const isg::NoSchemeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNoScheme;
    } catch (const isg::UnverifiedColoringError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnverified;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
