#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "isg/coloring.hpp"
#include "isg/edge_sum.hpp"
#include "isg/exact.hpp"
#include "isg/sum_graph.hpp"

namespace isg {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"family":"H","i":..,"s":..,"m":..,"j":..,"vertices":[..],"edges":[[u,v],..]}
Json graph_to_json(const SumGraph& g);
/// Rebuilds and checks the graph against its family; throws FormatError.
SumGraph graph_from_json(const Json& j);

/// {"kind":..,["case":..,]"classes":[[[u,v],..],..],"count":n[,"proper":..,"complete":..]}
Json coloring_to_json(const EdgeColoring& c, const VerificationReport* report = nullptr);

/// {"kind":"edge-sum","classes":[{"k":..,"edges":[..]},..],"count":n[,...]}
Json edge_sum_to_json(const EdgeSumColoring& c, const VerificationReport* report = nullptr);

/// Accepts both class layouts. Throws FormatError.
EdgeColoring coloring_from_json(const Json& j);

EdgeColoring to_edge_coloring(const EdgeSumColoring& c);

Json report_to_json(const VerificationReport& r);

/// {"chi_prime":..,"class":"1"|"2","nodes_expanded":..,"status":"exact"|"timeout"}
Json exact_to_json(const ExactResult& r);

/// Compact dump followed by a newline.
std::string dump(const Json& j);

/// Throws FormatError with the parser message.
Json parse_json(std::string_view text);

/// Edge colors by class index, cycling past the end.
inline constexpr std::array<const char*, 16> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#3182bd",
};

const char* palette_color(int class_index);

class UnverifiedColoringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected DOT with one node per label and one colored edge per graph
/// edge. Throws UnverifiedColoringError unless c is proper and complete.
std::string to_dot(const SumGraph& g, const EdgeColoring& c);

}  // namespace isg
