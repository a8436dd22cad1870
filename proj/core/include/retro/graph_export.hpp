#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "retro/argumentation.hpp"

namespace retro {

enum class GraphFormat { dot, json, text };

std::optional<GraphFormat> parse_graph_format(std::string_view name);
std::string_view to_string(GraphFormat format);

/// Machine-readable result graph:
/// {nodes:[{branch, action, probability, utilityVector, attacked, argumentText}],
///  edges:[{from, to, principle}], acceptability:{action: number}, selected:[action]}
/// plus the default pick, tie, full-acceptability and dilemma flags.
nlohmann::ordered_json graph_to_json(const DecisionResult& result);

/// Graphviz rendering: one cluster per action, utilitarian attacks dashed
/// blue, forbidden-state attacks solid black, attacked branches shaded.
std::string graph_to_dot(const DecisionResult& result);

/// Plain adjacency listing.
std::string graph_to_text(const DecisionResult& result);

std::string export_graph(const DecisionResult& result, GraphFormat format);

/// Throws std::invalid_argument naming the valid formats when `format` is
/// not one of them.
std::string export_graph(const DecisionResult& result, std::string_view format);

}  // namespace retro
