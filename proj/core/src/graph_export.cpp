#include "retro/graph_export.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace retro {

using nlohmann::ordered_json;

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
    if (name == "dot") return GraphFormat::dot;
    if (name == "json") return GraphFormat::json;
    if (name == "text") return GraphFormat::text;
    return std::nullopt;
}

std::string_view to_string(GraphFormat format) {
    switch (format) {
        case GraphFormat::dot: return "dot";
        case GraphFormat::json: return "json";
        case GraphFormat::text: return "text";
    }
    return "unknown";
}

namespace {

std::string dot_quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string fixed3(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

bool is_utilitarian(const AttackGraph& graph, const Attack& attack) {
    const Principle* p = graph.principle(attack.principle);
    return p && p->kind == PrincipleKind::utilitarian;
}

}  // namespace

ordered_json graph_to_json(const DecisionResult& result) {
    const auto& graph = result.graph;
    ordered_json nodes = ordered_json::array();
    for (const auto& argument : graph.arguments) {
        const auto& eval = result.assessment.evaluation(argument.branch);
        ordered_json node;
        node["branch"] = argument.branch;
        node["action"] = argument.action;
        node["probability"] = argument.probability.midpoint();
        if (!argument.probability.is_exact()) {
            node["probabilityInterval"] = {argument.probability.low(), argument.probability.high()};
        }
        node["probabilityText"] = to_string(argument.probability);
        node["utilityVector"] = eval.utility.components();
        node["attacked"] = graph.attacked.at(argument.branch);
        node["violations"] = eval.violations;
        node["argumentText"] = argument.text;
        nodes.push_back(std::move(node));
    }

    ordered_json edges = ordered_json::array();
    for (const auto& attack : graph.attacks) {
        edges.push_back({{"from", attack.attacker},
                         {"to", attack.target},
                         {"principle", attack.principle},
                         {"kind", is_utilitarian(graph, attack) ? "utilitarian" : "forbiddenState"}});
    }

    ordered_json acceptability = ordered_json::object();
    for (const auto& entry : result.acceptability) acceptability[entry.action] = entry.acceptability;

    ordered_json out;
    out["nodes"] = std::move(nodes);
    out["edges"] = std::move(edges);
    out["acceptability"] = std::move(acceptability);
    out["selected"] = result.selected;
    out["defaultPick"] = result.selected.empty() ? ordered_json(nullptr) : ordered_json(result.default_pick());
    out["tie"] = result.tie();
    out["fullyAcceptable"] = result.fully_acceptable;
    out["dilemma"] = result.dilemma;
    return out;
}

std::string graph_to_dot(const DecisionResult& result) {
    const auto& graph = result.graph;
    std::ostringstream out;
    out << "digraph retrospection {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=circle];\n";

    // Arguments are stored grouped by action in declaration order.
    std::size_t cluster = 0;
    for (std::size_t i = 0; i < graph.arguments.size();) {
        const std::string& action = graph.arguments[i].action;
        out << "  subgraph cluster_" << cluster++ << " {\n";
        out << "    label=" << dot_quote(action) << ";\n";
        for (; i < graph.arguments.size() && graph.arguments[i].action == action; ++i) {
            const auto& argument = graph.arguments[i];
            out << "    " << dot_quote(argument.branch) << " [label="
                << dot_quote(argument.branch + "\\n" + to_string(argument.probability));
            if (graph.attacked.at(argument.branch)) out << ", style=filled, fillcolor=\"#f4cccc\"";
            out << "];\n";
        }
        out << "  }\n";
    }

    for (const auto& attack : graph.attacks) {
        out << "  " << dot_quote(attack.attacker) << " -> " << dot_quote(attack.target) << " [";
        if (is_utilitarian(graph, attack)) {
            out << "color=blue, style=dashed";
        } else {
            out << "color=black, style=solid";
        }
        out << ", tooltip=" << dot_quote(attack.principle) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_to_text(const DecisionResult& result) {
    const auto& graph = result.graph;
    std::ostringstream out;
    if (graph.attacks.empty()) {
        out << "no attacks\n";
    } else {
        out << "attacks (" << graph.attacks.size() << "):\n";
        for (const auto& attack : graph.attacks) {
            out << "  " << attack.attacker << " -> " << attack.target << " [" << attack.principle << "]\n";
        }
    }
    out << "acceptability:\n";
    for (const auto& entry : result.acceptability) out << "  " << entry.action << " " << fixed3(entry.acceptability) << "\n";
    return out.str();
}

std::string export_graph(const DecisionResult& result, GraphFormat format) {
    switch (format) {
        case GraphFormat::dot: return graph_to_dot(result);
        case GraphFormat::json: return graph_to_json(result).dump(2) + "\n";
        case GraphFormat::text: return graph_to_text(result);
    }
    throw std::invalid_argument("unknown graph format");
}

std::string export_graph(const DecisionResult& result, std::string_view format) {
    auto parsed = parse_graph_format(format);
    if (!parsed) {
        throw std::invalid_argument("unknown graph format '" + std::string(format) + "'; valid formats: dot, json, text");
    }
    return export_graph(result, *parsed);
}

}  // namespace retro
