#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "retro/retro.hpp"

#ifndef RETRO_SCENARIO_DIR
#error "RETRO_SCENARIO_DIR must point at the bundled scenarios/"
#endif

namespace retro::testing {

inline std::string scenario_path(const std::string& relative) { return std::string(RETRO_SCENARIO_DIR) + "/" + relative; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline ScenarioDocument load(const std::string& relative) { return parse_scenario(read_text(scenario_path(relative))).document; }

/// The library scenario with one of the bundled ethics files applied.
inline ScenarioDocument library_with(const std::string& ethics) {
    ScenarioDocument doc = load("library.json");
    apply_ethics(doc, parse_ethics(read_text(scenario_path("ethics/" + ethics + ".json"))));
    return doc;
}

using Edge = std::tuple<std::string, std::string, std::string>;  // attacker, target, principle

inline std::set<Edge> edge_set(const AttackGraph& graph) {
    std::set<Edge> out;
    for (const auto& a : graph.attacks) out.emplace(a.attacker, a.target, a.principle);
    return out;
}

inline std::set<std::pair<std::string, std::string>> edge_pairs(const AttackGraph& graph) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& a : graph.attacks) out.emplace(a.attacker, a.target);
    return out;
}

inline std::set<std::pair<std::string, std::string>> cross(std::initializer_list<const char*> from,
                                                           std::initializer_list<const char*> to) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto f : from)
        for (auto t : to) out.emplace(f, t);
    return out;
}

}  // namespace retro::testing
