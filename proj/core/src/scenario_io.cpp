#include "retro/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

namespace retro {

using nlohmann::json;
using nlohmann::ordered_json;

ScenarioError::ScenarioError(Kind kind, std::string path, std::string message, std::vector<std::string> details)
    : std::runtime_error(std::string(to_string(kind)) + " error" + (path.empty() ? "" : " at " + path) + ": " +
                         message),
      kind_(kind),
      path_(std::move(path)),
      details_(std::move(details)) {}

std::string_view to_string(ScenarioError::Kind kind) {
    switch (kind) {
        case ScenarioError::Kind::syntax: return "syntax";
        case ScenarioError::Kind::schema: return "schema";
        case ScenarioError::Kind::validation: return "validation";
    }
    return "unknown";
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
    throw ScenarioError(ScenarioError::Kind::schema, path.empty() ? "/" : path, message);
}

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) schema_error(path, "expected an object");
    return j;
}

const json& require_array(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array");
    return j;
}

void reject_unknown_keys(const json& object, const std::string& path, std::initializer_list<std::string_view> keys) {
    for (const auto& [key, value] : object.items()) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            schema_error(child(path, key), "unknown field '" + key + "'");
        }
    }
}

const json& field(const json& object, std::string_view key, const std::string& path) {
    auto it = object.find(key);
    if (it == object.end()) schema_error(child(path, key), "missing required field '" + std::string(key) + "'");
    return *it;
}

std::string string_field(const json& object, std::string_view key, const std::string& path) {
    const json& value = field(object, key, path);
    if (!value.is_string()) schema_error(child(path, key), "expected a string");
    return value.get<std::string>();
}

std::string optional_string(const json& object, std::string_view key, const std::string& path,
                            const std::string& fallback) {
    if (!object.contains(key)) return fallback;
    return string_field(object, key, path);
}

bool bool_field(const json& object, std::string_view key, const std::string& path, std::optional<bool> fallback) {
    auto it = object.find(key);
    if (it == object.end()) {
        if (fallback) return *fallback;
        schema_error(child(path, key), "missing required field '" + std::string(key) + "'");
    }
    if (!it->is_boolean()) schema_error(child(path, key), "expected true or false");
    return it->get<bool>();
}

double number_field(const json& object, std::string_view key, const std::string& path) {
    const json& value = field(object, key, path);
    if (!value.is_number()) schema_error(child(path, key), "expected a number");
    return value.get<double>();
}

std::string default_label(const std::string& variable, bool value) {
    return variable + "=" + (value ? "True" : "False");
}

std::vector<UtilityClass> utility_classes_from_json(const json& j, const std::string& path) {
    std::vector<UtilityClass> classes;
    for (std::size_t c = 0; c < require_array(j, path).size(); ++c) {
        const std::string class_path = child(path, c);
        UtilityClass cls;
        const json& entries = require_array(j[c], class_path);
        for (std::size_t a = 0; a < entries.size(); ++a) {
            const std::string p = child(class_path, a);
            const json& entry = require_object(entries[a], p);
            reject_unknown_keys(entry, p, {"var", "value", "utility"});
            cls.assignments.push_back(
                {string_field(entry, "var", p), bool_field(entry, "value", p, true), number_field(entry, "utility", p)});
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<ForbiddenState> forbidden_from_json(const json& j, const std::string& path) {
    std::vector<ForbiddenState> out;
    for (std::size_t f = 0; f < require_array(j, path).size(); ++f) {
        const std::string p = child(path, f);
        const json& entry = require_object(j[f], p);
        reject_unknown_keys(entry, p, {"var", "value", "label"});
        ForbiddenState state;
        state.variable = string_field(entry, "var", p);
        state.value = bool_field(entry, "value", p, true);
        state.label = optional_string(entry, "label", p, default_label(state.variable, state.value));
        out.push_back(std::move(state));
    }
    return out;
}

ComparisonPolicy policy_from_json(const json& j, const std::string& path) {
    if (!j.is_string()) schema_error(path, "expected \"midpoint\" or \"conservative\"");
    auto policy = parse_policy(j.get<std::string>());
    if (!policy) schema_error(path, "unknown policy '" + j.get<std::string>() + "'; expected midpoint or conservative");
    return *policy;
}

ordered_json utility_classes_to_json(const std::vector<UtilityClass>& classes) {
    ordered_json out = ordered_json::array();
    for (const auto& cls : classes) {
        ordered_json entries = ordered_json::array();
        for (const auto& u : cls.assignments) {
            entries.push_back({{"var", u.variable}, {"value", u.value}, {"utility", u.utility}});
        }
        out.push_back(std::move(entries));
    }
    return out;
}

ordered_json forbidden_to_json(const std::vector<ForbiddenState>& forbidden) {
    ordered_json out = ordered_json::array();
    for (const auto& f : forbidden) out.push_back({{"var", f.variable}, {"value", f.value}, {"label", f.label}});
    return out;
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line/column pair for humans.
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ScenarioError(ScenarioError::Kind::syntax,
                            "line " + std::to_string(line) + ", column " + std::to_string(column), e.what());
    }
}

}  // namespace

Probability probability_from_json(const json& j, const std::string& path) {
    try {
        if (j.is_number()) return Probability::exact(j.get<double>());
        if (j.is_string()) return from_poetic(j.get<std::string>());
        if (j.is_object()) {
            reject_unknown_keys(j, path, {"low", "high", "word"});
            std::optional<std::string> word;
            if (j.contains("word")) word = string_field(j, "word", path);
            return Probability::interval(number_field(j, "low", path), number_field(j, "high", path), word);
        }
    } catch (const std::invalid_argument& e) {
        schema_error(path, e.what());
    }
    schema_error(path, "expected a probability: number in [0, 1], estimative word, or {low, high}");
}

ordered_json probability_to_json(const Probability& p) {
    if (p.is_exact()) return p.low();
    if (p.source_word()) {
        auto entry = find_poetic(*p.source_word());
        if (entry && from_poetic(entry->word) == p) return std::string(entry->word);
    }
    ordered_json out{{"low", p.low()}, {"high", p.high()}};
    if (p.source_word()) out["word"] = *p.source_word();
    return out;
}

ScenarioDocument scenario_from_json(const json& j) {
    const std::string root;
    require_object(j, "/");
    reject_unknown_keys(j, root, {"version", "name", "description", "variables", "initial", "actions",
                                  "utilityClasses", "forbidden", "policy", "validation"});

    ScenarioDocument doc;
    doc.version = string_field(j, "version", root);
    if (doc.version != kScenarioVersion) {
        schema_error("/version", "unsupported version '" + doc.version + "'; expected \"1\"");
    }
    doc.name = optional_string(j, "name", root, "");
    doc.description = optional_string(j, "description", root, "");

    auto& problem = doc.problem;
    const json& variables = require_array(field(j, "variables", root), "/variables");
    for (std::size_t i = 0; i < variables.size(); ++i) {
        const std::string p = child("/variables", i);
        const json& v = require_object(variables[i], p);
        reject_unknown_keys(v, p, {"id", "label"});
        const std::string id = string_field(v, "id", p);
        problem.variables.push_back({id, optional_string(v, "label", p, id)});
    }

    problem.initial = StateAssignment::all_false(problem.variables);
    if (j.contains("initial")) {
        const json& initial = require_object(j["initial"], "/initial");
        for (const auto& [id, value] : initial.items()) {
            if (!value.is_boolean()) schema_error(child("/initial", id), "expected true or false");
            // Unknown ids are kept so validation can report them.
            problem.initial.set(id, value.get<bool>());
        }
    }

    const json& actions = require_array(field(j, "actions", root), "/actions");
    for (std::size_t a = 0; a < actions.size(); ++a) {
        const std::string ap = child("/actions", a);
        const json& aj = require_object(actions[a], ap);
        reject_unknown_keys(aj, ap, {"id", "label", "branches"});
        Action action;
        action.id = string_field(aj, "id", ap);
        action.label = optional_string(aj, "label", ap, action.id);

        const std::string bsp = child(ap, "branches");
        const json& branches = require_array(field(aj, "branches", ap), bsp);
        for (std::size_t b = 0; b < branches.size(); ++b) {
            const std::string bp = child(bsp, b);
            const json& bj = require_object(branches[b], bp);
            reject_unknown_keys(bj, bp, {"id", "events"});
            Branch branch;
            branch.id = string_field(bj, "id", bp);
            const std::string esp = child(bp, "events");
            const json& events = bj.contains("events") ? require_array(bj["events"], esp) : json::array();
            for (std::size_t e = 0; e < events.size(); ++e) {
                const std::string ep = child(esp, e);
                const json& ej = require_object(events[e], ep);
                reject_unknown_keys(ej, ep, {"var", "value", "p"});
                Event event;
                event.variable = string_field(ej, "var", ep);
                event.value = bool_field(ej, "value", ep, std::nullopt);
                event.probability = probability_from_json(field(ej, "p", ep), child(ep, "p"));
                branch.events.push_back(std::move(event));
            }
            action.branches.push_back(branch.id);
            problem.branches.push_back(std::move(branch));
        }
        problem.actions.push_back(std::move(action));
    }

    if (j.contains("utilityClasses")) {
        problem.utility_classes = utility_classes_from_json(j["utilityClasses"], "/utilityClasses");
    }
    if (j.contains("forbidden")) problem.forbidden = forbidden_from_json(j["forbidden"], "/forbidden");
    if (j.contains("policy")) doc.policy = policy_from_json(j["policy"], "/policy");
    if (j.contains("validation")) {
        const json& mode = j["validation"];
        auto parsed = mode.is_string() ? parse_validation_mode(mode.get<std::string>()) : std::nullopt;
        if (!parsed) schema_error("/validation", "expected \"strict\" or \"lenient\"");
        doc.validation = *parsed;
    }
    return doc;
}

ScenarioDocument read_scenario_document(std::string_view text) { return scenario_from_json(parse_json_text(text)); }

ParsedScenario parse_scenario(std::string_view text, std::optional<ValidationMode> mode) {
    ParsedScenario out{read_scenario_document(text), {}};
    if (mode) out.document.validation = *mode;
    out.report = validate_problem(out.document.problem, out.document.validation);
    if (out.report.has_errors()) {
        throw ScenarioError(ScenarioError::Kind::validation, "", "scenario failed " +
                                std::string(to_string(out.document.validation)) + " validation",
                            out.report.lines());
    }
    return out;
}

ordered_json scenario_to_json(const ScenarioDocument& document) {
    const auto& problem = document.problem;
    ordered_json out;
    out["version"] = document.version;
    if (!document.name.empty()) out["name"] = document.name;
    if (!document.description.empty()) out["description"] = document.description;

    ordered_json variables = ordered_json::array();
    for (const auto& v : problem.variables) variables.push_back({{"id", v.id}, {"label", v.label}});
    out["variables"] = std::move(variables);

    // Declaration order first, then anything validation would reject.
    ordered_json initial = ordered_json::object();
    for (const auto& v : problem.variables) {
        if (problem.initial.contains(v.id)) initial[v.id] = problem.initial.at(v.id);
    }
    for (const auto& [id, value] : problem.initial.values()) {
        if (!initial.contains(id)) initial[id] = value;
    }
    out["initial"] = std::move(initial);

    ordered_json actions = ordered_json::array();
    for (const auto& action : problem.actions) {
        ordered_json branches = ordered_json::array();
        for (const auto& id : action.branches) {
            ordered_json events = ordered_json::array();
            if (const Branch* branch = problem.find_branch(id)) {
                for (const auto& e : branch->events) {
                    events.push_back({{"var", e.variable}, {"value", e.value}, {"p", probability_to_json(e.probability)}});
                }
            }
            branches.push_back({{"id", id}, {"events", std::move(events)}});
        }
        actions.push_back({{"id", action.id}, {"label", action.label}, {"branches", std::move(branches)}});
    }
    out["actions"] = std::move(actions);
    out["utilityClasses"] = utility_classes_to_json(problem.utility_classes);
    out["forbidden"] = forbidden_to_json(problem.forbidden);
    out["policy"] = std::string(to_string(document.policy));
    out["validation"] = std::string(to_string(document.validation));
    return out;
}

std::string serialize_scenario(const ScenarioDocument& document) { return scenario_to_json(document).dump(2) + "\n"; }

EthicsPatch ethics_from_json(const json& j) {
    require_object(j, "/");
    reject_unknown_keys(j, "", {"name", "description", "utilityClasses", "forbidden", "policy"});
    EthicsPatch patch;
    if (j.contains("utilityClasses")) patch.utility_classes = utility_classes_from_json(j["utilityClasses"], "/utilityClasses");
    if (j.contains("forbidden")) patch.forbidden = forbidden_from_json(j["forbidden"], "/forbidden");
    if (j.contains("policy")) patch.policy = policy_from_json(j["policy"], "/policy");
    return patch;
}

EthicsPatch parse_ethics(std::string_view text) { return ethics_from_json(parse_json_text(text)); }

void apply_ethics(ScenarioDocument& document, const EthicsPatch& patch) {
    if (patch.utility_classes) document.problem.utility_classes = *patch.utility_classes;
    if (patch.forbidden) document.problem.forbidden = *patch.forbidden;
    if (patch.policy) document.policy = *patch.policy;
}

}  // namespace retro
