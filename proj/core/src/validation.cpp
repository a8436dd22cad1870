#include "retro/validation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

namespace retro {

namespace {

class Collector {
public:
    void error(std::string location, std::string message) {
        report_.violations.push_back({Severity::error, std::move(location), std::move(message)});
    }
    void warning(std::string location, std::string message) {
        report_.violations.push_back({Severity::warning, std::move(location), std::move(message)});
    }
    ValidationReport take() { return std::move(report_); }

private:
    ValidationReport report_;
};

std::string bool_text(bool v) { return v ? "True" : "False"; }

}  // namespace

bool ValidationReport::has_errors() const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return v.severity == Severity::error; });
}

std::vector<std::string> ValidationReport::lines() const {
    std::vector<std::string> out;
    out.reserve(violations.size());
    for (const auto& v : violations) {
        out.push_back(std::string(to_string(v.severity)) + ": " + v.location + ": " + v.message);
    }
    return out;
}

double branch_probability_midpoint(const Branch& branch) {
    double p = 1.0;
    for (const auto& event : branch.events) p *= event.probability.midpoint();
    return p;
}

ValidationReport validate_problem(const EthicalDecisionProblem& problem, ValidationMode mode) {
    Collector out;

    std::set<std::string, std::less<>> variable_ids;
    for (std::size_t i = 0; i < problem.variables.size(); ++i) {
        const auto& id = problem.variables[i].id;
        const std::string where = "variables/" + std::to_string(i);
        if (id.empty()) {
            out.error(where, "variable id is empty");
        } else if (!variable_ids.insert(id).second) {
            out.error(where, "duplicate variable id '" + id + "'");
        }
    }
    const auto known = [&](std::string_view id) { return variable_ids.count(id) > 0; };

    for (const auto& [id, value] : problem.initial.values()) {
        if (!known(id)) out.error("initial/" + id, "initial state assigns unknown variable '" + id + "'");
    }
    for (const auto& id : variable_ids) {
        if (!problem.initial.contains(id)) out.error("initial/" + id, "initial state misses variable '" + id + "'");
    }

    std::map<std::string, std::size_t, std::less<>> branch_index;
    for (std::size_t i = 0; i < problem.branches.size(); ++i) {
        const auto& branch = problem.branches[i];
        const std::string where = "branches/" + branch.id;
        if (branch.id.empty()) out.error("branches/" + std::to_string(i), "branch id is empty");
        if (!branch_index.emplace(branch.id, i).second) {
            out.error(where, "duplicate branch id '" + branch.id + "'");
        }
        for (std::size_t e = 0; e < branch.events.size(); ++e) {
            const auto& event = branch.events[e];
            if (!known(event.variable)) {
                out.error(where + "/events/" + std::to_string(e),
                          "event assigns unknown variable '" + event.variable + "'");
            }
        }
    }

    if (problem.actions.empty()) out.error("actions", "problem declares no actions");

    std::set<std::string, std::less<>> action_ids;
    std::map<std::string, std::string, std::less<>> branch_owner;
    for (const auto& action : problem.actions) {
        const std::string where = "actions/" + action.id;
        if (action.id.empty()) out.error("actions", "action id is empty");
        if (!action_ids.insert(action.id).second) out.error(where, "duplicate action id '" + action.id + "'");
        if (action.branches.empty()) out.error(where, "action has no branches");

        bool resolved = true;
        for (const auto& branch_id : action.branches) {
            if (branch_index.find(branch_id) == branch_index.end()) {
                out.error(where, "unknown branch '" + branch_id + "'");
                resolved = false;
                continue;
            }
            auto [it, inserted] = branch_owner.emplace(branch_id, action.id);
            if (!inserted) {
                out.error(where, "branch '" + branch_id + "' is already mapped to action '" + it->second + "'");
            }
        }

        if (!resolved || action.branches.empty()) continue;
        double sum = 0.0;
        for (const auto& branch_id : action.branches) {
            sum += branch_probability_midpoint(problem.branches[branch_index.at(branch_id)]);
        }
        if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
            std::string message = "branch probabilities of " + action.id + " sum to " + format_number(sum);
            if (mode == ValidationMode::strict) {
                out.error(where, std::move(message));
            } else {
                out.warning(where, std::move(message));
            }
        }
    }

    for (const auto& branch : problem.branches) {
        if (!branch.id.empty() && branch_owner.find(branch.id) == branch_owner.end()) {
            out.error("branches/" + branch.id, "branch is not reachable from any action");
        }
    }

    for (std::size_t c = 0; c < problem.utility_classes.size(); ++c) {
        std::set<std::pair<std::string, bool>> seen;
        const auto& assignments = problem.utility_classes[c].assignments;
        for (std::size_t a = 0; a < assignments.size(); ++a) {
            const auto& u = assignments[a];
            const std::string where = "utilityClasses/" + std::to_string(c) + "/" + std::to_string(a);
            if (!known(u.variable)) out.error(where, "utility assigned to unknown variable '" + u.variable + "'");
            if (!std::isfinite(u.utility)) out.error(where, "utility must be finite");
            if (!seen.emplace(u.variable, u.value).second) {
                out.error(where, "duplicate utility for " + u.variable + "=" + bool_text(u.value) + " within one class");
            }
        }
    }

    std::set<std::string, std::less<>> labels;
    for (std::size_t f = 0; f < problem.forbidden.size(); ++f) {
        const auto& state = problem.forbidden[f];
        const std::string where = "forbidden/" + std::to_string(f);
        if (!known(state.variable)) out.error(where, "forbidden state on unknown variable '" + state.variable + "'");
        if (state.label.empty()) {
            out.error(where, "forbidden state needs a label");
        } else if (state.label == "utilitarian") {
            out.error(where, "label 'utilitarian' is reserved for the utility principle");
        } else if (!labels.insert(state.label).second) {
            out.error(where, "duplicate forbidden-state label '" + state.label + "'");
        }
    }

    return out.take();
}

std::string_view to_string(ValidationMode mode) { return mode == ValidationMode::strict ? "strict" : "lenient"; }

std::optional<ValidationMode> parse_validation_mode(std::string_view text) {
    if (text == "strict") return ValidationMode::strict;
    if (text == "lenient") return ValidationMode::lenient;
    return std::nullopt;
}

std::string_view to_string(Severity severity) { return severity == Severity::error ? "error" : "warning"; }

}  // namespace retro
