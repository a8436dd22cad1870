#include "retro/argumentation.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace retro {

namespace {

std::string truth(bool v) { return v ? "True" : "False"; }

/// Groups runs of equal truth values: "a=b=True and c=False". True first,
/// matching the way the scheme is usually read.
std::string group_by_value(const std::vector<std::pair<std::string, bool>>& assignments) {
    std::string out;
    for (bool value : {true, false}) {
        std::string group;
        for (const auto& [id, v] : assignments) {
            if (v != value) continue;
            group += id + "=";
        }
        if (group.empty()) continue;
        if (!out.empty()) out += " and ";
        out += group + truth(value);
    }
    return out;
}

}  // namespace

std::string describe_state(const EthicalDecisionProblem& problem, const StateAssignment& state,
                           const std::vector<std::string>& variables) {
    std::vector<std::pair<std::string, bool>> listed;
    for (const auto& v : problem.variables) {
        if (std::find(variables.begin(), variables.end(), v.id) != variables.end()) {
            listed.emplace_back(v.id, state.at(v.id));
        }
    }
    return group_by_value(listed);
}

Argument generate_argument(const EthicalDecisionProblem& problem, const BranchEvaluation& evaluation) {
    const Action* action = problem.find_action(evaluation.action);
    const Branch* branch = problem.find_branch(evaluation.branch);
    if (!action || !branch) throw std::invalid_argument("evaluation does not belong to this problem");

    std::vector<std::string> all;
    for (const auto& v : problem.variables) all.push_back(v.id);

    // Consequences name the variables the branch touched; a branch that
    // touches nothing leaves the initial state, so that is listed in full.
    std::vector<std::string> touched;
    for (const auto& event : branch->events) {
        if (std::find(touched.begin(), touched.end(), event.variable) == touched.end()) {
            touched.push_back(event.variable);
        }
    }
    if (touched.empty()) touched = all;

    const std::string& label = action->label.empty() ? action->id : action->label;
    std::string text = "From the initial state, I, where " + describe_state(problem, problem.initial, all) +
                       ", it was acceptable to perform the action, " + label +
                       ", resulting in consequences with " +
                       describe_state(problem, evaluation.terminal, touched) + ", with probability " +
                       to_string(evaluation.probability) + ".";
    return Argument{evaluation.branch, evaluation.action, evaluation.probability, std::move(text)};
}

const Argument& AttackGraph::argument(std::string_view branch) const {
    auto it = std::find_if(arguments.begin(), arguments.end(), [&](const Argument& a) { return a.branch == branch; });
    if (it == arguments.end()) throw std::out_of_range("no argument for branch '" + std::string(branch) + "'");
    return *it;
}

const Principle* AttackGraph::principle(std::string_view id) const {
    auto it = std::find_if(principles.begin(), principles.end(), [&](const Principle& p) { return p.id == id; });
    return it == principles.end() ? nullptr : &*it;
}

double DecisionResult::acceptability_of(std::string_view action) const {
    for (const auto& entry : acceptability) {
        if (entry.action == action) return entry.acceptability;
    }
    throw std::out_of_range("unknown action '" + std::string(action) + "'");
}

AttackGraph compute_attacks(const EthicalDecisionProblem& problem, const std::vector<Principle>& principles,
                            ComparisonPolicy policy) {
    return compute_attacks(problem, assess(problem), principles, policy);
}

AttackGraph compute_attacks(const EthicalDecisionProblem& problem, const ProblemAssessment& assessment,
                            const std::vector<Principle>& principles, ComparisonPolicy policy) {
    AttackGraph graph;
    graph.principles = principles;
    for (const auto& eval : assessment.evaluations) {
        graph.arguments.push_back(generate_argument(problem, eval));
        graph.attacked[eval.branch] = false;
    }

    const auto& evals = assessment.evaluations;
    for (const auto& principle : principles) {
        std::set<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < evals.size(); ++i) {
            for (std::size_t j = 0; j < evals.size(); ++j) {
                if (evals[i].action == evals[j].action) continue;
                if (attacks(principle, evals[i], evals[j], assessment, policy)) edges.emplace(i, j);
            }
        }
        // Mutual attacks under one principle cancel. CQ2 is a strict
        // comparison, so this only matters for future principle kinds.
        for (const auto& [i, j] : edges) {
            if (edges.count({j, i})) continue;
            graph.attacks.push_back({evals[i].branch, evals[j].branch, principle.id});
            graph.attacked[evals[j].branch] = true;
        }
    }
    return graph;
}

DecisionResult decide(const EthicalDecisionProblem& problem, const std::vector<Principle>& principles,
                      ComparisonPolicy policy) {
    DecisionResult result;
    result.assessment = assess(problem);
    result.graph = compute_attacks(problem, result.assessment, principles, policy);

    bool every_action_attacked = !problem.actions.empty();
    for (const auto& action : problem.actions) {
        double acceptability = 1.0;
        bool any_attacked = false;
        for (const auto& branch : action.branches) {
            if (result.graph.attacked.at(branch)) {
                acceptability -= result.assessment.evaluation(branch).probability.midpoint();
                any_attacked = true;
            }
        }
        every_action_attacked = every_action_attacked && any_attacked;
        result.acceptability.push_back({action.id, std::clamp(acceptability, 0.0, 1.0)});
    }
    result.dilemma = every_action_attacked;

    double best = 0.0;
    for (const auto& entry : result.acceptability) best = std::max(best, entry.acceptability);
    for (const auto& entry : result.acceptability) {
        if (entry.acceptability >= best - kAcceptabilityTolerance) result.selected.push_back(entry.action);
    }
    result.fully_acceptable = best >= 1.0 - kAcceptabilityTolerance;
    return result;
}

DecisionResult decide(const EthicalDecisionProblem& problem, ComparisonPolicy policy) {
    return decide(problem, principles_for(problem), policy);
}

namespace {

std::string claim_for(const Principle& principle, const std::string& attacker_action, const Attack& attack) {
    if (principle.kind == PrincipleKind::utilitarian) {
        return "You should have chosen " + attacker_action + " because " + attack.attacker +
               " brought greater utility than " + attack.target + ".";
    }
    return "You should have chosen " + attacker_action + " because " + attack.attacker + " did not break " +
           principle.id + " where " + attack.target + " did.";
}

std::string missing_defence(const Principle& principle, const std::string& attacker_action,
                            const std::string& target_action) {
    if (principle.kind == PrincipleKind::utilitarian) {
        return "No defence: " + target_action + " did not expect greater utility than " + attacker_action + ".";
    }
    return "No defence: " + target_action + " held the greater probability of breaking " + principle.id + ".";
}

std::string fmt3(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

}  // namespace

std::string explain(const DecisionResult& result) {
    const auto& graph = result.graph;
    std::string out;

    if (graph.attacks.empty()) {
        out += "No branch is attacked under any principle: every action is fully acceptable.\n";
    }

    for (const auto& principle : graph.principles) {
        std::vector<const Attack*> edges;
        for (const auto& attack : graph.attacks) {
            if (attack.principle == principle.id) edges.push_back(&attack);
        }
        if (edges.empty()) continue;

        out += "Principle " + principle.id + " (" + std::to_string(edges.size()) + " attack" +
               (edges.size() == 1 ? "" : "s") + "):\n";
        for (const Attack* attack : edges) {
            const auto& attacker_action = graph.argument(attack->attacker).action;
            const auto& target_action = graph.argument(attack->target).action;
            out += "  [" + attack->attacker + " -> " + attack->target + "]\n";
            out += "    1. " + claim_for(principle, attacker_action, *attack) + "\n";
            out += "    2. " + missing_defence(principle, attacker_action, target_action) + "\n";
        }
    }

    if (result.selected.empty()) return out;
    out += "Selected " + result.default_pick() + " with acceptability " +
           fmt3(result.acceptability_of(result.default_pick()));
    if (result.tie()) {
        out += " (tied with";
        for (std::size_t i = 1; i < result.selected.size(); ++i) out += " " + result.selected[i];
        out += ")";
    }
    if (result.fully_acceptable) {
        out += "; no branch of it is attacked.";
    } else if (result.dilemma) {
        out += "; moral dilemma: every action has an attacked branch.";
    } else {
        out += ".";
    }
    out += "\n";
    return out;
}

}  // namespace retro
