#include "retro/semantics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace retro {

std::weak_ordering operator<=>(const UtilityVector& a, const UtilityVector& b) {
    assert(a.size() == b.size());
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const double diff = a[i] - b[i];
        if (diff > UtilityVector::kTolerance) return std::weak_ordering::greater;
        if (diff < -UtilityVector::kTolerance) return std::weak_ordering::less;
    }
    return std::weak_ordering::equivalent;
}

std::string to_string(const UtilityVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_number(v[i]);
    }
    return out + ")";
}

StateAssignment apply_event(const StateAssignment& state, const Event& event) {
    if (!state.contains(event.variable)) {
        throw std::out_of_range("event assigns unknown state variable '" + event.variable + "'");
    }
    StateAssignment next = state;
    next.set(event.variable, event.value);
    return next;
}

UtilityVector state_utility(const EthicalDecisionProblem& problem, const StateAssignment& state) {
    auto utility = UtilityVector::zeros(problem.utility_classes.size());
    for (std::size_t c = 0; c < problem.utility_classes.size(); ++c) {
        for (const auto& u : problem.utility_classes[c].assignments) {
            if (state.at(u.variable) == u.value) utility[c] += u.utility;
        }
    }
    return utility;
}

BranchEvaluation evaluate_branch(const EthicalDecisionProblem& problem, const Action& action,
                                 const Branch& branch) {
    BranchEvaluation eval;
    eval.branch = branch.id;
    eval.action = action.id;
    eval.trace.reserve(branch.events.size() + 1);
    eval.trace.push_back(problem.initial);

    Probability probability = Probability::exact(1.0);
    for (const auto& event : branch.events) {
        eval.trace.push_back(apply_event(eval.trace.back(), event));
        probability = product(probability, event.probability);
        for (const auto& f : problem.forbidden) {
            if (eval.trace.back().at(f.variable) == f.value) eval.violations.insert(f.label);
        }
    }

    eval.terminal = eval.trace.back();
    eval.probability = std::move(probability);
    eval.utility = state_utility(problem, eval.terminal);
    return eval;
}

std::vector<BranchEvaluation> evaluate_action(const EthicalDecisionProblem& problem, const Action& action) {
    std::vector<BranchEvaluation> out;
    out.reserve(action.branches.size());
    for (const auto& id : action.branches) {
        const Branch* branch = problem.find_branch(id);
        if (!branch) throw std::out_of_range("action '" + action.id + "' maps unknown branch '" + id + "'");
        out.push_back(evaluate_branch(problem, action, *branch));
    }
    return out;
}

ActionExpectation action_expectation(const EthicalDecisionProblem& problem, const Action& action) {
    return action_expectation(problem, action, evaluate_action(problem, action));
}

ActionExpectation action_expectation(const EthicalDecisionProblem& problem, const Action& action,
                                     const std::vector<BranchEvaluation>& evaluations) {
    ActionExpectation expectation;
    expectation.action = action.id;
    expectation.expected_utility = UtilityVector::zeros(problem.utility_classes.size());
    for (const auto& f : problem.forbidden) {
        expectation.violation_probability.emplace(f.label, Probability::exact(0.0));
    }

    for (const auto& eval : evaluations) {
        const double weight = eval.probability.midpoint();
        for (std::size_t c = 0; c < eval.utility.size(); ++c) {
            expectation.expected_utility[c] += weight * eval.utility[c];
        }
        for (const auto& label : eval.violations) {
            auto& total = expectation.violation_probability.at(label);
            total = disjoint_sum(total, eval.probability);
        }
    }
    return expectation;
}

const BranchEvaluation& ProblemAssessment::evaluation(std::string_view branch) const {
    auto it = std::find_if(evaluations.begin(), evaluations.end(),
                           [&](const BranchEvaluation& e) { return e.branch == branch; });
    if (it == evaluations.end()) throw std::out_of_range("no evaluation for branch '" + std::string(branch) + "'");
    return *it;
}

const ActionExpectation& ProblemAssessment::expectation(std::string_view action) const {
    auto it = std::find_if(expectations.begin(), expectations.end(),
                           [&](const ActionExpectation& e) { return e.action == action; });
    if (it == expectations.end()) throw std::out_of_range("no expectation for action '" + std::string(action) + "'");
    return *it;
}

ProblemAssessment assess(const EthicalDecisionProblem& problem) {
    ProblemAssessment out;
    for (const auto& action : problem.actions) {
        auto evals = evaluate_action(problem, action);
        out.expectations.push_back(action_expectation(problem, action, evals));
        std::move(evals.begin(), evals.end(), std::back_inserter(out.evaluations));
    }
    return out;
}

}  // namespace retro
