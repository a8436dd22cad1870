#include "retro/theories.hpp"

#include <stdexcept>

namespace retro {

Principle Principle::utilitarian() { return Principle{std::string(kUtilitarianId), PrincipleKind::utilitarian, {}}; }

Principle Principle::forbidding(const ForbiddenState& state) {
    return Principle{state.label, PrincipleKind::forbidden_state, state};
}

std::vector<Principle> principles_for(const EthicalDecisionProblem& problem) {
    std::vector<Principle> out;
    out.reserve(problem.forbidden.size() + 1);
    out.push_back(Principle::utilitarian());
    for (const auto& f : problem.forbidden) out.push_back(Principle::forbidding(f));
    return out;
}

namespace {

const Probability& risk_of(const ActionExpectation& expectation, const std::string& label) {
    auto it = expectation.violation_probability.find(label);
    if (it == expectation.violation_probability.end()) {
        throw std::out_of_range("action '" + expectation.action + "' has no risk entry for '" + label + "'");
    }
    return it->second;
}

}  // namespace

bool cq1(const Principle& principle, const BranchEvaluation& attacker, const BranchEvaluation& target) {
    if (principle.kind == PrincipleKind::utilitarian) return attacker.utility > target.utility;
    const auto& label = principle.forbidden->label;
    return target.violations.count(label) > 0 && attacker.violations.count(label) == 0;
}

bool cq2(const Principle& principle, const ActionExpectation& attacker_action,
         const ActionExpectation& target_action, ComparisonPolicy policy) {
    if (principle.kind == PrincipleKind::utilitarian) {
        return attacker_action.expected_utility > target_action.expected_utility;
    }
    const auto& label = principle.forbidden->label;
    return compare(risk_of(target_action, label), risk_of(attacker_action, label), policy) ==
           std::weak_ordering::greater;
}

bool attacks(const Principle& principle, const BranchEvaluation& attacker, const BranchEvaluation& target,
             const ProblemAssessment& assessment, ComparisonPolicy policy) {
    if (attacker.action == target.action) return false;
    return cq1(principle, attacker, target) &&
           cq2(principle, assessment.expectation(attacker.action), assessment.expectation(target.action), policy);
}

}  // namespace retro
